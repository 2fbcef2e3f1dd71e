#include "ahecke/hecke_modules.hpp"

#include "ahecke/error.hpp"

#include <algorithm>

namespace ahecke {

namespace {

bool in_set(const SimpleSet& j, int s) { return std::find(j.begin(), j.end(), s) != j.end(); }

IntVec unit(int n, int i) {
    IntVec e(n, 0);
    e[i] = 1;
    return e;
}

int omega_index(const AffineWeylGroup& aff, const AffineWeylElement& gamma) {
    const auto& om = aff.omega();
    auto it = std::find(om.begin(), om.end(), gamma);
    if (it == om.end()) fail(ErrorKind::AssumptionViolated, "element is not of length zero");
    return static_cast<int>(it - om.begin());
}

// w = x u with x minimal in w W_I and u in W_I.
std::pair<int, int> split_finite(const WeylGroup& w, int g, const SimpleSet& I) {
    int x = g, u = w.identity();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s : I)
            if (w.right_descent(x, s)) {
                x = w.mul(x, w.simple_reflection(s));
                u = w.mul(w.simple_reflection(s), u);
                moved = true;
            }
    }
    return {x, u};
}

void add_block(Matrix& big, std::size_t row0, std::size_t col0, const Matrix& b, const Rational& c) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(i, j)) != 0) big(row0 + i, col0 + j) += c * b(i, j);
}

}  // namespace

AffineHeckeModule::AffineHeckeModule(std::shared_ptr<const HeckeContext> ctx, Specialization spec, SimpleSet support,
                                     std::vector<Matrix> gens, std::vector<Matrix> theta, std::vector<Matrix> omega,
                                     std::string label)
    : ctx_(std::move(ctx)), spec_(std::move(spec)), support_(std::move(support)), gens_(std::move(gens)),
      theta_(std::move(theta)), omega_(std::move(omega)), label_(std::move(label)) {
    const AffineWeylGroup& aff = ctx_->affine();
    const int n = aff.rank();
    if (static_cast<int>(spec_.size()) != ctx_->params().num_symbols)
        fail(ErrorKind::ParameterMismatch, "specialization does not match the parameter symbols");
    if (static_cast<int>(theta_.size()) != n) fail(ErrorKind::NotAModule, "one theta matrix per basis vector of X");
    std::sort(support_.begin(), support_.end());
    gens_.resize(aff.num_generators());
    dim_ = theta_[0].rows();
    for (const auto& t : theta_)
        if (t.rows() != dim_ || t.cols() != dim_) fail(ErrorKind::NotAModule, "theta matrices differ in size");
    for (int s : support_)
        if (gens_[s].rows() != dim_ || gens_[s].cols() != dim_)
            fail(ErrorKind::NotAModule, "generator matrix has the wrong size");
    try {
        for (const auto& t : theta_) theta_inv_.push_back(t.inverse());
    } catch (const Error&) {
        fail(ErrorKind::NotAModule, "theta acts by a singular matrix");
    }
    if (!full()) {
        omega_.clear();
        return;
    }
    if (gens_[aff.s0_index()].rows() != dim_) gens_[aff.s0_index()] = eval(bl_generator(ctx_, aff.s0_index()));
    if (omega_.empty())
        for (const auto& g : aff.omega()) omega_.push_back(eval(bl_omega(ctx_, g)));
    if (omega_.size() != aff.omega().size()) fail(ErrorKind::NotAModule, "one matrix per element of Omega");
}

const Matrix& AffineHeckeModule::gen(int s) const {
    if (in_set(support_, s) || (full() && s == ctx_->affine().s0_index())) return gens_[s];
    fail(ErrorKind::NotAModule, "generator outside the module's subalgebra");
}

const Matrix& AffineHeckeModule::omega(int k) const {
    if (!full()) fail(ErrorKind::NotAModule, "Omega acts only on modules of the whole algebra");
    return omega_[k];
}

Matrix AffineHeckeModule::theta(const IntVec& x) const {
    Matrix m = Matrix::identity(dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Matrix& f = x[i] >= 0 ? theta_[i] : theta_inv_[i];
        for (int k = 0; k < std::abs(x[i]); ++k) m = m * f;
    }
    return m;
}

Matrix AffineHeckeModule::act_finite(int u) const {
    auto it = fin_cache_.find(u);
    if (it != fin_cache_.end()) return it->second;
    Matrix m = Matrix::identity(dim_);
    for (int s : ctx_->finite().reduced_word(u)) m = m * gen(s);
    return fin_cache_.emplace(u, m).first->second;
}

Matrix AffineHeckeModule::act(const AffineWeylElement& w) const {
    const AffineWeylGroup& aff = ctx_->affine();
    auto d = aff.decompose(w);
    Matrix m = omega(omega_index(aff, d.gamma));
    for (int s : d.word) m = m * gen(s);
    return m;
}

Matrix AffineHeckeModule::eval(const HeckeElement& h) const {
    Matrix out(dim_, dim_);
    for (const auto& [k, c] : h.terms()) {
        Rational v = spec_.eval(c);
        if (h.basis() == Basis::BL)
            out += act_finite(k.fin) * theta(k.x) * v;
        else
            out += act(k) * v;
    }
    return out;
}

std::vector<Rational> AffineHeckeModule::traces(const std::vector<AffineWeylElement>& ws) const {
    const AffineWeylGroup& aff = ctx_->affine();
    std::map<AffineWeylElement, Matrix> memo;
    // T_w = T_{ws} T_s for any right descent s.
    auto get = [&](auto&& self, const AffineWeylElement& w) -> const Matrix& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        const int l = aff.length(w);
        Matrix m;
        if (l == 0) {
            m = omega(omega_index(aff, w));
        } else {
            int s = 0;
            AffineWeylElement ws;
            for (; s < aff.num_generators(); ++s) {
                ws = aff.mul(w, aff.generator(s));
                if (aff.length(ws) < l) break;
            }
            m = self(self, ws) * gen(s);
        }
        return memo.emplace(w, std::move(m)).first->second;
    };
    std::vector<Rational> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(get(get, w).trace());
    return out;
}

void AffineHeckeModule::validate() const {
    const AffineWeylGroup& aff = ctx_->affine();
    const RootDatum& rd = ctx_->datum();
    const int n = aff.rank();
    SimpleSet gens = support_;
    if (full()) gens.push_back(aff.s0_index());
    const Matrix id = Matrix::identity(dim_);

    for (int s : gens) {
        const Matrix& t = gen(s);
        if (t * t != id * q(s) + t * (q(s) - 1))
            fail(ErrorKind::NotAModule, "quadratic relation fails for generator " + std::to_string(s));
    }
    for (int a : gens)
        for (int b : gens) {
            if (a >= b) continue;
            int m = aff.coxeter_m(a, b);
            if (m == 0) continue;
            Matrix x = id, y = id;
            for (int k = 0; k < m; ++k) {
                x = x * gen(k % 2 ? b : a);
                y = y * gen(k % 2 ? a : b);
            }
            if (x != y) fail(ErrorKind::NotAModule, "braid relation fails");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (theta_[i] * theta_[j] != theta_[j] * theta_[i]) fail(ErrorKind::NotAModule, "theta matrices do not commute");
    for (int s : support_)
        for (int i = 0; i < n; ++i) {
            IntVec e = unit(n, i);
            Matrix lhs = theta_[i] * gen(s) - gen(s) * theta(rd.reflect(rd.simple(s), e));
            Matrix rhs(dim_, dim_);
            for (const auto& [y, c] : ctx_->bernstein_remainder(s, e)) rhs += theta(y) * spec_.eval(c);
            if (lhs != rhs) fail(ErrorKind::NotAModule, "Bernstein relation fails for generator " + std::to_string(s));
        }
    if (!full()) return;
    if (gen(aff.s0_index()) != eval(bl_generator(ctx_, aff.s0_index())))
        fail(ErrorKind::NotAModule, "T_s0 disagrees with its Bernstein-Lusztig form");
    const auto& om = aff.omega();
    for (std::size_t k = 0; k < om.size(); ++k) {
        if (omega_[k] != eval(bl_omega(ctx_, om[k])))
            fail(ErrorKind::NotAModule, "T_gamma disagrees with its Bernstein-Lusztig form");
        Matrix inv = omega_[k].inverse();
        for (int s = 0; s < aff.num_generators(); ++s)
            if (omega_[k] * gen(s) * inv != gen(aff.conjugate_generator(om[k], s)))
                fail(ErrorKind::NotAModule, "Omega conjugation relation fails");
        for (std::size_t l = 0; l < om.size(); ++l)
            if (omega_[k] * omega_[l] != omega_[omega_index(aff, aff.mul(om[k], om[l]))])
                fail(ErrorKind::NotAModule, "Omega multiplication fails");
    }
}

AffineHeckeModule theta_character(std::shared_ptr<const HeckeContext> ctx, const Specialization& spec,
                                  const std::vector<Rational>& t) {
    const int n = ctx->affine().rank();
    if (static_cast<int>(t.size()) != n) fail(ErrorKind::IllegalCharacter, "one value per basis vector of X");
    std::vector<Matrix> theta;
    std::string label = "chi(";
    for (int i = 0; i < n; ++i) {
        if (sgn(t[i]) == 0) fail(ErrorKind::IllegalCharacter, "theta must act invertibly");
        theta.push_back(Matrix::scalar(1, t[i]));
        label += (i ? "," : "") + t[i].get_str();
    }
    label += ")";
    return AffineHeckeModule(std::move(ctx), spec, {}, {}, std::move(theta), {}, label);
}

AffineHeckeModule res_module(const AffineHeckeModule& m, const SimpleSet& i) {
    std::vector<Matrix> gens(m.ctx().affine().num_generators());
    for (int s : i) gens[s] = m.gen(s);
    std::vector<Matrix> theta;
    for (int k = 0; k < m.ctx().affine().rank(); ++k) theta.push_back(m.theta_basis(k));
    return AffineHeckeModule(m.ctx_ptr(), m.spec(), i, gens, theta, {}, "Res" + subset_name(i) + "(" + m.label() + ")");
}

AffineHeckeModule ind_module(const AffineHeckeModule& n) {
    const HeckeContext& ctx = n.ctx();
    const WeylGroup& w = ctx.finite();
    const int rank = ctx.affine().rank();
    const SimpleSet& I = n.support();
    const auto reps = w.min_coset_reps(I);
    std::vector<int> pos(w.order(), -1);
    for (std::size_t k = 0; k < reps.size(); ++k) pos[reps[k]] = static_cast<int>(k);
    const std::size_t d = n.dim(), dim = reps.size() * d;

    std::vector<Matrix> gens(ctx.affine().num_generators());
    SimpleSet all;
    for (int s = 0; s < rank; ++s) {
        all.push_back(s);
        Matrix t(dim, dim);
        const Rational q = n.q(s);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const int x = reps[k], sx = w.mul(w.simple_reflection(s), x);
            if (w.length(sx) < w.length(x)) {
                for (std::size_t i = 0; i < d; ++i) {
                    t(pos[sx] * d + i, k * d + i) += q;
                    t(k * d + i, k * d + i) += q - 1;
                }
            } else if (pos[sx] >= 0) {
                for (std::size_t i = 0; i < d; ++i) t(pos[sx] * d + i, k * d + i) += 1;
            } else {
                // s x = x u with u a simple reflection of W_I.
                auto [x2, u] = split_finite(w, sx, I);
                if (x2 != x) fail(ErrorKind::AssumptionViolated, "coset step leaves the coset");
                add_block(t, k * d, k * d, n.act_finite(u), 1);
            }
        }
        gens[s] = std::move(t);
    }

    std::vector<Matrix> theta;
    for (int i = 0; i < rank; ++i) {
        Matrix th(dim, dim);
        HeckeElement ti = bl_basis(n.ctx_ptr(), w.identity(), unit(rank, i));
        for (std::size_t k = 0; k < reps.size(); ++k) {
            HeckeElement prod = hecke_mul(ti, bl_basis(n.ctx_ptr(), reps[k], IntVec(rank, 0)));
            for (const auto& [key, c] : prod.terms()) {
                auto [x, u] = split_finite(w, key.fin, I);
                add_block(th, pos[x] * d, k * d, n.act_finite(u) * n.theta(key.x), n.eval(c));
            }
        }
        theta.push_back(std::move(th));
    }
    return AffineHeckeModule(n.ctx_ptr(), n.spec(), all, gens, theta, {}, "Ind(" + n.label() + ")");
}

AffineHeckeModule principal_series(std::shared_ptr<const HeckeContext> ctx, const Specialization& spec,
                                   const std::vector<Rational>& t) {
    return ind_module(theta_character(std::move(ctx), spec, t));
}

AffineHeckeModule twist_star(const AffineHeckeModule& m) {
    const HeckeContext& ctx = m.ctx();
    const AffineWeylGroup& aff = ctx.affine();
    const int n = aff.rank();
    if (!m.full()) fail(ErrorKind::NotAModule, "the twist is defined on modules of the whole algebra");
    const Matrix id = Matrix::identity(m.dim());

    std::vector<Matrix> gens(aff.num_generators());
    for (int s = 0; s < aff.num_generators(); ++s) gens[s] = id * (m.q(s) - 1) - m.gen(s);
    std::vector<Matrix> omega;
    for (std::size_t k = 0; k < aff.omega().size(); ++k)
        omega.push_back(m.omega(static_cast<int>(k)) * Rational(ctx.finite().sign(aff.omega()[k].fin)));
    // theta_x = v(t_{x1})^{-1} T_{t_{x1}} v(t_{x2}) T_{t_{x2}}^{-1}, with x1 = x + x2 and x1, x2 dominant.
    std::vector<Matrix> theta;
    for (int i = 0; i < n; ++i) {
        IntVec x = unit(n, i), x2 = ctx.dominant_shift(x), x1 = x;
        for (int j = 0; j < n; ++j) x1[j] += x2[j];
        IntVec m1 = x1, m2 = x2;
        for (int j = 0; j < n; ++j) {
            m1[j] = -m1[j];
            m2[j] = -m2[j];
        }
        Rational v1 = m.eval(ctx.v_of(aff.translation(x1))), v2 = m.eval(ctx.v_of(aff.translation(x2)));
        theta.push_back(m.act(aff.translation(m1)).inverse() * m.act(aff.translation(m2)) * (v1 / v2));
    }
    return AffineHeckeModule(m.ctx_ptr(), m.spec(), m.support(), gens, theta, omega, "(" + m.label() + ")*");
}

std::vector<Rational> AffineVirtualModule::traces(const std::vector<AffineWeylElement>& ws) const {
    std::vector<Rational> out(ws.size(), Rational(0));
    for (const auto& [sign, m] : parts) {
        auto t = m.traces(ws);
        for (std::size_t k = 0; k < ws.size(); ++k) out[k] += sign * t[k];
    }
    return out;
}

AffineVirtualModule d_operator(const AffineHeckeModule& m) {
    AffineVirtualModule v;
    for (const auto& I : all_subsets(m.ctx().affine().rank()))
        v.parts.emplace_back(I.size() % 2 ? -1 : 1, ind_module(res_module(m, I)));
    return v;
}

AffineVirtualModule d_operator(const AffineVirtualModule& v) {
    AffineVirtualModule out;
    for (const auto& [sign, m] : v.parts)
        for (auto& [s2, p] : d_operator(m).parts) out.parts.emplace_back(sign * s2, std::move(p));
    return out;
}

std::vector<AffineWeylElement> witness_family(const AffineWeylGroup& aff, int bound) {
    std::vector<AffineWeylElement> out;
    const auto ball = aff.ball(bound);
    for (const auto& g : aff.omega())
        for (const auto& w : ball) out.push_back(aff.mul(g, w));
    return out;
}

TraceComparison grothendieck_equal(const AffineVirtualModule& a, const AffineVirtualModule& b, int bound) {
    if (a.parts.empty() && b.parts.empty()) return {};
    const auto& ctx = (a.parts.empty() ? b : a).parts.front().second.ctx();
    TraceComparison r;
    r.witnesses = witness_family(ctx.affine(), bound);
    r.lhs = a.traces(r.witnesses);
    r.rhs = b.traces(r.witnesses);
    for (std::size_t k = 0; k < r.witnesses.size(); ++k)
        if (r.lhs[k] != r.rhs[k]) {
            r.first_mismatch = static_cast<int>(k);
            break;
        }
    return r;
}

}  // namespace ahecke
