#include "ahecke/dualities.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ahecke {

namespace {

std::string str(const Rational& r) { return r.get_str(); }

int parity_sign(int k) { return k % 2 ? -1 : 1; }

std::string class_name(const WeylGroup& w, const Subgroup& g, int k) { return "class " + w.word_string(g.classes()[k][0]); }

std::string digest(const Matrix& m) {
    Rational sum = 0;
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sum += m(i, j);
            if (sgn(m(i, j)) != 0) ++nnz;
        }
    return "sum " + str(sum) + ", nnz " + std::to_string(nnz);
}

CheckRecord matrix_record(std::string check, std::string witness, const Matrix& lhs, const Matrix& rhs) {
    return {std::move(check), std::move(witness), digest(lhs), digest(rhs), lhs == rhs};
}

int longest_of(const WeylGroup& w, const Subgroup& g) {
    int best = g.elements().front();
    for (int x : g.elements())
        if (w.length(x) > w.length(best)) best = x;
    return best;
}

ClassFunction zero_on(std::shared_ptr<const Subgroup> g) {
    std::size_t k = g->classes().size();
    return ClassFunction(std::move(g), std::vector<Rational>(k, Rational(0)));
}

}  // namespace

// ---- characters ----

std::vector<CheckRecord> solomon_check(const ClassFunction& chi, const std::string& label, bool corrupt) {
    const WeylGroup& w = chi.domain().group();
    auto whole = w.whole();
    if (chi.domain().elements() != whole->elements()) fail(ErrorKind::NotASubgroup, "Solomon's formula needs a character of W");
    ClassFunction lhs = zero_on(whole);
    for (const auto& I : all_subsets(w.rank())) {
        auto wi = w.parabolic(I);
        lhs = lhs + induce(restrict_to(chi, wi), whole) * Rational(parity_sign(static_cast<int>(I.size())));
    }
    ClassFunction rhs = sign_character(whole) * chi * Rational(corrupt ? -1 : 1);
    std::vector<CheckRecord> out;
    for (std::size_t k = 0; k < whole->classes().size(); ++k)
        out.push_back({"Solomon " + label, class_name(w, *whole, static_cast<int>(k)), str(lhs.values()[k]),
                       str(rhs.values()[k]), lhs.values()[k] == rhs.values()[k]});
    return out;
}

std::vector<CheckRecord> hl_character_check(const SimpleSet& I0, std::shared_ptr<const Subgroup> h,
                                            const ClassFunction& chi, const std::string& label, bool corrupt) {
    const WeylGroup& w = h->group();
    if (!h->is_subgroup_of(*w.normalizer(I0)))
        fail(ErrorKind::NotInNormalizer, "subgroup does not normalize W_" + subset_name(I0));
    ClassFunction lhs = zero_on(h);
    for (const auto& I : all_subsets(w.rank())) {
        auto c = w.c_set(I0, I);
        if (c.empty()) continue;
        auto wi = w.parabolic(I);
        for (const auto& dc : double_cosets(w, *wi, c, *h)) {
            auto k = w.intersect(*h, *w.conjugate(*wi, dc.rep));
            lhs = lhs + induce(restrict_to(chi, k), h) * Rational(parity_sign(static_cast<int>(I.size())));
        }
    }
    std::vector<Rational> by_element(w.order(), Rational(0));
    const int sign = parity_sign(static_cast<int>(I0.size())) * (corrupt ? -1 : 1);
    for (int g : h->elements()) by_element[g] = chi(g) * sign * w.det_on_perp(g, I0);
    ClassFunction rhs = ClassFunction::from_element_values(h, by_element);
    std::vector<CheckRecord> out;
    for (std::size_t k = 0; k < h->classes().size(); ++k)
        out.push_back({"Howlett-Lehrer " + label, class_name(w, *h, static_cast<int>(k)), str(lhs.values()[k]),
                       str(rhs.values()[k]), lhs.values()[k] == rhs.values()[k]});
    return out;
}

// ---- Hecke modules ----

FiniteVirtualModule finite_d_operator(const FiniteHeckeModule& m) {
    FiniteVirtualModule v;
    for (const auto& I : all_subsets(m.system().num_generators()))
        v.parts.emplace_back(parity_sign(static_cast<int>(I.size())), induce_module(restrict_module(m, I)));
    return v;
}

std::vector<CheckRecord> kato_finite_check(const FiniteHeckeModule& m, bool corrupt) {
    const CoxeterSystem& sys = m.system();
    const WeylGroup& w = sys.group();
    FiniteVirtualModule d = finite_d_operator(m);
    std::vector<CheckRecord> out;
    for (int g : sys.elements()) {
        Rational lhs = d.trace(g);
        // tr(T_g^*) = (-1)^{l(g)} q(g) tr(T_{g^{-1}}^{-1})
        Rational rhs = m.act(w.inverse(g)).inverse().trace() * m.q_of(g) * parity_sign(sys.length(g)) * (corrupt ? -1 : 1);
        out.push_back({"D[M]=[M*] " + m.label(), "T[" + sys.word_string(g) + "]", str(lhs), str(rhs), lhs == rhs});
    }
    return out;
}

std::vector<CheckRecord> kato_affine_check(const AffineHeckeModule& m, int bound, bool corrupt) {
    AffineVirtualModule dual{{{corrupt ? -1 : 1, twist_star(m)}}};
    auto cmp = grothendieck_equal(d_operator(m), dual, bound);
    std::vector<CheckRecord> out;
    for (std::size_t k = 0; k < cmp.witnesses.size(); ++k)
        out.push_back({"D[M]=[M*] " + m.label(), "T[" + m.ctx().affine().to_string(cmp.witnesses[k]) + "]",
                       str(cmp.lhs[k]), str(cmp.rhs[k]), cmp.lhs[k] == cmp.rhs[k]});
    return out;
}

Matrix chi_matrix(const AffineHeckeModule& m, const AffineHeckeModule& induced) {
    const WeylGroup& w = m.ctx().finite();
    const std::size_t d = m.dim();
    if (induced.dim() != d * static_cast<std::size_t>(w.order()))
        fail(ErrorKind::AssumptionViolated, "chi lives on Ind_empty Res_empty M");
    Matrix x(induced.dim(), d);
    for (int g = 0; g < w.order(); ++g) {
        Matrix b = m.act_finite(g).inverse() * Rational(w.sign(g));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) x(g * d + i, j) = b(i, j);
    }
    return x;
}

std::vector<CheckRecord> chi_intertwiner_check(const AffineHeckeModule& m, bool corrupt) {
    const HeckeContext& ctx = m.ctx();
    const AffineWeylGroup& aff = ctx.affine();
    const WeylGroup& w = ctx.finite();
    const std::size_t d = m.dim();
    const Rational cs = corrupt ? -1 : 1;
    AffineHeckeModule ind = ind_module(res_module(m, {}));
    Matrix x = chi_matrix(m, ind);
    std::vector<CheckRecord> out;
    const std::string tag = " " + m.label();
    for (int s = 0; s < aff.num_generators(); ++s) {
        std::string name = s == aff.s0_index() ? "s0" : "s" + std::to_string(s + 1);
        out.push_back(matrix_record("(T_s x 1)chi = chi(1 x -q T_s^-1)" + tag, name, ind.gen(s) * x,
                                    x * (m.gen(s).inverse() * (-m.q(s))) * cs));
    }
    for (std::size_t k = 1; k < aff.omega().size(); ++k) {
        const auto& g = aff.omega()[k];
        out.push_back(matrix_record("(T_g x 1)chi = (-1)^l(w_Omega) chi(1 x T_g)" + tag, aff.to_string(g),
                                    ind.omega(static_cast<int>(k)) * x,
                                    x * m.omega(static_cast<int>(k)) * Rational(w.sign(g.fin)) * cs));
    }
    // tau_s(T_u (x) n) = T_u T_s (x) T_s^{-1} n - T_u (x) n on H (x) M.
    Matrix meet;
    for (int s = 0; s < aff.rank(); ++s) {
        const Rational q = m.q(s);
        const Matrix ts_inv = m.gen(s).inverse();
        Matrix tau = Matrix::identity(ind.dim()) * Rational(-1);
        for (int u = 0; u < w.order(); ++u) {
            int us = w.mul(u, w.simple_reflection(s));
            auto put = [&](int row_block, const Rational& c) {
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) tau(row_block * d + i, u * d + j) += c * ts_inv(i, j);
            };
            if (w.length(us) > w.length(u)) {
                put(us, 1);
            } else {
                put(us, q);
                put(u, q - 1);
            }
        }
        Matrix image = tau.column_basis();
        meet = s == 0 ? image : intersect_spans(meet, image);
    }
    out.push_back({"dim of the intersection of the L_s" + tag, "S", std::to_string(meet.cols()), std::to_string(d),
                   meet.cols() == d});
    std::size_t joint = meet.hconcat(x).rank();
    out.push_back({"intersection of the L_s = chi(1 x M)" + tag, "S", "rank " + std::to_string(joint),
                   "rank " + std::to_string(x.rank()), joint == d && x.rank() == d});
    return out;
}

// ---- ramification data ----

RamificationDatum RamificationDatum::build(std::shared_ptr<const WeylGroup> w, const SimpleSet& I0, RamificationMode mode,
                                           const std::vector<Rational>& p_values, bool require_c_trivial) {
    const RootDatum& rd = w->datum();
    const int n = w->rank();
    if (mode == RamificationMode::Degenerate && !I0.empty())
        fail(ErrorKind::AssumptionViolated, "the degenerate datum has I0 empty");
    if (static_cast<int>(I0.size()) >= n) fail(ErrorKind::AssumptionViolated, "I0 must be a proper subset of S");
    if (p_values.empty()) fail(ErrorKind::IllegalParameter, "at least one parameter p is needed");

    RamificationDatum d;
    d.w_ = w;
    d.i0_ = I0;
    std::sort(d.i0_.begin(), d.i0_.end());
    d.w_lambda_ = mode == RamificationMode::Degenerate ? w->whole() : w->stabilizer(d.i0_);

    std::vector<int> simple_index(rd.num_roots(), -1);
    for (int i = 0; i < n; ++i) simple_index[rd.simple(i)] = i;
    const int t = longest_of(*w, *w->parabolic(d.i0_));

    for (int a = 0; a < rd.num_roots(); ++a) {
        if (w->root_in_span(a, d.i0_)) continue;
        // Some x maps I0 and a to simple roots; then v[a, I0] = x^{-1} w_J x t.
        for (int x = 0; x < w->order(); ++x) {
            SimpleSet J;
            bool ok = simple_index[w->act_root(x, a)] >= 0;
            for (int b : d.i0_) ok = ok && simple_index[w->act_root(x, rd.simple(b))] >= 0;
            if (!ok) continue;
            J.push_back(simple_index[w->act_root(x, a)]);
            for (int b : d.i0_) J.push_back(simple_index[w->act_root(x, rd.simple(b))]);
            std::sort(J.begin(), J.end());
            int u = w->mul(w->mul(w->inverse(x), longest_of(*w, *w->parabolic(J))), x);
            int v = w->mul(u, t);
            if (d.w_lambda_->contains(v)) {
                d.gamma_.push_back(a);
                d.v_.push_back(v);
            }
            break;
        }
    }
    auto gamma_index = [&](int r) {
        auto it = std::find(d.gamma_.begin(), d.gamma_.end(), r);
        return it == d.gamma_.end() ? -1 : static_cast<int>(it - d.gamma_.begin());
    };
    for (std::size_t k = 0; k < d.gamma_.size(); ++k) {
        int a = d.gamma_[k];
        if (!rd.root(a).positive) continue;
        bool only_a = true;
        for (int b : d.gamma_)
            if (b != a && rd.root(b).positive && !rd.root(w->act_root(d.v_[k], b)).positive) only_a = false;
        if (rd.root(w->act_root(d.v_[k], a)).positive) only_a = false;
        if (only_a) d.delta_.push_back(a);
    }
    std::sort(d.delta_.begin(), d.delta_.end());
    std::vector<int> gens;
    for (int a : d.delta_) gens.push_back(d.v_[gamma_index(a)]);
    d.r_ = std::make_shared<CoxeterSystem>(w, gens);

    for (int g : d.w_lambda_->elements()) {
        bool keeps = true;
        for (int a : d.gamma_)
            if (rd.root(a).positive) {
                int b = w->act_root(g, a);
                keeps = keeps && rd.root(b).positive && gamma_index(b) >= 0;
            }
        if (keeps) d.c_.push_back(g);
    }
    if (require_c_trivial && d.c_.size() != 1)
        fail(ErrorKind::AssumptionViolated, "C(Lambda) has order " + std::to_string(d.c_.size()));

    // Projection to I0 perp in root coordinates: a - sum_j c_j alpha_j with <., alpha_k^vee> = 0 on I0.
    const auto& cart = rd.cartan();
    const std::size_t m = d.i0_.size();
    for (int a : d.gamma_) {
        const auto& rc = rd.root(a).root_coords;
        std::vector<Rational> p(rc.begin(), rc.end());
        if (m > 0) {
            Matrix sys(m, m), rhs(m, 1), sol;
            for (std::size_t k = 0; k < m; ++k) {
                Rational pk = 0;
                for (int i = 0; i < n; ++i) pk += Rational(rc[i]) * cart[i][d.i0_[k]];
                rhs(k, 0) = pk;
                for (std::size_t j = 0; j < m; ++j) sys(k, j) = cart[d.i0_[j]][d.i0_[k]];
            }
            if (!sys.solve(rhs, sol)) fail(ErrorKind::AssumptionViolated, "projection to I0 perp failed");
            for (std::size_t j = 0; j < m; ++j) p[d.i0_[j]] -= sol(j, 0);
        }
        d.proj_.push_back(p);
    }
    for (std::size_t k = 0; k < d.gamma_.size(); ++k) {
        if (!rd.root(d.gamma_[k]).positive) continue;
        bool seen = false;
        for (int r : d.proj_positive_) seen = seen || d.proj_[gamma_index(r)] == d.proj_[k];
        if (!seen) d.proj_positive_.push_back(d.gamma_[k]);
    }

    // Parameters: constant on W(Lambda)-orbits of Gamma.
    std::vector<int> orbit(d.gamma_.size());
    std::iota(orbit.begin(), orbit.end(), 0);
    std::function<int(int)> find = [&](int k) { return orbit[k] == k ? k : orbit[k] = find(orbit[k]); };
    for (int g : d.w_lambda_->elements())
        for (std::size_t k = 0; k < d.gamma_.size(); ++k) {
            int j = gamma_index(w->act_root(g, d.gamma_[k]));
            if (j >= 0) orbit[find(static_cast<int>(k))] = find(j);
        }
    std::vector<int> order_of_orbit;
    for (int a : d.delta_) {
        int o = find(gamma_index(a));
        if (std::find(order_of_orbit.begin(), order_of_orbit.end(), o) == order_of_orbit.end()) order_of_orbit.push_back(o);
    }
    for (std::size_t k = 0; k < d.gamma_.size(); ++k) {
        int o = find(static_cast<int>(k));
        if (std::find(order_of_orbit.begin(), order_of_orbit.end(), o) == order_of_orbit.end()) order_of_orbit.push_back(o);
    }
    for (std::size_t k = 0; k < d.gamma_.size(); ++k) {
        auto pos = std::find(order_of_orbit.begin(), order_of_orbit.end(), find(static_cast<int>(k))) - order_of_orbit.begin();
        d.p_by_gamma_.push_back(p_values[std::min<std::size_t>(pos, p_values.size() - 1)]);
    }
    for (int a : d.delta_) d.gen_p_.push_back(d.p_by_gamma_[gamma_index(a)]);
    return d;
}

int RamificationDatum::find_projection(const std::vector<Rational>& p) const {
    for (std::size_t k = 0; k < proj_.size(); ++k)
        if (proj_[k] == p) return static_cast<int>(k);
    return -1;
}

Rational RamificationDatum::p_of(int w) const {
    const RootDatum& rd = w_->datum();
    Rational p = 1;
    for (std::size_t k = 0; k < gamma_.size(); ++k)
        if (rd.root(gamma_[k]).positive && !rd.root(w_->act_root(w, gamma_[k])).positive) p *= p_by_gamma_[k];
    return p;
}

int RamificationDatum::length_perp(int w) const {
    const RootDatum& rd = w_->datum();
    int l = 0;
    for (int a : proj_positive_)
        if (!rd.root(w_->act_root(w, a)).positive) ++l;
    return l;
}

bool RamificationDatum::in_v_lambda(int w) const {
    const RootDatum& rd = w_->datum();
    for (int b : i0_) {
        int r = w_->act_root(w, rd.simple(b));
        bool simple = false;
        for (int i = 0; i < w_->rank(); ++i) simple = simple || rd.simple(i) == r;
        if (!simple) return false;
    }
    for (int a : gamma_)
        if (rd.root(a).positive && !rd.root(w_->act_root(w, a)).positive) return false;
    return true;
}

SimpleSet RamificationDatum::generators_in(int w, const SimpleSet& I) const {
    SimpleSet out;
    for (std::size_t i = 0; i < delta_.size(); ++i)
        if (w_->root_in_span(w_->act_root(w, delta_[i]), I)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<CheckRecord> RamificationDatum::invariant_records() const {
    const RootDatum& rd = w_->datum();
    const WeylGroup& w = *w_;
    const std::string tag = " I0=" + subset_name(i0_);
    std::vector<CheckRecord> out;
    auto gamma_index = [&](int r) {
        auto it = std::find(gamma_.begin(), gamma_.end(), r);
        return it == gamma_.end() ? -1 : static_cast<int>(it - gamma_.begin());
    };
    auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };

    bool invol = true, in_r = true, refl = true;
    for (std::size_t k = 0; k < gamma_.size(); ++k) {
        int v = v_[k];
        invol = invol && w.mul(v, v) == w.identity();
        in_r = in_r && r_->contains(v);
        int image = gamma_index(w.act_root(v, gamma_[k]));
        std::vector<Rational> neg = proj_[k];
        for (auto& c : neg) c = -c;
        refl = refl && w.det_on_perp(v, i0_) == -1 && image >= 0 && proj_[image] == neg;
    }
    out.push_back({"v[a,I0] is an involution" + tag, "Gamma", yes_no(invol), "true", invol});
    out.push_back({"S(Lambda) generates every v[a,I0]" + tag, "Gamma", yes_no(in_r), "true", in_r});
    out.push_back({"v[a,I0] reflects I0 perp in the projection of a" + tag, "Gamma", yes_no(refl), "true", refl});

    bool stable = true;
    for (int g : w_lambda_->elements())
        for (int a : gamma_) stable = stable && gamma_index(w.act_root(g, a)) >= 0;
    out.push_back({"Gamma is W(Lambda)-stable" + tag, "W(Lambda)", yes_no(stable), "true", stable});

    bool normal = true;
    for (int g : w_lambda_->elements())
        for (int r : r_->elements()) normal = normal && r_->contains(w.mul(w.mul(g, r), w.inverse(g)));
    out.push_back({"R(Lambda) is normal in W(Lambda)" + tag, "W(Lambda)", yes_no(normal), "true", normal});

    std::size_t prod = c_.size() * static_cast<std::size_t>(r_->order());
    bool meet = true;
    for (int c : c_) meet = meet && (c == w.identity() || !r_->contains(c));
    out.push_back({"W(Lambda) = C(Lambda) R(Lambda)" + tag, "orders",
                   std::to_string(w_lambda_->order()), std::to_string(prod),
                   prod == static_cast<std::size_t>(w_lambda_->order()) && meet});
    out.push_back({"C(Lambda) is trivial" + tag, "C(Lambda)", std::to_string(c_.size()), "1", c_.size() == 1});

    // Projected Gamma+ is a positive system with basis the projection of Delta(Lambda).
    bool disjoint = true;
    for (std::size_t k = 0; k < gamma_.size(); ++k) {
        std::vector<Rational> neg = proj_[k];
        for (auto& c : neg) c = -c;
        for (std::size_t j = 0; j < gamma_.size(); ++j)
            if (proj_[j] == neg && rd.root(gamma_[j]).positive == rd.root(gamma_[k]).positive) disjoint = false;
    }
    out.push_back({"projected Gamma+ and Gamma- are disjoint" + tag, "Gamma", yes_no(disjoint), "true", disjoint});
    const std::size_t n = static_cast<std::size_t>(w.rank());
    std::vector<std::vector<Rational>> cols;
    for (int a : delta_) cols.push_back(proj_[gamma_index(a)]);
    Matrix basis = Matrix::from_columns(cols, n);
    bool independent = basis.rank() == delta_.size(), nonneg = true;
    for (int a : proj_positive_) {
        Matrix b(n, 1), sol;
        for (std::size_t i = 0; i < n; ++i) b(i, 0) = proj_[gamma_index(a)][i];
        if (!basis.solve(b, sol)) {
            nonneg = false;
            continue;
        }
        for (std::size_t i = 0; i < sol.rows(); ++i) nonneg = nonneg && sgn(sol(i, 0)) >= 0;
    }
    out.push_back({"projected Delta(Lambda) is a fundamental system" + tag, "Gamma+",
                   yes_no(independent && nonneg), "true", independent && nonneg});

    for (int r : r_->elements()) {
        int lp = length_perp(r), lr = r_->length(r), det = w.det_on_perp(r, i0_);
        Rational pw = 1;
        for (int s : r_->reduced_word(r)) pw *= gen_p_[s];
        std::string name = r_->word_string(r);
        out.push_back({"l_perp by projection = length in R(Lambda)" + tag, name, std::to_string(lp), std::to_string(lr),
                       lp == lr});
        out.push_back({"(-1)^l_perp = det on I0 perp" + tag, name, std::to_string(parity_sign(lp)), std::to_string(det),
                       parity_sign(lp) == det});
        out.push_back({"p_w = product over a reduced word" + tag, name, str(p_of(r)), str(pw), p_of(r) == pw});
    }
    return out;
}

std::vector<CheckRecord> hl_analogue_check(const RamificationDatum& rd, const FiniteHeckeModule& m,
                                           std::vector<std::string>* notes, bool corrupt) {
    if (!rd.c_trivial()) fail(ErrorKind::AssumptionViolated, "C(Lambda) is not trivial");
    const WeylGroup& w = rd.group();
    const RootDatum& root = w.datum();
    const CoxeterSystem& sys = m.system();
    if (sys.num_generators() != rd.r_lambda()->num_generators()) fail(ErrorKind::ParameterMismatch, "module of another algebra");
    for (int i = 0; i < sys.num_generators(); ++i)
        if (sys.generator(i) != rd.r_lambda()->generator(i) || m.params()[i] != rd.generator_params()[i])
            fail(ErrorKind::ParameterMismatch, "module of another algebra");

    FiniteVirtualModule lhs;
    for (const auto& I : all_subsets(w.rank())) {
        auto c = w.c_set(rd.I0(), I);
        if (c.empty()) continue;
        auto wi = w.parabolic(I);
        for (const auto& dc : double_cosets(w, *wi, c, *rd.w_lambda())) {
            std::vector<int> good;
            for (int x : dc.elements) {
                bool inside = rd.in_v_lambda(x);
                for (int b : rd.I0()) {
                    int r = w.act_root(x, root.simple(b));
                    bool hit = false;
                    for (int i : I) hit = hit || root.simple(i) == r;
                    inside = inside && hit;
                }
                if (inside) good.push_back(x);
            }
            if (good.empty())
                fail(ErrorKind::NoGoodRepresentative, "double coset of " + w.word_string(dc.rep) + " for I=" + subset_name(I));
            std::sort(good.begin(), good.end(), [&](int a, int b) {
                if (w.length(a) != w.length(b)) return w.length(a) < w.length(b);
                return w.reduced_word(a) < w.reduced_word(b);
            });
            SimpleSet J = rd.generators_in(good.front(), I);
            FiniteHeckeModule part = induce_module(restrict_module(m, J));
            if (notes && good.size() > 1) {
                SimpleSet J2 = rd.generators_in(good.back(), I);
                FiniteHeckeModule alt = induce_module(restrict_module(m, J2));
                bool same = true;
                for (int g : sys.elements()) same = same && alt.trace(g) == part.trace(g);
                notes->push_back("I=" + subset_name(I) + ", representatives " + w.word_string(good.front()) + " and " +
                                 w.word_string(good.back()) + ": summands " + (same ? "agree" : "differ"));
            }
            lhs.parts.emplace_back(parity_sign(static_cast<int>(I.size())), std::move(part));
        }
    }
    std::vector<CheckRecord> out;
    const int sign0 = parity_sign(static_cast<int>(rd.I0().size())) * (corrupt ? -1 : 1);
    for (int g : sys.elements()) {
        Rational l = lhs.trace(g);
        Rational r = m.act(w.inverse(g)).inverse().trace() * rd.p_of(g) * (sign0 * parity_sign(rd.length_perp(g)));
        out.push_back({"HL analogue I0=" + subset_name(rd.I0()) + " " + m.label(), "T[" + sys.word_string(g) + "]",
                       str(l), str(r), l == r});
    }
    return out;
}

}  // namespace ahecke
