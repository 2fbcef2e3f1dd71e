#include "ahecke/hecke.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <sstream>

namespace ahecke {

using Terms = HeckeElement::Terms;

namespace {

void accumulate(Terms& t, const AffineWeylElement& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

void accumulate_all(Terms& t, const Terms& o, const LaurentPoly& c) {
    for (const auto& [k, d] : o) accumulate(t, k, d * c);
}

IntVec add_vec(const IntVec& a, const IntVec& b, int scale = 1) {
    IntVec c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += scale * b[i];
    return c;
}

// ---- IM basis ----

Terms im_rmul_gen(const HeckeContext& ctx, const Terms& t, int s) {
    const AffineWeylGroup& aff = ctx.affine();
    const AffineWeylElement g = aff.generator(s);
    const LaurentPoly q = ctx.q_gen(s), qm1 = q - LaurentPoly(1);
    Terms out;
    for (const auto& [k, c] : t) {
        AffineWeylElement ks = aff.mul(k, g);
        if (aff.length(ks) > aff.length(k)) {
            accumulate(out, ks, c);
        } else {
            accumulate(out, ks, q * c);
            accumulate(out, k, qm1 * c);
        }
    }
    return out;
}

Terms im_rmul_gen_inv(const HeckeContext& ctx, const Terms& t, int s) {
    const LaurentPoly qi = ctx.q_gen(s).inverse();
    Terms out;
    accumulate_all(out, im_rmul_gen(ctx, t, s), qi);
    accumulate_all(out, t, qi - LaurentPoly(1));
    return out;
}

Terms im_rmul_omega(const HeckeContext& ctx, const Terms& t, const AffineWeylElement& gamma) {
    Terms out;
    for (const auto& [k, c] : t) accumulate(out, ctx.affine().mul(k, gamma), c);
    return out;
}

Terms im_rmul_basis(const HeckeContext& ctx, const Terms& t, const AffineWeylElement& w) {
    auto d = ctx.affine().decompose(w);
    Terms cur = im_rmul_omega(ctx, t, d.gamma);
    for (int s : d.word) cur = im_rmul_gen(ctx, cur, s);
    return cur;
}

Terms im_mul(const HeckeContext& ctx, const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [w, c] : b) accumulate_all(out, im_rmul_basis(ctx, a, w), c);
    return out;
}

// ---- BL basis ----

Terms bl_rmul_fin(const HeckeContext& ctx, const Terms& t, int s) {
    const WeylGroup& w = ctx.finite();
    const RootDatum& rd = ctx.datum();
    const int gs = w.simple_reflection(s);
    const LaurentPoly q = ctx.q_gen(s), qm1 = q - LaurentPoly(1);
    Terms out;
    for (const auto& [k, c] : t) {
        IntVec sx = rd.reflect(rd.simple(s), k.x);
        int ws = w.mul(k.fin, gs);
        if (w.length(ws) > w.length(k.fin)) {
            accumulate(out, {ws, sx}, c);
        } else {
            accumulate(out, {ws, sx}, q * c);
            accumulate(out, {k.fin, sx}, qm1 * c);
        }
        for (const auto& [y, r] : ctx.bernstein_remainder(s, k.x)) accumulate(out, {k.fin, y}, r * c);
    }
    return out;
}

Terms bl_rmul_fin_inv(const HeckeContext& ctx, const Terms& t, int s) {
    const LaurentPoly qi = ctx.q_gen(s).inverse();
    Terms out;
    accumulate_all(out, bl_rmul_fin(ctx, t, s), qi);
    accumulate_all(out, t, qi - LaurentPoly(1));
    return out;
}

Terms bl_shift(const Terms& t, const IntVec& y) {
    Terms out;
    for (const auto& [k, c] : t) out.emplace(AffineWeylElement{k.fin, add_vec(k.x, y)}, c);
    return out;
}

Terms bl_rmul_finite_element(const HeckeContext& ctx, const Terms& t, int u) {
    Terms cur = t;
    for (int s : ctx.finite().reduced_word(u)) cur = bl_rmul_fin(ctx, cur, s);
    return cur;
}

Terms bl_mul(const HeckeContext& ctx, const Terms& a, const Terms& b) {
    Terms out;
    std::map<int, Terms> by_fin;
    for (const auto& [k, c] : b) {
        auto it = by_fin.find(k.fin);
        if (it == by_fin.end()) it = by_fin.emplace(k.fin, bl_rmul_finite_element(ctx, a, k.fin)).first;
        accumulate_all(out, bl_shift(it->second, k.x), c);
    }
    return out;
}

Terms bl_generator_terms(const HeckeContext& ctx, int s) {
    const AffineWeylGroup& aff = ctx.affine();
    const RootDatum& rd = ctx.datum();
    if (s < aff.rank()) return {{aff.from_finite(ctx.finite().simple_reflection(s)), LaurentPoly(1)}};
    // T_{s0} = T_{t_{alpha0}} T_{s_{alpha0}}^{-1} = v(t_{alpha0}) theta_{alpha0} T_{s_{alpha0}}^{-1}
    const IntVec& a0 = rd.root(rd.alpha0()).x;
    Terms cur{{AffineWeylElement{ctx.finite().identity(), a0}, ctx.v_of(aff.translation(a0))}};
    auto word = ctx.finite().reduced_word(ctx.finite().reflection(rd.alpha0()));
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = bl_rmul_fin_inv(ctx, cur, *it);
    return cur;
}

Terms bl_omega_terms(const HeckeContext& ctx, const AffineWeylElement& gamma) {
    const AffineWeylGroup& aff = ctx.affine();
    if (aff.length(gamma) != 0) fail(ErrorKind::AssumptionViolated, "not a length-zero element");
    // T_gamma T_{t_lambda} = T_{w t_{mu+lambda}} = T_w T_{t_{mu+lambda}} for lambda, mu + lambda dominant.
    IntVec lam = ctx.dominant_shift(gamma.x);
    LaurentPoly c = ctx.v_of(aff.translation(add_vec(gamma.x, lam))) * ctx.v_of(aff.translation(lam)).inverse();
    return {{gamma, c}};
}

Terms to_bl_terms(const HeckeContext& ctx, const Terms& im) {
    const AffineWeylGroup& aff = ctx.affine();
    Terms s0 = bl_generator_terms(ctx, aff.s0_index());
    Terms out;
    for (const auto& [w, c] : im) {
        auto d = aff.decompose(w);
        Terms cur = bl_omega_terms(ctx, d.gamma);
        for (int s : d.word) cur = s < aff.rank() ? bl_rmul_fin(ctx, cur, s) : bl_mul(ctx, cur, s0);
        accumulate_all(out, cur, c);
    }
    return out;
}

Terms t_inverse_terms(const HeckeContext& ctx, const AffineWeylElement& w) {
    const AffineWeylGroup& aff = ctx.affine();
    auto d = aff.decompose(w);
    Terms cur{{aff.identity(), LaurentPoly(1)}};
    for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) cur = im_rmul_gen_inv(ctx, cur, *it);
    return im_rmul_omega(ctx, cur, aff.inverse(d.gamma));
}

}  // namespace

// ---- context ----

HeckeContext::HeckeContext(std::shared_ptr<const AffineWeylGroup> aff, const ParamAssignment& lam)
    : aff_(std::move(aff)), lam_(lam), params_(affine_parameters(*aff_, lam)) {}

std::shared_ptr<const HeckeContext> HeckeContext::create(std::shared_ptr<const AffineWeylGroup> aff,
                                                         const ParamAssignment& lam) {
    return std::shared_ptr<const HeckeContext>(new HeckeContext(std::move(aff), lam));
}

LaurentPoly HeckeContext::q_of(const AffineWeylElement& w) const {
    LaurentPoly q = 1;
    for (int s : aff_->decompose(w).word) q *= q_gen(s);
    return q;
}

LaurentPoly HeckeContext::v_of(const AffineWeylElement& w) const {
    LaurentPoly v = 1;
    for (int s : aff_->decompose(w).word) v *= v_gen(s);
    return v;
}

LaurentPoly HeckeContext::v_star(int s) const {
    const RootDatum& rd = datum();
    int a = rd.simple(s);
    if (rd.coroot_in_2y(a) && rd.orbit(a) == rd.orbit(rd.alpha0())) return v_gen(aff_->s0_index());
    return v_gen(s);
}

IntVec HeckeContext::dominant_shift(const IntVec& x, int extra) const {
    const RootDatum& rd = datum();
    const int n = rd.rank();
    auto it = shift_cache_.find(x);
    if (it == shift_cache_.end()) {
        // x + k 2rho is dominant for some k, which bounds the search box.
        int k = 0;
        IntVec y = x;
        while (!rd.is_dominant(y)) {
            y = add_vec(y, rd.two_rho());
            ++k;
        }
        int radius = 0;
        for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(k * rd.two_rho()[i]));
        IntVec best = add_vec(IntVec(n, 0), rd.two_rho(), k);
        int best_len = aff_->length(aff_->translation(best));
        IntVec lam(n, -radius);
        while (true) {
            if (rd.is_dominant(lam) && rd.is_dominant(add_vec(x, lam))) {
                int len = aff_->length(aff_->translation(lam));
                if (len < best_len || (len == best_len && lam < best)) {
                    best = lam;
                    best_len = len;
                }
            }
            int i = 0;
            while (i < n && lam[i] == radius) lam[i++] = -radius;
            if (i == n) break;
            ++lam[i];
        }
        it = shift_cache_.emplace(x, best).first;
    }
    return add_vec(it->second, rd.two_rho(), extra);
}

const ThetaPoly& HeckeContext::bernstein_remainder(int s, const IntVec& x) const {
    auto key = std::make_pair(s, x);
    auto it = remainder_cache_.find(key);
    if (it != remainder_cache_.end()) return it->second;

    const RootDatum& rd = datum();
    const int a = rd.simple(s);
    const IntVec& alpha = rd.root(a).x;
    const int n = rd.pairing(x, a);
    const LaurentPoly v = v_gen(s), vs = v_star(s);
    const LaurentPoly c0 = q_gen(s) - LaurentPoly(1), c1 = v * vs - v * vs.inverse();

    // ((q-1) + c1 theta_{-alpha}) (theta_x - theta_{x - n alpha}) / (1 - theta_{-2 alpha})
    ThetaPoly num;
    auto add = [&](int k, const LaurentPoly& c) {
        auto& slot = num[add_vec(x, alpha, k)];
        slot += c;
    };
    add(0, c0);
    add(-n, -c0);
    add(-1, c1);
    add(-n - 1, -c1);
    ThetaPoly out = divide_by_one_minus(num, add_vec(IntVec(alpha.size(), 0), alpha, 2));
    return remainder_cache_.emplace(key, std::move(out)).first->second;
}

ThetaPoly divide_by_one_minus(const ThetaPoly& num, const IntVec& beta) {
    auto height = [&](const IntVec& y) {
        long h = 0;
        for (std::size_t i = 0; i < y.size(); ++i) h += static_cast<long>(y[i]) * beta[i];
        return h;
    };
    auto higher = [&](const IntVec& a, const IntVec& b) {
        long ha = height(a), hb = height(b);
        return ha != hb ? ha > hb : a > b;
    };
    ThetaPoly rem;
    long floor = 0;
    bool first = true;
    for (const auto& [y, c] : num) {
        if (c.is_zero()) continue;
        rem[y] = c;
        floor = first ? height(y) : std::min(floor, height(y));
        first = false;
    }
    ThetaPoly quo;
    while (!rem.empty()) {
        auto top = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (higher(it->first, top->first)) top = it;
        IntVec y = top->first;
        LaurentPoly c = top->second;
        rem.erase(top);
        IntVec low = add_vec(y, beta, -1);
        if (height(low) < floor)
            fail(ErrorKind::NonPolynomialQuotient, "quotient is not a Laurent polynomial in theta");
        quo[y] += c;
        auto& slot = rem[low];
        slot += c;
        if (slot.is_zero()) rem.erase(low);
    }
    for (auto it = quo.begin(); it != quo.end();) it = it->second.is_zero() ? quo.erase(it) : std::next(it);
    return quo;
}

// ---- elements ----

void HeckeElement::add_term(const AffineWeylElement& k, const LaurentPoly& c) { accumulate(terms_, k, c); }

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (ctx_ != o.ctx_) fail(ErrorKind::ParameterMismatch, "elements of different algebras");
    const HeckeElement& b = o.basis_ == basis_ ? o : (basis_ == Basis::IM ? to_im(o) : to_bl(o));
    HeckeElement r = *this;
    accumulate_all(r.terms_, b.terms_, LaurentPoly(1));
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + o * LaurentPoly(-1); }

HeckeElement HeckeElement::operator*(const LaurentPoly& c) const {
    HeckeElement r(ctx_, basis_);
    accumulate_all(r.terms_, terms_, c);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    if (ctx_ != o.ctx_) return false;
    if (basis_ != o.basis_) return to_im(*this).terms_ == to_im(o).terms_;
    return terms_ == o.terms_;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")";
        if (basis_ == Basis::IM) {
            os << "T[" << ctx_->affine().to_string(k) << "]";
        } else {
            os << "T[" << ctx_->finite().word_string(k.fin) << "]theta[";
            for (std::size_t i = 0; i < k.x.size(); ++i) os << (i ? "," : "") << k.x[i];
            os << "]";
        }
        first = false;
    }
    return os.str();
}

HeckeElement im_basis(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w) {
    HeckeElement h(std::move(ctx), Basis::IM);
    h.add_term(w, LaurentPoly(1));
    return h;
}

HeckeElement bl_basis(std::shared_ptr<const HeckeContext> ctx, int fin, const IntVec& x) {
    HeckeElement h(std::move(ctx), Basis::BL);
    h.add_term({fin, x}, LaurentPoly(1));
    return h;
}

HeckeElement one(std::shared_ptr<const HeckeContext> ctx, Basis b) {
    HeckeElement h(ctx, b);
    h.add_term(ctx->affine().identity(), LaurentPoly(1));
    return h;
}

namespace {

HeckeElement wrap(const HeckeElement& like, Basis b, Terms t) {
    HeckeElement h(like.ctx_ptr(), b);
    for (const auto& [k, c] : t) h.add_term(k, c);
    return h;
}

}  // namespace

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.ctx_ptr() != b.ctx_ptr()) fail(ErrorKind::ParameterMismatch, "elements of different algebras");
    const HeckeContext& ctx = a.ctx();
    if (a.basis() == Basis::IM) {
        HeckeElement bi = b.basis() == Basis::IM ? b : to_im(b);
        return wrap(a, Basis::IM, im_mul(ctx, a.terms(), bi.terms()));
    }
    HeckeElement bb = b.basis() == Basis::BL ? b : to_bl(b);
    return wrap(a, Basis::BL, bl_mul(ctx, a.terms(), bb.terms()));
}

HeckeElement to_bl(const HeckeElement& h) {
    if (h.basis() == Basis::BL) return h;
    return wrap(h, Basis::BL, to_bl_terms(h.ctx(), h.terms()));
}

HeckeElement to_im(const HeckeElement& h) {
    if (h.basis() == Basis::IM) return h;
    const HeckeContext& ctx = h.ctx();
    Terms out;
    for (const auto& [k, c] : h.terms()) {
        Terms fin{{ctx.affine().from_finite(k.fin), LaurentPoly(1)}};
        accumulate_all(out, im_mul(ctx, fin, theta_im(h.ctx_ptr(), k.x).terms()), c);
    }
    return wrap(h, Basis::IM, out);
}

HeckeElement t_inverse(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w) {
    HeckeElement h(ctx, Basis::IM);
    for (const auto& [k, c] : t_inverse_terms(*ctx, w)) h.add_term(k, c);
    return h;
}

HeckeElement theta_im(std::shared_ptr<const HeckeContext> ctx, const IntVec& x, int extra_shift) {
    const AffineWeylGroup& aff = ctx->affine();
    IntVec x2 = ctx->dominant_shift(x, extra_shift);
    IntVec x1 = add_vec(x, x2);
    AffineWeylElement t1 = aff.translation(x1), t2 = aff.translation(x2);
    Terms a{{t1, ctx->v_of(t1).inverse()}};
    Terms b = t_inverse_terms(*ctx, t2);
    HeckeElement h(ctx, Basis::IM);
    for (const auto& [w, c] : im_mul(*ctx, a, b)) h.add_term(w, c * ctx->v_of(t2));
    return h;
}

HeckeElement tbar(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w, int extra_shift) {
    const AffineWeylGroup& aff = ctx->affine();
    IntVec mu = ctx->dominant_shift(w.x, extra_shift);
    Terms a{{aff.from_finite(w.fin), LaurentPoly(1)}};
    a = im_rmul_basis(*ctx, a, aff.translation(add_vec(w.x, mu)));
    HeckeElement h(ctx, Basis::IM);
    for (const auto& [u, c] : im_mul(*ctx, a, t_inverse_terms(*ctx, aff.translation(mu)))) h.add_term(u, c);
    return h;
}

HeckeElement bl_generator(std::shared_ptr<const HeckeContext> ctx, int s) {
    HeckeElement h(ctx, Basis::BL);
    for (const auto& [k, c] : bl_generator_terms(*ctx, s)) h.add_term(k, c);
    return h;
}

HeckeElement bl_generator_inverse(std::shared_ptr<const HeckeContext> ctx, int s) {
    LaurentPoly qi = ctx->q_gen(s).inverse();
    return bl_generator(ctx, s) * qi + one(ctx, Basis::BL) * (qi - LaurentPoly(1));
}

HeckeElement bl_omega(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& gamma) {
    HeckeElement h(ctx, Basis::BL);
    for (const auto& [k, c] : bl_omega_terms(*ctx, gamma)) h.add_term(k, c);
    return h;
}

HeckeElement star(const HeckeElement& h, bool corrupt) {
    HeckeElement im = to_im(h);
    const HeckeContext& ctx = im.ctx();
    Terms out;
    for (const auto& [w, c] : im.terms()) {
        int sign = ctx.finite().sign(w.fin) * (corrupt ? -1 : 1);
        accumulate_all(out, t_inverse_terms(ctx, ctx.affine().inverse(w)), ctx.q_of(w) * c * LaurentPoly(sign));
    }
    return wrap(im, Basis::IM, out);
}

HeckeElement kappa(const HeckeElement& h) {
    HeckeElement im = to_im(h);
    HeckeElement out(im.ctx_ptr(), Basis::IM);
    for (const auto& [w, c] : im.terms()) out.add_term(im.ctx().affine().inverse(w), c);
    return out;
}

bool parity_check(const HeckeContext& ctx, const AffineWeylElement& w) {
    const AffineWeylGroup& aff = ctx.affine();
    auto d = aff.decompose(w);
    int lhs = ctx.finite().length(d.gamma.fin) + static_cast<int>(d.word.size());
    return (lhs - ctx.finite().length(w.fin)) % 2 == 0;
}

}  // namespace ahecke
