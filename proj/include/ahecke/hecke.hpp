#pragma once

#include "ahecke/affine_weyl.hpp"
#include "ahecke/laurent.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ahecke {

using ThetaPoly = std::map<IntVec, LaurentPoly>;

// Generic affine Hecke algebra over Q[v_s^{+-1}].
class HeckeContext {
public:
    static std::shared_ptr<const HeckeContext> create(std::shared_ptr<const AffineWeylGroup> aff,
                                                      const ParamAssignment& lam);

    const AffineWeylGroup& affine() const { return *aff_; }
    std::shared_ptr<const AffineWeylGroup> affine_ptr() const { return aff_; }
    const WeylGroup& finite() const { return aff_->finite(); }
    const RootDatum& datum() const { return aff_->datum(); }
    const AffineParams& params() const { return params_; }
    const ParamAssignment& assignment() const { return lam_; }

    LaurentPoly q_gen(int s) const { return params_.q(s); }
    LaurentPoly v_gen(int s) const { return params_.v(s); }
    // q(w) and its square root, products over a reduced word.
    LaurentPoly q_of(const AffineWeylElement& w) const;
    LaurentPoly v_of(const AffineWeylElement& w) const;
    // v attached to the starred parameter of a simple root (equals v_s unless lambda* differs).
    LaurentPoly v_star(int s) const;

    // (theta_x T_s - T_s theta_{s x}) as an element of the group algebra of X.
    const ThetaPoly& bernstein_remainder(int s, const IntVec& x) const;
    // Dominant lambda of least length with x + lambda dominant, plus extra * 2rho.
    IntVec dominant_shift(const IntVec& x, int extra = 0) const;

private:
    HeckeContext(std::shared_ptr<const AffineWeylGroup> aff, const ParamAssignment& lam);
    std::shared_ptr<const AffineWeylGroup> aff_;
    ParamAssignment lam_;
    AffineParams params_;
    mutable std::map<std::pair<int, IntVec>, ThetaPoly> remainder_cache_;
    mutable std::map<IntVec, IntVec> shift_cache_;
};

// Exact quotient of num by (1 - theta_{-beta}); throws NonPolynomialQuotient.
ThetaPoly divide_by_one_minus(const ThetaPoly& num, const IntVec& beta);

enum class Basis { IM, BL };

// IM terms are keyed by w = fin t_x; BL terms T_fin theta_x are keyed by (fin, x).
class HeckeElement {
public:
    using Terms = std::map<AffineWeylElement, LaurentPoly>;

    HeckeElement(std::shared_ptr<const HeckeContext> ctx, Basis basis) : ctx_(std::move(ctx)), basis_(basis) {}

    const HeckeContext& ctx() const { return *ctx_; }
    std::shared_ptr<const HeckeContext> ctx_ptr() const { return ctx_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const AffineWeylElement& k, const LaurentPoly& c);
    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const LaurentPoly& c) const;
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::shared_ptr<const HeckeContext> ctx_;
    Basis basis_;
    Terms terms_;
};

HeckeElement im_basis(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w);
HeckeElement bl_basis(std::shared_ptr<const HeckeContext> ctx, int fin, const IntVec& x);
HeckeElement one(std::shared_ptr<const HeckeContext> ctx, Basis b);

// Product in the basis of a; b is converted if needed. Throws ParameterMismatch across contexts.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

HeckeElement to_bl(const HeckeElement& h);
HeckeElement to_im(const HeckeElement& h);

// IM-basis constructions.
HeckeElement t_inverse(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w);
HeckeElement theta_im(std::shared_ptr<const HeckeContext> ctx, const IntVec& x, int extra_shift = 0);
HeckeElement tbar(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& w, int extra_shift = 0);

// BL forms of T_s, T_s^{-1}, T_gamma.
HeckeElement bl_generator(std::shared_ptr<const HeckeContext> ctx, int s);
HeckeElement bl_generator_inverse(std::shared_ptr<const HeckeContext> ctx, int s);
HeckeElement bl_omega(std::shared_ptr<const HeckeContext> ctx, const AffineWeylElement& gamma);

// T_w^* = (-1)^{l(w_fin)} q(w) T_{w^{-1}}^{-1}, extended linearly (IM basis).
HeckeElement star(const HeckeElement& h, bool corrupt = false);
// T_w -> T_{w^{-1}}, extended linearly (IM basis).
HeckeElement kappa(const HeckeElement& h);

// (l(w_Omega) + l(w)) and l(w_fin) have the same parity, w = gamma w'.
bool parity_check(const HeckeContext& ctx, const AffineWeylElement& w);

}  // namespace ahecke
