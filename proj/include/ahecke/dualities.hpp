#pragma once

#include "ahecke/finite_hecke.hpp"
#include "ahecke/hecke_modules.hpp"
#include "ahecke/report.hpp"
#include "ahecke/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ahecke {

// With corrupt set, the dual side of every identity gets the wrong sign.

// sum_I (-1)^{|I|} Ind Res chi = det . chi, one record per class of W.
std::vector<CheckRecord> solomon_check(const ClassFunction& chi, const std::string& label, bool corrupt = false);

// sum_I (-1)^{|I|} sum_{w in W_I\C_{I0}(I)/H} Ind_{H cap W_I^w}^H Res chi = (-1)^{|I0|} det(.|_{I0 perp}) chi.
// Throws NotInNormalizer unless H normalizes W_{I0}.
std::vector<CheckRecord> hl_character_check(const SimpleSet& I0, std::shared_ptr<const Subgroup> h,
                                            const ClassFunction& chi, const std::string& label, bool corrupt = false);

// D[M] = [M*] on the whole basis {T_w : w in W}.
FiniteVirtualModule finite_d_operator(const FiniteHeckeModule& m);
std::vector<CheckRecord> kato_finite_check(const FiniteHeckeModule& m, bool corrupt = false);

// D[M] = [M*] on {T_gamma T_w : l(w) <= bound}.
std::vector<CheckRecord> kato_affine_check(const AffineHeckeModule& m, int bound, bool corrupt = false);

// chi = sum_w (-1)^{l(w)} T_w (x) T_w^{-1} as a map M -> Ind_empty Res_empty M.
Matrix chi_matrix(const AffineHeckeModule& m, const AffineHeckeModule& induced);
// Intertwining identities for every affine generator and every element of Omega, and
// the intersection of the images L_s of tau_s, s in S.
std::vector<CheckRecord> chi_intertwiner_check(const AffineHeckeModule& m, bool corrupt = false);

enum class RamificationMode { Degenerate, FullStabilizer };

// Synthetic ramification datum: W(Lambda) is W (degenerate) or S_{I0}, and the
// parameters p_a are supplied by the caller.
class RamificationDatum {
public:
    // p_values: one per W(Lambda)-orbit of Gamma, orbits ordered by their first simple member; the last
    // value is repeated if too few are given. Throws AssumptionViolated when C(Lambda) is nontrivial
    // and require_c_trivial is set.
    static RamificationDatum build(std::shared_ptr<const WeylGroup> w, const SimpleSet& I0, RamificationMode mode,
                                   const std::vector<Rational>& p_values, bool require_c_trivial = true);

    const WeylGroup& group() const { return *w_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return w_; }
    const SimpleSet& I0() const { return i0_; }
    std::shared_ptr<const Subgroup> w_lambda() const { return w_lambda_; }
    const std::vector<int>& gamma() const { return gamma_; }
    // v[a, I0] for the k-th root of Gamma.
    int v_of(int k) const { return v_[k]; }
    const std::vector<int>& delta() const { return delta_; }
    std::shared_ptr<const CoxeterSystem> r_lambda() const { return r_; }
    const std::vector<int>& c_lambda() const { return c_; }
    bool c_trivial() const { return c_.size() == 1; }
    // Parameter p_a for the k-th generator of R(Lambda).
    const std::vector<Rational>& generator_params() const { return gen_p_; }

    Rational p_of(int w) const;
    // Length after projection to I0 perp, counted on projected positive roots.
    int length_perp(int w) const;
    // Is w(I0) in Delta and w(Gamma+) positive?
    bool in_v_lambda(int w) const;
    // Simple generators of R(Lambda) whose root a has w(a) in the span of I.
    SimpleSet generators_in(int w, const SimpleSet& I) const;

    // The structural claims about the datum, one record each.
    std::vector<CheckRecord> invariant_records() const;

private:
    std::shared_ptr<const WeylGroup> w_;
    SimpleSet i0_;
    std::shared_ptr<const Subgroup> w_lambda_;
    std::vector<int> gamma_, v_, delta_, c_;
    std::vector<Rational> p_by_gamma_, gen_p_;
    std::shared_ptr<const CoxeterSystem> r_;
    std::vector<std::vector<Rational>> proj_;  // projection of each Gamma root to I0 perp, root coordinates
    std::vector<int> proj_positive_;           // one Gamma+ root per distinct projected positive root
    int find_projection(const std::vector<Rational>& p) const;  // index into proj_ or -1
};

// sum_I (-1)^{|I|} sum_{w in W_I\C_{I0}(I)/W(Lambda)} [Ind_{E'} Res_{E'} M] = [M*] on {T_w : w in W(Lambda)},
// T_w^* = (-1)^{|I0| + l_perp(w)} p_w T_{w^{-1}}^{-1}. M is a module of the Hecke algebra of R(Lambda).
std::vector<CheckRecord> hl_analogue_check(const RamificationDatum& rd, const FiniteHeckeModule& m,
                                           std::vector<std::string>* notes = nullptr, bool corrupt = false);

}  // namespace ahecke
