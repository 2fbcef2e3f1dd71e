#pragma once

#include "ahecke/hecke.hpp"
#include "ahecke/matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ahecke {

// Module over H_I (x) H_empty inside a specialized affine Hecke algebra.
// Data: T_s for s in I, theta on the basis of X. When I = S the action of
// T_{s0} and of T_gamma (gamma in Omega) is part of the module as well.
class AffineHeckeModule {
public:
    // gens has one slot per affine generator (s0 last); slots outside the support are ignored.
    // omega has one slot per element of Omega or is empty. For a full module, missing
    // T_{s0} and T_gamma are computed from their Bernstein-Lusztig forms.
    AffineHeckeModule(std::shared_ptr<const HeckeContext> ctx, Specialization spec, SimpleSet support,
                      std::vector<Matrix> gens, std::vector<Matrix> theta, std::vector<Matrix> omega,
                      std::string label);

    const HeckeContext& ctx() const { return *ctx_; }
    std::shared_ptr<const HeckeContext> ctx_ptr() const { return ctx_; }
    const Specialization& spec() const { return spec_; }
    const SimpleSet& support() const { return support_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    bool full() const { return static_cast<int>(support_.size()) == ctx_->affine().rank(); }

    Rational q(int s) const { return spec_.eval(ctx_->q_gen(s)); }
    Rational eval(const LaurentPoly& p) const { return spec_.eval(p); }

    const Matrix& gen(int s) const;
    const Matrix& theta_basis(int i) const { return theta_[i]; }
    Matrix theta(const IntVec& x) const;
    const Matrix& omega(int k) const;

    // T_u for u in W_I.
    Matrix act_finite(int u) const;
    // T_w; needs a full module.
    Matrix act(const AffineWeylElement& w) const;
    Matrix eval(const HeckeElement& h) const;
    Rational trace(const AffineWeylElement& w) const { return act(w).trace(); }
    // Traces of T_w for a list of elements, sharing prefix products.
    std::vector<Rational> traces(const std::vector<AffineWeylElement>& ws) const;

    // Throws NotAModule unless every defining relation holds as a matrix identity.
    void validate() const;

private:
    std::shared_ptr<const HeckeContext> ctx_;
    Specialization spec_;
    SimpleSet support_;
    std::vector<Matrix> gens_, theta_, theta_inv_, omega_;
    std::size_t dim_ = 0;
    std::string label_;
    mutable std::map<int, Matrix> fin_cache_;
};

// One-dimensional module of H_empty: theta_x -> prod t_i^{x_i}. Throws IllegalCharacter if some t_i = 0.
AffineHeckeModule theta_character(std::shared_ptr<const HeckeContext> ctx, const Specialization& spec,
                                  const std::vector<Rational>& t);
AffineHeckeModule res_module(const AffineHeckeModule& m, const SimpleSet& i);
// H (x)_{H_I} N on the basis T_x (x) n, x minimal in x W_I.
AffineHeckeModule ind_module(const AffineHeckeModule& n);
AffineHeckeModule principal_series(std::shared_ptr<const HeckeContext> ctx, const Specialization& spec,
                                   const std::vector<Rational>& t);
// pi*(h) = pi(h^*); needs a full module.
AffineHeckeModule twist_star(const AffineHeckeModule& m);

struct AffineVirtualModule {
    std::vector<std::pair<int, AffineHeckeModule>> parts;
    std::vector<Rational> traces(const std::vector<AffineWeylElement>& ws) const;
};

// sum over I in S of (-1)^{|I|} Ind_I Res_I M.
AffineVirtualModule d_operator(const AffineHeckeModule& m);
AffineVirtualModule d_operator(const AffineVirtualModule& v);

// gamma w for gamma in Omega and l(w) <= bound.
std::vector<AffineWeylElement> witness_family(const AffineWeylGroup& aff, int bound);

struct TraceComparison {
    std::vector<AffineWeylElement> witnesses;
    std::vector<Rational> lhs, rhs;
    int first_mismatch = -1;
    bool equal() const { return first_mismatch < 0; }
};
TraceComparison grothendieck_equal(const AffineVirtualModule& a, const AffineVirtualModule& b, int bound);

}  // namespace ahecke
