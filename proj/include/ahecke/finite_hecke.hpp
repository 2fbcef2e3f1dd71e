#pragma once

#include "ahecke/coxeter_system.hpp"
#include "ahecke/matrix.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ahecke {

// Module over the parabolic subalgebra H_J of a specialized finite Hecke algebra,
// given by matrices of T_s for s in J.
class FiniteHeckeModule {
public:
    FiniteHeckeModule(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params, SimpleSet support,
                      std::vector<Matrix> gens, std::string label);

    // T_s acts by q_s when choice[s] > 0 and by -1 otherwise.
    static FiniteHeckeModule one_dim(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params,
                                     SimpleSet support, const std::vector<int>& choice);

    const CoxeterSystem& system() const { return *sys_; }
    std::shared_ptr<const CoxeterSystem> system_ptr() const { return sys_; }
    const std::vector<Rational>& params() const { return params_; }
    const SimpleSet& support() const { return support_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const Matrix& gen(int s) const;

    // Matrix of T_w, w in W_J.
    Matrix act(int w) const;
    Rational trace(int w) const { return act(w).trace(); }
    Rational q_of(int w) const;

    // Throws NotAModule unless quadratic and braid relations hold.
    void validate() const;

private:
    std::shared_ptr<const CoxeterSystem> sys_;
    std::vector<Rational> params_;
    SimpleSet support_;
    std::vector<Matrix> gens_;
    std::size_t dim_ = 0;
    std::string label_;
};

FiniteHeckeModule restrict_module(const FiniteHeckeModule& m, const SimpleSet& j);
// Induction from H_J to the whole algebra, on the basis T_x (x) n, x minimal in x W_J.
FiniteHeckeModule induce_module(const FiniteHeckeModule& n);
// Twist by T_s -> -q_s T_s^{-1}.
FiniteHeckeModule twist_star(const FiniteHeckeModule& m);

struct FiniteVirtualModule {
    std::vector<std::pair<int, FiniteHeckeModule>> parts;
    Rational trace(int w) const;
};

// Dihedral two-dimensional module with T_a = [[-1,1],[0,qa]], T_b = [[qb,0],[y,-1]], tr(T_a T_b) = 0.
// Valid for m(a, b) = 4.
FiniteHeckeModule dihedral_order4_module(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params);

}  // namespace ahecke
