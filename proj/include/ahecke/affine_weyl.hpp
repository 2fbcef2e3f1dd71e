#pragma once

#include "ahecke/laurent.hpp"
#include "ahecke/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ahecke {

// w t_x with w in the finite Weyl group (by index) and x in X.
struct AffineWeylElement {
    int fin = 0;
    IntVec x;
    bool operator==(const AffineWeylElement& o) const { return fin == o.fin && x == o.x; }
    bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
    bool operator<(const AffineWeylElement& o) const { return fin != o.fin ? fin < o.fin : x < o.x; }
};

// gamma s_{word[0]} ... s_{word[k-1]}, gamma of length zero; generator n is s0.
struct OmegaDecomposition {
    AffineWeylElement gamma;
    std::vector<int> word;
};

class AffineWeylGroup {
public:
    explicit AffineWeylGroup(std::shared_ptr<const WeylGroup> w);

    const WeylGroup& finite() const { return *w_; }
    std::shared_ptr<const WeylGroup> finite_ptr() const { return w_; }
    const RootDatum& datum() const { return w_->datum(); }
    int rank() const { return w_->rank(); }
    // Generators 0..rank-1 are the simple reflections, rank is s0.
    int num_generators() const { return rank() + 1; }
    int s0_index() const { return rank(); }

    AffineWeylElement identity() const;
    AffineWeylElement generator(int s) const;
    AffineWeylElement translation(const IntVec& x) const;
    AffineWeylElement from_finite(int w) const;
    AffineWeylElement mul(const AffineWeylElement& a, const AffineWeylElement& b) const;
    AffineWeylElement inverse(const AffineWeylElement& a) const;
    AffineWeylElement from_word(const std::vector<int>& word) const;
    int length(const AffineWeylElement& a) const;

    OmegaDecomposition decompose(const AffineWeylElement& a) const;
    std::vector<int> reduced_word(const AffineWeylElement& a) const { return decompose(a).word; }
    std::string to_string(const AffineWeylElement& a) const;

    // Length-zero elements, identity first.
    const std::vector<AffineWeylElement>& omega() const { return omega_; }
    // gamma s gamma^{-1} as a generator index.
    int conjugate_generator(const AffineWeylElement& gamma, int s) const;
    // Order of s t, or 0 if infinite.
    int coxeter_m(int s, int t) const;

    // Right action v.(w t_x) = w^{-1} v + x on X_Q.
    std::vector<Rational> act_right(const std::vector<Rational>& v, const AffineWeylElement& a) const;
    // Barycenter of the alcove A^- = {-1 < <x, a^vee> < 0 for a > 0}.
    std::vector<Rational> barycenter() const { return bary_; }
    // Is A^- v contained in the positive side of its wall of type s?
    bool in_L_set(int s, const AffineWeylElement& v) const;

    // Elements of length at most bound, by increasing length.
    std::vector<AffineWeylElement> ball(int bound) const;

private:
    std::shared_ptr<const WeylGroup> w_;
    std::vector<AffineWeylElement> omega_;
    std::vector<Rational> bary_;
    Rational pair_q(const std::vector<Rational>& v, int r) const;
};

// Parameter symbols for the generators of the affine Weyl group.
struct AffineParams {
    std::vector<ParamSymbol> symbol;  // per generator, s0 last
    int num_symbols = 0;
    std::vector<int> exponent;        // per symbol: q_sym = q^exponent
    std::vector<std::string> names;   // per symbol, for reports

    LaurentPoly q(int gen) const { return LaurentPoly::q(symbol[gen]); }
    LaurentPoly v(int gen) const { return LaurentPoly::v(symbol[gen]); }
};

AffineParams affine_parameters(const AffineWeylGroup& aff, const ParamAssignment& lam);

}  // namespace ahecke
