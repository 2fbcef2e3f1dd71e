#pragma once

#include "ahecke/weyl.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ahecke {

// A finite reflection subgroup of W with a chosen set of involutive generators.
// Lengths are word lengths in those generators.
class CoxeterSystem {
public:
    CoxeterSystem(std::shared_ptr<const WeylGroup> w, std::vector<int> generators);
    static std::shared_ptr<const CoxeterSystem> of_weyl(std::shared_ptr<const WeylGroup> w);

    const WeylGroup& group() const { return *w_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return w_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    int generator(int i) const { return gens_[i]; }
    const std::vector<int>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(int g) const { return length_[g] >= 0; }
    int length(int g) const;
    int generator_index(int g) const;  // -1 if g is not a generator

    bool left_descent(int g, int i) const { return length(w_->mul(gens_[i], g)) < length(g); }
    bool right_descent(int g, int i) const { return length(w_->mul(g, gens_[i])) < length(g); }
    std::vector<int> reduced_word(int g) const;
    std::string word_string(int g) const;

    std::vector<int> parabolic_elements(const SimpleSet& J) const;
    // Elements with no right descent in J.
    std::vector<int> min_coset_reps(const SimpleSet& J) const;
    // g = x u with x minimal in g W_J and u in W_J.
    std::pair<int, int> split(int g, const SimpleSet& J) const;
    // Order of g_i g_j.
    int coxeter_m(int i, int j) const;
    std::shared_ptr<const Subgroup> as_subgroup() const;

private:
    std::shared_ptr<const WeylGroup> w_;
    std::vector<int> gens_, elems_, length_;
};

}  // namespace ahecke
