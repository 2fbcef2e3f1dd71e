#pragma once

#include "ahecke/matrix.hpp"
#include "ahecke/rational.hpp"
#include "ahecke/root_datum.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ahecke {

// Set of simple reflections, as indices 0..rank-1.
using SimpleSet = std::vector<int>;

std::vector<SimpleSet> all_subsets(int n);
std::string subset_name(const SimpleSet& s);

// Element of W in canonical form: its integer matrix on X.
struct WeylElement {
    int n = 0;
    IntVec matrix;  // row-major, x' = M x
    int length = 0;
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

class WeylGroup;

class Subgroup {
public:
    Subgroup(std::shared_ptr<const WeylGroup> w, std::vector<int> elements);

    const WeylGroup& group() const { return *w_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return w_; }
    const std::vector<int>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(int g) const { return member_[g]; }
    bool is_subgroup_of(const Subgroup& o) const;

    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }

private:
    std::shared_ptr<const WeylGroup> w_;
    std::vector<int> elems_;
    std::vector<char> member_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

class WeylGroup : public std::enable_shared_from_this<WeylGroup> {
public:
    static std::shared_ptr<const WeylGroup> create(std::shared_ptr<const RootDatum> rd);

    const RootDatum& datum() const { return *rd_; }
    std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
    int rank() const { return rd_->rank(); }
    int order() const { return static_cast<int>(elems_.size()); }

    const WeylElement& element(int w) const { return elems_[w]; }
    int index_of(const WeylElement& e) const;
    int identity() const { return 0; }
    int simple_reflection(int i) const { return gens_[i]; }
    int mul(int a, int b) const { return table_[a * order() + b]; }
    int inverse(int a) const { return inv_[a]; }
    int length(int a) const { return elems_[a].length; }
    int longest() const { return longest_; }
    int sign(int a) const { return length(a) % 2 ? -1 : 1; }
    // Root index of w(beta).
    int act_root(int w, int r) const { return root_perm_[w][r]; }
    IntVec act(int w, const IntVec& x) const;
    // Reflection s_beta as an element.
    int reflection(int r) const { return reflection_[r]; }

    // Lexicographically first reduced word, w = s_{i1} ... s_{ik}.
    std::vector<int> reduced_word(int w) const;
    int from_word(const std::vector<int>& word) const;
    std::string word_string(int w) const;

    bool left_descent(int w, int s) const;   // l(s w) < l(w)
    bool right_descent(int w, int s) const;  // l(w s) < l(w)

    std::shared_ptr<const Subgroup> whole() const;
    std::shared_ptr<const Subgroup> parabolic(const SimpleSet& I) const;
    std::shared_ptr<const Subgroup> generated(const std::vector<int>& gens) const;
    // The subgroup u^{-1} K u.
    std::shared_ptr<const Subgroup> conjugate(const Subgroup& k, int u) const;
    std::shared_ptr<const Subgroup> intersect(const Subgroup& a, const Subgroup& b) const;

    // Minimal length representatives of W / W_I.
    std::vector<int> min_coset_reps(const SimpleSet& I) const;

    // True when the root lies in the Z-span of the simple roots of I.
    bool root_in_span(int r, const SimpleSet& I) const;
    // {w : w(alpha) in span(I) for all alpha in I0}.
    std::vector<int> c_set(const SimpleSet& I0, const SimpleSet& I) const;
    // {w : w(I0) = I0}.
    std::shared_ptr<const Subgroup> stabilizer(const SimpleSet& I0) const;
    // Normalizer of W_{I0}.
    std::shared_ptr<const Subgroup> normalizer(const SimpleSet& I0) const;
    // det(w) on the subspace of X_Q killed by the coroots of I0; NotInNormalizer if not stable.
    int det_on_perp(int w, const SimpleSet& I0) const;
    // Number of positive roots in the perp of I0 sent to negative roots.
    int length_on_perp(int w, const SimpleSet& I0) const;

private:
    explicit WeylGroup(std::shared_ptr<const RootDatum> rd);
    void build();

    std::shared_ptr<const RootDatum> rd_;
    std::vector<WeylElement> elems_;
    std::map<IntVec, int> index_;
    std::vector<int> gens_, table_, inv_, reflection_;
    std::vector<std::vector<int>> root_perm_;
    int longest_ = 0;
};

// Rational class function on a subgroup, one value per conjugacy class.
class ClassFunction {
public:
    ClassFunction(std::shared_ptr<const Subgroup> g, std::vector<Rational> values);
    static ClassFunction from_element_values(std::shared_ptr<const Subgroup> g, const std::vector<Rational>& by_element);
    static ClassFunction trivial(std::shared_ptr<const Subgroup> g);

    const Subgroup& domain() const { return *g_; }
    std::shared_ptr<const Subgroup> domain_ptr() const { return g_; }
    Rational operator()(int w) const;
    const std::vector<Rational>& values() const { return vals_; }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator*(const Rational& c) const;
    ClassFunction operator*(const ClassFunction& o) const;
    bool operator==(const ClassFunction& o) const;

private:
    std::shared_ptr<const Subgroup> g_;
    std::vector<Rational> vals_;
};

ClassFunction induce(const ClassFunction& phi, std::shared_ptr<const Subgroup> g);
ClassFunction restrict_to(const ClassFunction& psi, std::shared_ptr<const Subgroup> k);
Rational inner_product(const ClassFunction& a, const ClassFunction& b);
// The sign character w -> (-1)^l(w) restricted to g.
ClassFunction sign_character(std::shared_ptr<const Subgroup> g);

// Double cosets W_I \ C / H. Throws NotSaturated if C is not a union of them.
struct DoubleCoset {
    int rep;
    std::vector<int> elements;
};
std::vector<DoubleCoset> double_cosets(const WeylGroup& w, const Subgroup& left, const std::vector<int>& c,
                                       const Subgroup& right);

}  // namespace ahecke
