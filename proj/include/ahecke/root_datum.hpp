#pragma once

#include "ahecke/rational.hpp"

#include <string>
#include <vector>

namespace ahecke {

enum class CartanType { A, B, C, D, G };
enum class LatticeKind { Root, Weight };

CartanType parse_cartan_type(const std::string& s);
LatticeKind parse_lattice_kind(const std::string& s);
std::string cartan_type_name(CartanType t);
std::string lattice_kind_name(LatticeKind k);

using IntVec = std::vector<int>;

struct Root {
    IntVec root_coords;    // in the basis of simple roots
    IntVec coroot_coords;  // coroot in the basis of simple coroots
    IntVec x;              // coordinates in the lattice basis of X
    IntVec coroot;         // <x, coroot> = sum_i x_i * coroot[i]
    bool positive = false;
    int height = 0;
};

// Irreducible reduced root datum with X the root or weight lattice.
class RootDatum {
public:
    RootDatum(CartanType type, int rank, LatticeKind lattice);

    CartanType type() const { return type_; }
    int rank() const { return n_; }
    LatticeKind lattice() const { return lattice_; }
    std::string name() const;

    // cartan()[i][j] = <alpha_i, alpha_j^vee>.
    const std::vector<IntVec>& cartan() const { return cartan_; }

    int num_roots() const { return static_cast<int>(roots_.size()); }
    const Root& root(int r) const { return roots_[r]; }
    int simple(int i) const { return simple_[i]; }
    const std::vector<int>& positive_roots() const { return positive_; }
    int negate(int r) const { return negation_[r]; }
    // Root index with the given X coordinates; throws NotARoot.
    int find_root(const IntVec& x) const;
    int find_root_or(const IntVec& x, int fallback) const;

    int pairing(const IntVec& x, int r) const;
    IntVec reflect(int r, const IntVec& x) const;

    // Root whose coroot is the highest coroot.
    int alpha0() const { return alpha0_; }
    bool coroot_in_2y(int r) const;

    int orbit(int r) const { return orbit_[r]; }
    int num_orbits() const { return num_orbits_; }

    std::vector<Rational> to_root_coords(const IntVec& x) const;
    bool in_root_lattice(const IntVec& x) const;
    bool is_dominant(const IntVec& x) const;
    // Twice the half-sum of positive roots, in X coordinates.
    const IntVec& two_rho() const { return two_rho_; }
    // |X / ZR|.
    int lattice_index() const { return index_; }

    // Root coordinates as X coordinates (integral).
    IntVec root_coords_to_x(const IntVec& c) const;

private:
    CartanType type_;
    int n_;
    LatticeKind lattice_;
    std::vector<IntVec> cartan_;
    std::vector<IntVec> pairing_;  // pairing_[i][j] = <e_i, alpha_j^vee>
    std::vector<Root> roots_;
    std::vector<int> simple_, positive_, negation_, orbit_;
    int num_orbits_ = 0;
    int alpha0_ = -1;
    IntVec two_rho_;
    int index_ = 1;
    std::vector<std::vector<Rational>> x_to_root_;
};

// Multiplicities lambda on W-orbits of roots, and lambda* for the affine generator.
struct ParamAssignment {
    std::vector<int> lambda;       // indexed by root orbit
    std::vector<int> lambda_star;  // indexed by root orbit

    static ParamAssignment equal(const RootDatum& rd);
    // lambda*(a) must equal lambda(a) whenever a^vee is not in 2Y.
    void validate(const RootDatum& rd) const;
};

}  // namespace ahecke
