#include "ahecke/root_datum.hpp"

#include "ahecke/error.hpp"
#include "ahecke/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ahecke {

CartanType parse_cartan_type(const std::string& s) {
    if (s == "A" || s == "a") return CartanType::A;
    if (s == "B" || s == "b") return CartanType::B;
    if (s == "C" || s == "c") return CartanType::C;
    if (s == "D" || s == "d") return CartanType::D;
    if (s == "G" || s == "g" || s == "G2") return CartanType::G;
    fail(ErrorKind::UnsupportedType, "unknown Cartan type '" + s + "'");
}

LatticeKind parse_lattice_kind(const std::string& s) {
    if (s == "root") return LatticeKind::Root;
    if (s == "weight") return LatticeKind::Weight;
    fail(ErrorKind::Usage, "lattice must be 'root' or 'weight', got '" + s + "'");
}

std::string cartan_type_name(CartanType t) {
    switch (t) {
        case CartanType::A: return "A";
        case CartanType::B: return "B";
        case CartanType::C: return "C";
        case CartanType::D: return "D";
        case CartanType::G: return "G";
    }
    return "?";
}

std::string lattice_kind_name(LatticeKind k) { return k == LatticeKind::Root ? "root" : "weight"; }

namespace {

std::vector<IntVec> cartan_matrix(CartanType t, int n) {
    bool ok = (t == CartanType::A && n >= 1 && n <= 4) || ((t == CartanType::B || t == CartanType::C) && n >= 2 && n <= 4) ||
              (t == CartanType::D && n == 4) || (t == CartanType::G && n == 2);
    if (!ok) fail(ErrorKind::UnsupportedType, cartan_type_name(t) + std::to_string(n) + " is not supported");
    std::vector<IntVec> a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t) {
        case CartanType::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case CartanType::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case CartanType::C:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case CartanType::D:
            link(0, 1);
            link(1, 2);
            link(1, 3);
            break;
        case CartanType::G:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

int find_set(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

RootDatum::RootDatum(CartanType type, int rank, LatticeKind lattice)
    : type_(type), n_(rank), lattice_(lattice), cartan_(cartan_matrix(type, rank)) {
    pairing_.assign(n_, IntVec(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            pairing_[i][j] = lattice_ == LatticeKind::Root ? cartan_[i][j] : (i == j ? 1 : 0);

    // Orbit closure of the simple roots, tracking roots and coroots together.
    std::map<IntVec, int> seen;
    std::vector<std::pair<IntVec, IntVec>> list;
    for (int i = 0; i < n_; ++i) {
        IntVec e(n_, 0);
        e[i] = 1;
        seen[e] = static_cast<int>(list.size());
        list.push_back({e, e});
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
        for (int j = 0; j < n_; ++j) {
            auto [b, bv] = list[k];
            int p = 0, pv = 0;
            for (int t = 0; t < n_; ++t) {
                p += b[t] * cartan_[t][j];
                pv += cartan_[j][t] * bv[t];
            }
            b[j] -= p;
            bv[j] -= pv;
            if (!seen.count(b)) {
                seen[b] = static_cast<int>(list.size());
                list.push_back({b, bv});
            }
        }
    }
    // Positive roots first by height, then negatives in matching order.
    std::vector<std::pair<IntVec, IntVec>> pos;
    for (auto& rb : list)
        if (std::all_of(rb.first.begin(), rb.first.end(), [](int c) { return c >= 0; })) pos.push_back(rb);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.first.begin(), a.first.end(), 0);
        int hb = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (ha != hb) return ha < hb;
        return a.first > b.first;
    });
    int np = static_cast<int>(pos.size());
    for (int k = 0; k < 2 * np; ++k) {
        Root r;
        r.root_coords = pos[k % np].first;
        r.coroot_coords = pos[k % np].second;
        if (k >= np) {
            for (auto& c : r.root_coords) c = -c;
            for (auto& c : r.coroot_coords) c = -c;
        }
        r.positive = k < np;
        r.height = std::accumulate(r.root_coords.begin(), r.root_coords.end(), 0);
        r.x = root_coords_to_x(r.root_coords);
        r.coroot.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int t = 0; t < n_; ++t) r.coroot[i] += r.coroot_coords[t] * pairing_[i][t];
        roots_.push_back(std::move(r));
        negation_.push_back(k < np ? k + np : k - np);
        if (k < np) positive_.push_back(k);
    }
    for (int i = 0; i < n_; ++i) {
        IntVec e(n_, 0);
        e[i] = 1;
        for (int k = 0; k < np; ++k)
            if (roots_[k].root_coords == e) simple_.push_back(k);
    }

    for (int k : positive_) {
        bool top = true;
        for (int m : positive_)
            for (int t = 0; t < n_; ++t)
                if (roots_[m].coroot_coords[t] > roots_[k].coroot_coords[t]) top = false;
        if (top) alpha0_ = k;
    }

    std::vector<int> parent(roots_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int k = 0; k < num_roots(); ++k)
        for (int j = 0; j < n_; ++j) {
            int m = find_root(reflect(simple_[j], roots_[k].x));
            parent[find_set(parent, k)] = find_set(parent, m);
        }
    std::map<int, int> ids;
    orbit_.resize(roots_.size());
    for (int k = 0; k < num_roots(); ++k) {
        int rep = find_set(parent, k);
        if (!ids.count(rep)) ids[rep] = num_orbits_++;
        orbit_[k] = ids[rep];
    }

    two_rho_.assign(n_, 0);
    for (int k : positive_)
        for (int i = 0; i < n_; ++i) two_rho_[i] += roots_[k].x[i];

    Matrix to_x(n_, n_);
    for (int k = 0; k < n_; ++k) {
        IntVec e(n_, 0);
        e[k] = 1;
        IntVec xk = root_coords_to_x(e);
        for (int i = 0; i < n_; ++i) to_x(i, k) = xk[i];
    }
    Matrix inv = to_x.inverse();
    x_to_root_.assign(n_, std::vector<Rational>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) x_to_root_[i][j] = inv(i, j);
    Rational det = to_x.determinant();
    index_ = static_cast<int>(Rational(abs(det)).get_num().get_si());
}

std::string RootDatum::name() const { return cartan_type_name(type_) + std::to_string(n_); }

IntVec RootDatum::root_coords_to_x(const IntVec& c) const {
    if (lattice_ == LatticeKind::Root) return c;
    IntVec x(n_, 0);
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i) x[i] += c[k] * cartan_[k][i];
    return x;
}

int RootDatum::find_root_or(const IntVec& x, int fallback) const {
    for (int k = 0; k < num_roots(); ++k)
        if (roots_[k].x == x) return k;
    return fallback;
}

int RootDatum::find_root(const IntVec& x) const {
    int k = find_root_or(x, -1);
    if (k < 0) fail(ErrorKind::NotARoot, "vector is not a root");
    return k;
}

int RootDatum::pairing(const IntVec& x, int r) const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += x[i] * roots_[r].coroot[i];
    return s;
}

IntVec RootDatum::reflect(int r, const IntVec& x) const {
    int p = pairing(x, r);
    IntVec y = x;
    for (int i = 0; i < n_; ++i) y[i] -= p * roots_[r].x[i];
    return y;
}

bool RootDatum::coroot_in_2y(int r) const {
    return std::all_of(roots_[r].coroot.begin(), roots_[r].coroot.end(), [](int c) { return c % 2 == 0; });
}

std::vector<Rational> RootDatum::to_root_coords(const IntVec& x) const {
    std::vector<Rational> c(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) c[i] += x_to_root_[i][j] * x[j];
    return c;
}

bool RootDatum::in_root_lattice(const IntVec& x) const {
    for (const auto& c : to_root_coords(x))
        if (c.get_den() != 1) return false;
    return true;
}

bool RootDatum::is_dominant(const IntVec& x) const {
    for (int i = 0; i < n_; ++i)
        if (pairing(x, simple_[i]) < 0) return false;
    return true;
}

ParamAssignment ParamAssignment::equal(const RootDatum& rd) {
    ParamAssignment p;
    p.lambda.assign(rd.num_orbits(), 1);
    p.lambda_star = p.lambda;
    return p;
}

void ParamAssignment::validate(const RootDatum& rd) const {
    if (static_cast<int>(lambda.size()) != rd.num_orbits() || static_cast<int>(lambda_star.size()) != rd.num_orbits())
        fail(ErrorKind::InconsistentParameters, "lambda must have one value per root orbit");
    for (int r : rd.positive_roots()) {
        int o = rd.orbit(r);
        if (lambda_star[o] != lambda[o] && !rd.coroot_in_2y(r))
            fail(ErrorKind::InconsistentParameters,
                 "lambda* differs from lambda on a root whose coroot is not in 2Y");
    }
}

}  // namespace ahecke
