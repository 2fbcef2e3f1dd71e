#include "ahecke/affine_weyl.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ahecke {

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const WeylGroup> w) : w_(std::move(w)) {
    const RootDatum& rd = datum();
    const int n = rank();

    // Barycenter of A^-: average of 0 and the vertices v_i with <v_i, a_j^vee> = -delta_ij / c_i.
    Matrix f(n, n), target(n, 1);
    const auto& c = rd.root(rd.alpha0()).coroot_coords;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) f(j, k) = rd.root(rd.simple(j)).coroot[k];
        target(j, 0) = Rational(-1, c[j]) / (n + 1);
        target(j, 0).canonicalize();
    }
    Matrix sol;
    if (!f.solve(target, sol)) fail(ErrorKind::AssumptionViolated, "coroots are not independent");
    bary_.resize(n);
    for (int k = 0; k < n; ++k) bary_[k] = sol(k, 0);

    // One length-zero element per class of X / ZR.
    std::set<std::vector<Rational>> classes;
    std::vector<AffineWeylElement> found;
    IntVec x(n, -1);
    while (true) {
        std::vector<Rational> key;
        for (auto r : rd.to_root_coords(x)) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
            key.push_back(r - Rational(q));
        }
        if (classes.insert(key).second) found.push_back(decompose(translation(x)).gamma);
        int k = 0;
        while (k < n && x[k] == 1) x[k++] = -1;
        if (k == n) break;
        ++x[k];
    }
    if (static_cast<int>(found.size()) != rd.lattice_index())
        fail(ErrorKind::AssumptionViolated, "did not find all length-zero elements");
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        bool ia = a == identity(), ib = b == identity();
        if (ia != ib) return ia;
        return a < b;
    });
    omega_ = found;
}

AffineWeylElement AffineWeylGroup::identity() const { return {w_->identity(), IntVec(rank(), 0)}; }

AffineWeylElement AffineWeylGroup::generator(int s) const {
    if (s < 0 || s > rank()) fail(ErrorKind::AssumptionViolated, "generator index out of range");
    if (s < rank()) return from_finite(w_->simple_reflection(s));
    const RootDatum& rd = datum();
    IntVec x = rd.root(rd.alpha0()).x;
    for (auto& c : x) c = -c;
    return {w_->reflection(rd.alpha0()), x};
}

AffineWeylElement AffineWeylGroup::translation(const IntVec& x) const { return {w_->identity(), x}; }

AffineWeylElement AffineWeylGroup::from_finite(int w) const { return {w, IntVec(rank(), 0)}; }

AffineWeylElement AffineWeylGroup::mul(const AffineWeylElement& a, const AffineWeylElement& b) const {
    IntVec y = w_->act(w_->inverse(b.fin), a.x);
    for (int i = 0; i < rank(); ++i) y[i] += b.x[i];
    return {w_->mul(a.fin, b.fin), y};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& a) const {
    IntVec y = w_->act(a.fin, a.x);
    for (auto& c : y) c = -c;
    return {w_->inverse(a.fin), y};
}

AffineWeylElement AffineWeylGroup::from_word(const std::vector<int>& word) const {
    AffineWeylElement a = identity();
    for (int s : word) a = mul(a, generator(s));
    return a;
}

int AffineWeylGroup::length(const AffineWeylElement& a) const {
    const RootDatum& rd = datum();
    int len = 0;
    for (int r : rd.positive_roots()) {
        int p = rd.pairing(a.x, r);
        len += rd.root(w_->act_root(a.fin, r)).positive ? std::abs(p) : std::abs(1 + p);
    }
    return len;
}

OmegaDecomposition AffineWeylGroup::decompose(const AffineWeylElement& a) const {
    AffineWeylElement cur = a;
    int len = length(cur);
    std::vector<int> stripped;
    while (len > 0) {
        bool moved = false;
        for (int s = 0; s < num_generators(); ++s) {
            AffineWeylElement next = mul(cur, generator(s));
            int l2 = length(next);
            if (l2 < len) {
                stripped.push_back(s);
                cur = next;
                len = l2;
                moved = true;
                break;
            }
        }
        if (!moved) fail(ErrorKind::AssumptionViolated, "no descent found for an element of positive length");
    }
    std::reverse(stripped.begin(), stripped.end());
    return {cur, stripped};
}

std::string AffineWeylGroup::to_string(const AffineWeylElement& a) const {
    auto d = decompose(a);
    std::ostringstream os;
    bool any = false;
    if (d.gamma != identity()) {
        auto pos = std::find(omega_.begin(), omega_.end(), d.gamma) - omega_.begin();
        os << "g" << pos;
        any = true;
    }
    for (int s : d.word) {
        os << (any ? "." : "") << "s" << (s == rank() ? 0 : s + 1);
        any = true;
    }
    return any ? os.str() : "e";
}

int AffineWeylGroup::conjugate_generator(const AffineWeylElement& gamma, int s) const {
    AffineWeylElement c = mul(mul(gamma, generator(s)), inverse(gamma));
    for (int t = 0; t < num_generators(); ++t)
        if (generator(t) == c) return t;
    fail(ErrorKind::AssumptionViolated, "conjugate of a generator by a length-zero element is not a generator");
}

int AffineWeylGroup::coxeter_m(int s, int t) const {
    AffineWeylElement p = mul(generator(s), generator(t)), x = p;
    for (int m = 1; m <= 24; ++m) {
        if (x == identity()) return m;
        x = mul(x, p);
    }
    return 0;
}

Rational AffineWeylGroup::pair_q(const std::vector<Rational>& v, int r) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += v[i] * datum().root(r).coroot[i];
    return s;
}

std::vector<Rational> AffineWeylGroup::act_right(const std::vector<Rational>& v, const AffineWeylElement& a) const {
    const int n = rank();
    const auto& m = w_->element(w_->inverse(a.fin)).matrix;
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
        out[i] += a.x[i];
    }
    return out;
}

bool AffineWeylGroup::in_L_set(int s, const AffineWeylElement& v) const {
    const RootDatum& rd = datum();
    int beta = s == rank() ? rd.alpha0() : rd.simple(s);
    int k = s == rank() ? -1 : 0;
    // The wall {<y, beta^vee> = k} moved by v is {<z, g^vee> = k + <x, g^vee>} with g = w^{-1} beta.
    int g = w_->act_root(w_->inverse(v.fin), beta);
    int level = k + rd.pairing(v.x, g);
    if (!rd.root(g).positive) {
        g = rd.negate(g);
        level = -level;
    }
    return pair_q(act_right(bary_, v), g) > level;
}

std::vector<AffineWeylElement> AffineWeylGroup::ball(int bound) const {
    std::vector<AffineWeylElement> out{identity()};
    std::set<AffineWeylElement> seen{identity()};
    std::vector<int> len{0};
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (len[k] >= bound) continue;
        for (int s = 0; s < num_generators(); ++s) {
            AffineWeylElement n = mul(out[k], generator(s));
            if (seen.count(n)) continue;
            int l = length(n);
            if (l != len[k] + 1) continue;
            seen.insert(n);
            out.push_back(n);
            len.push_back(l);
        }
    }
    return out;
}

AffineParams affine_parameters(const AffineWeylGroup& aff, const ParamAssignment& lam) {
    const RootDatum& rd = aff.datum();
    lam.validate(rd);
    const int n = aff.rank(), g = aff.num_generators();
    const int o0 = rd.orbit(rd.alpha0());
    for (int o = 0; o < rd.num_orbits(); ++o)
        if (o != o0 && lam.lambda_star[o] != lam.lambda[o])
            fail(ErrorKind::InconsistentParameters, "lambda* may differ from lambda only on the orbit of alpha0");

    // Key (kind, orbit) and exponent for each generator.
    std::vector<std::pair<int, int>> key(g);
    std::vector<int> value(g);
    for (int s = 0; s < n; ++s) {
        int o = rd.orbit(rd.simple(s));
        key[s] = {0, o};
        value[s] = lam.lambda[o];
    }
    bool starred = lam.lambda_star[o0] != lam.lambda[o0];
    key[n] = {starred ? 1 : 0, o0};
    value[n] = starred ? lam.lambda_star[o0] : lam.lambda[o0];

    std::vector<int> parent(g);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < a; ++b)
            if (key[a] == key[b]) join(a, b);
    auto forced = [&](int a, int b) {
        if (value[a] != value[b])
            fail(ErrorKind::InconsistentParameters, "conjugate generators would receive different parameters");
        join(a, b);
    };
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < a; ++b) {
            int m = aff.coxeter_m(a, b);
            if (m > 0 && m % 2 == 1) forced(a, b);
        }
    for (const auto& gamma : aff.omega())
        for (int s = 0; s < g; ++s) forced(s, aff.conjugate_generator(gamma, s));

    AffineParams p;
    p.symbol.assign(g, -1);
    std::map<int, int> ids;
    for (int s = 0; s < g; ++s) {
        int r = find(s);
        if (!ids.count(r)) {
            ids[r] = p.num_symbols++;
            p.exponent.push_back(value[s]);
            p.names.push_back("q" + std::to_string(s == n ? 0 : s + 1));
        }
        p.symbol[s] = ids[r];
    }
    if (p.num_symbols > LaurentPoly::kMaxSymbols) fail(ErrorKind::IllegalParameter, "too many parameter symbols");
    return p;
}

}  // namespace ahecke
