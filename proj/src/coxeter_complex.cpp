#include "ahecke/coxeter_complex.hpp"

#include "ahecke/error.hpp"

#include <algorithm>

namespace ahecke {

namespace {

SimpleSet complement(const SimpleSet& I, int n) {
    SimpleSet out;
    for (int s = 0; s < n; ++s)
        if (std::find(I.begin(), I.end(), s) == I.end()) out.push_back(s);
    return out;
}

int parity_sign(int k) { return k % 2 ? -1 : 1; }

std::string simplex_name(const WeylGroup& w, const Simplex& s) {
    return w.word_string(s.rep) + "W_" + subset_name(s.I);
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

Matrix select(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

}  // namespace

CoxeterComplex::CoxeterComplex(std::shared_ptr<const WeylGroup> w, SimpleSet I0) : w_(std::move(w)), i0_(std::move(I0)) {
    const int n = w_->rank();
    std::sort(i0_.begin(), i0_.end());
    if (static_cast<int>(i0_.size()) >= n) fail(ErrorKind::EmptySphere, "I0 = S gives the empty sphere");
    acting_ = i0_.empty() ? w_->whole() : w_->normalizer(i0_);
    for (const auto& I : all_subsets(n)) {
        auto wi = w_->parabolic(I);
        std::vector<int> rep(w_->order());
        for (int x = 0; x < w_->order(); ++x) {
            int best = -1;
            for (int u : wi->elements()) {
                int y = w_->mul(x, u);
                if (best < 0 || w_->length(y) < w_->length(best)) best = y;
            }
            rep[x] = best;
        }
        rep_[I] = std::move(rep);
    }
    cells_.resize(n - i0_.size());
    for (const auto& I : all_subsets(n)) {
        if (static_cast<int>(I.size()) == n) continue;
        auto c = w_->c_set(i0_, I);
        std::vector<bool> in_c(w_->order(), false);
        for (int x : c) in_c[x] = true;
        int r = n - static_cast<int>(I.size()) - 1;
        for (int x : w_->min_coset_reps(I)) {
            if (!in_c[w_->inverse(x)]) continue;
            if (r >= static_cast<int>(cells_.size())) fail(ErrorKind::AssumptionViolated, "simplex above the sphere dimension");
            cells_[r].push_back({I, x});
        }
    }
    for (auto& cells : cells_) {
        std::sort(cells.begin(), cells.end());
        for (std::size_t k = 0; k < cells.size(); ++k) index_[cells[k]] = static_cast<int>(k);
    }
}

CoxeterComplex CoxeterComplex::full(std::shared_ptr<const WeylGroup> w) { return CoxeterComplex(std::move(w), {}); }

CoxeterComplex CoxeterComplex::sub(std::shared_ptr<const WeylGroup> w, const SimpleSet& I0) {
    return CoxeterComplex(std::move(w), I0);
}

std::size_t CoxeterComplex::size() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.size();
    return n;
}

int CoxeterComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

SimpleSet CoxeterComplex::vertex_types(const Simplex& s) const { return complement(s.I, w_->rank()); }

int CoxeterComplex::coset_rep(int x, const SimpleSet& I) const { return rep_.at(I)[x]; }

Simplex CoxeterComplex::face(const Simplex& s, int i) const {
    SimpleSet J = s.I;
    J.push_back(vertex_types(s)[i]);
    std::sort(J.begin(), J.end());
    return {J, coset_rep(s.rep, J)};
}

Simplex CoxeterComplex::act(int g, const Simplex& s) const { return {s.I, coset_rep(w_->mul(g, s.rep), s.I)}; }

ChainComplexQ::ChainComplexQ(const CoxeterComplex& cx) : cx_(&cx) {
    const int t = cx.top();
    d_.resize(t + 1);
    for (int r = 1; r <= t; ++r) {
        Matrix d(dim(r - 1), dim(r));
        const auto& cells = cx.simplices(r);
        for (std::size_t j = 0; j < cells.size(); ++j)
            for (int i = 0; i <= r; ++i) {
                int row = cx.index_of(cx.face(cells[j], i));
                if (row < 0) fail(ErrorKind::AssumptionViolated, "a face lies outside the complex");
                d(row, j) += parity_sign(i);
            }
        d_[r] = std::move(d);
    }
    for (int r = 0; r <= t; ++r) {
        cycles_.push_back(r == 0 ? Matrix::identity(dim(0)) : d_[r].kernel());
        bounds_.push_back(r == t ? Matrix(dim(r), 0) : d_[r + 1].column_basis());
    }
}

Matrix ChainComplexQ::action(int g, int r) const {
    Matrix m(dim(r), dim(r));
    const auto& cells = cx_->simplices(r);
    for (std::size_t j = 0; j < cells.size(); ++j) m(cx_->index_of(cx_->act(g, cells[j])), j) = 1;
    return m;
}

std::vector<std::size_t> ChainComplexQ::betti() const {
    std::vector<std::size_t> b;
    for (int r = 0; r <= top(); ++r) b.push_back(cycles_[r].cols() - bounds_[r].cols());
    return b;
}

Rational ChainComplexQ::homology_trace(int g, int r) const {
    Matrix a = action(g, r);
    return trace_on_subspace(a, cycles_[r]) - trace_on_subspace(a, bounds_[r]);
}

std::vector<ClassFunction> ChainComplexQ::homology_characters() const {
    auto h = cx_->acting_group();
    std::vector<ClassFunction> out;
    for (int r = 0; r <= top(); ++r) {
        std::vector<Rational> vals;
        for (const auto& cls : h->classes()) vals.push_back(homology_trace(cls[0], r));
        out.emplace_back(h, std::move(vals));
    }
    return out;
}

Rational ChainComplexQ::chain_lefschetz(int g) const {
    Rational l = 0;
    for (int r = 0; r <= top(); ++r) l += action(g, r).trace() * parity_sign(r);
    return l;
}

Rational ChainComplexQ::homology_lefschetz(int g) const {
    Rational l = 0;
    for (int r = 0; r <= top(); ++r) l += homology_trace(g, r) * parity_sign(r);
    return l;
}

Rational ChainComplexQ::fixed_euler(int g) const {
    std::vector<std::vector<int>> fixed(top() + 1);
    for (int r = 0; r <= top(); ++r) {
        const auto& cells = cx_->simplices(r);
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cx_->act(g, cells[k]) == cells[k]) fixed[r].push_back(static_cast<int>(k));
    }
    std::vector<std::size_t> rank(top() + 2, 0);
    for (int r = 1; r <= top(); ++r) rank[r] = select(d_[r], fixed[r - 1], fixed[r]).rank();
    Rational chi = 0;
    for (int r = 0; r <= top(); ++r) {
        long b = static_cast<long>(fixed[r].size()) - static_cast<long>(rank[r]) - static_cast<long>(rank[r + 1]);
        chi += Rational(b * parity_sign(r));
    }
    return chi;
}

int expected_lefschetz(const CoxeterComplex& cx, int g) {
    return 1 + parity_sign(cx.sphere_dimension()) * cx.group().det_on_perp(g, cx.I0());
}

int fixed_coset_count(const CoxeterComplex& cx, int h, const SimpleSet& I) {
    const int r = cx.group().rank() - static_cast<int>(I.size()) - 1;
    if (r < 0 || r > cx.top()) return 0;
    int count = 0;
    for (const auto& s : cx.simplices(r))
        if (s.I == I && cx.act(h, s) == s) ++count;
    return count;
}

Rational induced_coset_count(const CoxeterComplex& cx, int h, const SimpleSet& I) {
    const WeylGroup& w = cx.group();
    auto c = w.c_set(cx.I0(), I);
    if (c.empty()) return 0;
    auto H = cx.acting_group();
    auto wi = w.parabolic(I);
    Rational total = 0;
    for (const auto& dc : double_cosets(w, *wi, c, *H)) {
        auto k = w.intersect(*H, *w.conjugate(*wi, dc.rep));
        total += induce(ClassFunction::trivial(k), H)(h);
    }
    return total;
}

std::vector<CheckRecord> complex_checks(const CoxeterComplex& cx, bool corrupt) {
    const WeylGroup& w = cx.group();
    const int n = w.rank();
    ChainComplexQ cc(cx);
    auto H = cx.acting_group();
    const std::string tag = cx.I0().empty() ? " full" : " I0=" + subset_name(cx.I0());
    std::vector<CheckRecord> out;

    for (int r = 0; r <= cx.top(); ++r)
        for (const auto& s : cx.simplices(r)) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= r; ++i) faces.push_back(cx.face(s, i));
            std::sort(faces.begin(), faces.end());
            bool boolean = std::adjacent_find(faces.begin(), faces.end()) == faces.end() &&
                           static_cast<int>(cx.vertex_types(s).size()) == r + 1;
            if (!boolean) out.push_back({"simplex has distinct faces" + tag, simplex_name(w, s), "false", "true", false});
        }
    std::vector<std::size_t> dims;
    for (int r = 0; r <= cx.top(); ++r) dims.push_back(cc.dim(r));
    out.push_back({"chain dimensions" + tag, "C", join(dims), join(dims), true});

    for (int r = 2; r <= cx.top(); ++r) {
        bool zero = (cc.boundary(r - 1) * cc.boundary(r)).is_zero();
        out.push_back({"d^2 = 0" + tag, "degree " + std::to_string(r), zero ? "0" : "nonzero", "0", zero});
    }
    bool commute = true;
    for (int g : H->elements())
        for (int r = 1; r <= cx.top(); ++r)
            commute = commute && cc.action(g, r - 1) * cc.boundary(r) == cc.boundary(r) * cc.action(g, r);
    out.push_back({"action commutes with d" + tag, "H", commute ? "true" : "false", "true", commute});

    // Betti numbers of a sphere of dimension d.
    const int d = cx.sphere_dimension();
    std::vector<std::size_t> sphere(cx.top() + 1, 0);
    sphere[0] += 1;
    sphere[d] += 1;
    auto b = cc.betti();
    out.push_back({"Betti numbers of a " + std::to_string(d) + "-sphere" + tag, "H", join(b), join(sphere), b == sphere});

    if (cx.I0().empty()) {
        auto chars = cc.homology_characters();
        for (int r = 0; r <= cx.top(); ++r) {
            ClassFunction expect = r == 0 ? ClassFunction::trivial(H) : r == n - 1 ? sign_character(H) : ClassFunction(H, std::vector<Rational>(H->classes().size(), Rational(0)));
            if (r == 0 && n == 1) expect = expect + sign_character(H);
            for (std::size_t k = 0; k < H->classes().size(); ++k) {
                const Rational& got = chars[r].values()[k];
                out.push_back({"character of H_" + std::to_string(r) + tag, "class " + w.word_string(H->classes()[k][0]),
                               got.get_str(), expect.values()[k].get_str(), got == expect.values()[k]});
            }
        }
    }

    for (int g : H->elements()) {
        Rational a = cc.chain_lefschetz(g), h = cc.homology_lefschetz(g), f = cc.fixed_euler(g);
        int det = w.det_on_perp(g, cx.I0()) * (corrupt ? -1 : 1);
        int expect = 1 + parity_sign(d) * det;
        std::string lhs = a.get_str() + " = " + h.get_str() + " = " + f.get_str();
        out.push_back({"Lefschetz: chain = homology = fixed Euler = 1+(-1)^d det" + tag, w.word_string(g), lhs,
                       std::to_string(expect), a == h && h == f && f == expect});
    }

    for (const auto& I : all_subsets(n)) {
        if (static_cast<int>(I.size()) == n) continue;
        for (int g : H->elements()) {
            int direct = fixed_coset_count(cx, g, I);
            Rational via = induced_coset_count(cx, g, I) * (corrupt ? -1 : 1);
            out.push_back({"fixed cosets = induced characters" + tag + " I=" + subset_name(I), w.word_string(g),
                           std::to_string(direct), via.get_str(), via == direct});
        }
    }
    return out;
}

}  // namespace ahecke
