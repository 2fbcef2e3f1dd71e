#include "ahecke/weyl.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ahecke {

std::vector<SimpleSet> all_subsets(int n) {
    std::vector<SimpleSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SimpleSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const SimpleSet& a, const SimpleSet& b) { return a.size() < b.size(); });
    return out;
}

std::string subset_name(const SimpleSet& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << "s" << s[k] + 1;
    os << "}";
    return os.str();
}

namespace {

IntVec mat_mul(const IntVec& a, const IntVec& b, int n) {
    IntVec c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[i * n + k];
            if (!x) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
        }
    return c;
}

IntVec mat_apply(const IntVec& m, const IntVec& x, int n) {
    IntVec y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
    return y;
}

IntVec reflection_matrix(const RootDatum& rd, int r) {
    int n = rd.rank();
    IntVec m(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m[i * n + k] = (i == k ? 1 : 0) - rd.root(r).x[i] * rd.root(r).coroot[k];
    return m;
}

}  // namespace

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {}

std::shared_ptr<const WeylGroup> WeylGroup::create(std::shared_ptr<const RootDatum> rd) {
    std::shared_ptr<WeylGroup> w(new WeylGroup(std::move(rd)));
    w->build();
    return w;
}

void WeylGroup::build() {
    const int n = rd_->rank();
    std::map<IntVec, int> root_index;
    for (int r = 0; r < rd_->num_roots(); ++r) root_index[rd_->root(r).x] = r;

    std::vector<IntVec> gm;
    for (int i = 0; i < n; ++i) gm.push_back(reflection_matrix(*rd_, rd_->simple(i)));
    IntVec id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;

    std::vector<IntVec> mats{id};
    index_[id] = 0;
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (int j = 0; j < n; ++j) {
            IntVec m = mat_mul(gm[j], mats[k], n);
            if (!index_.count(m)) {
                index_[m] = static_cast<int>(mats.size());
                mats.push_back(std::move(m));
            }
        }
    const int N = static_cast<int>(mats.size());
    root_perm_.assign(N, std::vector<int>(rd_->num_roots()));
    elems_.resize(N);
    for (int w = 0; w < N; ++w) {
        int len = 0;
        for (int r = 0; r < rd_->num_roots(); ++r) {
            int img = root_index.at(mat_apply(mats[w], rd_->root(r).x, n));
            root_perm_[w][r] = img;
            if (rd_->root(r).positive && !rd_->root(img).positive) ++len;
        }
        elems_[w] = WeylElement{n, mats[w], len};
    }
    table_.assign(N * N, 0);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) table_[a * N + b] = index_.at(mat_mul(mats[a], mats[b], n));
    inv_.assign(N, 0);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (table_[a * N + b] == 0) inv_[a] = b;
    for (int i = 0; i < n; ++i) gens_.push_back(index_.at(gm[i]));
    for (int r = 0; r < rd_->num_roots(); ++r) reflection_.push_back(index_.at(reflection_matrix(*rd_, r)));
    longest_ = static_cast<int>(std::max_element(elems_.begin(), elems_.end(),
                                                 [](const WeylElement& a, const WeylElement& b) {
                                                     return a.length < b.length;
                                                 }) - elems_.begin());
}

int WeylGroup::index_of(const WeylElement& e) const {
    auto it = index_.find(e.matrix);
    if (it == index_.end()) fail(ErrorKind::AssumptionViolated, "matrix is not an element of W");
    return it->second;
}

IntVec WeylGroup::act(int w, const IntVec& x) const { return mat_apply(elems_[w].matrix, x, rank()); }

bool WeylGroup::left_descent(int w, int s) const {
    return !rd_->root(act_root(inverse(w), rd_->simple(s))).positive;
}

bool WeylGroup::right_descent(int w, int s) const { return !rd_->root(act_root(w, rd_->simple(s))).positive; }

std::vector<int> WeylGroup::reduced_word(int w) const {
    std::vector<int> word;
    while (w != identity()) {
        for (int s = 0; s < rank(); ++s)
            if (left_descent(w, s)) {
                word.push_back(s);
                w = mul(gens_[s], w);
                break;
            }
    }
    return word;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
    int w = identity();
    for (int s : word) w = mul(w, gens_[s]);
    return w;
}

std::string WeylGroup::word_string(int w) const {
    auto word = reduced_word(w);
    if (word.empty()) return "e";
    std::ostringstream os;
    for (int s : word) os << "s" << s + 1;
    return os.str();
}

std::shared_ptr<const Subgroup> WeylGroup::whole() const {
    std::vector<int> all(order());
    for (int i = 0; i < order(); ++i) all[i] = i;
    return std::make_shared<Subgroup>(shared_from_this(), all);
}

std::shared_ptr<const Subgroup> WeylGroup::generated(const std::vector<int>& gens) const {
    std::set<int> seen{identity()};
    std::vector<int> queue{identity()};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int g : gens) {
            int h = mul(queue[k], g);
            if (seen.insert(h).second) queue.push_back(h);
        }
    return std::make_shared<Subgroup>(shared_from_this(), std::vector<int>(seen.begin(), seen.end()));
}

std::shared_ptr<const Subgroup> WeylGroup::parabolic(const SimpleSet& I) const {
    std::vector<int> gens;
    for (int s : I) gens.push_back(gens_[s]);
    return generated(gens);
}

std::shared_ptr<const Subgroup> WeylGroup::conjugate(const Subgroup& k, int u) const {
    std::vector<int> out;
    for (int g : k.elements()) out.push_back(mul(mul(inverse(u), g), u));
    std::sort(out.begin(), out.end());
    return std::make_shared<Subgroup>(shared_from_this(), out);
}

std::shared_ptr<const Subgroup> WeylGroup::intersect(const Subgroup& a, const Subgroup& b) const {
    std::vector<int> out;
    for (int g : a.elements())
        if (b.contains(g)) out.push_back(g);
    return std::make_shared<Subgroup>(shared_from_this(), out);
}

std::vector<int> WeylGroup::min_coset_reps(const SimpleSet& I) const {
    std::vector<int> out;
    for (int w = 0; w < order(); ++w) {
        bool ok = true;
        for (int s : I) ok = ok && !right_descent(w, s);
        if (ok) out.push_back(w);
    }
    return out;
}

bool WeylGroup::root_in_span(int r, const SimpleSet& I) const {
    const auto& c = rd_->root(r).root_coords;
    for (int i = 0; i < rank(); ++i)
        if (c[i] != 0 && std::find(I.begin(), I.end(), i) == I.end()) return false;
    return true;
}

std::vector<int> WeylGroup::c_set(const SimpleSet& I0, const SimpleSet& I) const {
    std::vector<int> out;
    for (int w = 0; w < order(); ++w) {
        bool ok = true;
        for (int a : I0) ok = ok && root_in_span(act_root(w, rd_->simple(a)), I);
        if (ok) out.push_back(w);
    }
    return out;
}

std::shared_ptr<const Subgroup> WeylGroup::stabilizer(const SimpleSet& I0) const {
    std::set<int> target;
    for (int a : I0) target.insert(rd_->simple(a));
    std::vector<int> out;
    for (int w = 0; w < order(); ++w) {
        std::set<int> img;
        for (int a : I0) img.insert(act_root(w, rd_->simple(a)));
        if (img == target) out.push_back(w);
    }
    return std::make_shared<Subgroup>(shared_from_this(), out);
}

std::shared_ptr<const Subgroup> WeylGroup::normalizer(const SimpleSet& I0) const {
    auto p = parabolic(I0);
    std::vector<int> out;
    for (int w = 0; w < order(); ++w)
        if (conjugate(*p, w)->elements() == p->elements()) out.push_back(w);
    return std::make_shared<Subgroup>(shared_from_this(), out);
}

int WeylGroup::det_on_perp(int w, const SimpleSet& I0) const {
    const int n = rank();
    Matrix f(I0.size(), n);
    for (std::size_t k = 0; k < I0.size(); ++k)
        for (int i = 0; i < n; ++i) f(k, i) = rd_->root(rd_->simple(I0[k])).coroot[i];
    Matrix basis = I0.empty() ? Matrix::identity(n) : f.kernel();
    if (basis.cols() == 0) return 1;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = elems_[w].matrix[i * n + j];
    Matrix coords;
    if (!basis.solve(m * basis, coords))
        fail(ErrorKind::NotInNormalizer, word_string(w) + " does not stabilize the perp of " + subset_name(I0));
    return static_cast<int>(coords.determinant().get_num().get_si());
}

int WeylGroup::length_on_perp(int w, const SimpleSet& I0) const {
    int len = 0;
    for (int r : rd_->positive_roots()) {
        bool perp = true;
        for (int a : I0) perp = perp && rd_->pairing(rd_->root(r).x, rd_->simple(a)) == 0;
        if (perp && !rd_->root(act_root(w, r)).positive) ++len;
    }
    return len;
}

Subgroup::Subgroup(std::shared_ptr<const WeylGroup> w, std::vector<int> elements)
    : w_(std::move(w)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    member_.assign(w_->order(), 0);
    for (int g : elems_) member_[g] = 1;
    if (elems_.empty() || !member_[w_->identity()]) fail(ErrorKind::NotASubgroup, "missing identity");
    for (int a : elems_)
        for (int b : elems_)
            if (!member_[w_->mul(a, b)]) fail(ErrorKind::NotASubgroup, "not closed under multiplication");
    class_of_.assign(w_->order(), -1);
    for (int g : elems_) {
        if (class_of_[g] >= 0) continue;
        std::set<int> cls;
        for (int h : elems_) cls.insert(w_->mul(w_->mul(h, g), w_->inverse(h)));
        for (int c : cls) class_of_[c] = static_cast<int>(classes_.size());
        classes_.emplace_back(cls.begin(), cls.end());
    }
}

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
    for (int g : elems_)
        if (!o.contains(g)) return false;
    return true;
}

ClassFunction::ClassFunction(std::shared_ptr<const Subgroup> g, std::vector<Rational> values)
    : g_(std::move(g)), vals_(std::move(values)) {
    if (vals_.size() != g_->classes().size()) fail(ErrorKind::AssumptionViolated, "one value per class required");
}

ClassFunction ClassFunction::from_element_values(std::shared_ptr<const Subgroup> g, const std::vector<Rational>& by_element) {
    std::vector<Rational> vals;
    for (const auto& cls : g->classes()) {
        for (int c : cls)
            if (by_element[c] != by_element[cls[0]])
                fail(ErrorKind::IllegalCharacter, "values are not constant on a conjugacy class");
        vals.push_back(by_element[cls[0]]);
    }
    return ClassFunction(std::move(g), vals);
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const Subgroup> g) {
    std::size_t k = g->classes().size();
    return ClassFunction(std::move(g), std::vector<Rational>(k, Rational(1)));
}

Rational ClassFunction::operator()(int w) const {
    int c = g_->class_of(w);
    if (c < 0) fail(ErrorKind::NotASubgroup, "element outside the domain of the class function");
    return vals_[c];
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (g_->elements() != o.g_->elements()) fail(ErrorKind::AssumptionViolated, "class functions on different groups");
    std::vector<Rational> v = vals_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.vals_[i];
    return ClassFunction(g_, v);
}

ClassFunction ClassFunction::operator*(const Rational& c) const {
    std::vector<Rational> v = vals_;
    for (auto& x : v) x *= c;
    return ClassFunction(g_, v);
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    if (g_->elements() != o.g_->elements()) fail(ErrorKind::AssumptionViolated, "class functions on different groups");
    std::vector<Rational> v = vals_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.vals_[i];
    return ClassFunction(g_, v);
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return g_->elements() == o.g_->elements() && vals_ == o.vals_;
}

ClassFunction induce(const ClassFunction& phi, std::shared_ptr<const Subgroup> g) {
    const Subgroup& k = phi.domain();
    if (!k.is_subgroup_of(*g)) fail(ErrorKind::NotASubgroup, "induction from a non-subgroup");
    const WeylGroup& w = g->group();
    std::vector<Rational> vals;
    for (const auto& cls : g->classes()) {
        int h = cls[0];
        Rational s = 0;
        for (int x : g->elements()) {
            int c = w.mul(w.mul(x, h), w.inverse(x));
            if (k.contains(c)) s += phi(c);
        }
        vals.push_back(s / k.order());
    }
    return ClassFunction(std::move(g), vals);
}

ClassFunction restrict_to(const ClassFunction& psi, std::shared_ptr<const Subgroup> k) {
    if (!k->is_subgroup_of(psi.domain())) fail(ErrorKind::NotASubgroup, "restriction to a non-subgroup");
    std::vector<Rational> vals;
    for (const auto& cls : k->classes()) vals.push_back(psi(cls[0]));
    return ClassFunction(std::move(k), vals);
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    const Subgroup& g = a.domain();
    Rational s = 0;
    for (int x : g.elements()) s += a(x) * b(g.group().inverse(x));
    return s / g.order();
}

ClassFunction sign_character(std::shared_ptr<const Subgroup> g) {
    std::vector<Rational> vals;
    for (const auto& cls : g->classes()) vals.push_back(g->group().sign(cls[0]));
    return ClassFunction(std::move(g), vals);
}

std::vector<DoubleCoset> double_cosets(const WeylGroup& w, const Subgroup& left, const std::vector<int>& c,
                                       const Subgroup& right) {
    std::vector<char> in_c(w.order(), 0), seen(w.order(), 0);
    for (int x : c) in_c[x] = 1;
    std::vector<DoubleCoset> out;
    for (int x : c) {
        if (seen[x]) continue;
        std::set<int> orbit;
        for (int l : left.elements())
            for (int r : right.elements()) orbit.insert(w.mul(w.mul(l, x), r));
        DoubleCoset d;
        d.elements.assign(orbit.begin(), orbit.end());
        for (int y : d.elements) {
            if (!in_c[y]) fail(ErrorKind::NotSaturated, "set is not a union of double cosets");
            seen[y] = 1;
        }
        d.rep = *std::min_element(d.elements.begin(), d.elements.end(), [&](int a, int b) {
            if (w.length(a) != w.length(b)) return w.length(a) < w.length(b);
            return w.reduced_word(a) < w.reduced_word(b);
        });
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace ahecke
