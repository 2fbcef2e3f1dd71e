#include "ahecke/characters.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <set>

namespace ahecke {

std::vector<ClassFunction> irreducible_characters(std::shared_ptr<const Subgroup> g) {
    const WeylGroup& w = g->group();
    const auto& classes = g->classes();
    const std::size_t r = classes.size();

    // a[j](k, l) = #{x in C_j : x^{-1} g_l in C_k}, so that a[j] omega = omega_j omega.
    std::vector<Matrix> a(r, Matrix(r, r));
    for (std::size_t l = 0; l < r; ++l) {
        int gl = classes[l][0];
        for (std::size_t j = 0; j < r; ++j)
            for (int x : classes[j]) {
                int y = w.mul(w.inverse(x), gl);
                a[j](g->class_of(y), l) += 1;
            }
    }

    std::vector<Matrix> spaces{Matrix::identity(r)};
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Matrix> next;
        long bound = static_cast<long>(classes[j].size());
        for (const auto& v : spaces) {
            if (v.cols() == 1) {
                next.push_back(v);
                continue;
            }
            std::size_t found = 0;
            for (long lam = -bound; lam <= bound; ++lam) {
                Matrix shifted = a[j] - Matrix::scalar(r, Rational(lam));
                Matrix k = (shifted * v).kernel();
                if (k.cols() == 0) continue;
                next.push_back(v * k);
                found += k.cols();
            }
            if (found != v.cols()) fail(ErrorKind::IllegalCharacter, "character table is not rational");
        }
        spaces = std::move(next);
    }

    std::vector<int> inv_class(r);
    for (std::size_t k = 0; k < r; ++k) inv_class[k] = g->class_of(w.inverse(classes[k][0]));

    std::vector<ClassFunction> out;
    for (const auto& v : spaces) {
        if (v.cols() != 1) fail(ErrorKind::IllegalCharacter, "class algebra eigenspaces did not split");
        std::vector<Rational> omega(r);
        Rational e = v(g->class_of(w.identity()), 0);
        for (std::size_t k = 0; k < r; ++k) omega[k] = v(k, 0) / e;
        Rational s = 0;
        for (std::size_t k = 0; k < r; ++k) s += omega[k] * omega[inv_class[k]] / static_cast<long>(classes[k].size());
        Rational deg;
        if (!exact_sqrt(Rational(g->order()) / s, deg))
            fail(ErrorKind::IllegalCharacter, "character degree is not rational");
        std::vector<Rational> vals(r);
        for (std::size_t k = 0; k < r; ++k) vals[k] = deg * omega[k] / static_cast<long>(classes[k].size());
        out.emplace_back(g, vals);
    }
    int id_class = g->class_of(w.identity());
    std::sort(out.begin(), out.end(), [&](const ClassFunction& x, const ClassFunction& y) {
        if (x.values()[id_class] != y.values()[id_class]) return x.values()[id_class] < y.values()[id_class];
        return std::lexicographical_compare(y.values().begin(), y.values().end(), x.values().begin(), x.values().end());
    });
    return out;
}

std::vector<std::shared_ptr<const Subgroup>> all_subgroups(const Subgroup& g) {
    const WeylGroup& w = g.group();
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> list;
    auto add = [&](const std::vector<int>& gens) {
        auto h = w.generated(gens);
        if (found.insert(h->elements()).second) list.push_back(h->elements());
    };
    for (int x : g.elements()) add({x});
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> gens = list[i];
            gens.insert(gens.end(), list[j].begin(), list[j].end());
            add(gens);
        }
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<std::shared_ptr<const Subgroup>> out;
    for (auto& e : list) out.push_back(std::make_shared<Subgroup>(g.group_ptr(), e));
    return out;
}

std::vector<ClassFunction> class_indicators(std::shared_ptr<const Subgroup> g) {
    std::vector<ClassFunction> out;
    for (std::size_t k = 0; k < g->classes().size(); ++k) {
        std::vector<Rational> vals(g->classes().size());
        vals[k] = 1;
        out.emplace_back(g, vals);
    }
    return out;
}

}  // namespace ahecke
