#include "ahecke/coxeter_system.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <sstream>

namespace ahecke {

CoxeterSystem::CoxeterSystem(std::shared_ptr<const WeylGroup> w, std::vector<int> generators)
    : w_(std::move(w)), gens_(std::move(generators)) {
    for (int g : gens_)
        if (g == w_->identity() || w_->mul(g, g) != w_->identity())
            fail(ErrorKind::AssumptionViolated, "Coxeter generators must be involutions");
    length_.assign(w_->order(), -1);
    length_[w_->identity()] = 0;
    elems_.push_back(w_->identity());
    for (std::size_t k = 0; k < elems_.size(); ++k)
        for (int g : gens_) {
            int h = w_->mul(elems_[k], g);
            if (length_[h] < 0) {
                length_[h] = length_[elems_[k]] + 1;
                elems_.push_back(h);
            }
        }
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::of_weyl(std::shared_ptr<const WeylGroup> w) {
    std::vector<int> gens;
    for (int i = 0; i < w->rank(); ++i) gens.push_back(w->simple_reflection(i));
    return std::make_shared<CoxeterSystem>(w, gens);
}

int CoxeterSystem::length(int g) const {
    if (length_[g] < 0) fail(ErrorKind::NotASubgroup, "element outside the reflection subgroup");
    return length_[g];
}

int CoxeterSystem::generator_index(int g) const {
    auto it = std::find(gens_.begin(), gens_.end(), g);
    return it == gens_.end() ? -1 : static_cast<int>(it - gens_.begin());
}

std::vector<int> CoxeterSystem::reduced_word(int g) const {
    std::vector<int> word;
    while (g != w_->identity()) {
        for (int i = 0; i < num_generators(); ++i)
            if (left_descent(g, i)) {
                word.push_back(i);
                g = w_->mul(gens_[i], g);
                break;
            }
    }
    return word;
}

std::string CoxeterSystem::word_string(int g) const {
    auto word = reduced_word(g);
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "." : "") << "r" << word[k] + 1;
    return os.str();
}

std::vector<int> CoxeterSystem::parabolic_elements(const SimpleSet& J) const {
    std::vector<int> gens;
    for (int j : J) gens.push_back(gens_[j]);
    return w_->generated(gens)->elements();
}

std::vector<int> CoxeterSystem::min_coset_reps(const SimpleSet& J) const {
    std::vector<int> out;
    for (int g : elems_) {
        bool ok = true;
        for (int j : J) ok = ok && !right_descent(g, j);
        if (ok) out.push_back(g);
    }
    return out;
}

std::pair<int, int> CoxeterSystem::split(int g, const SimpleSet& J) const {
    int x = g, u = w_->identity();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : J)
            if (right_descent(x, j)) {
                x = w_->mul(x, gens_[j]);
                u = w_->mul(gens_[j], u);
                moved = true;
                break;
            }
    }
    return {x, u};
}

int CoxeterSystem::coxeter_m(int i, int j) const {
    int p = w_->mul(gens_[i], gens_[j]), x = p, m = 1;
    while (x != w_->identity()) {
        x = w_->mul(x, p);
        ++m;
    }
    return m;
}

std::shared_ptr<const Subgroup> CoxeterSystem::as_subgroup() const { return std::make_shared<Subgroup>(w_, elems_); }

}  // namespace ahecke
