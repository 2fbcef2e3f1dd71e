#include "ahecke/finite_hecke.hpp"

#include "ahecke/error.hpp"

#include <algorithm>

namespace ahecke {

namespace {

bool in_set(const SimpleSet& j, int s) { return std::find(j.begin(), j.end(), s) != j.end(); }

}  // namespace

FiniteHeckeModule::FiniteHeckeModule(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params,
                                     SimpleSet support, std::vector<Matrix> gens, std::string label)
    : sys_(std::move(sys)), params_(std::move(params)), support_(std::move(support)), gens_(std::move(gens)),
      label_(std::move(label)) {
    if (static_cast<int>(params_.size()) != sys_->num_generators() ||
        static_cast<int>(gens_.size()) != sys_->num_generators())
        fail(ErrorKind::NotAModule, "one parameter and one matrix slot per generator required");
    std::sort(support_.begin(), support_.end());
    bool have_dim = false;
    for (int s : support_) {
        if (gens_[s].rows() != gens_[s].cols()) fail(ErrorKind::NotAModule, "generator matrix not square");
        if (have_dim && gens_[s].rows() != dim_) fail(ErrorKind::NotAModule, "generator matrices differ in size");
        dim_ = gens_[s].rows();
        have_dim = true;
    }
    if (!have_dim) {
        // H_empty = Q; dimension is carried by any placeholder slot.
        for (const auto& g : gens_)
            if (g.rows() > 0) dim_ = g.rows();
    }
}

FiniteHeckeModule FiniteHeckeModule::one_dim(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params,
                                             SimpleSet support, const std::vector<int>& choice) {
    std::vector<Matrix> gens(sys->num_generators(), Matrix(1, 1));
    std::string label = "1d[";
    for (int s : support) {
        gens[s](0, 0) = choice[s] > 0 ? params[s] : Rational(-1);
        label += choice[s] > 0 ? "q" : "-";
    }
    label += "]";
    FiniteHeckeModule m(std::move(sys), std::move(params), std::move(support), std::move(gens), label);
    m.validate();
    return m;
}

const Matrix& FiniteHeckeModule::gen(int s) const {
    if (!in_set(support_, s)) fail(ErrorKind::NotAModule, "generator outside the module's subalgebra");
    return gens_[s];
}

Matrix FiniteHeckeModule::act(int w) const {
    Matrix m = Matrix::identity(dim_);
    for (int s : sys_->reduced_word(w)) m = m * gen(s);
    return m;
}

Rational FiniteHeckeModule::q_of(int w) const {
    Rational q = 1;
    for (int s : sys_->reduced_word(w)) q *= params_[s];
    return q;
}

void FiniteHeckeModule::validate() const {
    for (int s : support_) {
        const Matrix& t = gens_[s];
        Matrix lhs = t * t;
        Matrix rhs = Matrix::scalar(dim_, params_[s]) + t * (params_[s] - 1);
        if (lhs != rhs) fail(ErrorKind::NotAModule, "quadratic relation fails for generator " + std::to_string(s + 1));
    }
    for (int a : support_)
        for (int b : support_) {
            if (a >= b) continue;
            if (sys_->coxeter_m(a, b) % 2 == 1 && params_[a] != params_[b])
                fail(ErrorKind::NotAModule, "conjugate generators carry different parameters");
            int m = sys_->coxeter_m(a, b);
            Matrix x = Matrix::identity(dim_), y = Matrix::identity(dim_);
            for (int k = 0; k < m; ++k) {
                x = x * gens_[k % 2 ? b : a];
                y = y * gens_[k % 2 ? a : b];
            }
            if (x != y) fail(ErrorKind::NotAModule, "braid relation fails");
        }
}

FiniteHeckeModule restrict_module(const FiniteHeckeModule& m, const SimpleSet& j) {
    for (int s : j)
        if (!in_set(m.support(), s)) fail(ErrorKind::NotAModule, "restriction to a larger subalgebra");
    std::vector<Matrix> gens(m.system().num_generators(), Matrix(m.dim(), m.dim()));
    for (int s : j) gens[s] = m.gen(s);
    return FiniteHeckeModule(m.system_ptr(), m.params(), j, gens, "Res" + subset_name(j) + "(" + m.label() + ")");
}

FiniteHeckeModule induce_module(const FiniteHeckeModule& n) {
    const CoxeterSystem& sys = n.system();
    const WeylGroup& w = sys.group();
    const SimpleSet& j = n.support();
    auto reps = sys.min_coset_reps(j);
    std::vector<int> pos(w.order(), -1);
    for (std::size_t k = 0; k < reps.size(); ++k) pos[reps[k]] = static_cast<int>(k);
    const std::size_t d = n.dim(), dim = reps.size() * d;

    std::vector<Matrix> gens(sys.num_generators(), Matrix(dim, dim));
    SimpleSet all;
    for (int s = 0; s < sys.num_generators(); ++s) {
        all.push_back(s);
        Matrix& t = gens[s];
        const Rational& q = n.params()[s];
        for (std::size_t k = 0; k < reps.size(); ++k) {
            int x = reps[k];
            int sx = w.mul(sys.generator(s), x);
            if (sys.length(sx) < sys.length(x)) {
                std::size_t k2 = static_cast<std::size_t>(pos[sx]);
                for (std::size_t i = 0; i < d; ++i) {
                    t(k2 * d + i, k * d + i) += q;
                    t(k * d + i, k * d + i) += q - 1;
                }
            } else if (pos[sx] >= 0) {
                std::size_t k2 = static_cast<std::size_t>(pos[sx]);
                for (std::size_t i = 0; i < d; ++i) t(k2 * d + i, k * d + i) += 1;
            } else {
                int tt = w.mul(w.inverse(x), sx);
                int gi = sys.generator_index(tt);
                if (gi < 0 || !in_set(j, gi)) fail(ErrorKind::AssumptionViolated, "coset step is not a simple generator");
                const Matrix& g = n.gen(gi);
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) t(k * d + a, k * d + b) += g(a, b);
            }
        }
    }
    FiniteHeckeModule out(n.system_ptr(), n.params(), all, gens, "Ind(" + n.label() + ")");
    return out;
}

FiniteHeckeModule twist_star(const FiniteHeckeModule& m) {
    std::vector<Matrix> gens(m.system().num_generators(), Matrix(m.dim(), m.dim()));
    for (int s : m.support()) gens[s] = Matrix::scalar(m.dim(), m.params()[s] - 1) - m.gen(s);
    return FiniteHeckeModule(m.system_ptr(), m.params(), m.support(), gens, "(" + m.label() + ")*");
}

Rational FiniteVirtualModule::trace(int w) const {
    Rational t = 0;
    for (const auto& [sign, m] : parts) t += sign * m.trace(w);
    return t;
}

FiniteHeckeModule dihedral_order4_module(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> params) {
    if (sys->num_generators() != 2 || sys->coxeter_m(0, 1) != 4)
        fail(ErrorKind::AssumptionViolated, "dihedral module needs two generators with m = 4");
    Matrix ta(2, 2), tb(2, 2);
    ta(0, 0) = -1;
    ta(0, 1) = 1;
    ta(1, 1) = params[0];
    tb(0, 0) = params[1];
    tb(1, 0) = params[0] + params[1];
    tb(1, 1) = -1;
    FiniteHeckeModule m(std::move(sys), std::move(params), {0, 1}, {ta, tb}, "refl2");
    m.validate();
    return m;
}

}  // namespace ahecke
