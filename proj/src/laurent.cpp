#include "ahecke/laurent.hpp"

#include "ahecke/error.hpp"

#include <algorithm>
#include <sstream>

namespace ahecke {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::v(ParamSymbol s, int power) {
    if (s < 0 || s >= kMaxSymbols) fail(ErrorKind::IllegalParameter, "parameter symbol out of range");
    Monomial m{};
    m[s] = static_cast<std::int16_t>(power);
    return monomial(m);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    } else if (sgn(c) != 0) {
        terms_.insert(it, {m, c});
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (sgn(c) != 0) out.push_back({a->first, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < kMaxSymbols; ++i) m[i] = static_cast<std::int16_t>(ma[i] + mb[i]);
            acc[m] += ca * cb;
        }
    LaurentPoly r;
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) r.terms_.push_back({m, c});
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_monomial())
        fail(ErrorKind::NonInvertibleCoefficient, "cannot invert " + to_string());
    Monomial m;
    for (int i = 0; i < kMaxSymbols; ++i) m[i] = static_cast<std::int16_t>(-terms_[0].first[i]);
    return monomial(m, 1 / terms_[0].second);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        bool unit = true;
        for (auto e : m) unit = unit && e == 0;
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (unit || a != 1) os << a.get_str();
        bool need_star = !unit && a != 1;
        for (int i = 0; i < kMaxSymbols; ++i) {
            if (m[i] == 0) continue;
            os << (need_star ? "*" : "") << "v" << i;
            if (m[i] != 1) os << "^" << m[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

Specialization Specialization::from_q(const std::vector<Rational>& q_values) {
    std::vector<Rational> v;
    for (const auto& q : q_values) {
        if (sgn(q) == 0 || q == 1) fail(ErrorKind::IllegalParameter, "q must not be 0 or 1, got " + q.get_str());
        Rational r;
        if (!exact_sqrt(q, r))
            fail(ErrorKind::IllegalParameter, "q must be a positive perfect square, got " + q.get_str());
        v.push_back(r);
    }
    return from_v(v);
}

Specialization Specialization::from_v(const std::vector<Rational>& v_values) {
    if (v_values.size() > static_cast<std::size_t>(LaurentPoly::kMaxSymbols))
        fail(ErrorKind::IllegalParameter, "too many parameter symbols");
    for (const auto& v : v_values)
        if (sgn(v) == 0) fail(ErrorKind::IllegalParameter, "v must be nonzero");
    Specialization s;
    s.v_ = v_values;
    return s;
}

const Rational& Specialization::v(ParamSymbol s) const {
    if (s < 0 || static_cast<std::size_t>(s) >= v_.size())
        fail(ErrorKind::IllegalParameter, "no value for parameter symbol v" + std::to_string(s));
    return v_[s];
}

Rational Specialization::eval(const LaurentPoly& p) const {
    Rational out = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < LaurentPoly::kMaxSymbols; ++i)
            if (m[i] != 0) t *= rational_pow(v(i), m[i]);
        out += t;
    }
    return out;
}

}  // namespace ahecke
