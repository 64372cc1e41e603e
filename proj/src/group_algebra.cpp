#include "starfact/group_algebra.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

GroupAlgebraElement::GroupAlgebraElement(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw std::invalid_argument("ground set has repeated points");
    if (!ground.empty() && ground.front() < 1)
        throw std::invalid_argument("ground points must be positive");
    ground_ = std::move(ground);
}

GroupAlgebraElement GroupAlgebraElement::zero(int n) {
    return GroupAlgebraElement(ground_upto(n));
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    GroupAlgebraElement e = zero(n);
    e.add_term(Permutation::identity(ground_upto(n)), 1);
    return e;
}

int GroupAlgebraElement::n() const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("element does not live over a {1..n} ground set");
    return static_cast<int>(ground_.size());
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
    if (p.ground() != ground_)
        throw std::invalid_argument("term ground set does not match the algebra ground set");
    Rational& slot = terms_[p];
    slot += c;
    if (slot == 0) terms_.erase(p);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
    if (ground_ != rhs.ground_)
        throw std::invalid_argument("mixing group algebras over different ground sets");
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
    if (ground_ != rhs.ground_)
        throw std::invalid_argument("mixing group algebras over different ground sets");
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += starfact::to_string(c) + " * " + p.to_string();
    }
    return out;
}

GroupAlgebraElement operator+(GroupAlgebraElement lhs, const GroupAlgebraElement& rhs) {
    lhs += rhs;
    return lhs;
}

GroupAlgebraElement operator-(GroupAlgebraElement lhs, const GroupAlgebraElement& rhs) {
    lhs -= rhs;
    return lhs;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs) {
    if (lhs.ground() != rhs.ground())
        throw std::invalid_argument("mixing group algebras over different ground sets");
    GroupAlgebraElement out(lhs.ground());
    for (const auto& [p, a] : lhs.terms())
        for (const auto& [q, b] : rhs.terms()) out.add_term(compose(p, q), a * b);
    return out;
}

GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement x) {
    x *= c;
    return x;
}

GroupAlgebraElement ga_power(const GroupAlgebraElement& x, int k) {
    if (k < 0) throw std::invalid_argument("ga_power: negative exponent");
    GroupAlgebraElement acc(x.ground());
    acc.add_term(Permutation::identity(x.ground()), 1);
    for (int i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

GroupAlgebraElement expectation(const GroupAlgebraElement& x, int n) {
    if (x.ground() != ground_upto(n + 1))
        throw std::invalid_argument("expectation: element must live over {1..n+1}");
    std::vector<int> target = ground_upto(n);
    GroupAlgebraElement out(target);
    for (const auto& [p, c] : x.terms())
        if (p.apply(n + 1) == n + 1) out.add_term(p.restricted_to(target), c);
    return out;
}

std::map<Partition, Rational> class_coefficients(const GroupAlgebraElement& x) {
    const int n = x.n();
    std::map<Partition, Rational> coeffs;
    std::map<Partition, Integer> counts;
    for (const auto& [p, c] : x.terms()) {
        Partition type = p.cycle_type();
        auto [it, inserted] = coeffs.emplace(type, c);
        if (!inserted && it->second != c)
            throw InternalMismatch("class_coefficients: element is not central (type " +
                                   type.to_string() + ")");
        counts[type] += 1;
    }
    for (const auto& [type, cnt] : counts) {
        Integer class_size = factorial(static_cast<unsigned long>(n)) / z_value(type);
        if (cnt != class_size)
            throw InternalMismatch("class_coefficients: incomplete class " + type.to_string());
    }
    return coeffs;
}

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& x) {
    return os << x.to_string();
}

}  // namespace starfact
