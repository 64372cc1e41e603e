#include "starfact/pp_algebra.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

PPAlgebraElement PPAlgebraElement::unit() {
    return single(PartialPermutation{});
}

PPAlgebraElement PPAlgebraElement::single(PartialPermutation pp, Rational c) {
    PPAlgebraElement e;
    e.add_term(pp, c);
    return e;
}

Rational PPAlgebraElement::coeff(const PartialPermutation& pp) const {
    auto it = terms_.find(pp);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool PPAlgebraElement::fits_within(int n) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
        const auto& d = term.first.domain();
        return d.empty() || d.back() <= n;
    });
}

void PPAlgebraElement::add_term(const PartialPermutation& pp, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms_[pp];
    slot += c;
    if (slot == 0) terms_.erase(pp);
}

PPAlgebraElement& PPAlgebraElement::operator+=(const PPAlgebraElement& rhs) {
    for (const auto& [pp, c] : rhs.terms_) add_term(pp, c);
    return *this;
}

PPAlgebraElement& PPAlgebraElement::operator-=(const PPAlgebraElement& rhs) {
    for (const auto& [pp, c] : rhs.terms_) add_term(pp, -c);
    return *this;
}

PPAlgebraElement& PPAlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [pp, v] : terms_) v *= c;
    return *this;
}

std::string PPAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [pp, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += starfact::to_string(c) + " * " + pp.to_string();
    }
    return out;
}

PPAlgebraElement operator+(PPAlgebraElement lhs, const PPAlgebraElement& rhs) {
    lhs += rhs;
    return lhs;
}

PPAlgebraElement operator-(PPAlgebraElement lhs, const PPAlgebraElement& rhs) {
    lhs -= rhs;
    return lhs;
}

PPAlgebraElement operator*(const PPAlgebraElement& lhs, const PPAlgebraElement& rhs) {
    PPAlgebraElement out;
    for (const auto& [x, a] : lhs.terms())
        for (const auto& [y, b] : rhs.terms()) out.add_term(x * y, a * b);
    return out;
}

PPAlgebraElement operator*(const Rational& c, PPAlgebraElement x) {
    x *= c;
    return x;
}

PPAlgebraElement pp_power(const PPAlgebraElement& x, int k) {
    if (k < 0) throw std::invalid_argument("pp_power: negative exponent");
    PPAlgebraElement acc = PPAlgebraElement::unit();
    for (int i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

namespace {

void require_fits(const PPAlgebraElement& x, int n, const char* where) {
    if (!x.fits_within(n))
        throw DomainTooLarge(std::string(where) + ": a term's domain is not inside {1.." +
                             std::to_string(n) + "}");
}

}  // namespace

GroupAlgebraElement forget(const PPAlgebraElement& x, int n) {
    require_fits(x, n, "forget");
    std::vector<int> g = ground_upto(n);
    GroupAlgebraElement out(g);
    for (const auto& [pp, c] : x.terms()) out.add_term(pp.perm().extended_to(g), c);
    return out;
}

GroupAlgebraElement transitive_part(const PPAlgebraElement& x, int n) {
    std::vector<int> g = ground_upto(n);
    GroupAlgebraElement out(g);
    for (const auto& [pp, c] : x.terms())
        if (pp.domain() == g) out.add_term(pp.perm(), c);
    return out;
}

PPAlgebraElement project_down(const PPAlgebraElement& x, int n) {
    PPAlgebraElement out;
    for (const auto& [pp, c] : x.terms()) {
        const auto& d = pp.domain();
        if (d.empty() || d.back() <= n) out.add_term(pp, c);
    }
    return out;
}

PPAlgebraElement conjugate_action(const Permutation& tau, const PPAlgebraElement& x) {
    const int n = static_cast<int>(tau.ground().size());
    if (tau.ground() != ground_upto(n))
        throw std::invalid_argument("conjugate_action: tau must be a permutation of {1..n}");
    require_fits(x, n, "conjugate_action");
    PPAlgebraElement out;
    for (const auto& [pp, c] : x.terms())
        out.add_term(PartialPermutation(pp.perm().conjugated_by(tau)), c);
    return out;
}

GroupAlgebraElement phi_restrict(const PPAlgebraElement& x, std::vector<int> d) {
    GroupAlgebraElement out{std::move(d)};
    for (const auto& [pp, c] : x.terms())
        if (is_subset(pp.domain(), out.ground()))
            out.add_term(pp.perm().extended_to(out.ground()), c);
    return out;
}

PPAlgebraElement e_tilde(const PPAlgebraElement& x, int n) {
    require_fits(x, n + 1, "e_tilde");
    PPAlgebraElement out;
    for (const auto& [pp, c] : x.terms()) {
        if (!pp.perm().contains(n + 1)) continue;  // n+1 must belong to d
        if (pp.perm().apply(n + 1) != n + 1) continue;
        out.add_term(
            PartialPermutation(pp.perm().restricted_to(set_minus(pp.domain(), n + 1))), c);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PPAlgebraElement& x) {
    return os << x.to_string();
}

}  // namespace starfact
