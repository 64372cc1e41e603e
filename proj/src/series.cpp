#include "starfact/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::one(int order) {
    return constant(Rational(1), order);
}

const Rational& TruncatedSeries::coefficient(int k) const {
    if (k < 0) throw std::invalid_argument("negative series index");
    if (k > order()) throw OrderExceeded("coefficient index " + std::to_string(k) +
                                         " exceeds truncation order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational TruncatedSeries::exp_coefficient(int r) const {
    return Rational(factorial(static_cast<unsigned long>(r))) * coefficient(r);
}

void TruncatedSeries::set_coefficient(int k, const Rational& c) {
    if (k < 0 || k > order()) throw OrderExceeded("set_coefficient: index out of range");
    coeffs_[static_cast<std::size_t>(k)] = c;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0)
        throw NonInvertibleSeries("inverse: constant term is zero");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * out.coeffs_[static_cast<std::size_t>(k - j)];
        out.coeffs_[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (k) out += " + ";
        out += starfact::to_string(coeffs_[static_cast<std::size_t>(k)]) + "*t^" + std::to_string(k);
    }
    return out;
}

std::string TruncatedSeries::to_json() const {
    std::string out = "[";
    for (int k = 0; k <= order(); ++k) {
        if (k) out += ',';
        out += '"' + starfact::to_string(coeffs_[static_cast<std::size_t>(k)]) + '"';
    }
    out += ']';
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.set_coefficient(k, a.coefficient(k) + b.coefficient(k));
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.set_coefficient(k, a.coefficient(k) - b.coefficient(k));
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        Rational acc(0);
        for (int j = 0; j <= k; ++j) acc += a.coefficient(j) * b.coefficient(k - j);
        out.set_coefficient(k, acc);
    }
    return out;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
    s *= c;
    return s;
}

TruncatedSeries int_pow(const TruncatedSeries& s, int k) {
    TruncatedSeries base = k >= 0 ? s : s.inverse();
    int e = k >= 0 ? k : -k;
    TruncatedSeries acc = TruncatedSeries::one(s.order());
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

TruncatedSeries scale_arg(const TruncatedSeries& s, int m) {
    if (m < 1) throw std::invalid_argument("scale_arg: m must be a positive integer");
    TruncatedSeries out(s.order());
    Integer mk = 1;
    for (int k = 0; k <= s.order(); ++k) {
        out.set_coefficient(k, s.coefficient(k) * Rational(mk));
        mk *= m;
    }
    return out;
}

TruncatedSeries times_t_power(const TruncatedSeries& s, int k) {
    if (k < 0) throw std::invalid_argument("times_t_power: negative shift");
    TruncatedSeries out(s.order());
    for (int j = 0; j + k <= s.order(); ++j) out.set_coefficient(j + k, s.coefficient(j));
    return out;
}

TruncatedSeries exp_series(int order) {
    TruncatedSeries out(order);
    for (int k = 0; k <= order; ++k)
        out.set_coefficient(k, make_rational(1, factorial(static_cast<unsigned long>(k))));
    return out;
}

TruncatedSeries f_series(int order) {
    TruncatedSeries out(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Integer den = integer_pow(4, static_cast<unsigned long>(k)) *
                      factorial(static_cast<unsigned long>(2 * k + 1));
        out.set_coefficient(2 * k, make_rational(1, den));
    }
    return out;
}

TruncatedSeries phi_series_sinh(const Partition& lambda, int order) {
    if (lambda.empty()) throw EmptyPartition("phi_series_sinh: empty partition");
    const int w = lambda.weight();
    const int len = lambda.length();
    TruncatedSeries f = f_series(order);
    TruncatedSeries acc = int_pow(f, w - 2);
    for (int p : lambda.parts()) acc = acc * (Rational(p) * scale_arg(f, p));
    acc = times_t_power(acc, w + len - 2);
    acc *= make_rational(1, factorial(static_cast<unsigned long>(w)) * z_value(lambda));
    return acc;
}

namespace {

// [m]_q = 1 + q + ... + q^{m-1}
TruncatedSeries q_integer(int m, const TruncatedSeries& q) {
    TruncatedSeries acc(q.order());
    TruncatedSeries qp = TruncatedSeries::one(q.order());
    for (int j = 0; j < m; ++j) {
        acc = acc + qp;
        qp = qp * q;
    }
    return acc;
}

}  // namespace

TruncatedSeries phi_series_q(const Partition& lambda, int order) {
    if (lambda.empty()) throw EmptyPartition("phi_series_q: empty partition");
    const int w = lambda.weight();
    const int len = lambda.length();
    TruncatedSeries q = exp_series(order);
    TruncatedSeries one = TruncatedSeries::one(order);
    // prod_i (q^{l_i}-1) / (q-1) = (q-1)^{len-1} prod_i [l_i]_q, so no
    // division by a series with zero constant term is ever needed.
    TruncatedSeries acc = int_pow(one - q.inverse(), w - 1);
    acc = acc * int_pow(q - one, len - 1);
    for (int p : lambda.parts()) acc = acc * q_integer(p, q);
    acc *= make_rational(1, factorial(static_cast<unsigned long>(w)) * z_value(lambda));
    return acc;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.to_string();
}

}  // namespace starfact
