#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "starfact/partition.hpp"
#include "starfact/rational.hpp"

namespace starfact {

/// Truncated power series with exact rational coefficients c_0..c_N,
/// representing sum c_k t^k mod t^{N+1}. Arithmetic between operands of
/// different orders closes at the smaller one.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // the zero series
    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// c_k; throws OrderExceeded past the truncation order.
    const Rational& coefficient(int k) const;
    /// r! * c_r, the coefficient in the exponential convention.
    Rational exp_coefficient(int r) const;
    void set_coefficient(int k, const Rational& c);

    /// Multiplicative inverse; requires c_0 != 0 (NonInvertibleSeries).
    TruncatedSeries inverse() const;

    TruncatedSeries& operator*=(const Rational& c);

    std::string to_string() const;
    /// JSON array of fraction strings: ["1","0","1/24",...].
    std::string to_json() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, TruncatedSeries s);

/// s^k; negative k requires an invertible constant term.
TruncatedSeries int_pow(const TruncatedSeries& s, int k);
/// s(mt) for a positive integer m.
TruncatedSeries scale_arg(const TruncatedSeries& s, int m);
/// t^k * s at the same truncation order.
TruncatedSeries times_t_power(const TruncatedSeries& s, int k);

TruncatedSeries exp_series(int order);

/// f(t) = 2 sinh(t/2) / t: even, with c_{2k} = 1 / (4^k (2k+1)!).
TruncatedSeries f_series(int order);

/// phi_lambda(t) in the sinh form:
///   (1/(|l|! z_l)) t^{|l|+len-2} f(t)^{|l|-2} prod_i (l_i f(l_i t)).
TruncatedSeries phi_series_sinh(const Partition& lambda, int order);

/// phi_lambda(t) in the q form at q = e^t:
///   ((1-q^{-1})^{|l|-1} / (|l|! z_l)) (prod_i (q^{l_i}-1)) / (q-1),
/// with the q-1 cancellation done through q-integer polynomials so that
/// every step stays total.
TruncatedSeries phi_series_q(const Partition& lambda, int order);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace starfact
