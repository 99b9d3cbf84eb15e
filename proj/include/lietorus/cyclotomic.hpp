#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietorus {

using Rational = mpq_class;

/// Largest cyclotomic conductor the arithmetic layer accepts.  Commuting
/// automorphism families multiply orders, so running past this bound is a
/// configuration problem, not something to paper over.
inline constexpr long kMaxConductor = 720;

class conductor_error : public std::runtime_error {
public:
    explicit conductor_error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero : public std::runtime_error {
public:
    division_by_zero() : std::runtime_error("division by zero in cyclotomic field") {}
};

long euler_phi(long m);
std::vector<long> divisors(long m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Cached internally; thread safe.
const std::vector<mpz_class>& cyclotomic_polynomial(long m);

/// Exact element of a cyclotomic field Q(zeta_M).
///
/// The value is stored as the reduced residue modulo the M-th cyclotomic
/// polynomial, with M normalized to the least conductor at which the value
/// lives.  Equality of values is therefore equality of representations.
class CycNumber {
public:
    CycNumber() : conductor_(1), coeffs_(1, Rational(0)) {}
    CycNumber(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
    CycNumber(const Rational& v) : conductor_(1), coeffs_(1, v) {}

    /// zeta_m, a primitive m-th root of unity.  m >= 1.
    static CycNumber primitive_root(long m);

    /// Builds a value from a coefficient vector in the power basis of
    /// Q(zeta_conductor); the result is canonicalized.
    static CycNumber from_coeffs(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    /// Value as a rational; only valid when is_rational().
    const Rational& rational_value() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }

    /// Multiplicative inverse; throws division_by_zero on 0.
    CycNumber inverse() const;
    CycNumber pow(long e) const;

    /// Least k in [1, bound] with this^k == 1, or 0 if there is none.
    long multiplicative_order(long bound = 2 * kMaxConductor) const;

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }
    /// Total order usable as a map key (conductor, then coefficients).
    bool operator<(const CycNumber& o) const;

    /// Rendering "a0 + a1*z + ..." with a "(zeta M)" conductor annotation.
    std::string to_string() const;
    /// Parses the to_string() grammar.
    static CycNumber parse(const std::string& text);

    /// Display-only floating approximation.
    std::complex<double> approx() const;

private:
    long conductor_;
    std::vector<Rational> coeffs_;  // length euler_phi(conductor_)

    void canonicalize();
    static CycNumber lifted(const CycNumber& v, long target);
};

inline CycNumber operator*(const Rational& r, CycNumber a) { return a *= CycNumber(r); }

/// Sign of a rational value (-1, 0, 1); throws when the value is irrational.
int rational_sign(const CycNumber& v);

std::ostream& operator<<(std::ostream& os, const CycNumber& v);

}  // namespace lietorus
