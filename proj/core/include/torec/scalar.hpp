#pragma once

// Scalar fields for the pipeline: exact Gaussian rationals (GMP) and
// arbitrary-precision complex floats (MPFR). A run works in one field
// throughout; the choice is made once at the configuration boundary.

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace torec {

class TorecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reading a coefficient beyond a provable truncation order. Always a hard
// error: a silently truncated residue is a wrong residue.
class TruncationError : public TorecError {
public:
    using TorecError::TorecError;
};

class DomainError : public TorecError {
public:
    using TorecError::TorecError;
};

class ValidationError : public TorecError {
public:
    using TorecError::TorecError;
};

class ParseError : public TorecError {
public:
    ParseError(const std::string& msg, int line, int column)
        : TorecError(msg), line(line), column(column) {}
    int line = 0;
    int column = 0;
};

using Rational = mpq_class;
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline int bits_to_digits10(int bits) {
    return static_cast<int>(std::ceil(bits * 0.30103)) + 2;
}

inline void set_float_precision_bits(int bits) {
    if (bits < 64) throw DomainError("float precision must be at least 64 bits");
    BigFloat::default_precision(bits_to_digits10(bits));
}

inline int float_precision_bits(const BigFloat& x) {
    return static_cast<int>(mpfr_get_prec(x.backend().data()));
}

// "p/q" or a bare integer; canonicalized, denominator > 0.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);  // always "p/q"

// True square root when x is a ratio of perfect squares.
bool exact_sqrt(const Rational& x, Rational& out);

template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        T n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
    Complex& operator/=(const Complex& b) { *this = *this / b; return *this; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    Complex conj() const { return {re, -im}; }
    T norm() const { return re * re + im * im; }
};

using ExactScalar = Complex<Rational>;
using FloatScalar = Complex<BigFloat>;
using CDouble = Complex<double>;

inline double cabs(const CDouble& z) { return std::hypot(z.re, z.im); }
inline BigFloat cabs(const FloatScalar& z) {
    return sqrt(z.re * z.re + z.im * z.im);
}

// Principal branch: Re >= 0, branch cut on the negative real axis mapping to +i.
FloatScalar complex_sqrt(const FloatScalar& z);
CDouble complex_sqrt(const CDouble& z);

inline CDouble to_cdouble(const ExactScalar& x) {
    return {x.re.get_d(), x.im.get_d()};
}
inline CDouble to_cdouble(const FloatScalar& x) {
    return {x.re.convert_to<double>(), x.im.convert_to<double>()};
}
inline FloatScalar to_cbig(const ExactScalar& x) {
    return {BigFloat(x.re.get_mpq_t()), BigFloat(x.im.get_mpq_t())};
}
inline FloatScalar to_cbig(const FloatScalar& x) { return x; }

std::string exact_scalar_str(const ExactScalar& x);
ExactScalar parse_exact_scalar(const std::string& s);
std::string float_scalar_str(const FloatScalar& x);
FloatScalar parse_float_scalar(const std::string& s);

// Uniform interface the series/curve/engine templates program against.
template <class S>
struct Field;

template <>
struct Field<ExactScalar> {
    static constexpr bool exact = true;
    static ExactScalar zero() { return {}; }
    static ExactScalar one() { return {Rational(1)}; }
    static ExactScalar from_int(long n) { return {Rational(n)}; }
    static ExactScalar from_rational(const Rational& q) { return {q}; }
    static ExactScalar from_ratio(long p, long q) { return {Rational(p, q)}; }
    static bool is_zero(const ExactScalar& x) { return x.re == 0 && x.im == 0; }
    static std::string str(const ExactScalar& x) { return exact_scalar_str(x); }
    static ExactScalar parse(const std::string& s) { return parse_exact_scalar(s); }
    static ExactScalar sqrt_principal(const ExactScalar& x);
    static bool eq(const ExactScalar& a, const ExactScalar& b) { return a == b; }
};

template <>
struct Field<FloatScalar> {
    static constexpr bool exact = false;
    static FloatScalar zero() { return {}; }
    static FloatScalar one() { return {BigFloat(1)}; }
    static FloatScalar from_int(long n) { return {BigFloat(n)}; }
    static FloatScalar from_rational(const Rational& q) {
        return {BigFloat(q.get_mpq_t())};
    }
    static FloatScalar from_ratio(long p, long q) {
        return {BigFloat(p) / BigFloat(q)};
    }
    static bool is_zero(const FloatScalar& x) { return x.re == 0 && x.im == 0; }
    static std::string str(const FloatScalar& x) { return float_scalar_str(x); }
    static FloatScalar parse(const std::string& s) { return parse_float_scalar(s); }
    static FloatScalar sqrt_principal(const FloatScalar& x) { return complex_sqrt(x); }
    static bool eq(const FloatScalar& a, const FloatScalar& b) {
        BigFloat d = cabs(a - b);
        BigFloat scale = cabs(a) + cabs(b) + 1;
        // close-enough for symmetry self-checks in float mode
        return d <= scale * pow(BigFloat(2), -int(0.8 * float_precision_bits(scale)));
    }
};

// Generic complex scalar parser dispatching on the trailing "@bits" marker is
// not needed; curve files carry the mode and each field parses its own form.

}  // namespace torec
