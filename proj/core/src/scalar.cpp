#include "torec/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <sstream>

namespace torec {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
            throw DomainError("bad rational literal: '" + s + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw DomainError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool exact_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

FloatScalar complex_sqrt(const FloatScalar& z) {
    BigFloat r = cabs(z);
    if (r == 0) return {};
    BigFloat u = sqrt((r + z.re) / 2);
    BigFloat v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return {u, v};
}

CDouble complex_sqrt(const CDouble& z) {
    double r = cabs(z);
    if (r == 0.0) return {};
    double u = std::sqrt((r + z.re) / 2);
    double v = std::sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return {u, v};
}

ExactScalar Field<ExactScalar>::sqrt_principal(const ExactScalar& x) {
    Rational r;
    if (x.im == 0) {
        if (x.re >= 0) {
            if (exact_sqrt(x.re, r)) return {r};
        } else {
            if (exact_sqrt(-x.re, r)) return {Rational(0), r};
        }
    }
    throw DomainError("square root not representable in exact mode: " +
                      exact_scalar_str(x));
}

namespace {

// Splits "re", "re+imi", "re-imi" at the last top-level sign; rational and
// decimal bodies contain no '+'; '-' appears only in a leading position.
bool split_complex_literal(const std::string& s, std::string& re, std::string& im) {
    if (s.empty() || s.back() != 'i') {
        re = s;
        im.clear();
        return false;
    }
    std::string body = s.substr(0, s.size() - 1);
    for (size_t pos = body.size(); pos-- > 1;) {
        char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E' &&
            body[pos - 1] != '/') {
            re = body.substr(0, pos);
            im = (c == '+') ? body.substr(pos + 1) : body.substr(pos);
            return true;
        }
    }
    re = "0";
    im = body;
    return true;
}

}  // namespace

std::string exact_scalar_str(const ExactScalar& x) {
    if (x.im == 0) return rational_str(x.re);
    std::string s = rational_str(x.re);
    if (x.im < 0)
        s += "-" + rational_str(Rational(-x.im));
    else
        s += "+" + rational_str(x.im);
    return s + "i";
}

ExactScalar parse_exact_scalar(const std::string& s) {
    std::string re, im;
    if (split_complex_literal(s, re, im))
        return {parse_rational(re), parse_rational(im)};
    return {parse_rational(re)};
}

namespace {

std::string bigfloat_str(const BigFloat& x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(BigFloat::default_precision()) << x;
    return os.str();
}

BigFloat parse_bigfloat(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rational q = parse_rational(s);
        return BigFloat(q.get_mpq_t());
    }
    try {
        return BigFloat(s);
    } catch (const std::exception&) {
        throw DomainError("bad float literal: '" + s + "'");
    }
}

}  // namespace

std::string float_scalar_str(const FloatScalar& x) {
    int bits = std::max(float_precision_bits(x.re), float_precision_bits(x.im));
    std::string s;
    if (x.im == 0) {
        s = bigfloat_str(x.re);
    } else {
        s = bigfloat_str(x.re);
        if (x.im < 0)
            s += "-" + bigfloat_str(-x.im);
        else
            s += "+" + bigfloat_str(x.im);
        s += "i";
    }
    return s + "@" + std::to_string(bits);
}

FloatScalar parse_float_scalar(const std::string& s) {
    std::string body = s;
    auto at = body.rfind('@');
    if (at != std::string::npos) body = body.substr(0, at);
    std::string re, im;
    if (split_complex_literal(body, re, im))
        return {parse_bigfloat(re), parse_bigfloat(im)};
    return {parse_bigfloat(re)};
}

}  // namespace torec
