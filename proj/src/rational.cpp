#include "binext/rational.hpp"

#include "binext/errors.hpp"

#include <cctype>

namespace binext {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnboundedPolyhedron: return "UnboundedPolyhedron";
    case ErrorKind::PointNotInPolytope: return "PointNotInPolytope";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotABinarization: return "NotABinarization";
    case ErrorKind::RangeMismatch: return "RangeMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NonNaturalBinarization: return "NonNaturalBinarization";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::PersistencyViolation: return "PersistencyViolation";
    case ErrorKind::InfeasibleRow: return "InfeasibleRow";
    case ErrorKind::NonPositiveH: return "NonPositiveH";
    }
    return "Unknown";
}

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view token)
{
    auto slash = token.find('/');
    std::string_view num = token.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : token.substr(slash + 1);
    if (!valid_integer_token(num, true) || (slash != std::string_view::npos && !valid_integer_token(den, false)))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(token) + "'");
    Integer n(strip_plus(num));
    Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(token) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_binary(const Rational& q) { return q == 0 || q == 1; }

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational dot(const QVector& a, const QVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector primitive(const QVector& v)
{
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer n = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = g == 0 ? Rational(0) : Rational(ints[i] / g);
    return out;
}

}  // namespace binext
