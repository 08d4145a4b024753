#include "binext/polytope_io.hpp"

#include "binext/errors.hpp"

#include <sstream>

namespace binext {

namespace {

std::vector<std::string> tokens_of(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

AnyPolytope parse_polytope(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    char kind = 0;
    std::size_t dim = 0;
    std::vector<LinearRow> ineqs, eqs;
    std::vector<QVector> points;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (kind == 0) {
            if (toks.size() != 2 || (toks[0] != "H" && toks[0] != "V")) parse_fail(line_no, "expected header 'H n' or 'V n'");
            kind = toks[0][0];
            try {
                dim = std::stoul(toks[1]);
            } catch (const std::exception&) {
                parse_fail(line_no, "bad dimension '" + toks[1] + "'");
            }
            if (dim == 0) parse_fail(line_no, "dimension must be positive");
            continue;
        }
        if (kind == 'V') {
            if (toks.size() != dim) parse_fail(line_no, "expected " + std::to_string(dim) + " coordinates");
            QVector p;
            for (const auto& t : toks) p.push_back(parse_rational(t));
            points.push_back(std::move(p));
        } else {
            if (toks.size() != dim + 2) parse_fail(line_no, "expected " + std::to_string(dim) + " coefficients, relation, rhs");
            QVector a;
            for (std::size_t i = 0; i < dim; ++i) a.push_back(parse_rational(toks[i]));
            const std::string& rel = toks[dim];
            Rational b = parse_rational(toks[dim + 1]);
            if (rel == "<=" || rel == "≤") ineqs.push_back({std::move(a), std::move(b)});
            else if (rel == "=" || rel == "==") eqs.push_back({std::move(a), std::move(b)});
            else if (rel == ">=" || rel == "≥") {
                for (auto& c : a) c = -c;
                ineqs.push_back({std::move(a), -b});
            } else parse_fail(line_no, "unknown relation '" + rel + "'");
        }
    }
    if (kind == 0) throw Error(ErrorKind::ParseError, "missing header");
    if (kind == 'V') return VPolytope(dim, std::move(points));
    return HPolytope(dim, std::move(ineqs), std::move(eqs));
}

std::string format_polytope(const HPolytope& h)
{
    std::ostringstream out;
    out << "H " << h.dim() << '\n';
    auto emit = [&](const LinearRow& r, const char* rel) {
        for (const auto& c : r.a) out << to_string(c) << ' ';
        out << rel << ' ' << to_string(r.b) << '\n';
    };
    for (const auto& r : h.ineqs()) emit(r, "<=");
    for (const auto& r : h.eqs()) emit(r, "=");
    return out.str();
}

std::string format_polytope(const VPolytope& v)
{
    std::ostringstream out;
    out << "V " << v.dim() << '\n';
    for (const auto& p : v.vertices()) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
        out << '\n';
    }
    return out.str();
}

std::string format_polytope(const AnyPolytope& p)
{
    return std::visit([](const auto& x) { return format_polytope(x); }, p);
}

namespace {

nlohmann::json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (!is_integer(q)) throw Error(ErrorKind::ParseError, "expected integer, got " + j.dump());
        return q.get_num();
    }
    throw Error(ErrorKind::ParseError, "expected integer, got " + j.dump());
}

}  // namespace

nlohmann::json rational_to_json(const Rational& q)
{
    return {{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_object()) {
        if (!j.contains("num")) throw Error(ErrorKind::ParseError, "rational object without 'num'");
        Integer num = integer_from_json(j.at("num"));
        Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "cannot read rational from " + j.dump());
}

nlohmann::json vector_to_json(const QVector& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& q : v) arr.push_back(rational_to_json(q));
    return arr;
}

QVector vector_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected array of rationals");
    QVector v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

nlohmann::json vector_to_strings(const QVector& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

nlohmann::json polytope_to_json(const HPolytope& h)
{
    auto rows = [](const std::vector<LinearRow>& rs) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rs) arr.push_back({{"a", vector_to_json(r.a)}, {"b", rational_to_json(r.b)}});
        return arr;
    };
    return {{"type", "H"}, {"dim", h.dim()}, {"ineqs", rows(h.ineqs())}, {"eqs", rows(h.eqs())}};
}

nlohmann::json polytope_to_json(const VPolytope& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& p : v.vertices()) arr.push_back(vector_to_json(p));
    return {{"type", "V"}, {"dim", v.dim()}, {"vertices", arr}};
}

AnyPolytope polytope_from_json(const nlohmann::json& j)
{
    if (j.is_string()) return parse_polytope(j.get<std::string>());
    if (!j.is_object() || !j.contains("type") || !j.contains("dim"))
        throw Error(ErrorKind::ParseError, "polytope JSON needs 'type' and 'dim'");
    const auto type = j.at("type").get<std::string>();
    const auto dim = j.at("dim").get<std::size_t>();
    if (type == "V") {
        std::vector<QVector> pts;
        for (const auto& p : j.value("vertices", nlohmann::json::array())) pts.push_back(vector_from_json(p));
        return VPolytope(dim, std::move(pts));
    }
    if (type != "H") throw Error(ErrorKind::ParseError, "polytope type must be 'H' or 'V'");
    auto rows = [](const nlohmann::json& arr) {
        std::vector<LinearRow> out;
        for (const auto& r : arr) out.push_back({vector_from_json(r.at("a")), rational_from_json(r.at("b"))});
        return out;
    };
    return HPolytope(dim, rows(j.value("ineqs", nlohmann::json::array())), rows(j.value("eqs", nlohmann::json::array())));
}

}  // namespace binext
