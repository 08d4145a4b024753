#include "binext/cli.hpp"

#include "binext/errors.hpp"
#include "binext/geometry.hpp"
#include "binext/hypercube.hpp"
#include "binext/polytope_io.hpp"
#include "binext/pyramid.hpp"
#include "binext/rank.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace binext {

using nlohmann::json;

namespace {

struct UsageError
{
    std::string message;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, origin + ": " + e.what());
    }
}

/// A polytope file holds either the text format or its JSON mirror.
json polytope_file(const std::string& path)
{
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text, path);
    return json(text);
}

HPolytope as_h(const AnyPolytope& p)
{
    if (const auto* h = std::get_if<HPolytope>(&p)) return *h;
    const auto& v = std::get<VPolytope>(p);
    return facet_hull(v);
}

long get_long(const json& j, const char* key)
{
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("descriptor needs '") + key + "'");
    if (!j.at(key).is_number_integer()) throw Error(ErrorKind::ParseError, std::string("'") + key + "' must be an integer");
    return j.at(key).get<long>();
}

unsigned get_dim(const json& j, const char* key)
{
    const long v = get_long(j, key);
    if (v < 1 || v > 30) throw Error(ErrorKind::RangeViolation, std::string("'") + key + "' out of range");
    return static_cast<unsigned>(v);
}

json strings(const std::vector<QVector>& pts)
{
    json a = json::array();
    for (const auto& p : pts) a.push_back(vector_to_strings(p));
    return a;
}

std::vector<std::string> row_strings(const QVector& v)
{
    std::vector<std::string> s;
    for (const auto& q : v) s.push_back(to_string(q));
    return s;
}

}  // namespace

Binarization binarization_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw Error(ErrorKind::ParseError, "binarization descriptor needs a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "unary") return make_unary(get_dim(j, "d"));
    if (kind == "full") return make_full(get_dim(j, "d"));
    if (kind == "log") return make_log(get_dim(j, "d"));
    if (kind == "trunc_log") {
        const long v = get_long(j, "v");
        if (v < 1) throw Error(ErrorKind::RangeViolation, "'v' must be positive");
        return make_trunc_log(static_cast<unsigned>(v), get_dim(j, "d"));
    }
    if (kind == "hypercube") {
        if (!j.contains("sigma") || !j.at("sigma").is_array())
            throw Error(ErrorKind::ParseError, "hypercube descriptor needs 'sigma'");
        std::vector<unsigned> sigma;
        for (const auto& s : j.at("sigma")) {
            if (!s.is_number_integer() || s.get<long>() < 0) throw Error(ErrorKind::ParseError, "'sigma' entries must be nonnegative integers");
            sigma.push_back(s.get<unsigned>());
        }
        unsigned d = 0;
        while ((std::size_t{1} << d) < sigma.size()) ++d;
        if (j.contains("d") && get_dim(j, "d") != d)
            throw Error(ErrorKind::DimensionMismatch, "'sigma' needs 2^d entries");
        return make_hypercube(HypercubePerm(d, std::move(sigma)));
    }
    if (kind == "custom") {
        if (!j.contains("body")) throw Error(ErrorKind::ParseError, "custom descriptor needs 'body'");
        const AnyPolytope body = polytope_from_json(j.at("body"));
        if (j.contains("k")) {
            const long k = get_long(j, "k");
            if (const auto* v = std::get_if<VPolytope>(&body)) return make_custom(*v, k);
            return make_custom(std::get<HPolytope>(body), k);
        }
        return make_custom(as_h(body));
    }
    throw Error(ErrorKind::ParseError, "unknown binarization kind '" + kind + "'");
}

json binarization_to_json(const Binarization& b)
{
    json j;
    j["kind"] = to_string(b.kind());
    j["d"] = b.d();
    j["k"] = b.k();
    if (b.trunc_v()) j["v"] = *b.trunc_v();
    if (b.perm()) j["sigma"] = b.perm()->table();
    j["body"] = polytope_to_json(b.body());
    return j;
}

ExtendedFormulation instance_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("P") || !j.contains("binarized") || !j.contains("bins"))
        throw Error(ErrorKind::ParseError, "instance needs 'P', 'binarized' and 'bins'");
    const HPolytope P = as_h(polytope_from_json(j.at("P")));
    std::vector<std::size_t> cols;
    for (const auto& name : j.at("binarized")) {
        long idx = 0;
        if (name.is_number_integer()) {
            idx = name.get<long>();
        } else if (name.is_string()) {
            const auto s = name.get<std::string>();
            if (s.size() < 2 || s[0] != 'x') throw Error(ErrorKind::ParseError, "variable names look like x1, x2, ...");
            try {
                idx = std::stol(s.substr(1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad variable name '" + s + "'");
            }
        } else {
            throw Error(ErrorKind::ParseError, "bad entry in 'binarized'");
        }
        if (idx < 1 || static_cast<std::size_t>(idx) > P.dim())
            throw Error(ErrorKind::DimensionMismatch, "binarized variable x" + std::to_string(idx) + " does not exist");
        cols.push_back(static_cast<std::size_t>(idx - 1));
    }
    std::vector<Binarization> bins;
    for (const auto& d : j.at("bins")) bins.push_back(binarization_from_json(d));
    return build(P, std::move(cols), std::move(bins));
}

json classification_to_json(const Binarization& b)
{
    const Classification& c = b.classification();
    json j;
    j["kind"] = to_string(b.kind());
    j["d"] = b.d();
    j["k"] = b.k();
    j["vertices"] = b.vertices().size();
    j["natural"] = c.natural;
    j["integral"] = c.integral;
    j["exact"] = c.exact;
    j["perfect"] = c.perfect;
    j["affine"] = c.affine.has_value();
    if (c.affine) {
        j["affine_map"] = {{"coeffs", vector_to_strings(c.affine->coeffs)}, {"offset", to_string(c.affine->offset)}};
    } else {
        j["affine_map"] = nullptr;
    }
    j["linear"] = c.linear;
    j["hypercube"] = c.hypercube;
    j["x_outside_range"] = c.x_outside_range;
    if (b.perm()) j["log_up_to_symmetry"] = is_log_up_to_symmetry(*b.perm());
    return j;
}

namespace {

struct Report
{
    json data;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string text;  ///< preformatted text form; generic rendering when empty
    bool ok = true;
};

std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_flat_array(const json& v)
{
    return v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
}

std::string flat_text(const json& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + ")";
}

void render(const json& j, std::ostream& os, const std::string& indent)
{
    for (const auto& [key, v] : j.items()) {
        if (!v.is_structured()) {
            os << indent << key << ": " << scalar_text(v) << '\n';
        } else if (is_flat_array(v)) {
            os << indent << key << ": " << flat_text(v) << '\n';
        } else if (v.is_array()) {
            os << indent << key << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    std::string line;
                    for (const auto& [k2, v2] : e.items())
                        line += (line.empty() ? "" : "  ") + k2 + "=" + (is_flat_array(v2) ? flat_text(v2) : scalar_text(v2));
                    os << indent << "  " << line << '\n';
                } else {
                    os << indent << "  " << (is_flat_array(e) ? flat_text(e) : e.dump()) << '\n';
                }
            }
        } else {
            os << indent << key << ":\n";
            render(v, os, indent + "  ");
        }
    }
}

std::string table_text(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += "  ";
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
        }
        os << s << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string csv_text(const Report& r)
{
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
        os << '\n';
    };
    if (!r.header.empty()) {
        line(r.header);
        for (const auto& row : r.rows) line(row);
        return os.str();
    }
    line({"key", "value"});
    for (const auto& [key, v] : r.data.items()) line({key, v.is_string() ? v.get<std::string>() : v.dump()});
    return os.str();
}

std::string format_report(const Report& r, const std::string& format)
{
    if (format == "json") return r.data.dump() + "\n";
    if (format == "csv") return csv_text(r);
    if (!r.text.empty()) return r.text;
    std::ostringstream os;
    if (!r.header.empty()) {
        os << table_text(r.header, r.rows);
        return os.str();
    }
    render(r.data, os, "");
    return os.str();
}

struct DescOptions
{
    std::string kind;
    std::string desc;
    std::string body;
    unsigned d = 0;
    unsigned v = 0;
    long k = -1;
    std::vector<unsigned> sigma;
};

void add_desc_options(CLI::App* sub, DescOptions& o)
{
    sub->add_option("--kind", o.kind, "unary, full, log, trunc_log, hypercube or custom")
        ->check(CLI::IsMember({"unary", "full", "log", "trunc_log", "hypercube", "custom"}));
    sub->add_option("--d", o.d, "number of binary variables");
    sub->add_option("--v", o.v, "range size of a truncated logarithmic binarization");
    sub->add_option("--sigma", o.sigma, "hypercube values, indexed by sum_i y_i 2^(i-1)")->delimiter(',');
    sub->add_option("--body", o.body, "polytope file of a custom binarization");
    sub->add_option("--k", o.k, "range bound of a custom binarization");
    sub->add_option("--desc", o.desc, "JSON binarization descriptor file");
}

Binarization descriptor(const DescOptions& o)
{
    if (!o.desc.empty()) {
        if (!o.kind.empty()) throw UsageError{"--desc and --kind are exclusive"};
        return binarization_from_json(parse_json(read_file(o.desc), o.desc));
    }
    if (o.kind.empty()) throw UsageError{"--kind or --desc is required"};
    json j;
    j["kind"] = o.kind;
    if (o.kind == "unary" || o.kind == "full" || o.kind == "log") {
        if (o.d == 0) throw UsageError{"--d is required for --kind " + o.kind};
        j["d"] = o.d;
    } else if (o.kind == "trunc_log") {
        if (o.d == 0) throw UsageError{"--d is required for --kind trunc_log"};
        if (o.v == 0) throw UsageError{"--v is required for --kind trunc_log"};
        j["d"] = o.d;
        j["v"] = o.v;
    } else if (o.kind == "hypercube") {
        if (o.sigma.empty()) throw UsageError{"--sigma is required for --kind hypercube"};
        j["sigma"] = o.sigma;
        if (o.d) j["d"] = o.d;
    } else {
        if (o.body.empty()) throw UsageError{"--body is required for --kind custom"};
        j["body"] = polytope_file(o.body);
        if (o.k >= 0) j["k"] = o.k;
    }
    return binarization_from_json(j);
}

ExtendedFormulation load_instance(const std::string& path)
{
    return instance_from_json(parse_json(read_file(path), path));
}

std::vector<std::string> column_names(const ExtendedFormulation& e)
{
    std::vector<std::string> names;
    for (std::size_t c = 0; c < e.total_dim(); ++c) names.push_back(e.column_name(c));
    return names;
}

Report cmd_gen(const DescOptions& o, const std::string& rep)
{
    const Binarization b = descriptor(o);
    Report r;
    if (rep == "H") {
        r.data = polytope_to_json(b.body());
        r.text = format_polytope(b.body());
    } else {
        r.data = polytope_to_json(b.vertices());
        r.text = format_polytope(b.vertices());
    }
    r.header.push_back("x");
    for (std::size_t i = 1; i <= b.d(); ++i) r.header.push_back("y" + std::to_string(i));
    for (const auto& v : b.vertices().vertices()) r.rows.push_back(row_strings(v));
    return r;
}

Report cmd_classify(const DescOptions& o)
{
    Report r;
    r.data = classification_to_json(descriptor(o));
    return r;
}

Report cmd_bef(const std::string& instance)
{
    const ExtendedFormulation e = load_instance(instance);
    Report r;
    const auto names = column_names(e);
    r.data = {{"n", e.n()}, {"p", e.p()}, {"columns", names}, {"Q", polytope_to_json(e.Q)}};
    std::string cols = "# columns:";
    for (const auto& n : names) cols += " " + n;
    r.text = cols + "\n" + format_polytope(e.Q);
    return r;
}

Report cmd_vertices(const std::string& instance, const std::string& polytope, std::size_t limit_dim)
{
    Report r;
    if (!polytope.empty()) {
        const AnyPolytope p = polytope_from_json(polytope_file(polytope));
        const VPolytope v = std::holds_alternative<HPolytope>(p)
                                ? enumerate_vertices(std::get<HPolytope>(p))
                                : hull_vertices(std::get<VPolytope>(p).dim(), std::get<VPolytope>(p).vertices());
        r.data = {{"count", v.size()}, {"vertices", strings(v.vertices())}};
        for (std::size_t i = 1; i <= v.dim(); ++i) r.header.push_back("x" + std::to_string(i));
        for (const auto& x : v.vertices()) r.rows.push_back(row_strings(x));
        return r;
    }
    const ExtendedFormulation e = load_instance(instance);
    const VPolytope vq = vertices_Q(e, limit_dim);
    const auto proj = project_points(vq.vertices(), e.x_columns());
    r.header = column_names(e);
    for (const auto& x : vq.vertices()) r.rows.push_back(row_strings(x));
    r.data = {{"columns", r.header}, {"count", vq.size()}, {"vertices", strings(vq.vertices())},
              {"projection", strings(proj)}};
    const bool natural = std::all_of(e.bins.begin(), e.bins.end(),
                                     [](const Binarization& b) { return b.classification().natural; });
    if (natural) {
        const auto ch = characterize_projection(e);
        r.data["characterization"] = strings(ch);
        r.data["characterization_agrees"] = ch == proj;
    } else {
        r.data["characterization"] = nullptr;
    }
    return r;
}

Report cmd_lpr(const std::string& instance, std::size_t limit_dim)
{
    const ExtendedFormulation e = load_instance(instance);
    const VPolytope vq = vertices_Q(e, limit_dim);
    const LprReport lp = lpr(e, vq);
    Report r;
    std::vector<std::string> ynames, cover;
    for (auto c : e.y_columns()) ynames.push_back(e.column_name(c));
    for (auto c : lp.rank.cover) cover.push_back(e.column_name(c));
    json rows = json::array();
    r.header = {"vertex"};
    r.header.insert(r.header.end(), ynames.begin(), ynames.end());
    for (std::size_t i = 0; i < lp.rank.instance.rows.size(); ++i) {
        const QVector& v = vq.vertices()[lp.rank.row_vertex[i]];
        rows.push_back({{"vertex", vector_to_strings(v)}, {"row", lp.rank.instance.rows[i]}});
        std::vector<std::string> cells{to_string(v)};
        for (int x : lp.rank.instance.rows[i]) cells.push_back(std::to_string(x));
        r.rows.push_back(std::move(cells));
    }
    r.data = {{"value", lp.rank.value}, {"cover", cover}, {"columns", ynames}, {"rows", rows},
              {"certified", lp.certified}};
    std::ostringstream os;
    os << "lpr: " << lp.rank.value << "\ncover:";
    for (const auto& c : cover) os << ' ' << c;
    os << "\ncertified: " << (lp.certified ? "true" : "false") << "\n\n" << table_text(r.header, r.rows);
    r.text = os.str();
    return r;
}

Report cmd_rank(const DescOptions& o, const std::vector<long>& alphas)
{
    const Binarization b = descriptor(o);
    const long sk = rank_skeleton(b, alphas);
    const long direct = rank_direct(b, alphas);
    const auto formula = rank_formula(b, alphas);
    Report r;
    r.data = {{"skeleton", sk}, {"direct", direct}};
    r.data["formula"] = formula ? json(*formula) : json(nullptr);
    bool agree = sk == direct && (!formula || *formula == sk);
    if (b.kind() == BinarizationKind::TruncLog && formula) {
        const auto cf = rank_trunc_closed_form(*b.trunc_v(), static_cast<unsigned>(b.d()), alphas.front());
        r.data["closed_form"] = cf.value;
        r.data["closed_form_agrees"] = cf.value == *formula;
    }
    r.data["agree"] = agree;
    return r;
}

Report cmd_rank_table(const DescOptions& o)
{
    const Binarization b = descriptor(o);
    Report r;
    r.header = {"alpha", "formula", "skeleton", "direct"};
    json rows = json::array();
    bool agree = true;
    for (long a = 0; a + 1 <= b.k(); ++a) {
        const long sk = rank_skeleton(b, {a});
        const long direct = rank_direct(b, {a});
        const auto formula = rank_formula(b, {a});
        agree = agree && sk == direct && (!formula || *formula == sk);
        r.rows.push_back({std::to_string(a), formula ? std::to_string(*formula) : "-", std::to_string(sk),
                          std::to_string(direct)});
        rows.push_back({{"alpha", a}, {"formula", formula ? json(*formula) : json(nullptr)}, {"skeleton", sk},
                        {"direct", direct}});
    }
    r.data = {{"kind", to_string(b.kind())}, {"d", b.d()}, {"k", b.k()}, {"rows", rows}, {"agree", agree}};
    return r;
}

Report cmd_verify_logbest(unsigned d, const std::vector<long>& alphas, const std::string& mode, std::uint64_t samples,
                          std::uint64_t seed)
{
    const LogBestMode m = mode == "exhaustive" ? LogBestMode::all() : LogBestMode::sample(samples, seed);
    const LogBestReport rep = verify_logbest(d, alphas, m);
    Report r;
    json hist = json::object();
    for (const auto& [rank, n] : rep.histogram) hist[std::to_string(rank)] = n;
    r.data = {{"d", rep.d},
              {"alphas", rep.alphas},
              {"mode", mode},
              {"log_rank", rep.log_rank},
              {"log_encoding_rank", rep.log_encoding_rank},
              {"checked", rep.checked},
              {"violations", rep.violations},
              {"matching_violations", rep.matching_violations},
              {"min_rank", rep.min_rank},
              {"histogram", hist},
              {"offending", rep.offending},
              {"pass", rep.violations == 0 && rep.matching_violations == 0 && rep.log_encoding_rank == rep.log_rank}};
    if (mode != "exhaustive") r.data["seed"] = seed;
    return r;
}

Report cmd_reproduce_pyramid(const std::string& h_text)
{
    const Rational h = parse_rational(h_text);
    const PyramidReport rep = reproduce_pyramid(h);
    Report r;
    json checks = json::array();
    std::ostringstream os;
    os << "h = " << to_string(h) << '\n';
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        os << (c.pass ? "PASS  " : "FAIL  ") << c.name << " (" << c.detail << ")\n";
    }
    os << "lpr = " << rep.lpr << ", cover:";
    for (const auto& c : rep.cover) os << ' ' << c;
    os << '\n';
    r.text = os.str();
    r.header = {"artifact", "pass", "detail"};
    for (const auto& c : rep.checks) r.rows.push_back({c.name, c.pass ? "true" : "false", c.detail});
    r.data = {{"h", to_string(h)},
              {"pass", rep.pass()},
              {"checks", checks},
              {"vp", strings(rep.vp.vertices())},
              {"vq", strings(rep.vq.vertices())},
              {"projection", strings(rep.proj)},
              {"a_rows", rep.a_rows},
              {"lpr", rep.lpr},
              {"cover", rep.cover},
              {"after", strings(rep.after)}};
    r.ok = rep.pass();
    return r;
}

json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tools for binarized extended formulations", "binext"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t limit_dim = default_limit_dim;
    std::string out_path;
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", seed, "seed for sampled verification");
    app.add_option("--limit-dim", limit_dim, "largest Q dimension enumerated");
    app.add_option("--out", out_path, "write the report to this file");

    DescOptions desc;
    std::string rep = "V", instance, polytope, h_text, mode = "exhaustive";
    std::vector<long> alphas;
    unsigned d = 0;
    std::uint64_t samples = 10000;

    auto* gen = app.add_subcommand("gen", "materialize a binarization");
    add_desc_options(gen, desc);
    gen->add_option("--rep", rep, "V (vertices) or H (inequalities)")->check(CLI::IsMember({"V", "H"}));

    auto* classify = app.add_subcommand("classify", "report the properties of a binarization");
    add_desc_options(classify, desc);

    auto* bef = app.add_subcommand("bef", "build the extended formulation of an instance");
    bef->add_option("--instance", instance, "instance JSON file")->required();

    auto* vertices = app.add_subcommand("vertices", "vertices of a polytope or of an instance's formulation");
    auto* vi = vertices->add_option("--instance", instance, "instance JSON file");
    auto* vp = vertices->add_option("--polytope", polytope, "polytope file");
    vi->excludes(vp);
    vertices->require_option(1);

    auto* lprc = app.add_subcommand("lpr", "lift-and-project rank of an instance's formulation");
    lprc->add_option("--instance", instance, "instance JSON file")->required();

    auto* rank = app.add_subcommand("rank", "rank of a binarization at given alphas");
    add_desc_options(rank, desc);
    rank->add_option("--alphas", alphas, "comma-separated alphas")->required()->delimiter(',');

    auto* table = app.add_subcommand("rank-table", "rank of a binarization for every alpha");
    add_desc_options(table, desc);

    auto* logbest = app.add_subcommand("verify-logbest", "compare every hypercube binarization with the log encoding");
    logbest->add_option("--d", d, "dimension")->required();
    logbest->add_option("--alphas", alphas, "comma-separated alphas")->required()->delimiter(',');
    logbest->add_option("--mode", mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    logbest->add_option("--samples", samples, "number of sampled bijections");

    auto* pyramid = app.add_subcommand("reproduce-pyramid", "rebuild the pyramid example and check every artifact");
    pyramid->set_help_flag("--help", "print this help message and exit");
    pyramid->add_option("--h", h_text, "height parameter, p/q")->required();

    std::vector<std::string> argv_store{"binext"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Report r;
        if (*gen) r = cmd_gen(desc, rep);
        else if (*classify) r = cmd_classify(desc);
        else if (*bef) r = cmd_bef(instance);
        else if (*vertices) r = cmd_vertices(instance, polytope, limit_dim);
        else if (*lprc) r = cmd_lpr(instance, limit_dim);
        else if (*rank) r = cmd_rank(desc, alphas);
        else if (*table) r = cmd_rank_table(desc);
        else if (*logbest) r = cmd_verify_logbest(d, alphas, mode, samples, seed);
        else r = cmd_reproduce_pyramid(h_text);

        const std::string text = format_report(r, format);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f || !(f << text)) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
        }
        if (!r.ok) {
            err << error_json("ReproductionMismatch", "some artifacts differ from the expected values").dump() << '\n';
            return 1;
        }
        return 0;
    } catch (const UsageError& e) {
        err << e.message << "\nRun with --help for more information.\n";
        return 2;
    } catch (const Error& e) {
        err << error_json(std::string(to_string(e.kind())), e.what()).dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << error_json("ParseError", e.what()).dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << error_json("InternalError", e.what()).dump() << '\n';
        return 1;
    }
}

}  // namespace binext
