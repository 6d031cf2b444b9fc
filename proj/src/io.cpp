#include "sparsecut/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "sparsecut/error.hpp"

namespace sparsecut::io {

namespace {

constexpr std::int64_t kMaxVertices = std::int64_t{1} << 24;

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
    fail(ErrorKind::InvalidInput, "edge list line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_id(std::string_view tok, std::size_t line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) bad_line(line, "id overflow '" + std::string(tok) + "'");
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.front() == '-' || tok.front() == '+')
        bad_line(line, "malformed token '" + std::string(tok) + "', expected a nonnegative integer");
    if (v >= kMaxVertices) bad_line(line, "id overflow " + std::string(tok));
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::int64_t> header;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> seen;
    std::int64_t max_id = -1;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto line = trim(raw);
        if (line.empty()) continue;

        std::vector<std::string_view> tok;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) tok.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tok.size() == 2 && tok[0] == "n") {
            if (header) bad_line(line_no, "repeated 'n' header");
            if (!edges.empty()) bad_line(line_no, "'n' header must precede the edges");
            header = parse_id(tok[1], line_no);
            continue;
        }
        if (tok.size() != 2) bad_line(line_no, "expected 'u v', got '" + std::string(line) + "'");
        auto u = parse_id(tok[0], line_no), v = parse_id(tok[1], line_no);
        if (u == v) bad_line(line_no, "self-loop at vertex " + std::to_string(u));
        if (header && std::max(u, v) >= *header)
            bad_line(line_no, "vertex " + std::to_string(std::max(u, v)) + " out of range for n = " +
                                  std::to_string(*header));
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (auto [it, fresh] = seen.emplace(e, line_no); !fresh)
            bad_line(line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                  " (first seen at line " + std::to_string(it->second) + ")");
        edges.push_back(e);
        max_id = std::max({max_id, u, v});
    }
    const auto n = header ? *header : max_id + 1;
    return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    for (char c : s)
        require(c >= 63 && c <= 126, ErrorKind::InvalidInput,
                std::string("graph6: invalid character '") + c + "'");
    require(!s.empty(), ErrorKind::InvalidInput, "graph6: empty input");

    std::size_t at = 0;
    auto take = [&](std::size_t count) {
        require(at + count <= s.size(), ErrorKind::InvalidInput, "graph6: truncated order field");
        std::int64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) v = (v << 6) | (s[at + i] - 63);
        at += count;
        return v;
    };
    std::int64_t n = 0;
    if (s[0] != '~') {
        n = take(1);
    } else if (s.size() > 1 && s[1] == '~') {
        at = 2;
        n = take(6);
    } else {
        at = 1;
        n = take(3);
    }
    require(n < kMaxVertices, ErrorKind::InvalidInput, "graph6: order too large");

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    require(s.size() - at == need, ErrorKind::InvalidInput,
            "graph6: length mismatch, expected " + std::to_string(need) + " data bytes for n = " + std::to_string(n) +
                ", got " + std::to_string(s.size() - at));

    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (std::int64_t j = 1; j < n; ++j)
        for (std::int64_t i = 0; i < j; ++i, ++k) {
            int byte = s[at + static_cast<std::size_t>(k / 6)] - 63;
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    for (; k < static_cast<std::int64_t>(need) * 6; ++k) {
        int byte = s[at + static_cast<std::size_t>(k / 6)] - 63;
        require(!(byte & (1 << (5 - k % 6))), ErrorKind::InvalidInput, "graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    auto put = [&](std::int64_t v, int groups) {
        for (int i = groups - 1; i >= 0; --i) out += static_cast<char>(((v >> (6 * i)) & 63) + 63);
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out += '~';
        put(n, 3);
    } else {
        out += "~~";
        put(n, 6);
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = filled = 0;
            }
        }
    if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

GraphFormat detect_format(std::string_view text) {
    auto s = trim(text);
    if (s.starts_with(">>graph6<<")) return GraphFormat::Graph6;
    if (s.empty()) return GraphFormat::EdgeList;
    bool printable = std::all_of(s.begin(), s.end(), [](char c) { return c >= 63 && c <= 126; });
    return printable ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
    auto f = format.value_or(detect_format(text));
    return f == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? emit_graph6(g) + "\n" : emit_edge_list(g);
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    fail(ErrorKind::InvalidInput, "unknown graph format '" + std::string(name) + "' (edgelist, graph6)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::InvalidInput, "cannot write '" + path + "'");
    out << content;
}

std::string input_digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : emit_edge_list(g)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace {

std::string minimality_name(Minimality m) { return to_string(m); }

Minimality minimality_from(const std::string& s) {
    if (s == to_string(Minimality::Yes)) return Minimality::Yes;
    if (s == to_string(Minimality::No)) return Minimality::No;
    if (s == to_string(Minimality::Unknown)) return Minimality::Unknown;
    fail(ErrorKind::InvalidInput, "certificate: unknown minimality '" + s + "'");
}

Rational rational_from(const std::string& s) {
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    auto den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    std::int64_t a = 0, b = 0;
    auto r1 = std::from_chars(num.data(), num.data() + num.size(), a);
    auto r2 = std::from_chars(den.data(), den.data() + den.size(), b);
    require(r1.ec == std::errc() && r1.ptr == num.data() + num.size() && r2.ec == std::errc() &&
                r2.ptr == den.data() + den.size() && b != 0,
            ErrorKind::InvalidInput, "certificate: malformed rational '" + s + "'");
    return {a, b};
}

VertexSet set_from(const Json& j, int n) {
    require(j.is_array(), ErrorKind::InvalidInput, "certificate: expected a vertex array");
    std::vector<Vertex> v;
    for (const auto& x : j) {
        require(x.is_number_integer(), ErrorKind::InvalidInput, "certificate: vertex ids must be integers");
        v.push_back(x.get<Vertex>());
    }
    return VertexSet(n, std::move(v));
}

}  // namespace

Json vertex_set_to_json(const VertexSet& s) { return Json(s.members()); }

Json cutset_report_to_json(const CutsetReport& r) {
    Json j;
    j["cutset"] = vertex_set_to_json(r.cutset);
    j["size"] = r.cutset.size();
    j["max_degree_in_S"] = r.max_degree_in_s;
    j["edges_in_S"] = r.edges_in_s;
    j["avg_degree_in_S"] = r.avg_degree().str();
    j["component_count"] = r.component_count;
    j["minimal"] = minimality_name(r.minimal);
    return j;
}

CutsetReport cutset_report_from_json(const Json& j, int n) {
    try {
        CutsetReport r;
        r.cutset = set_from(j.at("cutset"), n);
        r.max_degree_in_s = j.at("max_degree_in_S").get<int>();
        r.edges_in_s = j.at("edges_in_S").get<int>();
        r.component_count = j.at("component_count").get<int>();
        r.minimal = minimality_from(j.at("minimal").get<std::string>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("certificate: ") + e.what());
    }
}

namespace {

struct ToJson {
    Json& j;

    void operator()(const GoodCutset& c) const {
        j["report"] = cutset_report_to_json(c.report);
        Json claims;
        claims["max_order"] = c.claims.max_order;
        claims["max_inner_degree"] = c.claims.max_inner_degree ? Json(*c.claims.max_inner_degree) : Json(nullptr);
        claims["avg_below"] = c.claims.avg_below ? Json(c.claims.avg_below->str()) : Json(nullptr);
        claims["minimal"] = c.claims.minimal;
        j["claims"] = claims;
    }
    void operator()(const KrrWitness& w) const {
        j["r"] = w.r;
        j["side_a"] = vertex_set_to_json(w.side_a);
        j["side_b"] = vertex_set_to_json(w.side_b);
    }
    void operator()(const SquaredCycleIso& iso) const { j["mapping"] = iso.mapping; }
    void operator()(const IndependentCutset& c) const {
        j["report"] = cutset_report_to_json(c.report);
        j["max_order"] = c.max_order;
    }
    void operator()(const IsIcosahedron&) const {}
};

}  // namespace

Json certificate_to_json(const Certificate& cert, int n) {
    Json j;
    j["kind"] = std::string(kind_name(cert));
    j["n"] = n;
    std::visit(ToJson{j}, cert);
    return j;
}

Certificate certificate_from_json(const Json& j, int n) {
    try {
        require(j.is_object(), ErrorKind::InvalidInput, "certificate: expected a JSON object");
        require(j.at("n").get<int>() == n, ErrorKind::InvalidInput,
                "certificate: recorded order " + j.at("n").dump() + " differs from the graph order " +
                    std::to_string(n));
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "good_cutset") {
            GoodCutset c;
            c.report = cutset_report_from_json(j.at("report"), n);
            const auto& cl = j.at("claims");
            c.claims.max_order = cl.at("max_order").get<std::size_t>();
            if (!cl.at("max_inner_degree").is_null()) c.claims.max_inner_degree = cl.at("max_inner_degree").get<int>();
            if (!cl.at("avg_below").is_null()) c.claims.avg_below = rational_from(cl.at("avg_below").get<std::string>());
            c.claims.minimal = cl.at("minimal").get<bool>();
            return c;
        }
        if (kind == "krr_witness")
            return KrrWitness{j.at("r").get<int>(), set_from(j.at("side_a"), n), set_from(j.at("side_b"), n)};
        if (kind == "squared_cycle_iso") return SquaredCycleIso{j.at("mapping").get<std::vector<Vertex>>()};
        if (kind == "independent_cutset")
            return IndependentCutset{cutset_report_from_json(j.at("report"), n), j.at("max_order").get<std::size_t>()};
        if (kind == "is_icosahedron") return IsIcosahedron{};
        fail(ErrorKind::InvalidInput, "certificate: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("certificate: ") + e.what());
    }
}

Json report_to_json(const RunReport& r, int n) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["status"] = r.status;
    j["error"] = r.error ? Json(*r.error) : Json(nullptr);
    j["certificate"] = r.certificate ? certificate_to_json(*r.certificate, n) : Json(nullptr);
    j["verified"] = r.verified;
    j["stats"] = r.stats ? cutset_report_to_json(*r.stats) : Json(nullptr);
    j["details"] = r.details;
    j["timing_ms"] = r.timing_ms;
    return j;
}

std::string to_dot(const Graph& g, const VertexSet* highlight) {
    std::string out = "graph G {\n  node [shape=circle];\n";
    if (highlight)
        for (Vertex v : *highlight) out += "  " + std::to_string(v) + " [style=filled, fillcolor=salmon];\n";
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (highlight && highlight->contains(u) && highlight->contains(v)) out += " [color=red, penwidth=2]";
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace sparsecut::io
