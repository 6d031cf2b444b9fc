#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sparsecut/certificate.hpp"
#include "sparsecut/graph.hpp"

namespace sparsecut::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class GraphFormat { EdgeList, Graph6 };

/// "u v" per line, '#' starts a comment, optional "n <count>" header.
/// n is the header value or max id + 1. Errors carry the line number.
Graph parse_edge_list(std::string_view text);
/// Header line followed by the edges in sorted order.
std::string emit_edge_list(const Graph& g);

/// Standard graph6, optionally preceded by ">>graph6<<". Padding bits must be
/// zero so that emit(parse(x)) == x.
Graph parse_graph6(std::string_view text);
/// Single line without trailing newline.
std::string emit_graph6(const Graph& g);

/// Graph6 when the text is one token of printable graph6 characters.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);
std::string emit_graph(const Graph& g, GraphFormat format);
GraphFormat parse_format_name(std::string_view name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// FNV-1a 64 over the canonical edge list, so it ignores the input format.
std::string input_digest(const Graph& g);

Json vertex_set_to_json(const VertexSet& s);
Json cutset_report_to_json(const CutsetReport& r);
CutsetReport cutset_report_from_json(const Json& j, int n);

/// Every member set is written out so the certificate can be checked
/// without rerunning anything.
Json certificate_to_json(const Certificate& cert, int n);
/// Inverse of certificate_to_json; throws InvalidInput on malformed data or
/// when the recorded order differs from n.
Certificate certificate_from_json(const Json& j, int n);

struct RunReport {
    std::string input_digest;
    Json command = Json::object();
    std::string status = "ok";  // ok, precondition, budget_exhausted, invariant, invalid_input, rejected
    std::optional<std::string> error;
    std::optional<Certificate> certificate;
    bool verified = false;
    std::optional<CutsetReport> stats;
    Json details = Json::object();  // method-specific extras (iterations, rounds, oracle results)
    std::int64_t timing_ms = 0;
};

/// Fixed field order: schema_version, command, input_digest, status, error,
/// certificate, verified, stats, details, timing_ms.
Json report_to_json(const RunReport& report, int n);

/// DOT text with the cutset vertices filled.
std::string to_dot(const Graph& g, const VertexSet* highlight = nullptr);

}  // namespace sparsecut::io
