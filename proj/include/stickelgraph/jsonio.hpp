#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stickelgraph/bowenfranks.hpp"
#include "stickelgraph/digraph.hpp"
#include "stickelgraph/padic.hpp"
#include "stickelgraph/stickelberger.hpp"

namespace stickelgraph {

// A digraph file: {"vertices": [...], "edges": [{"id", "from", "to"}]},
// with an optional voltage layer given by a top-level "group" (list of
// cyclic orders) and a "voltage" integer vector on every edge. Errors
// carry the array position of the offending entry.
struct DigraphFile {
    Digraph digraph;
    std::optional<std::vector<long>> group_orders;
    std::optional<std::vector<std::vector<long>>> voltages;
};

DigraphFile parse_digraph_json(const std::string& text, const std::string& origin);
DigraphFile read_digraph_json(const std::string& path);

// Fixed key orders; arbitrarily large integers are decimal strings.
nlohmann::ordered_json zeta_report_json(const ZetaReport& r);
nlohmann::ordered_json theorem_a_json(const TheoremAReport& r);
nlohmann::ordered_json theorem_b_json(const TheoremBReport& r);

// RFC-4180 style quoting, applied only when the field needs it.
std::string csv_escape(const std::string& field);

// Writes through a sibling temp file and renames, so readers never see
// a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace stickelgraph
