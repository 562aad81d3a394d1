#include "stickelgraph/jsonio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stickelgraph {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
    throw std::invalid_argument(origin + ": " + message);
}

std::vector<long> long_vector(const ordered_json& j, const std::string& origin,
                              const std::string& where) {
    if (!j.is_array()) fail(origin, where + " must be an array of integers");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(origin, where + " must contain only integers");
        out.push_back(v.get<long>());
    }
    return out;
}

ordered_json big(const mpz_class& v) { return v.get_str(); }

ordered_json big_list(const std::vector<mpz_class>& v) {
    ordered_json out = ordered_json::array();
    for (const mpz_class& x : v) out.push_back(big(x));
    return out;
}

}  // namespace

DigraphFile parse_digraph_json(const std::string& text, const std::string& origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(origin, e.what());
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        fail(origin, "missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(origin, "missing \"edges\" array");

    std::vector<std::string> vertex_ids;
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
        const auto& v = doc["vertices"][i];
        if (!v.is_string()) fail(origin, "vertices[" + std::to_string(i) + "] must be a string");
        vertex_ids.push_back(v.get<std::string>());
    }

    std::optional<std::vector<long>> group_orders;
    if (doc.contains("group"))
        group_orders = long_vector(doc["group"], origin, "\"group\"");

    std::vector<Digraph::EdgeByName> edges;
    std::optional<std::vector<std::vector<long>>> voltages;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& e = doc["edges"][i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) fail(origin, where + " must be an object");
        for (const char* key : {"id", "from", "to"})
            if (!e.contains(key) || !e[key].is_string())
                fail(origin, where + " needs the string field \"" + key + "\"");
        Digraph::EdgeByName edge{e["id"].get<std::string>(), e["from"].get<std::string>(),
                                 e["to"].get<std::string>()};
        for (const char* side : {"from", "to"}) {
            const std::string& v = e[side].get_ref<const std::string&>();
            bool known = false;
            for (const std::string& id : vertex_ids)
                if (id == v) {
                    known = true;
                    break;
                }
            if (!known)
                fail(origin, where + ": \"" + std::string(side) + "\" names the vertex \"" + v +
                                 "\" which is not in \"vertices\"");
        }
        bool has_voltage = e.contains("voltage");
        if (i == 0 && has_voltage) voltages.emplace();
        if (voltages.has_value() != has_voltage)
            fail(origin, where + ": either every edge carries a \"voltage\" or none does");
        if (has_voltage) {
            if (!group_orders)
                fail(origin, where + ": voltages need a top-level \"group\" of cyclic orders");
            std::vector<long> v = long_vector(e["voltage"], origin, where + ".voltage");
            if (v.size() != group_orders->size())
                fail(origin, where + ".voltage has " + std::to_string(v.size()) +
                                 " coordinates, the group has " +
                                 std::to_string(group_orders->size()));
            voltages->push_back(std::move(v));
        }
        edges.push_back(std::move(edge));
    }

    try {
        return {Digraph::from_names(std::move(vertex_ids), edges), std::move(group_orders),
                std::move(voltages)};
    } catch (const std::exception& e) {
        fail(origin, e.what());
    }
}

DigraphFile read_digraph_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument(path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_digraph_json(buf.str(), path);
}

nlohmann::ordered_json zeta_report_json(const ZetaReport& r) {
    ordered_json out;
    out["g_coeffs"] = big_list(r.g.coeffs());
    out["r"] = r.r;
    out["special_value"] = big(r.special_value);
    out["delta"] = r.delta;
    out["m"] = r.m ? ordered_json(big(*r.m)) : ordered_json(nullptr);
    out["bf_rank"] = r.bf.free_rank;
    out["bf_torsion_factors"] = big_list(r.bf.torsion_factors);
    return out;
}

nlohmann::ordered_json theorem_a_json(const TheoremAReport& r) {
    ordered_json out;
    out["p"] = r.p;
    out["h_minus"] = big(r.h_minus);
    out["bf_torsion_factors"] = big_list(r.bf_torsion_factors);
    out["bf_free_rank"] = r.bf_free_rank;
    out["m_y"] = big(r.m_y);
    out["m_y_plus"] = big(r.m_y_plus);
    out["g_star_y"] = big(r.g_star_y);
    out["g_star_y_plus"] = big(r.g_star_y_plus);
    out["theorem_a_holds"] = r.theorem_a_holds;
    out["three_way_m_agreement"] = r.three_way_m_agreement;
    return out;
}

nlohmann::ordered_json theorem_b_json(const TheoremBReport& r) {
    ordered_json out;
    out["p"] = r.p;
    out["ell"] = r.ell;
    out["f"] = r.f;
    ordered_json rows = ordered_json::array();
    for (const TheoremBPsiRow& row : r.per_psi) {
        ordered_json jr;
        jr["psi_index"] = row.psi_index;
        jr["parity"] = row.parity;
        jr["bf_card"] = big(row.bf_card);
        jr["cl_card"] = big(row.cl_card);
        jr["relation"] = row.relation;
        rows.push_back(std::move(jr));
    }
    out["per_psi"] = std::move(rows);
    out["global_consistent"] = r.global_consistent;
    return out;
}

std::string csv_escape(const std::string& field) {
    bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument(tmp + ": cannot open for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error(tmp + ": write failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error(path + ": atomic rename failed");
    }
}

}  // namespace stickelgraph
