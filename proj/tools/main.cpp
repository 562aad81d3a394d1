// Command-line front end. `analyze` reports zeta and Bowen-Franks data
// for one digraph, from a JSON file or a builtin instance; `verify`
// runs a matrix of theorem checks over selected primes and emits one
// row per check as JSON or CSV.
//
// Exit codes: 0 success (verify: every executed check passed), 1 some
// executed check failed or an internal error, 2 malformed command line
// or unparseable input, 3 precondition violation.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stickelgraph/bowenfranks.hpp"
#include "stickelgraph/digraph.hpp"
#include "stickelgraph/group.hpp"
#include "stickelgraph/groupring.hpp"
#include "stickelgraph/intmatrix.hpp"
#include "stickelgraph/jsonio.hpp"
#include "stickelgraph/padic.hpp"
#include "stickelgraph/stickelberger.hpp"
#include "stickelgraph/voltage.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stickelgraph;

// Malformed command-line or input values; exits 2, unlike library
// precondition violations which exit 3.
struct UsageError {
    std::string message;
};

long parse_long_strict(const std::string& s, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || errno != 0 || end != s.c_str() + s.size())
        throw UsageError{what + ": cannot parse \"" + s + "\" as an integer"};
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Accepts "a..b" (every matching prime in the range) or a comma list,
// where a listed entry failing the primality requirement is an error
// rather than a filter miss. Sorted ascending, duplicates dropped.
std::vector<long> parse_prime_selection(const std::string& text, bool odd_only,
                                        const std::string& what) {
    auto admissible = [&](long v) { return is_prime(v) && (!odd_only || v != 2); };
    std::vector<long> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long lo = parse_long_strict(text.substr(0, dots), what);
        long hi = parse_long_strict(text.substr(dots + 2), what);
        for (long v = lo; v <= hi; ++v)
            if (admissible(v)) out.push_back(v);
    } else {
        for (const auto& tok : split(text, ',')) {
            long v = parse_long_strict(tok, what);
            if (!admissible(v))
                throw std::invalid_argument(what + ": " + tok + " is not " +
                                            (odd_only ? "an odd prime" : "a prime"));
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw std::invalid_argument(what + ": \"" + text + "\" selects no primes");
    return out;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------- analyze

long builtin_prime(const std::string& target, std::size_t prefix_len) {
    return parse_long_strict(target.substr(prefix_len), "analyze: " + target);
}

std::shared_ptr<const Digraph> resolve_target(const std::string& target) {
    if (target.rfind("example:", 0) == 0) {
        if (target != "example:2.4")
            throw UsageError{"analyze: unknown builtin \"" + target + "\""};
        IntMatrix a(2, 2);
        a.at(0, 0) = 2;
        a.at(0, 1) = 1;
        a.at(1, 0) = 1;
        a.at(1, 1) = 2;
        return std::make_shared<Digraph>(digraph_from_adjacency(a));
    }
    if (target.rfind("stickelberger:", 0) == 0)
        return stickelberger_cover(builtin_prime(target, 14)).derived.digraph;
    if (target.rfind("plus:", 0) == 0) {
        auto cover = stickelberger_cover(builtin_prime(target, 5));
        Subgroup h(cover.group, {*cover.group.unique_order2_element()});
        return std::make_shared<Digraph>(intermediate_quotient(cover.voltage, h));
    }
    std::optional<DigraphFile> file;
    try {
        file.emplace(read_digraph_json(target));
    } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
    }
    if (!file->voltages)
        return std::make_shared<Digraph>(std::move(file->digraph));
    // A voltage layer makes the file denote a cover; the report is for
    // the derived digraph.
    FiniteAbelianGroup g(*file->group_orders);
    std::vector<FiniteAbelianGroup::Element> labels;
    labels.reserve(file->voltages->size());
    for (const auto& raw : *file->voltages) labels.push_back(g.reduce(raw));
    VoltageAssignment v(std::make_shared<Digraph>(std::move(file->digraph)), g,
                        std::move(labels));
    return derived_digraph(v).digraph;
}

int run_analyze(const std::string& target, bool dump_matrices) {
    auto graph = resolve_target(target);
    ordered_json out = zeta_report_json(zeta_report(*graph));
    if (dump_matrices) {
        out["adjacency"] = matrix_json(graph->adjacency());
        out["bf_operator"] = matrix_json(bf_operator(*graph));
        ordered_json factors = ordered_json::array();
        for (const auto& d : smith_normal_form(bf_operator(*graph)).invariant_factors)
            factors.push_back(d.get_str());
        out["invariant_factors"] = std::move(factors);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------- verify

struct RowSpec {
    std::string check;
    long p = 0;
    std::optional<long> ell;
    bool skip = false;
};

struct RowResult {
    std::string status;
    std::string summary;
    ordered_json report;
};

RowResult run_check_a(long p) {
    auto rep = verify_theorem_a(p);
    bool ok = rep.theorem_a_holds && rep.three_way_m_agreement && rep.detail.empty();
    RowResult r;
    r.status = ok ? "ok" : "fail";
    r.summary = "h_minus=" + rep.h_minus.get_str() +
                " torsion_order=" + rep.bf_torsion_order.get_str() +
                " m_y=" + rep.m_y.get_str();
    r.report = theorem_a_json(rep);
    return r;
}

RowResult run_check_plus(long p) {
    auto rep = plus_quotient_analysis(p);
    RowResult r;
    r.status = rep.identities_hold ? "ok" : "fail";
    r.summary = "m_plus=" + rep.m_plus.get_str() + " g_star_plus=" + rep.g_star_plus.get_str();
    ordered_json j;
    j["p"] = rep.p;
    j["m_plus"] = rep.m_plus.get_str();
    j["g_star_plus"] = rep.g_star_plus.get_str();
    j["identities_hold"] = rep.identities_hold;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    j["zeta"] = zeta_report_json(rep.zeta);
    r.report = std::move(j);
    return r;
}

RowResult run_check_b(long p, long ell, unsigned long precision_cap) {
    auto rep = verify_theorem_b(p, ell, precision_cap);
    RowResult r;
    r.status = rep.global_consistent ? "ok" : "fail";
    r.summary = "f=" + std::to_string(rep.f) +
                " odd_characters=" + std::to_string(rep.per_psi.size());
    r.report = theorem_b_json(rep);
    return r;
}

// Induction checks price a determinant that is exponential in the
// coset count, so subgroups of index above this are reported as
// skipped rather than attempted.
constexpr long kInductionCosetCap = 16;

RowResult run_check_artin(long p) {
    auto cover = stickelberger_cover(p);
    auto product = product_decomposition_check(cover.voltage);

    ordered_json inflation = ordered_json::array();
    bool inflation_ok = true;
    int inflation_pass = 0;
    auto subgroups = all_subgroups(cover.group);
    for (const auto& h : subgroups) {
        auto q = quotient_group(cover.group, h);
        bool ok = project(cover.gamma, q) ==
                  equivariant_zeta(quotient_voltage(cover.voltage, q));
        inflation_ok = inflation_ok && ok;
        inflation_pass += ok ? 1 : 0;
        inflation.push_back({{"subgroup_order", h.order()}, {"holds", ok}});
    }

    std::vector<Subgroup> hs;
    hs.emplace_back(cover.group, std::vector<FiniteAbelianGroup::Element>{});
    hs.emplace_back(cover.group,
                    std::vector<FiniteAbelianGroup::Element>{
                        *cover.group.unique_order2_element()});
    hs.emplace_back(cover.group,
                    std::vector<FiniteAbelianGroup::Element>{cover.group.element(1)});
    ordered_json induction = ordered_json::array();
    bool induction_ok = true;
    int induction_run = 0, induction_pass = 0, induction_skipped = 0;
    for (const auto& h : hs) {
        ordered_json row;
        row["subgroup_order"] = h.order();
        if (cover.group.order() / h.order() > kInductionCosetCap) {
            row["skipped"] = true;
            ++induction_skipped;
        } else {
            bool ok = induction_norm(cover.gamma, h) ==
                      equivariant_zeta(induced_subcover_voltage(cover.voltage, h));
            row["holds"] = ok;
            induction_ok = induction_ok && ok;
            ++induction_run;
            induction_pass += ok ? 1 : 0;
        }
        induction.push_back(std::move(row));
    }

    RowResult r;
    bool ok = product.holds && inflation_ok && induction_ok;
    r.status = ok ? "ok" : "fail";
    r.summary = std::string("product=") + (product.holds ? "ok" : "fail") +
                " inflation=" + std::to_string(inflation_pass) + "/" +
                std::to_string(subgroups.size()) +
                " induction=" + std::to_string(induction_pass) + "/" +
                std::to_string(induction_run) +
                " skipped=" + std::to_string(induction_skipped);
    ordered_json j;
    j["p"] = p;
    j["product"] = product.holds;
    if (!product.detail.empty()) j["product_detail"] = product.detail;
    j["inflation"] = std::move(inflation);
    j["induction"] = std::move(induction);
    r.report = std::move(j);
    return r;
}

struct VerifyOptions {
    std::string primes_text;
    std::string ells_text;
    std::vector<std::string> checks;
    unsigned threads = 0;
    unsigned long precision_cap = 512;
    std::string format = "json";
    std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
    auto primes = parse_prime_selection(opt.primes_text, true, "--primes");
    long cap = prime_cap();
    for (long p : primes)
        if (p > cap)
            throw std::invalid_argument(
                "--primes: " + std::to_string(p) + " exceeds the prime cap " +
                std::to_string(cap) + " (raise STICKELGRAPH_PRIME_CAP to allow it)");

    auto wants = [&](const char* c) {
        return std::find(opt.checks.begin(), opt.checks.end(), c) != opt.checks.end();
    };
    bool want_a = wants("a"), want_b = wants("b"), want_plus = wants("plus"),
         want_artin = wants("artin");

    std::vector<long> ells;
    if (want_b) {
        if (opt.ells_text.empty())
            throw std::invalid_argument("--ells is required when the checks include b");
        ells = parse_prime_selection(opt.ells_text, false, "--ells");
    }

    std::vector<RowSpec> specs;
    for (long p : primes) {
        if (want_a) specs.push_back({"a", p, std::nullopt, false});
        if (want_plus) specs.push_back({"plus", p, std::nullopt, false});
        if (want_b)
            for (long ell : ells) specs.push_back({"b", p, ell, (p - 1) % ell == 0});
        if (want_artin) specs.push_back({"artin", p, std::nullopt, false});
    }

    // Cells run concurrently; results land in their slot so assembly
    // order, and therefore the output bytes, never depend on timing.
    std::vector<RowResult> results(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            const auto& s = specs[i];
            if (s.skip) {
                results[i] = {"skip", "ell divides p-1", ordered_json(nullptr)};
                continue;
            }
            try {
                if (s.check == "a")
                    results[i] = run_check_a(s.p);
                else if (s.check == "plus")
                    results[i] = run_check_plus(s.p);
                else if (s.check == "b")
                    results[i] = run_check_b(s.p, *s.ell, opt.precision_cap);
                else
                    results[i] = run_check_artin(s.p);
            } catch (const std::exception& e) {
                ordered_json err;
                err["error"] = e.what();
                results[i] = {"fail", std::string("error: ") + e.what(), std::move(err)};
            }
        }
    };
    std::size_t n_threads = opt.threads ? opt.threads
                                        : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, std::max<std::size_t>(specs.size(), 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::string payload;
    if (opt.format == "json") {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < specs.size(); ++i) {
            ordered_json row;
            row["check"] = specs[i].check;
            row["p"] = specs[i].p;
            row["ell"] = specs[i].ell ? ordered_json(*specs[i].ell) : ordered_json(nullptr);
            row["status"] = results[i].status;
            row["summary"] = results[i].summary;
            row["report"] = results[i].report;
            doc["rows"].push_back(std::move(row));
        }
        payload = doc.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "check,p,ell,status,summary\n";
        for (std::size_t i = 0; i < specs.size(); ++i) {
            csv << specs[i].check << ',' << specs[i].p << ',';
            if (specs[i].ell) csv << *specs[i].ell;
            csv << ',' << results[i].status << ',' << csv_escape(results[i].summary) << '\n';
        }
        payload = csv.str();
    }

    if (!opt.out_path.empty())
        write_text_atomic(opt.out_path, payload);
    else
        std::cout << payload;

    for (const auto& r : results)
        if (r.status == "fail") return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bowen-Franks and zeta analysis of digraphs, with theorem "
                 "verification matrices over Stickelberger covers"};
    app.require_subcommand(1);

    std::string target;
    bool dump_matrices = false;
    auto* analyze = app.add_subcommand(
        "analyze", "Zeta and Bowen-Franks report for one digraph (JSON file or builtin "
                   "example:2.4 | stickelberger:<p> | plus:<p>)");
    analyze->add_option("target", target, "Digraph JSON path or builtin name")->required();
    analyze->add_flag("--dump-matrices", dump_matrices,
                      "Append adjacency, BF operator, and invariant factors");

    VerifyOptions opt;
    auto* verify = app.add_subcommand("verify", "Run theorem checks over selected primes");
    verify->add_option("--primes", opt.primes_text, "Odd primes: a..b or comma list")
        ->required();
    verify->add_option("--ells", opt.ells_text, "Primes ell for check b: a..b or comma list");
    verify->add_option("--checks", opt.checks, "Which checks to run")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"a", "b", "plus", "artin"}));
    verify->add_option("--threads", opt.threads, "Worker threads (default: hardware)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--precision-cap", opt.precision_cap,
                       "Largest ell-adic working precision before giving up")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", opt.out_path, "Write atomically to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(target, dump_matrices);
        return run_verify(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const stickelgraph::PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
