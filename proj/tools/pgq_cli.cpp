#include <CLI11.hpp>

#include <iostream>

#include "pgq/numbers.hpp"
#include "pgq/help_engine.hpp"
#include "pgq/tables.hpp"
#include "pgq/tree_criterion.hpp"
#include "pgq/verdict.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string tablePath;
    std::string blocksPath;
    std::string format = "text";
    long n = 1;
    int workers = 1;
    bool verbose = false;
};

void emit_json(nlohmann::ordered_json j) {
    nlohmann::ordered_json out;
    out["tool"] = "pgq";
    out["version"] = kVersion;
    for (auto& [k, v] : j.items()) out[k] = std::move(v);
    std::cout << out.dump(1) << "\n";
}

pgq::CharacterTable load_table(const Options& opt) {
    return pgq::parse_table_file(opt.tablePath);
}

// Validates and fails the run (exit 1) when a check fails.
pgq::CharacterTable load_valid_table(const Options& opt) {
    auto t = load_table(opt);
    auto rep = pgq::validate(t);
    if (!rep.all_pass()) {
        std::cerr << opt.tablePath << ": table fails validation:\n";
        for (const auto& e : rep.entries)
            if (!e.pass) std::cerr << "  " << e.check << ": fail (" << e.detail << ")\n";
        std::exit(1);
    }
    return t;
}

std::vector<pgq::BrauerLine> load_blocks(const Options& opt) {
    if (opt.blocksPath.empty()) return {};
    return pgq::parse_blocks_file(opt.blocksPath);
}

int cmd_validate(const Options& opt) {
    auto t = load_table(opt);
    auto rep = pgq::validate(t);
    if (opt.format == "json") {
        auto j = pgq::validation_json(rep);
        nlohmann::ordered_json out;
        out["command"] = "validate";
        out["group"] = t.groupName;
        for (auto& [k, v] : j.items()) out[k] = std::move(v);
        emit_json(out);
    } else {
        for (const auto& e : rep.entries) {
            std::cout << e.check << ": " << (e.pass ? "pass" : "fail");
            if (!e.detail.empty()) std::cout << " (" << e.detail << ")";
            std::cout << "\n";
        }
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_spectrum(const Options& opt) {
    auto t = load_valid_table(opt);
    auto sp = pgq::spectrum(t);
    if (opt.format == "json") {
        nlohmann::ordered_json out;
        out["command"] = "spectrum";
        out["group"] = t.groupName;
        out["spectrum"] = sp;
        emit_json(out);
    } else {
        std::cout << t.groupName << " spectrum:";
        for (long o : sp) std::cout << " " << o;
        std::cout << "\n";
    }
    return 0;
}

int cmd_prime_graph(const Options& opt) {
    auto t = load_valid_table(opt);
    auto g = pgq::prime_graph(t);
    if (opt.format == "json") {
        nlohmann::ordered_json out;
        out["command"] = "prime-graph";
        out["group"] = t.groupName;
        out["vertices"] = g.vertices;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& e : g.edges) edges.push_back({e.first, e.second});
        out["edges"] = std::move(edges);
        emit_json(out);
    } else {
        std::cout << t.groupName << " prime graph\n" << "vertices:";
        for (long p : g.vertices) std::cout << " " << p;
        std::cout << "\nedges:";
        if (g.edges.empty()) std::cout << " none";
        for (const auto& e : g.edges) std::cout << " {" << e.first << "," << e.second << "}";
        std::cout << "\n";
    }
    return 0;
}

pgq::ExtraConstraints line_extra(const pgq::CharacterTable& t,
                                 const std::vector<pgq::BrauerLine>& blocks) {
    std::vector<pgq::BrauerLine> usable;
    for (const auto& b : blocks) {
        bool ok = pgq::verify_line(t, b);
        for (auto r : b.lineOrder)
            for (std::size_t c = 0; c < t.numClasses() && ok; ++c)
                ok = pgq::is_p_rational(t.irreducibles[r][c], b.prime);
        if (ok) usable.push_back(b);
    }
    if (usable.empty()) return nullptr;
    return [usable](const pgq::CharacterTable& tt, long m, const pgq::Scenario& sc) {
        std::vector<pgq::Constraint> out;
        for (const auto& b : usable) {
            if (m % b.prime != 0) continue;
            long q = m / b.prime;
            if (q == b.prime || !pgq::is_prime(q)) continue;
            auto cs = pgq::line_constraints(tt, b, q, sc);
            out.insert(out.end(), cs.begin(), cs.end());
        }
        return out;
    };
}

int cmd_check_order(const Options& opt) {
    auto t = load_valid_table(opt);
    auto blocks = load_blocks(opt);
    auto res = pgq::check_order(t, opt.n, line_extra(t, blocks), opt.workers);
    if (opt.verbose)
        std::cerr << "order " << opt.n << ": " << res.scenarioCount << " scenario(s)\n";
    if (opt.format == "json") {
        nlohmann::ordered_json out;
        out["command"] = "check-order";
        out["group"] = t.groupName;
        auto j = pgq::order_check_json(t, res);
        for (auto& [k, v] : j.items()) out[k] = std::move(v);
        emit_json(out);
    } else {
        std::cout << t.groupName << " order " << opt.n << "\n";
        std::cout << "verdict: " << (res.feasible ? "feasible" : "infeasible") << "\n";
        std::cout << "certificate: " << (res.exhaustive ? "exhaustive" : "incomplete") << "\n";
        if (res.feasible) {
            std::cout << "solutions (" << res.chains.size() << "):\n";
            for (const auto& c : res.chains)
                std::cout << "  " << pgq::chain_json(t, c).dump() << "\n";
        }
    }
    return 0;
}

int cmd_pq(const Options& opt) {
    auto t = load_valid_table(opt);
    auto blocks = load_blocks(opt);
    auto rep = pgq::pq_report(t, blocks, opt.workers);
    if (opt.format == "json") {
        nlohmann::ordered_json out;
        out["command"] = "pq";
        auto j = pgq::report_json(t, rep);
        for (auto& [k, v] : j.items()) out[k] = std::move(v);
        emit_json(out);
    } else {
        std::cout << t.groupName << " Prime Graph Question report\n";
        for (const auto& v : rep.edges) {
            std::cout << "(" << v.p << "," << v.q << "): " << pgq::unit_status_name(v.status);
            if (!v.detail.empty()) std::cout << " — " << v.detail;
            std::cout << "\n";
            if (opt.verbose && v.help) {
                for (const auto& c : v.help->chains)
                    std::cout << "    survivor " << pgq::chain_json(t, c).dump() << "\n";
            }
        }
        std::cout << "overall: " << rep.overall() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for torsion units of integral group rings"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool blocks) {
        sub->add_option("table", opt.tablePath, "character table file")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--verbose,-v", opt.verbose, "diagnostics on stderr");
        if (blocks) sub->add_option("--blocks", opt.blocksPath, "block data file");
    };

    auto* validate = app.add_subcommand("validate", "check a character table exactly");
    add_common(validate, false);
    auto* spectrum = app.add_subcommand("spectrum", "element orders visible in the class data");
    add_common(spectrum, false);
    auto* pgraph = app.add_subcommand("prime-graph", "prime graph of the group");
    add_common(pgraph, false);
    auto* checko = app.add_subcommand("check-order", "solve the constraint system for units of order n");
    add_common(checko, true);
    checko->add_option("--n", opt.n, "unit order")->required()->check(CLI::PositiveNumber);
    checko->add_option("--workers", opt.workers, "parallel scenario workers")
        ->check(CLI::PositiveNumber);
    auto* pq = app.add_subcommand("pq", "Prime Graph Question report for all prime pairs");
    add_common(pq, true);
    pq->add_option("--workers", opt.workers, "parallel scenario workers")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(opt);
        if (app.got_subcommand(pgraph)) return cmd_prime_graph(opt);
        if (app.got_subcommand(checko)) return cmd_check_order(opt);
        if (app.got_subcommand(pq)) return cmd_pq(opt);
    } catch (const pgq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
