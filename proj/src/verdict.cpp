#include "pgq/verdict.hpp"

#include <algorithm>

#include "pgq/numbers.hpp"

namespace pgq {

std::string unit_status_name(UnitStatus s) {
    switch (s) {
        case UnitStatus::EdgeExists: return "edge_exists";
        case UnitStatus::ExcludedByCriterion: return "excluded_by_criterion";
        case UnitStatus::ExcludedByHelp: return "excluded_by_help";
        case UnitStatus::Undecided: return "undecided";
    }
    return "?";
}

EdgeVerdict edge_verdict(const CharacterTable& t, long p, long q,
                         const std::vector<BrauerLine>& blocks, int workers) {
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw std::invalid_argument("edge_verdict: need two distinct primes");
    if (p > q) std::swap(p, q);
    const auto graph = prime_graph(t);
    if (!graph.vertices.count(p) || !graph.vertices.count(q))
        throw std::invalid_argument("edge_verdict: primes must be vertices of the prime graph");

    EdgeVerdict v;
    v.p = p;
    v.q = q;
    const long pq = p * q;
    v.inGroup = spectrum(t).count(pq) != 0;
    if (v.inGroup) {
        v.status = UnitStatus::EdgeExists;
        v.detail = "element of order " + std::to_string(pq) + " exists";
        return v;
    }

    // criterion first: O(table) against the solver's combinatorial search
    for (long P : {p, q}) {
        if (P % 2 == 0) continue;
        for (const auto& b : blocks) {
            if (b.prime != P) continue;
            CriterionResult r = apply_criterion(t, b, pq / P);
            if (r.verdict == CriterionVerdict::NoPqUnits) {
                v.status = UnitStatus::ExcludedByCriterion;
                v.criterion = std::move(r);
                v.criterionPrime = P;
                v.detail = "line criterion at p=" + std::to_string(P);
                return v;
            }
        }
    }

    // solver, with line inequalities from every block whose preconditions
    // verify (nu-vanishing and p-rationality are what the inequality needs)
    std::vector<BrauerLine> usable;
    for (const auto& b : blocks) {
        if (pq % b.prime != 0) continue;
        bool ok = verify_line(t, b);
        for (auto r : b.lineOrder)
            for (std::size_t c = 0; c < t.numClasses() && ok; ++c)
                ok = is_p_rational(t.irreducibles[r][c], b.prime);
        if (ok) usable.push_back(b);
    }
    ExtraConstraints extra = nullptr;
    if (!usable.empty()) {
        extra = [usable, pq](const CharacterTable& tt, long m, const Scenario& sc) {
            std::vector<Constraint> out;
            if (m != pq) return out;
            for (const auto& b : usable) {
                auto cs = line_constraints(tt, b, pq / b.prime, sc);
                out.insert(out.end(), cs.begin(), cs.end());
            }
            return out;
        };
    }
    OrderCheckResult res = check_order(t, pq, extra, workers);
    if (!res.feasible && res.exhaustive) {
        v.status = UnitStatus::ExcludedByHelp;
        v.detail = "order " + std::to_string(pq) + " infeasible (exhaustive)";
    } else {
        v.status = UnitStatus::Undecided;
        v.detail = res.feasible ? std::to_string(res.chains.size()) + " surviving tuple(s)"
                                : "enumeration not exhaustive";
    }
    v.help = std::move(res);
    return v;
}

PQReport pq_report(const CharacterTable& t, const std::vector<BrauerLine>& blocks, int workers) {
    PQReport rep;
    rep.groupName = t.groupName;
    rep.graph = prime_graph(t);
    std::vector<long> vs(rep.graph.vertices.begin(), rep.graph.vertices.end());
    rep.affirmed = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            EdgeVerdict v = edge_verdict(t, vs[i], vs[j], blocks, workers);
            if (!v.inGroup && v.status == UnitStatus::Undecided) rep.affirmed = false;
            rep.edges.push_back(std::move(v));
        }
    }
    return rep;
}

nlohmann::ordered_json chain_json(const CharacterTable& t, const SolvedChain& chain) {
    nlohmann::ordered_json j;
    for (const auto& [d, tup] : chain.tuples) {
        long m = chain.tuples.rbegin()->first / d;  // largest key is the unit order
        // key the layer by the power of u it describes
        nlohmann::ordered_json layer;
        auto adm = admissible_classes(t, m);
        for (std::size_t i = 0; i < adm.size(); ++i)
            if (tup[i] != 0) layer[t.classes[adm[i]].name] = tup[i];
        j["u^" + std::to_string(d)] = std::move(layer);
    }
    return j;
}

nlohmann::ordered_json order_check_json(const CharacterTable& t, const OrderCheckResult& r) {
    nlohmann::ordered_json j;
    j["order"] = r.order;
    j["verdict"] = r.feasible ? "feasible" : "infeasible";
    j["certificate"] = r.exhaustive ? "exhaustive" : "incomplete";
    j["scenarios"] = r.scenarioCount;
    nlohmann::ordered_json prov;
    for (const auto& [name, cnt] : r.constraintCounts) prov[name] = cnt;
    j["constraints"] = std::move(prov);
    nlohmann::ordered_json sols = nlohmann::ordered_json::array();
    for (const auto& c : r.chains) sols.push_back(chain_json(t, c));
    j["solutions"] = std::move(sols);
    return j;
}

nlohmann::ordered_json hypothesis_json(const HypothesisReport& h) {
    nlohmann::ordered_json j;
    j["sylowOrderP"] = h.sylowOrderP;
    j["singlePClass"] = h.singlePClass;
    j["lineVerified"] = h.lineVerified;
    j["pRational"] = h.pRational;
    j["applicable"] = h.applicable;
    if (!h.alternativeOrderings.empty()) {
        nlohmann::ordered_json alts = nlohmann::ordered_json::array();
        for (const auto& a : h.alternativeOrderings) alts.push_back(a);
        j["alternativeOrderings"] = std::move(alts);
    }
    return j;
}

nlohmann::ordered_json criterion_json(const CriterionResult& c) {
    nlohmann::ordered_json j;
    j["verdict"] = criterion_verdict_name(c.verdict);
    j["hypotheses"] = hypothesis_json(c.hypotheses);
    j["sectionConstancy"] = c.sectionConstancy;
    j["congruencesOk"] = c.congruencesOk;
    if (c.congruencesOk) j["nuAtY"] = rat_str(c.nuAtY);
    if (!c.annotation.empty()) j["annotation"] = c.annotation;
    return j;
}

nlohmann::ordered_json edge_json(const CharacterTable& t, const EdgeVerdict& v) {
    nlohmann::ordered_json j;
    j["pair"] = {v.p, v.q};
    j["inGroup"] = v.inGroup;
    j["unitStatus"] = unit_status_name(v.status);
    j["detail"] = v.detail;
    if (v.criterion) {
        j["criterionPrime"] = v.criterionPrime;
        j["criterion"] = criterion_json(*v.criterion);
    }
    if (v.help) j["help"] = order_check_json(t, *v.help);
    return j;
}

nlohmann::ordered_json report_json(const CharacterTable& t, const PQReport& r) {
    nlohmann::ordered_json j;
    j["group"] = r.groupName;
    nlohmann::ordered_json graph;
    graph["vertices"] = r.graph.vertices;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : r.graph.edges) edges.push_back({e.first, e.second});
    graph["edges"] = std::move(edges);
    j["primeGraph"] = std::move(graph);
    nlohmann::ordered_json evs = nlohmann::ordered_json::array();
    for (const auto& v : r.edges) evs.push_back(edge_json(t, v));
    j["edges"] = std::move(evs);
    j["overall"] = r.overall();
    return j;
}

nlohmann::ordered_json validation_json(const ValidationReport& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json c;
        c["check"] = e.check;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.all_pass();
    return j;
}

}  // namespace pgq
