#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pgq/help_engine.hpp"
#include "pgq/tables.hpp"
#include "pgq/tree_criterion.hpp"

namespace pgq {

enum class UnitStatus { EdgeExists, ExcludedByCriterion, ExcludedByHelp, Undecided };

std::string unit_status_name(UnitStatus s);

struct EdgeVerdict {
    long p = 0, q = 0;  // stored with p < q
    bool inGroup = false;
    UnitStatus status = UnitStatus::Undecided;
    std::optional<CriterionResult> criterion;  // attached when a line decided
    long criterionPrime = 0;
    std::optional<OrderCheckResult> help;  // attached when the solver ran
    std::string detail;
};

struct PQReport {
    std::string groupName;
    PrimeGraph graph;
    std::vector<EdgeVerdict> edges;  // every vertex pair, ascending
    bool affirmed = false;
    std::string overall() const { return affirmed ? "PQ_affirmed" : "PQ_open_edges"; }
};

// Verdict for one prime pair: edge_exists when pq is an element order, else
// the tree criterion for both orientations, else the HeLP solver with any
// applicable line inequalities.  Symmetric in p and q.
EdgeVerdict edge_verdict(const CharacterTable& t, long p, long q,
                         const std::vector<BrauerLine>& blocks = {}, int workers = 1);

PQReport pq_report(const CharacterTable& t, const std::vector<BrauerLine>& blocks = {},
                   int workers = 1);

// Structured report serialization; stable key order, exact values only.
nlohmann::ordered_json chain_json(const CharacterTable& t, const SolvedChain& chain);
nlohmann::ordered_json order_check_json(const CharacterTable& t, const OrderCheckResult& r);
nlohmann::ordered_json hypothesis_json(const HypothesisReport& h);
nlohmann::ordered_json criterion_json(const CriterionResult& c);
nlohmann::ordered_json edge_json(const CharacterTable& t, const EdgeVerdict& v);
nlohmann::ordered_json report_json(const CharacterTable& t, const PQReport& r);
nlohmann::ordered_json validation_json(const ValidationReport& r);

}  // namespace pgq
