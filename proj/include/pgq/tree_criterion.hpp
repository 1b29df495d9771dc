#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pgq/help_engine.hpp"
#include "pgq/tables.hpp"

namespace pgq {

// A claimed line ordering chi_1, ..., chi_p of the ordinary characters of
// the principal p-block, chi_1 the trivial character.  The shape claim is
// verified through its testable consequence (nu vanishing on p-regular
// classes), not recomputed from modular data.
struct BrauerLine {
    long prime = 0;
    bool principal = true;
    long exceptionalMultiplicity = 1;
    std::vector<std::size_t> lineOrder;  // 0-based character row indices
};

// Accepts a single block object or an array of blocks (one document may
// carry several blocks for different primes).  Rejects non-principal blocks
// and exceptional multiplicity != 1.
std::vector<BrauerLine> parse_blocks(const nlohmann::json& doc);
std::vector<BrauerLine> parse_blocks_file(const std::string& path);

struct HypothesisReport {
    bool sylowOrderP = false;   // |G| = p*m with p not dividing m
    bool singlePClass = false;  // exactly one class of elements of order p
    bool lineVerified = false;  // nu vanishes on all p-regular classes
    bool pRational = false;     // every value of every line character is p-rational
    bool applicable = false;    // conjunction of the four
    // single-swap variants of the ordering that also pass the nu test
    // (ambiguity is harmless: nu is what the verdict consumes)
    std::vector<std::vector<std::size_t>> alternativeOrderings;
};

HypothesisReport check_hypotheses(const CharacterTable& t, const BrauerLine& line);

// nu(g) = sum_{i=1}^p (-1)^i chi_i(g) per class.
std::vector<CyclotomicNumber> nu_values_exact(const CharacterTable& t, const BrauerLine& line);
// Rational nu values; throws std::domain_error if some value is irrational
// (cannot happen once pRational holds).
std::vector<Rat> nu_values(const CharacterTable& t, const BrauerLine& line);

// True iff nu vanishes exactly on every p-regular class; invariant under
// reversing the ordering.
bool verify_line(const CharacterTable& t, const BrauerLine& line);

// True iff chi(h) = chi(y) for every line character and every p-singular
// class h, y the unique order-p class.  Vacuously true without composite
// p-singular classes.
bool p_section_constancy(const CharacterTable& t, const BrauerLine& line);

// sum_{i=1}^p (-1)^i mu(xi*zeta_p, u, chi_i) <= mu(xi, u, chi_1) for a unit
// of order n = p*q, with xi = zeta_q^xiExpQ, as a solver constraint.
Constraint line_inequality(const CharacterTable& t, const BrauerLine& line, long q, long xiExpQ,
                           const Scenario& scenario);

// All instances for xi over a Galois transversal of the q-th roots of unity.
std::vector<Constraint> line_constraints(const CharacterTable& t, const BrauerLine& line, long q,
                                         const Scenario& scenario);

enum class CriterionVerdict { NoPqUnits, EdgeExists, NotApplicable };

std::string criterion_verdict_name(CriterionVerdict v);

struct CriterionResult {
    CriterionVerdict verdict = CriterionVerdict::NotApplicable;
    HypothesisReport hypotheses;
    bool sectionConstancy = false;
    // data-level congruences behind the verdict: chi_i(y) == chi_i(1) mod p
    // for each line character, nu(y) == 0 mod p, and nu(y) != 0
    bool congruencesOk = false;
    Rat nuAtY;
    std::string annotation;
};

// Theorem verdict for units of order p*q: no_pq_units when all hypotheses
// verify and pq is not an element order; edge_exists when pq is an element
// order; not_applicable otherwise.
CriterionResult apply_criterion(const CharacterTable& t, const BrauerLine& line, long q);

}  // namespace pgq
