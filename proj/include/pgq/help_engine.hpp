#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgq/rational.hpp"
#include "pgq/tables.hpp"

namespace pgq {

enum class Relation { EqZero, GeZero, ModZero };

enum class Provenance {
    Augmentation,
    Wagner,
    Folklore,
    MultIntegrality,
    MultNonnegativity,
    TreeInequality,
};

std::string provenance_name(Provenance p);

// constant + sum coeffs[i] * eps_i over the system's variable order.
struct AffineForm {
    Rat constant;
    std::vector<Rat> coeffs;

    AffineForm() : constant(0) {}
    explicit AffineForm(std::size_t nvars) : constant(0), coeffs(nvars, Rat(0)) {}

    Rat eval(const std::vector<long long>& x) const;
    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator-=(const AffineForm& o);
    void scale(const Rat& s);
    bool operator==(const AffineForm& o) const { return constant == o.constant && coeffs == o.coeffs; }
};

// form REL 0, where ModZero means form == 0 (mod modulus).
struct Constraint {
    AffineForm form;
    Relation rel = Relation::EqZero;
    long modulus = 0;
    Provenance provenance = Provenance::Augmentation;
    std::string note;

    bool satisfied(const std::vector<long long>& x) const;
};

struct PAVariables {
    long unitOrder = 1;
    std::vector<std::size_t> classIndices;  // admissible classes carrying variables
};

using PATuple = std::vector<long long>;  // aligned with PAVariables.classIndices

// Fixed partial-augmentation tuples for the proper power layers: key d maps
// u^d (a unit of order n/d) to its tuple over admissible_classes(n/d).
// The key d = n (the identity layer) may be omitted.
using Scenario = std::map<long, PATuple>;

struct PASystem {
    long unitOrder = 1;
    PAVariables vars;
    std::vector<Constraint> constraints;
};

struct PASolutionSet {
    std::vector<PATuple> solutions;  // duplicate-free, lexicographically sorted
    bool exhaustive = false;
};

// The LP relaxation failed to bound a variable; complete tables never do this.
struct UnboundedRelaxation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classes that may carry a nonzero partial augmentation for a unit of order
// n: elementOrder divides n, identity excluded for n > 1.
std::vector<std::size_t> admissible_classes(const CharacterTable& t, long n);

// chi(u^d) from the scenario, as an exact cyclotomic number (1 <= d <= n).
CyclotomicNumber scenario_character_value(const CharacterTable& t, std::size_t chiRow, long n,
                                          long d, const Scenario& scenario);

// Eigenvalue multiplicity mu(zeta_n^xiExp, u, chi) as an affine form over the
// top-layer variables; the d = 1 term contributes the variable part.
AffineForm multiplicity_form(const CharacterTable& t, std::size_t chiRow, long n, long xiExp,
                             const Scenario& scenario);

// Wagner congruence (order-p class sum, emitted for p | n, n != p) plus the
// folklore congruences linking the top layer to the u^p layer.
std::vector<Constraint> congruence_constraints(const CharacterTable& t, long n, long p,
                                               const Scenario& scenario);

// Smallest-exponent representatives of the orbits of mu_n under the Galois
// subgroup fixing every character value on classes of order dividing n.
std::vector<long> xi_transversal(const CharacterTable& t, long n);

PASystem build_system(const CharacterTable& t, long n, const Scenario& scenario);

struct BoundsResult {
    bool feasible = false;
    std::vector<long long> lo, hi;
};

// Per-variable integer bounds by exact LP over {equalities, inequalities}.
// Throws UnboundedRelaxation when the relaxation does not bound a variable.
BoundsResult derive_bounds(const PASystem& sys);

// Exhaustive integer solution set: LP bounds, then depth-first enumeration
// with interval propagation; every solution satisfies all constraints
// exactly.
PASolutionSet solve(const PASystem& sys);

// Full power chain for a unit of order m: tuples[e] is the tuple of u^e over
// admissible_classes(m/e), for every divisor e of m (e = 1 is the unit).
struct SolvedChain {
    std::map<long, PATuple> tuples;
};

// Hook for additional constraints (the tree-line inequality); called per
// layer with that layer's order and scenario.
using ExtraConstraints =
    std::function<std::vector<Constraint>(const CharacterTable&, long, const Scenario&)>;

struct OrderCheckResult {
    long order = 1;
    bool feasible = false;
    bool exhaustive = false;
    long scenarioCount = 0;                        // top-layer scenarios solved
    std::vector<SolvedChain> chains;               // surviving full chains
    std::map<std::string, long> constraintCounts;  // provenance -> count, aggregated
};

// Solves all power layers bottom-up over the divisor lattice of n and glues
// consistent scenarios; infeasible iff no chain survives.
OrderCheckResult check_order(const CharacterTable& t, long n,
                             const ExtraConstraints& extra = nullptr, int workers = 1);

}  // namespace pgq
