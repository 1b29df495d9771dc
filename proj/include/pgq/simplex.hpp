#pragma once

#include <cstddef>
#include <vector>

#include "pgq/rational.hpp"

namespace pgq {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;  // optimal objective value when status == Optimal
};

// One linear condition a^T x = b (equality) or a^T x >= b.
struct LpRow {
    std::vector<Rat> a;
    Rat b;
    bool equality = false;
};

// Exact two-phase simplex (Bland's rule) over unrestricted variables.
// Minimizes c^T x subject to the given rows.
LpResult lp_minimize(std::size_t numVars, const std::vector<LpRow>& rows, const std::vector<Rat>& c);
LpResult lp_maximize(std::size_t numVars, const std::vector<LpRow>& rows, const std::vector<Rat>& c);

}  // namespace pgq
