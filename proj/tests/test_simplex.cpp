#include <doctest.h>

#include "pgq/simplex.hpp"

using pgq::LpRow;
using pgq::LpStatus;
using pgq::Rat;

TEST_SUITE("simplex") {

TEST_CASE("bounded two-variable polytope") {
    // x + y = 1, x >= -2, y >= -3
    std::vector<LpRow> rows = {
        {{Rat(1), Rat(1)}, Rat(1), true},
        {{Rat(1), Rat(0)}, Rat(-2), false},
        {{Rat(0), Rat(1)}, Rat(-3), false},
    };
    auto mn = pgq::lp_minimize(2, rows, {Rat(1), Rat(0)});
    REQUIRE(mn.status == LpStatus::Optimal);
    CHECK(mn.value == Rat(-2));
    auto mx = pgq::lp_maximize(2, rows, {Rat(1), Rat(0)});
    REQUIRE(mx.status == LpStatus::Optimal);
    CHECK(mx.value == Rat(4));  // x = 1 - y <= 1 - (-3)
}

TEST_CASE("fractional optimum is exact") {
    // min x + y s.t. 3x + y >= 1, x + 3y >= 1
    std::vector<LpRow> rows = {
        {{Rat(3), Rat(1)}, Rat(1), false},
        {{Rat(1), Rat(3)}, Rat(1), false},
    };
    auto r = pgq::lp_minimize(2, rows, {Rat(1), Rat(1)});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(1, 2));
}

TEST_CASE("infeasible system detected in phase 1") {
    // x >= 1 and -x >= 0
    std::vector<LpRow> rows = {
        {{Rat(1)}, Rat(1), false},
        {{Rat(-1)}, Rat(0), false},
    };
    CHECK(pgq::lp_minimize(1, rows, {Rat(1)}).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded direction detected") {
    std::vector<LpRow> rows = {{{Rat(1)}, Rat(0), false}};  // x >= 0
    CHECK(pgq::lp_maximize(1, rows, {Rat(1)}).status == LpStatus::Unbounded);
    auto mn = pgq::lp_minimize(1, rows, {Rat(1)});
    REQUIRE(mn.status == LpStatus::Optimal);
    CHECK(mn.value == Rat(0));
}

TEST_CASE("equality pinning a fraction") {
    std::vector<LpRow> rows = {{{Rat(3)}, Rat(2), true}};  // 3x = 2
    auto mn = pgq::lp_minimize(1, rows, {Rat(1)});
    auto mx = pgq::lp_maximize(1, rows, {Rat(1)});
    CHECK(mn.value == Rat(2, 3));
    CHECK(mx.value == Rat(2, 3));
}

TEST_CASE("redundant rows and zero-variable systems") {
    std::vector<LpRow> rows = {
        {{Rat(1), Rat(1)}, Rat(1), true},
        {{Rat(2), Rat(2)}, Rat(2), true},  // same hyperplane
    };
    auto r = pgq::lp_minimize(2, rows, {Rat(1), Rat(-1)});
    CHECK(r.status == LpStatus::Unbounded);

    std::vector<LpRow> empty_feasible = {{{}, Rat(0), true}};
    CHECK(pgq::lp_minimize(0, empty_feasible, {}).status == LpStatus::Optimal);
    std::vector<LpRow> empty_infeasible = {{{}, Rat(1), true}};
    CHECK(pgq::lp_minimize(0, empty_infeasible, {}).status == LpStatus::Infeasible);
}

}  // TEST_SUITE
