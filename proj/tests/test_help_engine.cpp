#include <doctest.h>

#include <set>

#include "pgq/help_engine.hpp"
#include "pgq/numbers.hpp"
#include "test_util.hpp"

using namespace pgq;

namespace {

// brute-force oracle: every integer point of the LP box inflated by margin,
// filtered through the exact constraints
std::vector<PATuple> naive_enumeration(const PASystem& sys, long long margin) {
    BoundsResult b = derive_bounds(sys);
    std::vector<PATuple> out;
    if (!b.feasible && b.lo.empty()) return out;
    const std::size_t k = sys.vars.classIndices.size();
    if (k == 0) return out;
    for (auto& v : b.lo) v -= margin;
    for (auto& v : b.hi) v += margin;
    PATuple x(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            for (const auto& c : sys.constraints)
                if (!c.satisfied(x)) return;
            out.push_back(x);
            return;
        }
        for (long long v = b.lo[i]; v <= b.hi[i]; ++v) {
            x[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Scenario a5_order10_scenario(const CharacterTable& a5, bool fiveA) {
    // u^2 of order 5 (trivial tuple on 5a or 5b), u^5 of order 2, u^10 = 1
    (void)a5;
    Scenario sc;
    sc[2] = fiveA ? PATuple{1, 0} : PATuple{0, 1};  // u^2 of order 5
    sc[5] = PATuple{1};                             // u^5 in the single order-2 class
    sc[10] = PATuple{1};
    return sc;
}

}  // namespace

TEST_SUITE("help_engine") {

TEST_CASE("admissible classes") {
    auto a5 = testutil::load("a5.json");
    CHECK(admissible_classes(a5, 10) == std::vector<std::size_t>{1, 3, 4});  // 2a, 5a, 5b
    CHECK(admissible_classes(a5, 1) == std::vector<std::size_t>{0});
    CHECK(admissible_classes(a5, 7).empty());
    CHECK(admissible_classes(a5, 6) == std::vector<std::size_t>{1, 2});  // 2a, 3a
}

TEST_CASE("multiplicity form: order 1 and order 2 instances") {
    auto a5 = testutil::load("a5.json");
    // n = 1: mu(1, 1, chi) evaluates to chi(1) on the trivial tuple
    for (std::size_t row = 0; row < 5; ++row) {
        auto f = multiplicity_form(a5, row, 1, 0, {});
        CHECK(f.eval({1}) == Rat(a5.degree(row)));
    }
    // n = 2, 3-dimensional character, eps concentrated on 2a:
    // eigenvalues {1, -1, -1} -> mu(1) = 1, mu(-1) = 2
    Scenario sc;
    sc[2] = {1};
    auto mu1 = multiplicity_form(a5, 1, 2, 0, sc);
    auto mum1 = multiplicity_form(a5, 1, 2, 1, sc);
    CHECK(mu1.eval({1}) == Rat(1));
    CHECK(mum1.eval({1}) == Rat(2));

    CHECK_THROWS_AS(multiplicity_form(a5, 1, 10, 0, {}), std::invalid_argument);
}

TEST_CASE("sum of multiplicities over all n-th roots is chi(1), as forms") {
    auto a5 = testutil::load("a5.json");
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        long n = 10;
        Scenario sc;
        sc[n] = {1};  // u^n = 1
        for (long d : divisors(n)) {
            if (d == 1 || d == n) continue;
            auto adm = admissible_classes(a5, n / d);
            PATuple t;
            for (std::size_t i = 0; i < adm.size(); ++i)
                t.push_back(static_cast<long long>(rng() % 7) - 3);  // arbitrary integers
            sc[d] = t;
        }
        for (std::size_t row : {std::size_t(1), std::size_t(3), std::size_t(4)}) {
            AffineForm total(admissible_classes(a5, n).size());
            for (long e = 0; e < n; ++e) total += multiplicity_form(a5, row, n, e, sc);
            AffineForm expected(admissible_classes(a5, n).size());
            expected.constant = a5.degree(row);
            CHECK(total == expected);
        }
    }
}

TEST_CASE("Galois transversal and orbit consistency") {
    auto a5 = testutil::load("a5.json");
    auto s5 = testutil::load("s5.json");
    // A5 values on order-5 classes are fixed only by sigma_{±1 mod 5}
    CHECK(xi_transversal(a5, 10) == std::vector<long>{0, 1, 2, 3, 4, 5});
    // S5 is rational: full coprime orbits
    CHECK(xi_transversal(s5, 10) == std::vector<long>{0, 1, 2, 5});

    auto sc = a5_order10_scenario(a5, true);
    // 9 = -1 lies in the fixing subgroup for A5: identical forms
    CHECK(multiplicity_form(a5, 1, 10, 1, sc) == multiplicity_form(a5, 1, 10, 9, sc));
    // 3 does not: the forms differ for the irrational character
    CHECK_FALSE(multiplicity_form(a5, 1, 10, 1, sc) == multiplicity_form(a5, 1, 10, 3, sc));
}

TEST_CASE("congruence constraints: Wagner and folklore") {
    auto a5 = testutil::load("a5.json");
    auto sc = a5_order10_scenario(a5, true);
    auto cons5 = congruence_constraints(a5, 10, 5, sc);
    // Wagner: eps_{5a} + eps_{5b} == 0 (mod 5); variables ordered (2a, 5a, 5b)
    bool wagnerSeen = false;
    for (const auto& c : cons5) {
        if (c.provenance != Provenance::Wagner) continue;
        wagnerSeen = true;
        CHECK(c.modulus == 5);
        CHECK(c.form.coeffs == std::vector<Rat>{Rat(0), Rat(1), Rat(1)});
        CHECK(c.form.constant == 0);
    }
    CHECK(wagnerSeen);

    // folklore at p = 5 links to the u^5 layer (order-2 classes)
    bool folkloreSeen = false;
    for (const auto& c : cons5)
        if (c.provenance == Provenance::Folklore) {
            folkloreSeen = true;
            CHECK(c.modulus == 5);
            CHECK(c.form.coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});  // 2a^5 = 2a
            CHECK(c.form.constant == Rat(-1));
        }
    CHECK(folkloreSeen);

    // S7, n = 14: eps_{7a} == 0 (mod 7) and eps_{7a} == 1 (mod 2)
    auto s7 = testutil::load("s7.json");
    Scenario sc14;
    sc14[2] = {1};           // u^2 in the single order-7 class
    sc14[7] = {1, 0, 0};     // u^7 some involution
    sc14[14] = {1};
    auto adm = admissible_classes(s7, 14);
    REQUIRE(adm.size() == 4);  // 2a, 2b, 2c, 7a
    auto cons7 = congruence_constraints(s7, 14, 7, sc14);
    bool wagner7 = false;
    for (const auto& c : cons7)
        if (c.provenance == Provenance::Wagner) {
            wagner7 = true;
            CHECK(c.modulus == 7);
            CHECK(c.form.coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
        }
    CHECK(wagner7);
    auto cons2 = congruence_constraints(s7, 14, 2, sc14);
    bool folklore2at7a = false;
    for (const auto& c : cons2)
        if (c.provenance == Provenance::Folklore && c.note.find("7a") != std::string::npos) {
            folklore2at7a = true;
            CHECK(c.modulus == 2);
            CHECK(c.form.coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
            CHECK(c.form.constant == Rat(-1));
        }
    CHECK(folklore2at7a);

    // unit of order exactly p: no Wagner row (the augmentation already pins it)
    Scenario sc5;
    sc5[5] = {1};
    auto consp = congruence_constraints(a5, 5, 5, sc5);
    for (const auto& c : consp) CHECK(c.provenance != Provenance::Wagner);
}

TEST_CASE("build_system shapes") {
    auto a5 = testutil::load("a5.json");
    auto sys = build_system(a5, 10, a5_order10_scenario(a5, true));
    CHECK(sys.vars.classIndices.size() == 3);
    long aug = 0, wag = 0, folk = 0, nonneg = 0, integ = 0;
    for (const auto& c : sys.constraints) {
        switch (c.provenance) {
            case Provenance::Augmentation: ++aug; break;
            case Provenance::Wagner: ++wag; break;
            case Provenance::Folklore: ++folk; break;
            case Provenance::MultNonnegativity: ++nonneg; break;
            case Provenance::MultIntegrality: ++integ; break;
            default: break;
        }
    }
    CHECK(aug == 1);
    CHECK(wag == 2);  // p = 2 and p = 5
    CHECK(folk == 3);  // 5a, 5b at p = 2; 2a at p = 5
    CHECK(nonneg == 5 * 6);  // 5 characters x 6 transversal exponents
    CHECK(nonneg == integ);

    // no admissible classes at all: immediately infeasible
    CharacterTable trivial;
    trivial.groupName = "1";
    trivial.order = 1;
    trivial.classes = {{"1a", 1, 1}};
    trivial.irreducibles = {{CyclotomicNumber::rational(Rat(1))}};
    auto sys2 = build_system(trivial, 2, {});
    CHECK(sys2.vars.classIndices.empty());
    auto sol = solve(sys2);
    CHECK(sol.solutions.empty());
    CHECK(sol.exhaustive);
}

TEST_CASE("solve: A5 order 5 admits the two trivial tuples") {
    auto a5 = testutil::load("a5.json");
    Scenario sc;
    sc[5] = {1};
    auto sys = build_system(a5, 5, sc);
    auto sol = solve(sys);
    CHECK(sol.exhaustive);
    std::set<PATuple> got(sol.solutions.begin(), sol.solutions.end());
    CHECK(got.count(PATuple{1, 0}) == 1);
    CHECK(got.count(PATuple{0, 1}) == 1);
    // Luthar–Passi: only the trivial tuples survive for order 5
    CHECK(got.size() == 2);
}

TEST_CASE("solve equals naive enumeration with inflated box") {
    auto a5 = testutil::load("a5.json");
    for (bool fiveA : {true, false}) {
        auto sys = build_system(a5, 10, a5_order10_scenario(a5, fiveA));
        auto sol = solve(sys);
        auto oracle = naive_enumeration(sys, 2);
        CHECK(sol.solutions == oracle);
    }
    Scenario sc;
    sc[5] = {1};
    auto sys5 = build_system(a5, 5, sc);
    CHECK(solve(sys5).solutions == naive_enumeration(sys5, 2));
}

TEST_CASE("group elements always satisfy their own system") {
    for (const char* name : {"a5.json", "s5.json"}) {
        auto t = testutil::load(name);
        for (std::size_t c = 0; c < t.numClasses(); ++c) {
            auto chain = testutil::indicator_chain(t, c);
            long n = t.classes[c].elementOrder;
            auto sys = build_system(t, n, testutil::scenario_of(chain));
            for (const auto& con : sys.constraints) {
                INFO(name, " class ", t.classes[c].name, " order ", n, ": ", con.note);
                CHECK(con.satisfied(chain.tuples.at(1)));
            }
        }
    }
}

TEST_CASE("check_order on A5: infeasible for 6, 10, 15; feasible for element orders") {
    auto a5 = testutil::load("a5.json");
    for (long n : {6L, 10L, 15L}) {
        auto res = check_order(a5, n);
        INFO("order ", n);
        CHECK_FALSE(res.feasible);
        CHECK(res.exhaustive);
    }
    for (long n : {1L, 2L, 3L, 5L}) {
        auto res = check_order(a5, n);
        CHECK(res.feasible);
        CHECK(res.exhaustive);
    }
    auto r7 = check_order(a5, 7);
    CHECK_FALSE(r7.feasible);
    CHECK(r7.exhaustive);
    auto r1 = check_order(a5, 1);
    REQUIRE(r1.chains.size() == 1);
    CHECK(r1.chains[0].tuples.at(1) == PATuple{1});
}

TEST_CASE("check_order on A6: order 6 survives plain constraints") {
    auto a6 = testutil::load("a6.json");
    auto res = check_order(a6, 6);
    CHECK(res.feasible);
    CHECK(res.exhaustive);
    CHECK(res.chains.size() > 0);
    // every surviving chain satisfies its reconstructed system exactly
    for (const auto& ch : res.chains) {
        Scenario sc = testutil::scenario_of(ch);
        auto sys = build_system(a6, 6, sc);
        for (const auto& con : sys.constraints) CHECK(con.satisfied(ch.tuples.at(1)));
    }
}

TEST_CASE("extra constraints only shrink the solution set") {
    auto a6 = testutil::load("a6.json");
    auto plain = check_order(a6, 6);
    ExtraConstraints extra = [](const CharacterTable& t, long m, const Scenario&) {
        std::vector<Constraint> out;
        if (m != 6) return out;
        AffineForm f(admissible_classes(t, m).size());
        f.coeffs[0] = 1;  // eps_{2a} >= -2
        f.constant = 2;
        out.push_back({std::move(f), Relation::GeZero, 0, Provenance::TreeInequality, "test cut"});
        return out;
    };
    auto cut = check_order(a6, 6, extra);
    CHECK(cut.chains.size() <= plain.chains.size());
    std::set<std::map<long, PATuple>> plainSet;
    for (const auto& c : plain.chains) plainSet.insert(c.tuples);
    for (const auto& c : cut.chains) CHECK(plainSet.count(c.tuples) == 1);
}

TEST_CASE("workers do not change results") {
    auto a5 = testutil::load("a5.json");
    auto seq = check_order(a5, 10, nullptr, 1);
    auto par = check_order(a5, 10, nullptr, 4);
    CHECK(seq.feasible == par.feasible);
    CHECK(seq.scenarioCount == par.scenarioCount);
    REQUIRE(seq.chains.size() == par.chains.size());
    for (std::size_t i = 0; i < seq.chains.size(); ++i)
        CHECK(seq.chains[i].tuples == par.chains[i].tuples);
}

}  // TEST_SUITE
