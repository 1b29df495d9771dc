#pragma once

#include <random>
#include <vector>

#include "pgq/cyclo.hpp"
#include "pgq/help_engine.hpp"
#include "pgq/numbers.hpp"
#include "pgq/tables.hpp"

#ifndef PGQ_FIXTURE_DIR
#define PGQ_FIXTURE_DIR "fixtures"
#endif

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(PGQ_FIXTURE_DIR) + "/" + name;
}

inline pgq::CharacterTable load(const std::string& name) {
    return pgq::parse_table_file(fixture(name));
}

// deterministic random cyclotomic values for property tests
inline pgq::CyclotomicNumber random_cyclo(std::mt19937& rng, long maxConductor = 12) {
    static const std::vector<long> conductors{1, 3, 4, 5, 7, 8, 9, 12};
    std::vector<long> usable;
    for (long n : conductors)
        if (n <= maxConductor) usable.push_back(n);
    long n = usable[rng() % usable.size()];
    std::vector<pgq::Rat> c;
    for (long i = 0; i < pgq::euler_phi(n); ++i) {
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 2);
        pgq::Rat r(num, den);
        r.canonicalize();
        c.push_back(r);
    }
    return pgq::CyclotomicNumber::from_coeffs(n, c);
}

inline long moebius(long n) {
    long m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

// Chain of indicator tuples for an actual group element g: u = g, with the
// power layers induced by the table's power maps.
inline pgq::SolvedChain indicator_chain(const pgq::CharacterTable& t, std::size_t classIdx) {
    long n = t.classes.at(classIdx).elementOrder;
    pgq::SolvedChain ch;
    for (long e : pgq::divisors(n)) {
        auto adm = pgq::admissible_classes(t, n / e);
        std::size_t target = t.class_power(classIdx, e);
        pgq::PATuple tup(adm.size(), 0);
        bool found = false;
        for (std::size_t i = 0; i < adm.size(); ++i)
            if (adm[i] == target) {
                tup[i] = 1;
                found = true;
            }
        if (!found) throw std::logic_error("power image not admissible");
        ch.tuples[e] = std::move(tup);
    }
    return ch;
}

inline pgq::Scenario scenario_of(const pgq::SolvedChain& ch) {
    pgq::Scenario sc(ch.tuples.begin(), ch.tuples.end());
    sc.erase(1);
    return sc;
}

// Cyclic group of order 6: rows chi_j(g^k) = zeta_6^(jk), classes sorted by
// (elementOrder, size); exercises non-rational values and the Galois
// fallback of class_power.
inline pgq::CharacterTable make_c6() {
    pgq::CharacterTable t;
    t.groupName = "C6";
    t.order = 6;
    const std::vector<long> ks{0, 3, 2, 4, 1, 5};  // class index -> exponent of g
    const std::vector<std::string> names{"1a", "2a", "3a", "3b", "6a", "6b"};
    const std::vector<long> orders{1, 2, 3, 3, 6, 6};
    for (int i = 0; i < 6; ++i) t.classes.push_back({names[i], 1, orders[i]});
    auto classOf = [&](long k) {
        k = ((k % 6) + 6) % 6;
        for (std::size_t i = 0; i < 6; ++i)
            if (ks[i] == k) return i;
        return std::size_t(0);
    };
    std::vector<std::size_t> pm2, pm3;
    for (int i = 0; i < 6; ++i) {
        pm2.push_back(classOf(2 * ks[i]));
        pm3.push_back(classOf(3 * ks[i]));
    }
    t.powerMaps[2] = pm2;
    t.powerMaps[3] = pm3;
    for (long j = 0; j < 6; ++j) {
        std::vector<pgq::CyclotomicNumber> row;
        for (int i = 0; i < 6; ++i)
            row.push_back(pgq::CyclotomicNumber::root_of_unity(6, j * ks[i]));
        t.irreducibles.push_back(std::move(row));
    }
    return t;
}

}  // namespace testutil
