#pragma once

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgq/cyclo.hpp"

namespace pgq {

// Malformed input documents (tables, block files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConjugacyClassInfo {
    std::string name;
    long size = 0;
    long elementOrder = 0;
};

struct PrimeGraph {
    std::set<long> vertices;
    std::set<std::pair<long, long>> edges;  // stored with p < q
    bool has_edge(long p, long q) const {
        if (p > q) std::swap(p, q);
        return edges.count({p, q}) != 0;
    }
};

// Ordinary character table: conjugacy class data, prime power maps and the
// matrix of irreducible character values (rows = characters, identity class
// first, trivial character first).  Immutable after parsing + validation.
struct CharacterTable {
    std::string groupName;
    long order = 0;
    std::vector<ConjugacyClassInfo> classes;
    std::map<long, std::vector<std::size_t>> powerMaps;  // prime -> class map
    std::vector<std::vector<CyclotomicNumber>> irreducibles;

    std::size_t numClasses() const { return classes.size(); }
    long exponent() const;
    long degree(std::size_t row) const;  // chi(1), throws if not a positive integer

    // Class of g^d for g in class c.  Composes the stored prime power maps;
    // for prime factors coprime to the exponent the image is located through
    // the Galois action on table columns.
    std::size_t class_power(std::size_t c, long d) const;
};

CharacterTable parse_table(const nlohmann::json& doc);
CharacterTable parse_table_file(const std::string& path);

struct ValidationEntry {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool all_pass() const;
    const ValidationEntry* find(const std::string& check) const;
};

// Exact checks: class sizes, trivial character, both orthogonality
// relations, degree sum, power-map consistency.  Failures are report
// entries, never exceptions.
ValidationReport validate(const CharacterTable& t);

// Set of element orders visible in the class list.
std::set<long> spectrum(const CharacterTable& t);

PrimeGraph prime_graph(const CharacterTable& t);

}  // namespace pgq
