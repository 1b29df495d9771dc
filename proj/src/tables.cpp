#include "pgq/tables.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "pgq/numbers.hpp"

namespace pgq {

long CharacterTable::exponent() const {
    long e = 1;
    for (const auto& c : classes) e = std::lcm(e, c.elementOrder);
    return e;
}

long CharacterTable::degree(std::size_t row) const {
    const Rat d = irreducibles.at(row).at(0).rational_value();
    if (!is_integer(d) || d <= 0) throw std::domain_error("character degree is not a positive integer");
    return static_cast<long>(d.get_num().get_si());
}

namespace {

// Image of class c under zeta -> zeta^q on columns, for q coprime to every
// element order. Columns separate classes, so the image is unique.
std::size_t galois_class_image(const CharacterTable& t, std::size_t c, long q) {
    for (std::size_t d = 0; d < t.numClasses(); ++d) {
        if (t.classes[d].elementOrder != t.classes[c].elementOrder) continue;
        bool match = true;
        for (std::size_t i = 0; i < t.irreducibles.size() && match; ++i)
            match = t.irreducibles[i][d] == t.irreducibles[i][c].galois(q);
        if (match) return d;
    }
    throw std::logic_error("no class matches Galois-twisted column");
}

}  // namespace

std::size_t CharacterTable::class_power(std::size_t c, long d) const {
    if (d < 1) throw std::invalid_argument("class_power: exponent must be positive");
    long o = classes.at(c).elementOrder;
    long e = d % o;
    if (e == 0) return 0;  // identity class is first
    std::size_t cur = c;
    for (long q : prime_factorization(e)) {
        auto it = powerMaps.find(q);
        if (it != powerMaps.end())
            cur = it->second.at(cur);
        else
            cur = galois_class_image(*this, cur, q);
    }
    return cur;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

long require_positive_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long>() < 1) fail(what + " must be a positive integer");
    return j.get<long>();
}

}  // namespace

CharacterTable parse_table(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("table document must be an object");
    for (const char* key : {"groupName", "order", "classes", "powerMaps", "irreducibles"})
        if (!doc.contains(key)) fail(std::string("table document missing field '") + key + "'");

    CharacterTable t;
    if (!doc["groupName"].is_string()) fail("groupName must be a string");
    t.groupName = doc["groupName"].get<std::string>();
    t.order = require_positive_int(doc["order"], "order");

    if (!doc["classes"].is_array() || doc["classes"].empty()) fail("classes must be a non-empty array");
    for (const auto& cj : doc["classes"]) {
        if (!cj.is_object() || !cj.contains("name") || !cj.contains("size") || !cj.contains("elementOrder"))
            fail("each class needs name, size, elementOrder");
        ConjugacyClassInfo info;
        if (!cj["name"].is_string()) fail("class name must be a string");
        info.name = cj["name"].get<std::string>();
        info.size = require_positive_int(cj["size"], "class size");
        info.elementOrder = require_positive_int(cj["elementOrder"], "class elementOrder");
        t.classes.push_back(std::move(info));
    }
    if (t.classes[0].elementOrder != 1 || t.classes[0].size != 1)
        fail("identity class (order 1, size 1) must be listed first");

    const std::size_t k = t.classes.size();
    if (!doc["irreducibles"].is_array() || doc["irreducibles"].size() != k)
        fail("irreducibles must be an array with one row per class");
    for (std::size_t i = 0; i < k; ++i) {
        const auto& rj = doc["irreducibles"][i];
        if (!rj.is_array() || rj.size() != k)
            fail("irreducible row " + std::to_string(i) + " must have one value per class");
        std::vector<CyclotomicNumber> row;
        for (std::size_t j = 0; j < k; ++j) {
            try {
                row.push_back(CyclotomicNumber::from_json(rj[j]));
            } catch (const std::invalid_argument& e) {
                fail("irreducibles[" + std::to_string(i) + "][" + std::to_string(j) + "]: " + e.what());
            }
        }
        t.irreducibles.push_back(std::move(row));
    }

    if (!doc["powerMaps"].is_object()) fail("powerMaps must be an object keyed by prime");
    for (const auto& [key, arr] : doc["powerMaps"].items()) {
        long p = 0;
        try {
            p = std::stol(key);
        } catch (...) {
            fail("powerMaps key '" + key + "' is not a prime");
        }
        if (!is_prime(p)) fail("powerMaps key '" + key + "' is not a prime");
        if (!arr.is_array() || arr.size() != k) fail("powerMaps[" + key + "] must map every class");
        std::vector<std::size_t> pm;
        for (const auto& e : arr) {
            if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() >= static_cast<long>(k))
                fail("powerMaps[" + key + "] contains an out-of-range class index");
            pm.push_back(e.get<std::size_t>());
        }
        t.powerMaps.emplace(p, std::move(pm));
    }
    for (long p : prime_divisors(t.exponent()))
        if (!t.powerMaps.count(p))
            fail("missing power map for prime " + std::to_string(p) + " dividing the exponent");

    return t;
}

CharacterTable parse_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read table file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail("malformed table document " + path + ": " + e.what());
    }
    return parse_table(doc);
}

bool ValidationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

const ValidationEntry* ValidationReport::find(const std::string& check) const {
    for (const auto& e : entries)
        if (e.check == check) return &e;
    return nullptr;
}

ValidationReport validate(const CharacterTable& t) {
    ValidationReport rep;
    const std::size_t k = t.numClasses();
    const auto one = CyclotomicNumber::rational(Rat(1));

    {
        long total = 0;
        for (const auto& c : t.classes) total += c.size;
        rep.entries.push_back({"class sizes", total == t.order,
                               total == t.order ? "" : "sizes sum to " + std::to_string(total)});
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; j < k && ok; ++j)
            if (t.irreducibles[0][j] != one) {
                ok = false;
                detail = "first row is not the trivial character at class " + t.classes[j].name;
            }
        rep.entries.push_back({"trivial character", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = i; j < k && ok; ++j) {
                auto s = CyclotomicNumber::rational(Rat(0));
                for (std::size_t c = 0; c < k; ++c)
                    s = s + Rat(t.classes[c].size) *
                                (t.irreducibles[i][c] * t.irreducibles[j][c].conjugate());
                auto want = CyclotomicNumber::rational(i == j ? Rat(t.order) : Rat(0));
                if (s != want) {
                    ok = false;
                    detail = "rows (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        }
        rep.entries.push_back({"row orthogonality", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t c = 0; c < k && ok; ++c) {
            for (std::size_t d = c; d < k && ok; ++d) {
                auto s = CyclotomicNumber::rational(Rat(0));
                for (std::size_t i = 0; i < k; ++i)
                    s = s + t.irreducibles[i][c] * t.irreducibles[i][d].conjugate();
                Rat want(0);
                if (c == d) {
                    want = Rat(t.order) / Rat(t.classes[c].size);
                }
                if (s != CyclotomicNumber::rational(want)) {
                    ok = false;
                    detail = "columns (" + t.classes[c].name + "," + t.classes[d].name + ")";
                }
            }
        }
        rep.entries.push_back({"column orthogonality", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        Rat total(0);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& v = t.irreducibles[i][0];
            if (!v.is_rational() || !is_integer(v.rational_value()) || v.rational_value() <= 0) {
                ok = false;
                detail = "degree of row " + std::to_string(i) + " is not a positive integer";
                break;
            }
            total += v.rational_value() * v.rational_value();
        }
        if (ok && total != t.order) {
            ok = false;
            detail = "degree squares sum to " + rat_str(total);
        }
        rep.entries.push_back({"degree sum", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& [p, pm] : t.powerMaps) {
            for (std::size_t c = 0; c < k && ok; ++c) {
                long o = t.classes[c].elementOrder;
                long want = o / std::gcd(o, p);
                if (t.classes[pm[c]].elementOrder != want) {
                    ok = false;
                    detail = "power map " + std::to_string(p) + " at class " + t.classes[c].name;
                }
            }
            if (!ok) break;
        }
        rep.entries.push_back({"power maps", ok, detail});
    }
    {
        const auto* row = rep.find("row orthogonality");
        const auto* col = rep.find("column orthogonality");
        bool ok = row->pass && col->pass;
        rep.entries.push_back({"orthogonality", ok, ok ? "" : "see row/column entries"});
    }
    return rep;
}

std::set<long> spectrum(const CharacterTable& t) {
    std::set<long> s;
    for (const auto& c : t.classes) s.insert(c.elementOrder);
    return s;
}

PrimeGraph prime_graph(const CharacterTable& t) {
    PrimeGraph g;
    for (const auto& c : t.classes)
        for (long p : prime_divisors(c.elementOrder)) g.vertices.insert(p);
    for (long p : g.vertices)
        for (long q : g.vertices) {
            if (p >= q) continue;
            for (const auto& c : t.classes)
                if (c.elementOrder % (p * q) == 0) {
                    g.edges.insert({p, q});
                    break;
                }
        }
    return g;
}

}  // namespace pgq
