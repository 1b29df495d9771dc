#include "pgq/tree_criterion.hpp"

#include <fstream>

#include "pgq/numbers.hpp"

namespace pgq {

namespace {

BrauerLine parse_one_block(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("block entry must be an object");
    for (const char* key : {"prime", "principal", "exceptionalMultiplicity", "lineOrder"})
        if (!j.contains(key)) throw ParseError(std::string("block missing field '") + key + "'");
    BrauerLine b;
    if (!j["prime"].is_number_integer() || !is_prime(j["prime"].get<long>()))
        throw ParseError("block prime must be a prime number");
    b.prime = j["prime"].get<long>();
    if (b.prime == 2) throw ParseError("block prime must be odd");
    if (!j["principal"].is_boolean() || !j["principal"].get<bool>())
        throw ParseError("only principal blocks are supported");
    if (!j["exceptionalMultiplicity"].is_number_integer() ||
        j["exceptionalMultiplicity"].get<long>() != 1)
        throw ParseError("exceptional multiplicity must be 1 (p ordinary characters, p-1 edges)");
    if (!j["lineOrder"].is_array() || static_cast<long>(j["lineOrder"].size()) != b.prime)
        throw ParseError("lineOrder must list exactly p character rows");
    for (const auto& e : j["lineOrder"]) {
        if (!e.is_number_integer() || e.get<long>() < 0)
            throw ParseError("lineOrder entries must be non-negative row indices");
        b.lineOrder.push_back(e.get<std::size_t>());
    }
    return b;
}

}  // namespace

std::vector<BrauerLine> parse_blocks(const nlohmann::json& doc) {
    std::vector<BrauerLine> out;
    if (doc.is_array()) {
        for (const auto& j : doc) out.push_back(parse_one_block(j));
    } else {
        out.push_back(parse_one_block(doc));
    }
    return out;
}

std::vector<BrauerLine> parse_blocks_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read block file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed block document " + path + ": " + e.what());
    }
    return parse_blocks(doc);
}

namespace {

void check_line_shape(const CharacterTable& t, const BrauerLine& line) {
    if (line.prime < 3 || !is_prime(line.prime))
        throw std::invalid_argument("line prime must be an odd prime");
    if (static_cast<long>(line.lineOrder.size()) != line.prime)
        throw std::invalid_argument("line must list exactly p characters");
    for (auto r : line.lineOrder)
        if (r >= t.irreducibles.size())
            throw std::invalid_argument("line character index out of range");
    const auto one = CyclotomicNumber::rational(Rat(1));
    for (std::size_t c = 0; c < t.numClasses(); ++c)
        if (t.irreducibles[line.lineOrder[0]][c] != one)
            throw std::invalid_argument("first line entry must be the trivial character");
}

std::vector<CyclotomicNumber> nu_of_order(const CharacterTable& t,
                                          const std::vector<std::size_t>& order) {
    std::vector<CyclotomicNumber> nu(t.numClasses(), CyclotomicNumber::rational(Rat(0)));
    for (std::size_t c = 0; c < t.numClasses(); ++c) {
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& v = t.irreducibles[order[i]][c];
            nu[c] = (i % 2 == 0) ? nu[c] - v : nu[c] + v;  // signs (-1)^(i+1)
        }
    }
    return nu;
}

bool nu_vanishes_on_p_regular(const CharacterTable& t, long p,
                              const std::vector<CyclotomicNumber>& nu) {
    for (std::size_t c = 0; c < t.numClasses(); ++c)
        if (t.classes[c].elementOrder % p != 0 && !nu[c].is_zero()) return false;
    return true;
}

}  // namespace

std::vector<CyclotomicNumber> nu_values_exact(const CharacterTable& t, const BrauerLine& line) {
    check_line_shape(t, line);
    return nu_of_order(t, line.lineOrder);
}

std::vector<Rat> nu_values(const CharacterTable& t, const BrauerLine& line) {
    auto nu = nu_values_exact(t, line);
    std::vector<Rat> out;
    out.reserve(nu.size());
    for (const auto& v : nu) out.push_back(v.rational_value());
    return out;
}

bool verify_line(const CharacterTable& t, const BrauerLine& line) {
    check_line_shape(t, line);
    return nu_vanishes_on_p_regular(t, line.prime, nu_of_order(t, line.lineOrder));
}

HypothesisReport check_hypotheses(const CharacterTable& t, const BrauerLine& line) {
    check_line_shape(t, line);
    HypothesisReport rep;
    const long p = line.prime;
    rep.sylowOrderP = t.order % p == 0 && (t.order / p) % p != 0;
    long pClasses = 0;
    for (const auto& c : t.classes)
        if (c.elementOrder == p) ++pClasses;
    rep.singlePClass = pClasses == 1;
    rep.lineVerified = verify_line(t, line);
    rep.pRational = true;
    for (auto r : line.lineOrder)
        for (std::size_t c = 0; c < t.numClasses() && rep.pRational; ++c)
            rep.pRational = is_p_rational(t.irreducibles[r][c], p);
    rep.applicable = rep.sylowOrderP && rep.singlePClass && rep.lineVerified && rep.pRational;
    if (rep.lineVerified) {
        for (std::size_t i = 0; i < line.lineOrder.size(); ++i) {
            for (std::size_t j = i + 1; j < line.lineOrder.size(); ++j) {
                auto alt = line.lineOrder;
                std::swap(alt[i], alt[j]);
                if (alt[0] != line.lineOrder[0]) continue;  // trivial stays first
                if (nu_vanishes_on_p_regular(t, p, nu_of_order(t, alt)))
                    rep.alternativeOrderings.push_back(std::move(alt));
            }
        }
    }
    return rep;
}

bool p_section_constancy(const CharacterTable& t, const BrauerLine& line) {
    check_line_shape(t, line);
    const long p = line.prime;
    std::vector<std::size_t> targets;
    for (std::size_t c = 0; c < t.numClasses(); ++c) {
        long o = t.classes[c].elementOrder;
        if (o % p == 0 && o != p) targets.push_back(c);
    }
    if (targets.empty()) return true;
    std::vector<std::size_t> ys;
    for (std::size_t c = 0; c < t.numClasses(); ++c)
        if (t.classes[c].elementOrder == p) ys.push_back(c);
    if (ys.size() != 1) return false;  // no single reference class to compare against
    for (auto h : targets)
        for (auto r : line.lineOrder)
            if (t.irreducibles[r][h] != t.irreducibles[r][ys[0]]) return false;
    return true;
}

Constraint line_inequality(const CharacterTable& t, const BrauerLine& line, long q, long xiExpQ,
                           const Scenario& scenario) {
    check_line_shape(t, line);
    const long p = line.prime;
    if (!is_prime(q) || q == p) throw std::invalid_argument("q must be a prime different from p");
    if (!verify_line(t, line)) throw std::logic_error("line inequality: nu test not verified");
    for (auto r : line.lineOrder)
        for (std::size_t c = 0; c < t.numClasses(); ++c)
            if (!is_p_rational(t.irreducibles[r][c], p))
                throw std::logic_error("line inequality: character values not p-rational");

    const long n = p * q;
    const long e = mod_pos(xiExpQ, q);
    // xi = zeta_q^e = zeta_n^(e*p); zeta_p = zeta_n^q
    AffineForm rhs = multiplicity_form(t, line.lineOrder[0], n, mod_pos(e * p, n), scenario);
    AffineForm lhs;
    for (std::size_t i = 0; i < line.lineOrder.size(); ++i) {
        AffineForm mu = multiplicity_form(t, line.lineOrder[i], n, mod_pos(e * p + q, n), scenario);
        if (i % 2 == 0)
            lhs -= mu;  // (-1)^(i+1)
        else
            lhs += mu;
    }
    rhs -= lhs;  // mu(xi, chi_1) - sum >= 0
    std::string which = e == 0 ? "xi=1 instance" : (e == 1 ? "xi=zeta_q instance"
                                                           : "extra Galois instance xi=zeta_q^" + std::to_string(e));
    return {std::move(rhs), Relation::GeZero, 0, Provenance::TreeInequality,
            "p=" + std::to_string(p) + " line, " + which};
}

std::vector<Constraint> line_constraints(const CharacterTable& t, const BrauerLine& line, long q,
                                         const Scenario& scenario) {
    const long p = line.prime;
    const long n = p * q;
    std::vector<Constraint> out;
    for (long r : xi_transversal(t, n)) {
        if (r % p != 0) continue;  // keep the q-th roots zeta_n^r, r = e*p
        out.push_back(line_inequality(t, line, q, r / p, scenario));
    }
    return out;
}

std::string criterion_verdict_name(CriterionVerdict v) {
    switch (v) {
        case CriterionVerdict::NoPqUnits: return "no_pq_units";
        case CriterionVerdict::EdgeExists: return "edge_exists";
        case CriterionVerdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

CriterionResult apply_criterion(const CharacterTable& t, const BrauerLine& line, long q) {
    CriterionResult res;
    res.hypotheses = check_hypotheses(t, line);
    const long p = line.prime;
    res.sectionConstancy = p_section_constancy(t, line);

    if (res.hypotheses.applicable && res.hypotheses.singlePClass) {
        std::size_t y = 0;
        for (std::size_t c = 0; c < t.numClasses(); ++c)
            if (t.classes[c].elementOrder == p) y = c;
        bool ok = true;
        for (auto r : line.lineOrder) {
            const auto diff = t.irreducibles[r][y] - t.irreducibles[r][0];
            if (!diff.is_rational() || !is_integer(diff.rational_value())) {
                ok = false;
                break;
            }
            Int num = diff.rational_value().get_num();
            if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
                ok = false;  // chi(y) == chi(1) mod p must hold
                break;
            }
        }
        auto nu = nu_values_exact(t, line);
        if (ok && nu[y].is_rational() && is_integer(nu[y].rational_value())) {
            res.nuAtY = nu[y].rational_value();
            Int num = res.nuAtY.get_num();
            ok = mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)) != 0 &&
                 res.nuAtY != 0;
        } else {
            ok = false;
        }
        res.congruencesOk = ok;
    }

    if (!(res.hypotheses.applicable && res.sectionConstancy && res.congruencesOk)) {
        res.verdict = CriterionVerdict::NotApplicable;
        return res;
    }
    if (!is_prime(q) || q == p) throw std::invalid_argument("q must be a prime different from p");
    if (spectrum(t).count(p * q)) {
        res.verdict = CriterionVerdict::EdgeExists;
        return res;
    }
    res.verdict = CriterionVerdict::NoPqUnits;
    if (p == 3 && q == 2)
        res.annotation = "order-6 conclusion inherited from an external theorem (Theorem D)";
    return res;
}

}  // namespace pgq
