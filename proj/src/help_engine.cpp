#include "pgq/help_engine.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include "pgq/numbers.hpp"
#include "pgq/simplex.hpp"

namespace pgq {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Augmentation: return "augmentation";
        case Provenance::Wagner: return "wagner";
        case Provenance::Folklore: return "folklore";
        case Provenance::MultIntegrality: return "multiplicity-integrality";
        case Provenance::MultNonnegativity: return "multiplicity-nonnegativity";
        case Provenance::TreeInequality: return "tree-inequality";
    }
    return "?";
}

Rat AffineForm::eval(const std::vector<long long>& x) const {
    Rat v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v += coeffs[i] * Rat(static_cast<long>(x[i]));
    return v;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    constant += o.constant;
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
    constant -= o.constant;
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

void AffineForm::scale(const Rat& s) {
    constant *= s;
    for (auto& c : coeffs) c *= s;
}

bool Constraint::satisfied(const std::vector<long long>& x) const {
    Rat v = form.eval(x);
    switch (rel) {
        case Relation::EqZero: return v == 0;
        case Relation::GeZero: return v >= 0;
        case Relation::ModZero: {
            if (!is_integer(v)) return false;
            Int num = v.get_num();
            return mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(modulus)) != 0;
        }
    }
    return false;
}

std::vector<std::size_t> admissible_classes(const CharacterTable& t, long n) {
    if (n == 1) return {0};
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < t.numClasses(); ++c) {
        long o = t.classes[c].elementOrder;
        if (o > 1 && n % o == 0) out.push_back(c);
    }
    return out;
}

CyclotomicNumber scenario_character_value(const CharacterTable& t, std::size_t chiRow, long n,
                                          long d, const Scenario& scenario) {
    if (n % d != 0) throw std::invalid_argument("scenario layer is not a divisor");
    long m = n / d;
    auto adm = admissible_classes(t, m);
    auto it = scenario.find(d);
    if (it == scenario.end()) {
        if (m == 1) return t.irreducibles[chiRow][0];  // u^n = 1
        throw std::invalid_argument("scenario missing divisor layer " + std::to_string(d));
    }
    const PATuple& tup = it->second;
    if (tup.size() != adm.size())
        throw std::invalid_argument("scenario tuple arity mismatch at layer " + std::to_string(d));
    auto v = CyclotomicNumber::rational(Rat(0));
    for (std::size_t i = 0; i < adm.size(); ++i)
        if (tup[i] != 0) v = v + Rat(static_cast<long>(tup[i])) * t.irreducibles[chiRow][adm[i]];
    return v;
}

AffineForm multiplicity_form(const CharacterTable& t, std::size_t chiRow, long n, long xiExp,
                             const Scenario& scenario) {
    auto adm = admissible_classes(t, n);
    AffineForm form(adm.size());
    const Rat inv_n(1, n);
    for (long d : divisors(n)) {
        auto xi_pow = CyclotomicNumber::root_of_unity(n, -xiExp * d);
        if (d == 1) {
            for (std::size_t i = 0; i < adm.size(); ++i)
                form.coeffs[i] = inv_n * absolute_trace(t.irreducibles[chiRow][adm[i]] * xi_pow, n);
        } else {
            auto val = scenario_character_value(t, chiRow, n, d, scenario);
            form.constant += inv_n * absolute_trace(val * xi_pow, n / d);
        }
    }
    return form;
}

std::vector<Constraint> congruence_constraints(const CharacterTable& t, long n, long p,
                                               const Scenario& scenario) {
    if (n % p != 0) throw std::invalid_argument("congruence_constraints: p must divide n");
    auto adm = admissible_classes(t, n);
    std::vector<Constraint> out;

    if (n != p) {
        AffineForm f(adm.size());
        bool any = false;
        for (std::size_t i = 0; i < adm.size(); ++i)
            if (t.classes[adm[i]].elementOrder == p) {
                f.coeffs[i] = 1;
                any = true;
            }
        if (any)
            out.push_back({std::move(f), Relation::ModZero, p, Provenance::Wagner,
                           "order-" + std::to_string(p) + " class sum"});
    }

    long m = n / p;
    auto adm_p = admissible_classes(t, m);
    PATuple layer;
    if (auto it = scenario.find(p); it != scenario.end()) {
        layer = it->second;
        if (layer.size() != adm_p.size())
            throw std::invalid_argument("scenario tuple arity mismatch at layer " + std::to_string(p));
    } else if (m == 1) {
        layer = {1};  // u^n = 1
    } else {
        throw std::invalid_argument("scenario missing divisor layer " + std::to_string(p));
    }
    for (std::size_t j = 0; j < adm_p.size(); ++j) {
        AffineForm f(adm.size());
        for (std::size_t i = 0; i < adm.size(); ++i)
            if (t.class_power(adm[i], p) == adm_p[j]) f.coeffs[i] = 1;
        f.constant = -Rat(static_cast<long>(layer[j]));
        out.push_back({std::move(f), Relation::ModZero, p, Provenance::Folklore,
                       "layer u^" + std::to_string(p) + " at class " + t.classes[adm_p[j]].name});
    }
    return out;
}

std::vector<long> xi_transversal(const CharacterTable& t, long n) {
    // subgroup H of (Z/n)* fixing all character values on classes of order | n
    std::vector<long> H;
    for (long k : coprime_residues(n)) {
        bool fixes = true;
        for (std::size_t c = 0; c < t.numClasses() && fixes; ++c) {
            if (n % t.classes[c].elementOrder != 0) continue;
            for (std::size_t i = 0; i < t.irreducibles.size() && fixes; ++i) {
                const auto& v = t.irreducibles[i][c];
                if (v.is_rational()) continue;
                fixes = v.galois(k) == v;
            }
        }
        if (fixes) H.push_back(k);
    }
    std::vector<bool> seen(n, false);
    std::vector<long> reps;
    for (long e = 0; e < n; ++e) {
        if (seen[e]) continue;
        reps.push_back(e);
        for (long k : H) seen[mod_pos(e * k, n)] = true;
    }
    return reps;
}

PASystem build_system(const CharacterTable& t, long n, const Scenario& scenario) {
    PASystem sys;
    sys.unitOrder = n;
    sys.vars = {n, admissible_classes(t, n)};
    const std::size_t k = sys.vars.classIndices.size();

    AffineForm aug(k);
    aug.constant = -1;
    for (auto& c : aug.coeffs) c = 1;
    sys.constraints.push_back({std::move(aug), Relation::EqZero, 0, Provenance::Augmentation,
                               "partial augmentations sum to 1"});

    for (long p : prime_divisors(n)) {
        auto cc = congruence_constraints(t, n, p, scenario);
        sys.constraints.insert(sys.constraints.end(), cc.begin(), cc.end());
    }

    for (long e : xi_transversal(t, n)) {
        for (std::size_t row = 0; row < t.irreducibles.size(); ++row) {
            AffineForm mu = multiplicity_form(t, row, n, e, scenario);
            std::string tag = "mu(zeta^" + std::to_string(e) + ", chi_" + std::to_string(row) + ")";
            sys.constraints.push_back({mu, Relation::GeZero, 0, Provenance::MultNonnegativity,
                                       tag + " >= 0"});
            // mu integral <=> L*n*mu == 0 (mod L*n), L clearing any residual
            // denominators (L = 1 for tables of algebraic integers)
            AffineForm cleared = mu;
            cleared.scale(Rat(n));
            Int L(1);
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), cleared.constant.get_den_mpz_t());
            for (const auto& c : cleared.coeffs)
                mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
            cleared.scale(Rat(L));
            long modulus = n * L.get_si();
            sys.constraints.push_back({std::move(cleared), Relation::ModZero, modulus,
                                       Provenance::MultIntegrality, tag + " integral"});
        }
    }
    return sys;
}

namespace {

std::vector<LpRow> lp_rows_of(const PASystem& sys) {
    std::vector<LpRow> rows;
    for (const auto& c : sys.constraints) {
        if (c.rel == Relation::ModZero) continue;
        LpRow r;
        r.a = c.form.coeffs;
        r.a.resize(sys.vars.classIndices.size(), Rat(0));
        r.b = -c.form.constant;
        r.equality = c.rel == Relation::EqZero;
        rows.push_back(std::move(r));
    }
    return rows;
}

long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw UnboundedRelaxation("bound exceeds machine range");
    return z.get_si();
}

// Interval propagation over integer boxes; prunes only provably impossible
// values. Returns false when the box empties.
bool propagate(const PASystem& sys, std::vector<long long>& lo, std::vector<long long>& hi) {
    const std::size_t k = lo.size();
    for (int round = 0; round < 16; ++round) {
        bool changed = false;
        for (const auto& c : sys.constraints) {
            if (c.rel == Relation::ModZero) continue;
            Rat mn = c.form.constant, mx = c.form.constant;
            for (std::size_t i = 0; i < k; ++i) {
                const Rat& a = c.form.coeffs[i];
                if (a == 0) continue;
                if (a > 0) {
                    mn += a * Rat(static_cast<long>(lo[i]));
                    mx += a * Rat(static_cast<long>(hi[i]));
                } else {
                    mn += a * Rat(static_cast<long>(hi[i]));
                    mx += a * Rat(static_cast<long>(lo[i]));
                }
            }
            if (mx < 0) return false;
            if (c.rel == Relation::EqZero && mn > 0) return false;
            for (std::size_t i = 0; i < k; ++i) {
                const Rat& a = c.form.coeffs[i];
                if (a == 0) continue;
                // rest-range of the form without variable i
                Rat restMin = mn, restMax = mx;
                if (a > 0) {
                    restMin -= a * Rat(static_cast<long>(lo[i]));
                    restMax -= a * Rat(static_cast<long>(hi[i]));
                } else {
                    restMin -= a * Rat(static_cast<long>(hi[i]));
                    restMax -= a * Rat(static_cast<long>(lo[i]));
                }
                // a*x >= -restMax (GeZero and EqZero); EqZero also a*x <= -restMin
                if (a > 0) {
                    long long nl = to_ll(ceil_rat(-restMax / a));
                    if (nl > lo[i]) { lo[i] = nl; changed = true; }
                    if (c.rel == Relation::EqZero) {
                        long long nh = to_ll(floor_rat(-restMin / a));
                        if (nh < hi[i]) { hi[i] = nh; changed = true; }
                    }
                } else {
                    long long nh = to_ll(floor_rat(-restMax / a));
                    if (nh < hi[i]) { hi[i] = nh; changed = true; }
                    if (c.rel == Relation::EqZero) {
                        long long nl = to_ll(ceil_rat(-restMin / a));
                        if (nl > lo[i]) { lo[i] = nl; changed = true; }
                    }
                }
                if (lo[i] > hi[i]) return false;
            }
        }
        if (!changed) break;
    }
    return true;
}

struct Enumerator {
    const PASystem& sys;
    std::vector<PATuple>& out;
    // constraints fully determined once variables [0, v] are fixed
    std::vector<std::vector<const Constraint*>> byLastVar;

    Enumerator(const PASystem& s, std::vector<PATuple>& o) : sys(s), out(o) {
        const std::size_t k = sys.vars.classIndices.size();
        byLastVar.resize(k + 1);
        for (const auto& c : sys.constraints) {
            std::size_t last = 0;
            bool any = false;
            for (std::size_t i = 0; i < c.form.coeffs.size(); ++i)
                if (c.form.coeffs[i] != 0) {
                    last = i + 1;
                    any = true;
                }
            byLastVar[any ? last : 0].push_back(&c);
        }
    }

    void run(std::vector<long long> lo, std::vector<long long> hi) {
        std::vector<long long> x(lo.size(), 0);
        for (const auto* c : byLastVar[0])
            if (!c->satisfied(x)) return;  // constant constraints
        rec(0, std::move(lo), std::move(hi), x);
    }

    void rec(std::size_t idx, std::vector<long long> lo, std::vector<long long> hi,
             std::vector<long long>& x) {
        if (!propagate(sys, lo, hi)) return;
        if (idx == lo.size()) {
            for (const auto& c : sys.constraints)
                if (!c.satisfied(x)) return;
            out.push_back(x);
            return;
        }
        for (long long v = lo[idx]; v <= hi[idx]; ++v) {
            x[idx] = v;
            auto nlo = lo, nhi = hi;
            nlo[idx] = nhi[idx] = v;
            bool ok = true;
            for (const auto* c : byLastVar[idx + 1])
                if (!c->satisfied(x)) { ok = false; break; }
            if (ok) rec(idx + 1, std::move(nlo), std::move(nhi), x);
        }
        x[idx] = 0;
    }
};

}  // namespace

BoundsResult derive_bounds(const PASystem& sys) {
    const std::size_t k = sys.vars.classIndices.size();
    auto rows = lp_rows_of(sys);
    BoundsResult res;
    res.lo.resize(k);
    res.hi.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rat> obj(k, Rat(0));
        obj[j] = 1;
        LpResult mn = lp_minimize(k, rows, obj);
        if (mn.status == LpStatus::Infeasible) return res;  // feasible stays false
        if (mn.status == LpStatus::Unbounded)
            throw UnboundedRelaxation("variable " + std::to_string(j) + " unbounded below");
        LpResult mx = lp_maximize(k, rows, obj);
        if (mx.status == LpStatus::Unbounded)
            throw UnboundedRelaxation("variable " + std::to_string(j) + " unbounded above");
        res.lo[j] = to_ll(ceil_rat(mn.value));
        res.hi[j] = to_ll(floor_rat(mx.value));
        if (res.lo[j] > res.hi[j]) return res;  // no integer point
    }
    if (k == 0) {
        // no variables: feasibility is decided by the constant constraints
        std::vector<long long> empty;
        for (const auto& c : sys.constraints)
            if (!c.satisfied(empty)) return res;
    }
    res.feasible = true;
    return res;
}

PASolutionSet solve(const PASystem& sys) {
    PASolutionSet out;
    BoundsResult b = derive_bounds(sys);
    out.exhaustive = true;  // LP relaxation is bounded or we threw
    if (!b.feasible) return out;
    Enumerator en(sys, out.solutions);
    en.run(b.lo, b.hi);
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

namespace {

struct LayerResult {
    std::vector<SolvedChain> chains;
    bool exhaustive = true;
    long scenarioCount = 0;
    std::map<std::string, long> constraintCounts;
};

struct LayerSolver {
    const CharacterTable& t;
    const ExtraConstraints& extra;
    int workers;
    std::map<long, LayerResult> memo;

    const LayerResult& solve_layers(long m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        LayerResult res;
        if (m == 1) {
            SolvedChain c;
            c.tuples[1] = {1};
            res.chains.push_back(std::move(c));
            return memo.emplace(m, std::move(res)).first->second;
        }
        auto ps = prime_divisors(m);
        std::vector<const LayerResult*> subs;
        for (long p : ps) subs.push_back(&solve_layers(m / p));
        for (const auto* s : subs) res.exhaustive = res.exhaustive && s->exhaustive;

        // glue one chain per prime into a consistent scenario
        std::set<Scenario> scen_set;
        bool anyEmpty = false;
        for (const auto* s : subs) anyEmpty = anyEmpty || s->chains.empty();
        std::vector<std::size_t> pick(ps.size(), 0);
        const auto divs = divisors(m);
        while (!anyEmpty) {
            Scenario sc;
            bool ok = true;
            for (long e : divs) {
                if (e == 1) continue;
                bool have = false;
                PATuple common;
                for (std::size_t pi = 0; pi < ps.size() && ok; ++pi) {
                    if (e % ps[pi] != 0) continue;
                    const auto& chain = subs[pi]->chains[pick[pi]];
                    const PATuple& tp = chain.tuples.at(e / ps[pi]);
                    if (!have) {
                        common = tp;
                        have = true;
                    } else if (common != tp) {
                        ok = false;
                    }
                }
                if (!ok) break;
                sc[e] = std::move(common);
            }
            if (ok) scen_set.insert(std::move(sc));
            // next combination
            std::size_t i = 0;
            while (i < ps.size()) {
                if (++pick[i] < subs[i]->chains.size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == ps.size()) break;
        }

        std::vector<Scenario> scenarios(scen_set.begin(), scen_set.end());
        res.scenarioCount = static_cast<long>(scenarios.size());

        auto solve_one = [&](const Scenario& sc) {
            PASystem sys = build_system(t, m, sc);
            if (extra) {
                auto more = extra(t, m, sc);
                sys.constraints.insert(sys.constraints.end(), more.begin(), more.end());
            }
            return std::make_pair(solve(sys), std::move(sys));
        };

        std::vector<std::pair<PASolutionSet, PASystem>> solved(scenarios.size());
        if (workers > 1 && scenarios.size() > 1) {
            std::vector<std::future<std::pair<PASolutionSet, PASystem>>> futs;
            for (const auto& sc : scenarios)
                futs.push_back(std::async(std::launch::async, solve_one, std::cref(sc)));
            for (std::size_t i = 0; i < futs.size(); ++i) solved[i] = futs[i].get();
        } else {
            for (std::size_t i = 0; i < scenarios.size(); ++i) solved[i] = solve_one(scenarios[i]);
        }

        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            const auto& [sol, sys] = solved[i];
            res.exhaustive = res.exhaustive && sol.exhaustive;
            for (const auto& c : sys.constraints) ++res.constraintCounts[provenance_name(c.provenance)];
            for (const auto& tup : sol.solutions) {
                SolvedChain chain;
                chain.tuples = scenarios[i];
                chain.tuples[1] = tup;
                res.chains.push_back(std::move(chain));
            }
        }
        return memo.emplace(m, std::move(res)).first->second;
    }
};

}  // namespace

OrderCheckResult check_order(const CharacterTable& t, long n, const ExtraConstraints& extra,
                             int workers) {
    if (n < 1) throw std::invalid_argument("check_order: order must be positive");
    LayerSolver ls{t, extra, workers, {}};
    const LayerResult& top = ls.solve_layers(n);
    OrderCheckResult res;
    res.order = n;
    res.feasible = !top.chains.empty();
    res.exhaustive = top.exhaustive;
    res.scenarioCount = top.scenarioCount;
    res.chains = top.chains;
    // aggregate provenance over all layers
    for (const auto& [m, lr] : ls.memo)
        for (const auto& [name, cnt] : lr.constraintCounts) res.constraintCounts[name] += cnt;
    return res;
}

}  // namespace pgq
