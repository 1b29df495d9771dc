#include "pgq/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pgq/numbers.hpp"

namespace pgq {
namespace {

// Dense polynomials over Q, little-endian coefficient vectors.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rat lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t j = 0; j < dm; ++j) a[shift + j] -= lead * m[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Exact division a / b (b monic or not; remainder must vanish).
Poly poly_div_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rat f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        // recursive fill of smaller conductors (map stays locked; recursion
        // avoided by ascending divisor order of this very loop)
        if (cache.find(d) == cache.end()) {
            Poly nd(d + 1, Rat(0));
            nd[0] = -1;
            nd[d] = 1;
            for (long e : divisors(d)) {
                if (e == d) continue;
                nd = poly_div_exact(std::move(nd), cache.at(e));
            }
            cache.emplace(d, std::move(nd));
        }
        num = poly_div_exact(std::move(num), cache.at(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

// Coefficient vector (length phi(n)) from polynomial, after reduction.
std::vector<Rat> reduce_to_basis(Poly p, long n) {
    p = poly_rem(std::move(p), cyclotomic_poly(n));
    p.resize(euler_phi(n), Rat(0));
    return p;
}

// zeta_n -> zeta_n^k on raw coefficients; k taken mod n, gcd(k, n) = 1.
std::vector<Rat> galois_raw(long n, const std::vector<Rat>& c, long k) {
    Poly p(n, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        p[mod_pos(static_cast<long>(i) * k, n)] += c[i];
    return reduce_to_basis(std::move(p), n);
}

// Q(zeta_f) -> Q(zeta_m) via zeta_f = zeta_m^(m/f); f | m.
std::vector<Rat> embed_raw(long f, const std::vector<Rat>& c, long m) {
    if (f == m) return c;
    Poly p(m, Rat(0));
    long step = m / f;
    for (std::size_t i = 0; i < c.size(); ++i) p[i * step] += c[i];
    return reduce_to_basis(std::move(p), m);
}

// Solves E y = b exactly (E given column-wise); throws if inconsistent.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> cols, std::vector<Rat> b) {
    const std::size_t rows = b.size(), ncol = cols.size();
    // augmented row-major matrix
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncol + 1, Rat(0)));
    for (std::size_t j = 0; j < ncol; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    for (std::size_t i = 0; i < rows; ++i) m[i][ncol] = b[i];

    std::vector<long> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t j = 0; j < ncol && r < rows; ++j) {
        std::size_t piv = r;
        while (piv < rows && m[piv][j] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat inv = m[r][j];
        for (std::size_t t = j; t <= ncol; ++t) m[r][t] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][j] == 0) continue;
            Rat f = m[i][j];
            for (std::size_t t = j; t <= ncol; ++t) m[i][t] -= f * m[r][t];
        }
        pivot_col[r] = static_cast<long>(j);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][ncol] != 0) throw std::logic_error("inconsistent linear system");
    std::vector<Rat> y(ncol, Rat(0));
    for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = m[i][ncol];
    return y;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : n_(1), c_{Rat(0)} {}

CyclotomicNumber CyclotomicNumber::rational(const Rat& r) {
    return CyclotomicNumber(1, {r});
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long k, long e) {
    if (k < 1) throw std::invalid_argument("root_of_unity: k must be positive");
    long r = mod_pos(e, k);
    long g = std::gcd(r == 0 ? k : r, k);
    long o = r == 0 ? 1 : k / g;  // order of zeta_k^e
    if (o == 1) return rational(Rat(1));
    Poly p(o, Rat(0));
    p[(r / g) % o] = 1;
    CyclotomicNumber x(o, reduce_to_basis(std::move(p), o));
    x.normalize();
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long n, std::vector<Rat> coeffs) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw std::invalid_argument("coefficient count does not match phi(conductor)");
    CyclotomicNumber x(n, std::move(coeffs));
    x.normalize();
    return x;
}

bool CyclotomicNumber::is_zero() const { return n_ == 1 && c_[0] == 0; }

Rat CyclotomicNumber::rational_value() const {
    if (n_ != 1) throw std::domain_error("value is irrational");
    return c_[0];
}

void CyclotomicNumber::normalize() {
    if (n_ == 1) return;
    const auto units = coprime_residues(n_);
    for (long f : divisors(n_)) {
        if (f == n_) return;  // already minimal
        bool fixed = true;
        for (long k : units) {
            if (k == 1 || (k - 1) % f != 0) continue;
            if (galois_raw(n_, c_, k) != c_) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        // value lies in Q(zeta_f); re-express in its power basis
        long phif = euler_phi(f);
        std::vector<std::vector<Rat>> cols;
        cols.reserve(phif);
        for (long j = 0; j < phif; ++j) {
            std::vector<Rat> basis(phif, Rat(0));
            basis[j] = 1;
            cols.push_back(embed_raw(f, basis, n_));
        }
        c_ = solve_exact(std::move(cols), c_);
        n_ = f;
        return;
    }
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
    long kk = mod_pos(k, n_);
    if (n_ == 1) return *this;
    if (std::gcd(kk, n_) != 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    CyclotomicNumber x(n_, galois_raw(n_, c_, kk));
    x.normalize();
    return x;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v = -v;
    return CyclotomicNumber(n_, std::move(c));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = std::lcm(a.n_, b.n_);
    auto ca = embed_raw(a.n_, a.c_, m);
    auto cb = embed_raw(b.n_, b.c_, m);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    CyclotomicNumber x(m, std::move(ca));
    x.normalize();
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = std::lcm(a.n_, b.n_);
    auto ca = embed_raw(a.n_, a.c_, m);
    auto cb = embed_raw(b.n_, b.c_, m);
    CyclotomicNumber x(m, reduce_to_basis(poly_mul(ca, cb), m));
    x.normalize();
    return x;
}

CyclotomicNumber operator*(const Rat& s, const CyclotomicNumber& a) {
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v *= s;
    CyclotomicNumber x(a.n_, std::move(c));
    x.normalize();  // s = 0 collapses to conductor 1
    return x;
}

bool CyclotomicNumber::operator<(const CyclotomicNumber& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int s = cmp(c_[i], o.c_[i]);
        if (s != 0) return s < 0;
    }
    return false;
}

nlohmann::json CyclotomicNumber::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : c_) coeffs.push_back(rat_str(v));
    return nlohmann::json{{"n", n_}, {"coeffs", coeffs}};
}

CyclotomicNumber CyclotomicNumber::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclotomic value must be {\"n\":..., \"coeffs\":[...]}");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("cyclotomic conductor must be an integer");
    long n = j["n"].get<long>();
    if (!j["coeffs"].is_array())
        throw std::invalid_argument("cyclotomic coeffs must be an array");
    std::vector<Rat> c;
    for (const auto& e : j["coeffs"]) {
        if (!e.is_string())
            throw std::invalid_argument("cyclotomic coefficients must be fraction strings");
        c.push_back(parse_rat(e.get<std::string>()));
    }
    return from_coeffs(n, std::move(c));
}

std::string CyclotomicNumber::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << rat_str(c_[i]);
        } else {
            if (c_[i] != 1) os << rat_str(c_[i]) << "*";
            os << "z" << n_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rat absolute_trace(const CyclotomicNumber& x, long m) {
    if (m < 1) throw std::invalid_argument("trace: ambient conductor must be positive");
    if (m % x.conductor() != 0)
        throw std::invalid_argument("trace: conductor does not divide ambient conductor");
    auto xm = embed_raw(x.conductor(), x.coeffs(), m);
    std::vector<Rat> total(xm.size(), Rat(0));
    for (long k : coprime_residues(m)) {
        auto g = galois_raw(m, xm, k % m == 0 ? 1 : k % m);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += g[i];
    }
    CyclotomicNumber t = CyclotomicNumber::from_coeffs(m, std::move(total));
    return t.rational_value();  // Galois-invariant sums are rational
}

CyclotomicNumber reduce_conductor(const CyclotomicNumber& x) {
    return CyclotomicNumber::from_coeffs(x.conductor(), x.coeffs());
}

bool is_p_rational(const CyclotomicNumber& x, long p) {
    if (!is_prime(p)) throw std::invalid_argument("is_p_rational: p must be prime");
    return x.conductor() % p != 0;
}

}  // namespace pgq
