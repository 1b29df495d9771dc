#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pgq/rational.hpp"

namespace pgq {

// An exact element of a cyclotomic field Q(zeta_n), stored as the residue of
// a polynomial in zeta_n modulo the n-th cyclotomic polynomial.  Values are
// kept canonical: the stored conductor is the smallest f with the value in
// Q(zeta_f), so equality is plain field comparison.  Instances are immutable
// after construction and safe to share across threads.
class CyclotomicNumber {
  public:
    CyclotomicNumber();  // zero

    static CyclotomicNumber rational(const Rat& r);
    // zeta_k^e, any integer e; k >= 1.
    static CyclotomicNumber root_of_unity(long k, long e);
    // Interprets coeffs (length phi(n)) as a polynomial in zeta_n and
    // canonicalizes.  Throws std::invalid_argument on a length mismatch.
    static CyclotomicNumber from_coeffs(long n, std::vector<Rat> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    Rat rational_value() const;  // throws std::domain_error if irrational

    // Galois action zeta_n -> zeta_n^k; requires gcd(k, conductor) = 1.
    CyclotomicNumber galois(long k) const;
    CyclotomicNumber conjugate() const { return galois(-1); }

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber&, const CyclotomicNumber&);
    friend CyclotomicNumber operator-(const CyclotomicNumber&, const CyclotomicNumber&);
    friend CyclotomicNumber operator*(const CyclotomicNumber&, const CyclotomicNumber&);
    friend CyclotomicNumber operator*(const Rat&, const CyclotomicNumber&);

    bool operator==(const CyclotomicNumber& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }
    // Deterministic total order (conductor, then coefficients).
    bool operator<(const CyclotomicNumber& o) const;

    nlohmann::json to_json() const;
    static CyclotomicNumber from_json(const nlohmann::json& j);
    std::string str() const;  // human-readable, e.g. "1 + -2*z6"

  private:
    long n_;              // conductor, never 2 mod 4
    std::vector<Rat> c_;  // length phi(n_)

    CyclotomicNumber(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    void normalize();
};

// Tr_{Q(zeta_m)/Q}(x), the sum over all Galois conjugates of x inside
// Q(zeta_m).  Requires conductor(x) | m.
Rat absolute_trace(const CyclotomicNumber& x, long m);

// Canonical minimal-conductor representation; idempotent.  Values produced
// by this library are already canonical, so this is the identity on them.
CyclotomicNumber reduce_conductor(const CyclotomicNumber& x);

// True iff p does not divide the minimal conductor of x; for odd p this
// certifies that p is unramified in Q(x).
bool is_p_rational(const CyclotomicNumber& x, long p);

}  // namespace pgq
