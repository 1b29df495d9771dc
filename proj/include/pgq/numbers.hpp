#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace pgq {

inline long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Prime factorization with multiplicity, ascending.
inline std::vector<long> prime_factorization(long n) {
    std::vector<long> fs;
    for (long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            fs.push_back(p);
            n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Residues in [1, n] coprime to n; {1} for n = 1.
inline std::vector<long> coprime_residues(long n) {
    std::vector<long> r;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) r.push_back(k);
    return r;
}

}  // namespace pgq
