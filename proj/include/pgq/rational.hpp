#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pgq {

// Exact rational scalar used throughout. All arithmetic in this project is
// exact; floating point never appears in values or reports.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Formats as "num" or "num/den", the only forms the data files accept.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    try {
        r = Rat(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

}  // namespace pgq
