#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace museq {

// All integral quantities (sequence terms, lattice coordinates, Gram
// entries, determinants) live in arbitrary precision.
using Integer = mpz_class;
using Rational = mpq_class;

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer isqrt_floor(const Integer& x) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Integer dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw InputError("dot: length mismatch");
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Integer norm2(const IVec& a) { return dot(a, a); }

inline Integer parse_integer(const std::string& s) {
    Integer z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw InputError("not a decimal integer: '" + s + "'");
    return z;
}

// Accepts "p/q" or a plain integer.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("not a rational: '" + s + "'");
    if (sgn(Rational(q).get_den()) == 0)
        throw InputError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace museq
