#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace liesym {

// Exact arbitrary-precision rational scalar. GMP's canonical form (reduced,
// positive denominator) is maintained by mpq_class itself.
using Rational = mpq_class;

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

// The two-argument mpq_class constructor does not reduce; this one does.
inline Rational rat_of(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
inline Rational rat_of(long num, long den) { return rat_of(mpz_class(num), mpz_class(den)); }

// Accepts "p", "-p", "p/q". Returns nullopt on malformed input or zero
// denominator instead of letting GMP abort.
inline std::optional<Rational> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    mpq_t tmp;
    mpq_init(tmp);
    if (mpq_set_str(tmp, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        return std::nullopt;
    }
    mpq_canonicalize(tmp);
    Rational out(tmp);
    mpq_clear(tmp);
    return out;
}

// Bit size of the numerator, used for pivot selection in elimination.
inline size_t rat_bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

}  // namespace liesym
