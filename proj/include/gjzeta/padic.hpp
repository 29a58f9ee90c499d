#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gjzeta/errors.hpp"

namespace gjzeta {

// Q_p bookkeeping: the prime, and powers of p up to the 64-bit working cap.
// Interned and immutable.
struct PadicRing {
    long p;
    int max_rel; // largest r with p^r < 2^62
    std::vector<uint64_t> power;

    static const PadicRing* get(long p);
    uint64_t pw(int i) const { return power.at(static_cast<size_t>(i)); }
};

bool is_prime(long p);

// Element of Q_p at tracked relative precision: varpi^v * u with u a unit
// known modulo p^r.  Sums respect the ultrametric; cancellation that eats the
// whole precision window raises PrecisionError instead of silently absorbing.
// The exact zero is a distinguished state.
class PadicScalar {
public:
    PadicScalar() = default; // exact zero, ring-less
    static PadicScalar zero(const PadicRing* R);
    static PadicScalar from_integer(const PadicRing* R, const mpz_class& z, int N);
    static PadicScalar from_rational(const PadicRing* R, const mpq_class& x, int N);
    static PadicScalar unit_times_power(const PadicRing* R, int v, uint64_t unit, int r);
    static PadicScalar varpi_power(const PadicRing* R, int v, int r);

    bool is_exact_zero() const { return zero_; }
    int val() const; // throws DomainError on exact zero
    int rel_prec() const { return r_; }
    const PadicRing* ring() const { return R_; }

    // Unit part modulo p^c (c >= 1); PrecisionError if c exceeds the
    // tracked relative precision.
    uint64_t unit_mod(int c) const;

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar inverse() const;
    PadicScalar operator/(const PadicScalar& o) const { return *this * o.inverse(); }

    // True if the two values agree modulo p^k (absolute precision k).  Never
    // throws on exact zeros; throws PrecisionError only if the comparison is
    // genuinely unresolvable at the tracked precision.
    bool congruent(const PadicScalar& o, int k) const;

    // |x| = q^{-v} as an exact rational (q = p here).
    mpq_class abs_rational() const;

    std::string str() const;

private:
    const PadicRing* R_ = nullptr;
    bool zero_ = true;
    int v_ = 0;
    int r_ = 0;
    uint64_t u_ = 0;
};

} // namespace gjzeta
