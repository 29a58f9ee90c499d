#pragma once

#include <string>

#include "gjzeta/cyclotomic.hpp"

namespace gjzeta {

// Exact scalar in Q(zeta_M)(sqrt q): a pair of Q(zeta_M) components
// (rational part, sqrt-q part).  All integral values appearing in the engine
// -- character values, congruence-subgroup volumes, powers of q^(1/2) from
// the modulus character -- live here.  Values are immutable in spirit:
// every operation returns a fresh value.
//
// A default-constructed CoeffValue is the untyped exact zero; it combines
// with values of any field.
class CoeffValue {
public:
    CoeffValue() = default;
    explicit CoeffValue(const CoeffField* F) : F_(F) {}
    CoeffValue(const CoeffField* F, const mpq_class& r) : F_(F) {
        if (r != 0) rat_.push_back(r);
    }

    static CoeffValue rational(const CoeffField* F, const mpq_class& r) { return CoeffValue(F, r); }
    static CoeffValue one(const CoeffField* F) { return CoeffValue(F, 1); }
    // zeta_M^j
    static CoeffValue zeta_pow(const CoeffField* F, long j);
    // q^(h/2) for integer h (h odd lands in the sqrt-q component)
    static CoeffValue q_half_power(const CoeffField* F, long h);
    static CoeffValue sqrt_q(const CoeffField* F) { return q_half_power(F, 1); }

    const CoeffField* field() const { return F_; }
    bool is_zero() const { return rat_.empty() && srt_.empty(); }
    bool is_rational() const { return srt_.empty() && rat_.size() <= 1; }
    mpq_class rational_value() const; // throws unless is_rational()

    const QVec& rat_component() const { return rat_; }
    const QVec& srt_component() const { return srt_; }

    CoeffValue operator-() const;
    CoeffValue operator+(const CoeffValue& o) const;
    CoeffValue operator-(const CoeffValue& o) const;
    CoeffValue operator*(const CoeffValue& o) const;
    CoeffValue& operator+=(const CoeffValue& o) { return *this = *this + o; }
    CoeffValue& operator*=(const CoeffValue& o) { return *this = *this * o; }
    CoeffValue inverse() const;
    CoeffValue operator/(const CoeffValue& o) const { return *this * o.inverse(); }

    bool operator==(const CoeffValue& o) const;
    bool operator!=(const CoeffValue& o) const { return !(*this == o); }

    // Rational upper bound on the complex absolute value (embeds zeta_M as a
    // root of unity and sqrt q as the positive root).  Used by the certified
    // tail checks; it is a bound, not the exact modulus.
    mpq_class abs_upper_bound() const;

    std::string str() const;

private:
    const CoeffField* resolve_field(const CoeffValue& o) const;
    const CoeffField* F_ = nullptr;
    QVec rat_, srt_; // value = rat_ + srt_ * sqrt(q)
};

} // namespace gjzeta
