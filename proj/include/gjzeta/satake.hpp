#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gjzeta/coeff.hpp"

namespace gjzeta {

// Exponent vector of a Laurent monomial in the Satake variables.  Slots 0..3
// hold the first alphabet alpha_1..alpha_4, slots 4..7 the primed alphabet
// alphap_1..alphap_4 of a second representation.
constexpr int kMaxVars = 8;
constexpr int kAlphapBase = 4;
using ExpVec = std::array<int8_t, kMaxVars>;

inline ExpVec exp_zero() { return ExpVec{}; }
inline int alpha_slot(int i) { return i - 1; }            // alpha_i, 1-based
inline int alphap_slot(int j) { return kAlphapBase + j - 1; }
std::string var_name(int slot);
int var_slot(const std::string& name); // -1 if unknown

bool exp_less(const ExpVec& a, const ExpVec& b);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
bool exp_is_zero(const ExpVec& e);

struct Term {
    ExpVec e{};
    CoeffValue c;
};

// Sparse Laurent polynomial over CoeffValue, terms sorted by exponent,
// coefficients nonzero.  Empty term list = zero.  The representation is
// canonical, so operator== is memberwise.
class Poly {
public:
    Poly() = default;
    explicit Poly(const CoeffValue& c);
    static Poly monomial(const ExpVec& e, const CoeffValue& c);
    static Poly variable(int slot, const CoeffField* F, int exponent = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    CoeffValue constant_value() const; // throws unless is_constant()
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly scaled(const CoeffValue& c) const;
    Poly times_monomial(const ExpVec& e, const CoeffValue& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Specialization: substitute vals[slot] for each variable occurring.
    // Variables with negative exponents require invertible values.
    CoeffValue eval(const std::vector<CoeffValue>& vals) const;

    // Exact division: on success sets quo with *this == quo * d.
    bool try_divide(const Poly& d, Poly& quo) const;

    // Componentwise minimum of exponents over all terms (zero poly -> 0).
    ExpVec content_exponent() const;
    const Term& leading() const { return t_.back(); }

    std::string str() const;

    // Accumulation support for big reductions; terms are merged at the end.
    void add_term(const ExpVec& e, const CoeffValue& c);

private:
    std::vector<Term> t_;
    friend class PolyAccum;
};

// Accumulator for summing many monomial-sized contributions without
// re-sorting; used by the coset-sum kernels.
class PolyAccum {
public:
    void add(const ExpVec& e, const CoeffValue& c);
    void add(const Poly& p);
    Poly take();
    void merge(PolyAccum& other);

private:
    std::map<ExpVec, CoeffValue> m_;
};

// Element of the fraction field of the Laurent polynomial ring.  The
// denominator is only materialized when something symbolic is genuinely
// inverted; gcd reduction is lazy (equality goes through cross
// multiplication, normalize() is called on output paths).
class SatakeRat {
public:
    SatakeRat() = default; // zero
    SatakeRat(const CoeffValue& c) : num_(Poly(c)) {}
    SatakeRat(const Poly& p) : num_(p) {}
    SatakeRat(Poly num, Poly den);

    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_.is_zero(); }
    const Poly& num() const { return num_; }
    // raw denominator; empty stands for 1
    const Poly& den_raw() const { return den_; }

    SatakeRat operator-() const;
    SatakeRat operator+(const SatakeRat& o) const;
    SatakeRat operator-(const SatakeRat& o) const;
    SatakeRat operator*(const SatakeRat& o) const;
    SatakeRat operator/(const SatakeRat& o) const;
    SatakeRat& operator+=(const SatakeRat& o) { return *this = *this + o; }
    SatakeRat& operator*=(const SatakeRat& o) { return *this = *this * o; }
    SatakeRat inverse() const;
    SatakeRat pow(long e) const;

    bool operator==(const SatakeRat& o) const; // exact, cross-multiplied
    bool operator!=(const SatakeRat& o) const { return !(*this == o); }

    bool is_constant() const;
    CoeffValue constant_value() const;
    CoeffValue eval(const std::vector<CoeffValue>& vals) const;

    // Light canonicalization: zero -> 0/1, collapse exact divisions,
    // normalize the denominator's leading coefficient and monomial content.
    void normalize();

    std::string str() const;

private:
    Poly num_, den_; // empty den_ means 1
};

} // namespace gjzeta
