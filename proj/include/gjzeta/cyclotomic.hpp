#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace gjzeta {

// Polynomial in zeta_M over Q, coefficients low degree first, trailing zeros
// trimmed.  The zero polynomial is the empty vector.
using QVec = std::vector<mpq_class>;

void qvec_trim(QVec& a);
bool qvec_is_zero(const QVec& a);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_neg(const QVec& a);
void qvec_scale(QVec& a, const mpq_class& s);

mpq_class int_pow(long base, long e); // base^e as exact rational, e may be negative

// The cyclotomic field Q(zeta_M), with reduction data for the M-th cyclotomic
// polynomial.  Instances are interned and immutable; safe for concurrent use
// after get().  The residue cardinality q rides along because the coefficient
// layer adjoins a formal square root of it.
class CoeffField {
public:
    static const CoeffField* get(unsigned M, long q);

    unsigned M() const { return M_; }
    long q() const { return q_; }
    unsigned degree() const { return deg_; } // phi(M)

    // Reduces a polynomial of arbitrary degree modulo Phi_M.
    void reduce(QVec& a) const;
    QVec mul(const QVec& a, const QVec& b) const;
    QVec inv(const QVec& a) const; // throws DomainError on zero
    QVec zeta_pow(long j) const;   // zeta_M^j, reduced

private:
    CoeffField(unsigned M, long q);
    unsigned M_;
    long q_;
    unsigned deg_;
    QVec phi_;                      // monic Phi_M, degree deg_
    std::vector<QVec> high_power_;  // x^(deg_+i) mod Phi_M for i in [0, deg_-1)
};

// Coefficients of Phi_M over Z (helper, exposed for tests).
std::vector<mpz_class> cyclotomic_polynomial(unsigned M);

} // namespace gjzeta
