#include "gjzeta/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gjzeta/errors.hpp"

namespace gjzeta {

void qvec_trim(QVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    qvec_trim(r);
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    qvec_trim(r);
    return r;
}

QVec qvec_neg(const QVec& a) {
    QVec r(a);
    for (auto& c : r) c = -c;
    return r;
}

void qvec_scale(QVec& a, const mpq_class& s) {
    if (s == 0) {
        a.clear();
        return;
    }
    for (auto& c : a) c *= s;
}

mpq_class int_pow(long base, long e) {
    mpz_class b(base);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return mpq_class(p);
    mpq_class r(1, p);
    r.canonicalize();
    return r;
}

namespace {

using ZVec = std::vector<mpz_class>;

// Exact division of integer polynomials, used to build Phi_M from x^M - 1.
ZVec zpoly_divide(const ZVec& num, const ZVec& den) {
    ZVec rem = num;
    ZVec quo(num.size() - den.size() + 1, mpz_class(0));
    for (size_t k = quo.size(); k-- > 0;) {
        mpz_class c = rem[k + den.size() - 1] / den.back();
        quo[k] = c;
        if (c != 0)
            for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= c * den[i];
    }
    return quo;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned M) {
    // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d
    ZVec acc(M + 1, mpz_class(0));
    acc[0] = -1;
    acc[M] = 1;
    for (unsigned d = 1; d < M; ++d) {
        if (M % d != 0) continue;
        ZVec phi_d = cyclotomic_polynomial(d);
        acc = zpoly_divide(acc, phi_d);
    }
    return acc;
}

CoeffField::CoeffField(unsigned M, long q) : M_(M), q_(q) {
    if (M == 0) throw ValidationError("cyclotomic order M must be positive");
    std::vector<mpz_class> zphi = cyclotomic_polynomial(M);
    deg_ = static_cast<unsigned>(zphi.size() - 1);
    phi_.resize(zphi.size());
    for (size_t i = 0; i < zphi.size(); ++i) phi_[i] = mpq_class(zphi[i]);

    // x^(deg+i) mod Phi, enough rows for products of two reduced elements
    if (deg_ >= 1) {
        high_power_.resize(deg_ > 1 ? deg_ - 1 : 0);
        QVec cur(deg_, mpq_class(0)); // will hold x^(deg+i) mod Phi
        // x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})  (Phi monic)
        for (unsigned i = 0; i < deg_; ++i) cur[i] = -phi_[i];
        for (unsigned i = 0; i + 1 < deg_; ++i) {
            high_power_[i] = cur;
            qvec_trim(high_power_[i]);
            // multiply cur by x and reduce once
            QVec next(deg_, mpq_class(0));
            mpq_class top = cur.empty() ? mpq_class(0) : cur[deg_ - 1];
            for (unsigned k = deg_ - 1; k >= 1; --k) next[k] = cur[k - 1];
            next[0] = 0;
            if (top != 0)
                for (unsigned k = 0; k < deg_; ++k) next[k] += top * (-phi_[k]);
            cur = std::move(next);
        }
    }
}

const CoeffField* CoeffField::get(unsigned M, long q) {
    static std::map<std::pair<unsigned, long>, const CoeffField*> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(M, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const CoeffField* f = new CoeffField(M, q); // interned, lives forever
    cache.emplace(key, f);
    return f;
}

void CoeffField::reduce(QVec& a) const {
    if (a.size() <= deg_) {
        qvec_trim(a);
        return;
    }
    QVec r(a.begin(), a.begin() + deg_);
    for (size_t i = deg_; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const QVec& row = high_power_.at(i - deg_);
        for (size_t k = 0; k < row.size(); ++k) {
            if (r.size() <= k) r.resize(k + 1, mpq_class(0));
            r[k] += a[i] * row[k];
        }
    }
    qvec_trim(r);
    a = std::move(r);
}

QVec CoeffField::mul(const QVec& a, const QVec& b) const {
    if (a.empty() || b.empty()) return {};
    // scalar fast paths cover most of the engine's arithmetic
    if (a.size() == 1) {
        QVec r = b;
        qvec_scale(r, a[0]);
        return r;
    }
    if (b.size() == 1) {
        QVec r = a;
        qvec_scale(r, b[0]);
        return r;
    }
    QVec r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    reduce(r);
    return r;
}

QVec CoeffField::inv(const QVec& a) const {
    if (qvec_is_zero(a)) throw DomainError("inverse of zero in Q(zeta_M)");
    if (a.size() == 1) {
        return QVec{mpq_class(1) / a[0]};
    }
    // extended Euclid in Q[x] against Phi_M (irreducible over Q)
    QVec r0 = phi_, r1 = a;
    QVec s0{}, s1{mpq_class(1)};
    qvec_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        QVec rem = r0;
        QVec quo(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            quo[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qvec_trim(rem);
            if (rem.size() < r1.size()) break;
        }
        qvec_trim(quo);
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quo*s1)
        QVec qs1(quo.size() + (s1.empty() ? 1 : s1.size()), mpq_class(0));
        for (size_t i = 0; i < quo.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += quo[i] * s1[j];
        qvec_trim(qs1);
        QVec s2 = qvec_sub(s0, qs1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_M is irreducible); s0 * a = r0 mod Phi
    if (r0.size() != 1) throw DomainError("element not invertible modulo Phi_M");
    QVec out = s0;
    qvec_scale(out, mpq_class(1) / r0[0]);
    reduce(out);
    return out;
}

QVec CoeffField::zeta_pow(long j) const {
    long e = j % static_cast<long>(M_);
    if (e < 0) e += M_;
    QVec r(static_cast<size_t>(e) + 1, mpq_class(0));
    r[static_cast<size_t>(e)] = 1;
    reduce(r);
    return r;
}

} // namespace gjzeta
