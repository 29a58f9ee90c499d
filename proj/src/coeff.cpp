#include "gjzeta/coeff.hpp"

#include <sstream>

#include "gjzeta/errors.hpp"

namespace gjzeta {

CoeffValue CoeffValue::zeta_pow(const CoeffField* F, long j) {
    CoeffValue v(F);
    v.rat_ = F->zeta_pow(j);
    return v;
}

CoeffValue CoeffValue::q_half_power(const CoeffField* F, long h) {
    CoeffValue v(F);
    long a = (h >= 0 ? h / 2 : -((-h + 1) / 2)); // floor(h/2)
    mpq_class qa = int_pow(F->q(), a);
    if (h % 2 == 0) {
        v.rat_.push_back(qa);
    } else {
        v.srt_.push_back(qa);
    }
    return v;
}

mpq_class CoeffValue::rational_value() const {
    if (!srt_.empty() || rat_.size() > 1) throw DomainError("value is not rational");
    return rat_.empty() ? mpq_class(0) : rat_[0];
}

const CoeffField* CoeffValue::resolve_field(const CoeffValue& o) const {
    if (F_ && o.F_ && F_ != o.F_) throw ValidationError("mixed coefficient fields");
    return F_ ? F_ : o.F_;
}

CoeffValue CoeffValue::operator-() const {
    CoeffValue v(F_);
    v.rat_ = qvec_neg(rat_);
    v.srt_ = qvec_neg(srt_);
    return v;
}

CoeffValue CoeffValue::operator+(const CoeffValue& o) const {
    CoeffValue v(resolve_field(o));
    v.rat_ = qvec_add(rat_, o.rat_);
    v.srt_ = qvec_add(srt_, o.srt_);
    return v;
}

CoeffValue CoeffValue::operator-(const CoeffValue& o) const {
    CoeffValue v(resolve_field(o));
    v.rat_ = qvec_sub(rat_, o.rat_);
    v.srt_ = qvec_sub(srt_, o.srt_);
    return v;
}

CoeffValue CoeffValue::operator*(const CoeffValue& o) const {
    const CoeffField* F = resolve_field(o);
    CoeffValue v(F);
    if (is_zero() || o.is_zero()) return v;
    // (a + b r)(c + d r) = (ac + q bd) + (ad + bc) r,  r^2 = q
    QVec ac = F->mul(rat_, o.rat_);
    QVec bd = F->mul(srt_, o.srt_);
    qvec_scale(bd, mpq_class(F->q()));
    v.rat_ = qvec_add(ac, bd);
    QVec ad = F->mul(rat_, o.srt_);
    QVec bc = F->mul(srt_, o.rat_);
    v.srt_ = qvec_add(ad, bc);
    return v;
}

CoeffValue CoeffValue::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero coefficient");
    if (!F_) throw DomainError("inverse of untyped zero");
    CoeffValue v(F_);
    if (srt_.empty()) {
        v.rat_ = F_->inv(rat_);
        return v;
    }
    // 1/(a + b r) = (a - b r) / (a^2 - q b^2)
    QVec a2 = F_->mul(rat_, rat_);
    QVec b2 = F_->mul(srt_, srt_);
    qvec_scale(b2, mpq_class(F_->q()));
    QVec norm = qvec_sub(a2, b2);
    if (qvec_is_zero(norm))
        throw DomainError("zero divisor: sqrt(q) lies in Q(zeta_M) for this session");
    QVec ninv = F_->inv(norm);
    v.rat_ = F_->mul(rat_, ninv);
    v.srt_ = F_->mul(qvec_neg(srt_), ninv);
    return v;
}

bool CoeffValue::operator==(const CoeffValue& o) const {
    if (F_ && o.F_ && F_ != o.F_) throw ValidationError("mixed coefficient fields");
    return rat_ == o.rat_ && srt_ == o.srt_;
}

mpq_class CoeffValue::abs_upper_bound() const {
    mpq_class s(0);
    for (const auto& c : rat_) s += abs(c);
    if (!srt_.empty()) {
        // ceil bound on sqrt(q) with denominator 2^20
        mpz_class num = mpz_class(F_->q()) << 40;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
        root += 1;
        mpq_class sq_ub(root, mpz_class(1) << 20);
        sq_ub.canonicalize();
        mpq_class t(0);
        for (const auto& c : srt_) t += abs(c);
        s += t * sq_ub;
    }
    return s;
}

namespace {
std::string qvec_str(const QVec& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        os << a[i].get_str();
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    if (first) return "0";
    return os.str();
}
} // namespace

std::string CoeffValue::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool have = false;
    if (!rat_.empty()) {
        os << qvec_str(rat_);
        have = true;
    }
    if (!srt_.empty()) {
        if (have) os << " + ";
        os << "(" << qvec_str(srt_) << ")*r";
    }
    return os.str();
}

} // namespace gjzeta
