#include "gjzeta/padic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gjzeta {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

const PadicRing* PadicRing::get(long p) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    static std::map<long, const PadicRing*> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto* R = new PadicRing();
    R->p = p;
    uint64_t cap = uint64_t(1) << 62;
    uint64_t cur = 1;
    R->power.push_back(1);
    while (cur <= cap / static_cast<uint64_t>(p)) {
        cur *= static_cast<uint64_t>(p);
        R->power.push_back(cur);
    }
    R->max_rel = static_cast<int>(R->power.size()) - 1;
    cache.emplace(p, R);
    return R;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t invmod(uint64_t a, uint64_t m) {
    // extended Euclid; a coprime to m
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("unit inverse does not exist");
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

} // namespace

PadicScalar PadicScalar::zero(const PadicRing* R) {
    PadicScalar s;
    s.R_ = R;
    return s;
}

PadicScalar PadicScalar::unit_times_power(const PadicRing* R, int v, uint64_t unit, int r) {
    if (r < 1 || r > R->max_rel) throw PrecisionError("relative precision out of range", r);
    PadicScalar s;
    s.R_ = R;
    s.zero_ = false;
    s.v_ = v;
    s.r_ = r;
    s.u_ = unit % R->pw(r);
    if (s.u_ % static_cast<uint64_t>(R->p) == 0) throw DomainError("unit part is not a unit");
    return s;
}

PadicScalar PadicScalar::varpi_power(const PadicRing* R, int v, int r) {
    return unit_times_power(R, v, 1, r);
}

PadicScalar PadicScalar::from_integer(const PadicRing* R, const mpz_class& z, int N) {
    if (z == 0) return zero(R);
    mpz_class a = z;
    int v = 0;
    while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(R->p))) {
        a /= R->p;
        ++v;
    }
    if (N > R->max_rel) N = R->max_rel;
    mpz_class m(0);
    mpz_class pr;
    mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(R->p), static_cast<unsigned long>(N));
    m = a % pr;
    if (m < 0) m += pr;
    return unit_times_power(R, v, m.get_ui(), N);
}

PadicScalar PadicScalar::from_rational(const PadicRing* R, const mpq_class& x, int N) {
    if (x == 0) return zero(R);
    PadicScalar num = from_integer(R, x.get_num(), N);
    PadicScalar den = from_integer(R, x.get_den(), N);
    return num / den;
}

int PadicScalar::val() const {
    if (zero_) throw DomainError("valuation of exact zero");
    return v_;
}

uint64_t PadicScalar::unit_mod(int c) const {
    if (zero_) throw DomainError("unit part of exact zero");
    if (c < 1) return 0; // everything is 0 mod p^0
    if (c > r_)
        throw PrecisionError("unit part needed mod p^" + std::to_string(c) +
                                 " but known only mod p^" + std::to_string(r_),
                             c);
    return u_ % R_->pw(c);
}

PadicScalar PadicScalar::operator-() const {
    if (zero_) return *this;
    PadicScalar s(*this);
    s.u_ = R_->pw(r_) - u_;
    return s;
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    const PadicRing* R = R_ ? R_ : o.R_;
    if (zero_ || o.zero_) return zero(R);
    int r = std::min(r_, o.r_);
    uint64_t m = R->pw(r);
    PadicScalar s;
    s.R_ = R;
    s.zero_ = false;
    s.v_ = v_ + o.v_;
    s.r_ = r;
    s.u_ = mulmod(u_ % m, o.u_ % m, m);
    return s;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    const PadicRing* R = R_ ? R_ : o.R_;
    if (zero_) return o;
    if (o.zero_) return *this;
    const PadicScalar* lo = this;
    const PadicScalar* hi = &o;
    if (lo->v_ > hi->v_) std::swap(lo, hi);
    int delta = hi->v_ - lo->v_;
    if (delta >= lo->r_) return *lo; // the other summand is below the window
    int rs = std::min(lo->r_, hi->r_ + delta);
    uint64_t m = R->pw(rs);
    uint64_t sum = (lo->u_ % m + mulmod(hi->u_ % m, R->pw(delta) % m, m)) % m;
    if (sum == 0)
        throw PrecisionError("additive cancellation exhausted precision", rs + 4);
    // strip the p-power the cancellation produced
    int t = 0;
    while (sum % static_cast<uint64_t>(R->p) == 0) {
        sum /= static_cast<uint64_t>(R->p);
        ++t;
    }
    if (t >= rs) throw PrecisionError("additive cancellation exhausted precision", rs + 4);
    PadicScalar s;
    s.R_ = R;
    s.zero_ = false;
    s.v_ = lo->v_ + t;
    s.r_ = rs - t;
    s.u_ = sum % R->pw(s.r_);
    return s;
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::inverse() const {
    if (zero_) throw DomainError("inverse of zero");
    PadicScalar s(*this);
    s.v_ = -v_;
    s.u_ = invmod(u_, R_->pw(r_));
    return s;
}

bool PadicScalar::congruent(const PadicScalar& o, int k) const {
    if (zero_ && o.zero_) return true;
    if (zero_ || o.zero_) {
        const PadicScalar& nz = zero_ ? o : *this;
        return nz.v_ >= k;
    }
    if (v_ >= k && o.v_ >= k) return true;
    if (v_ != o.v_) return false;
    int need = k - v_; // compare units mod p^(k - v)
    if (need <= 0) return true;
    if (need > r_ || need > o.r_)
        throw PrecisionError("congruence test beyond tracked precision", need);
    uint64_t m = R_->pw(need);
    return (u_ % m) == (o.u_ % m);
}

mpq_class PadicScalar::abs_rational() const {
    if (zero_) return mpq_class(0);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(R_->p),
                  static_cast<unsigned long>(v_ < 0 ? -v_ : v_));
    if (v_ <= 0) return mpq_class(pv);
    mpq_class r(1, pv);
    r.canonicalize();
    return r;
}

std::string PadicScalar::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << "p^" << v_ << "*" << u_ << " (mod p^" << r_ << ")";
    return os.str();
}

} // namespace gjzeta
