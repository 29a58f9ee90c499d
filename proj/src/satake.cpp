#include "gjzeta/satake.hpp"

#include <algorithm>
#include <sstream>

#include "gjzeta/errors.hpp"

namespace gjzeta {

std::string var_name(int slot) {
    if (slot < kAlphapBase) return "a" + std::to_string(slot + 1);
    return "b" + std::to_string(slot - kAlphapBase + 1);
}

int var_slot(const std::string& name) {
    // accepts a1..a4 / b1..b4 and the long forms alpha_i / alphap_j
    auto tail_index = [](const std::string& s, size_t pos) -> int {
        if (pos >= s.size()) return -1;
        int v = 0;
        for (size_t i = pos; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return -1;
            v = v * 10 + (s[i] - '0');
        }
        return v;
    };
    int idx = -1;
    if (name.rfind("alphap_", 0) == 0)
        idx = tail_index(name, 7), idx = idx > 0 ? alphap_slot(idx) : -1;
    else if (name.rfind("alpha_", 0) == 0)
        idx = tail_index(name, 6), idx = idx > 0 ? alpha_slot(idx) : -1;
    else if (name.size() >= 2 && name[0] == 'a')
        idx = tail_index(name, 1), idx = idx > 0 ? alpha_slot(idx) : -1;
    else if (name.size() >= 2 && name[0] == 'b')
        idx = tail_index(name, 1), idx = idx > 0 ? alphap_slot(idx) : -1;
    if (idx < 0 || idx >= kMaxVars) return -1;
    return idx;
}

bool exp_less(const ExpVec& a, const ExpVec& b) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (int i = 0; i < kMaxVars; ++i) {
        int s = int(a[i]) + int(b[i]);
        if (s < -120 || s > 120) throw DomainError("monomial exponent overflow");
        r[i] = static_cast<int8_t>(s);
    }
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (int i = 0; i < kMaxVars; ++i) {
        int s = int(a[i]) - int(b[i]);
        if (s < -120 || s > 120) throw DomainError("monomial exponent overflow");
        r[i] = static_cast<int8_t>(s);
    }
    return r;
}

bool exp_is_zero(const ExpVec& e) {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] != 0) return false;
    return true;
}

Poly::Poly(const CoeffValue& c) {
    if (!c.is_zero()) t_.push_back(Term{exp_zero(), c});
}

Poly Poly::monomial(const ExpVec& e, const CoeffValue& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back(Term{e, c});
    return p;
}

Poly Poly::variable(int slot, const CoeffField* F, int exponent) {
    ExpVec e{};
    e[slot] = static_cast<int8_t>(exponent);
    return monomial(e, CoeffValue::one(F));
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && exp_is_zero(t_[0].e));
}

CoeffValue Poly::constant_value() const {
    if (t_.empty()) return CoeffValue();
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return t_[0].c;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j >= o.t_.size() || (i < t_.size() && exp_less(t_[i].e, o.t_[j].e))) {
            r.t_.push_back(t_[i++]);
        } else if (i >= t_.size() || exp_less(o.t_[j].e, t_[i].e)) {
            r.t_.push_back(o.t_[j++]);
        } else {
            CoeffValue c = t_[i].c + o.t_[j].c;
            if (!c.is_zero()) r.t_.push_back(Term{t_[i].e, c});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (t_.empty() || o.t_.empty()) return Poly();
    if (t_.size() == 1) return o.times_monomial(t_[0].e, t_[0].c);
    if (o.t_.size() == 1) return times_monomial(o.t_[0].e, o.t_[0].c);
    PolyAccum acc;
    for (const auto& a : t_)
        for (const auto& b : o.t_) acc.add(exp_add(a.e, b.e), a.c * b.c);
    return acc.take();
}

Poly Poly::scaled(const CoeffValue& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        CoeffValue v = t.c * c;
        if (!v.is_zero()) r.t_.push_back(Term{t.e, v});
    }
    return r;
}

Poly Poly::times_monomial(const ExpVec& e, const CoeffValue& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        CoeffValue v = t.c * c;
        if (!v.is_zero()) r.t_.push_back(Term{exp_add(t.e, e), v});
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
    return true;
}

CoeffValue Poly::eval(const std::vector<CoeffValue>& vals) const {
    CoeffValue s;
    for (const auto& t : t_) {
        CoeffValue m = t.c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (t.e[i] == 0) continue;
            if (static_cast<size_t>(i) >= vals.size())
                throw DomainError("missing specialization value for " + var_name(i));
            CoeffValue base = vals[i];
            int e = t.e[i];
            if (e < 0) {
                base = base.inverse();
                e = -e;
            }
            for (int k = 0; k < e; ++k) m *= base;
        }
        s += m;
    }
    return s;
}

bool Poly::try_divide(const Poly& d, Poly& quo) const {
    if (d.is_zero()) return false;
    if (is_zero()) {
        quo = Poly();
        return true;
    }
    Poly rem(*this);
    Poly q;
    // lex-leading cancellation; quotient may be Laurent, remainder must hit 0
    size_t guard = t_.size() * d.t_.size() + t_.size() + 8;
    while (!rem.is_zero()) {
        if (guard-- == 0) return false;
        const Term& lr = rem.leading();
        const Term& ld = d.leading();
        ExpVec e = exp_sub(lr.e, ld.e);
        CoeffValue c = lr.c / ld.c;
        q.t_.push_back(Term{e, c}); // leading exponents strictly decrease
        rem = rem - d.times_monomial(e, c);
    }
    std::reverse(q.t_.begin(), q.t_.end());
    quo = std::move(q);
    return true;
}

ExpVec Poly::content_exponent() const {
    ExpVec r{};
    bool first = true;
    for (const auto& t : t_) {
        if (first) {
            r = t.e;
            first = false;
            continue;
        }
        for (int i = 0; i < kMaxVars; ++i) r[i] = std::min(r[i], t.e[i]);
    }
    return r;
}

void Poly::add_term(const ExpVec& e, const CoeffValue& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, const ExpVec& key) { return exp_less(t.e, key); });
    if (it != t_.end() && it->e == e) {
        it->c += c;
        if (it->c.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, Term{e, c});
    }
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.c.str() << ")";
        for (int i = 0; i < kMaxVars; ++i) {
            if (t.e[i] == 0) continue;
            os << "*" << var_name(i);
            if (t.e[i] != 1) os << "^" << int(t.e[i]);
        }
    }
    return os.str();
}

void PolyAccum::add(const ExpVec& e, const CoeffValue& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

void PolyAccum::add(const Poly& p) {
    for (const auto& t : p.terms()) add(t.e, t.c);
}

Poly PolyAccum::take() {
    Poly p;
    p.t_.reserve(m_.size());
    for (auto& [e, c] : m_) p.t_.push_back(Term{e, c}); // map order == exp_less order
    m_.clear();
    return p;
}

void PolyAccum::merge(PolyAccum& other) {
    for (auto& [e, c] : other.m_) add(e, c);
    other.m_.clear();
}

SatakeRat::SatakeRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (den_.is_constant()) {
        CoeffValue c = den_.constant_value();
        num_ = num_.scaled(c.inverse());
        den_ = Poly();
    }
}

SatakeRat SatakeRat::operator-() const {
    SatakeRat r(*this);
    r.num_ = -r.num_;
    return r;
}

SatakeRat SatakeRat::operator+(const SatakeRat& o) const {
    SatakeRat r;
    if (den_.is_zero() && o.den_.is_zero()) {
        r.num_ = num_ + o.num_;
        return r;
    }
    if (!den_.is_zero() && !o.den_.is_zero() && den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (r.num_.is_zero()) r.den_ = Poly();
        return r;
    }
    const Poly& da = den_;
    const Poly& db = o.den_;
    Poly left = db.is_zero() ? num_ : num_ * db;
    Poly right = da.is_zero() ? o.num_ : o.num_ * da;
    r.num_ = left + right;
    if (da.is_zero())
        r.den_ = db;
    else if (db.is_zero())
        r.den_ = da;
    else
        r.den_ = da * db;
    if (r.num_.is_zero()) r.den_ = Poly();
    return r;
}

SatakeRat SatakeRat::operator-(const SatakeRat& o) const { return *this + (-o); }

SatakeRat SatakeRat::operator*(const SatakeRat& o) const {
    SatakeRat r;
    r.num_ = num_ * o.num_;
    if (r.num_.is_zero()) return r;
    if (den_.is_zero())
        r.den_ = o.den_;
    else if (o.den_.is_zero())
        r.den_ = den_;
    else
        r.den_ = den_ * o.den_;
    return r;
}

SatakeRat SatakeRat::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero");
    Poly n = den_.is_zero() ? Poly(CoeffValue::one(num_.leading().c.field())) : den_;
    return SatakeRat(n, num_);
}

SatakeRat SatakeRat::operator/(const SatakeRat& o) const { return *this * o.inverse(); }

SatakeRat SatakeRat::pow(long e) const {
    if (e == 0) {
        if (num_.is_zero()) throw DomainError("0^0");
        return SatakeRat(CoeffValue::one(num_.leading().c.field()));
    }
    SatakeRat base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    SatakeRat r = base;
    for (long i = 1; i < k; ++i) r *= base;
    return r;
}

bool SatakeRat::operator==(const SatakeRat& o) const {
    if (den_.is_zero() && o.den_.is_zero()) return num_ == o.num_;
    Poly lhs = o.den_.is_zero() ? num_ : num_ * o.den_;
    Poly rhs = den_.is_zero() ? o.num_ : o.num_ * den_;
    return lhs == rhs;
}

bool SatakeRat::is_constant() const {
    if (num_.is_zero()) return true;
    if (num_.is_constant() && den_.is_zero()) return true;
    if (num_.is_constant() && den_.is_constant()) return true;
    // fractions that cancel to a constant are detected on normalized values
    SatakeRat c(*this);
    c.normalize();
    return c.num_.is_constant() && c.den_.is_zero();
}

CoeffValue SatakeRat::constant_value() const {
    if (num_.is_zero()) return CoeffValue();
    if (num_.is_constant() && den_.is_zero()) return num_.constant_value();
    SatakeRat c(*this);
    c.normalize();
    if (c.den_.is_zero() && c.num_.is_constant()) return c.num_.constant_value();
    if (c.num_.is_constant() && c.den_.is_constant())
        return c.num_.constant_value() / c.den_.constant_value();
    throw DomainError("value is not constant");
}

CoeffValue SatakeRat::eval(const std::vector<CoeffValue>& vals) const {
    CoeffValue n = num_.eval(vals);
    if (den_.is_zero()) return n;
    CoeffValue d = den_.eval(vals);
    if (d.is_zero()) throw DomainError("denominator specializes to zero");
    return n / d;
}

void SatakeRat::normalize() {
    if (num_.is_zero()) {
        den_ = Poly();
        return;
    }
    if (den_.is_zero()) return;
    Poly quo;
    if (num_.try_divide(den_, quo)) {
        num_ = std::move(quo);
        den_ = Poly();
        return;
    }
    // pull the denominator's monomial content and leading coefficient across
    ExpVec ce = den_.content_exponent();
    ExpVec nce = exp_sub(exp_zero(), ce);
    if (!exp_is_zero(ce)) {
        den_ = den_.times_monomial(nce, CoeffValue::one(den_.leading().c.field()));
        num_ = num_.times_monomial(nce, CoeffValue::one(den_.leading().c.field()));
    }
    CoeffValue lc = den_.leading().c;
    if (!(lc == CoeffValue::one(lc.field()))) {
        CoeffValue ilc = lc.inverse();
        den_ = den_.scaled(ilc);
        num_ = num_.scaled(ilc);
    }
}

std::string SatakeRat::str() const {
    SatakeRat c(*this);
    c.normalize();
    if (c.den_.is_zero()) return c.num_.str();
    return "(" + c.num_.str() + ") / (" + c.den_.str() + ")";
}

} // namespace gjzeta
