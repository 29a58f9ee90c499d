#include "gjzeta/series.hpp"

#include <sstream>

#include "gjzeta/errors.hpp"

namespace gjzeta {

TruncSeries TruncSeries::one(int T, const CoeffField* F) {
    TruncSeries s(T);
    s.c_[0] = SatakeRat(CoeffValue::one(F));
    return s;
}

TruncSeries TruncSeries::one_minus(const SatakeRat& a, int T, const CoeffField* F) {
    TruncSeries s = one(T, F);
    if (T >= 2) s.c_[1] = -a;
    return s;
}

void TruncSeries::check_same_order(const TruncSeries& o) const {
    if (order() != o.order())
        throw DomainError("mismatched truncation orders; truncate first");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) {
        SatakeRat s;
        for (int j = 0; j <= i; ++j) s += c_[j] * o.c_[i - j];
        r.c_[i] = s;
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero()) throw DomainError("series inverse requires invertible constant term");
    TruncSeries r(order());
    SatakeRat c0inv = c_[0].inverse();
    r.c_[0] = c0inv;
    for (int i = 1; i < order(); ++i) {
        SatakeRat s;
        for (int j = 1; j <= i; ++j) s += c_[j] * r.c_[i - j];
        r.c_[i] = -(c0inv * s);
        r.c_[i].normalize();
    }
    return r;
}

TruncSeries TruncSeries::truncate(int T) const {
    if (T > order()) throw DomainError("cannot extend a truncated series");
    TruncSeries r(T);
    for (int i = 0; i < T; ++i) r.c_[i] = c_[i];
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (order() != o.order()) return false;
    for (int i = 0; i < order(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    for (int i = 0; i < order(); ++i) {
        if (i) os << " + ";
        os << "[" << c_[i].str() << "]";
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    os << " + O(X^" << order() << ")";
    return os.str();
}

} // namespace gjzeta
