#pragma once

#include <vector>

#include "gjzeta/satake.hpp"

namespace gjzeta {

// Truncated power series in X = q^{-s} with SatakeRat coefficients.
// Multiplication truncates at order T; mixed truncation orders are an error
// (the caller truncates first).
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int T) : c_(static_cast<size_t>(T)) {
        if (T < 1) throw DomainError("truncation order must be >= 1");
    }
    static TruncSeries one(int T, const CoeffField* F);
    // 1 - a X  (the standard Euler-factor building block)
    static TruncSeries one_minus(const SatakeRat& a, int T, const CoeffField* F);

    int order() const { return static_cast<int>(c_.size()); }
    const SatakeRat& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    SatakeRat& operator[](int i) { return c_.at(static_cast<size_t>(i)); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries inverse() const; // requires invertible constant term
    TruncSeries truncate(int T) const;

    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same_order(const TruncSeries& o) const;
    std::vector<SatakeRat> c_;
};

} // namespace gjzeta
