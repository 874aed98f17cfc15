#pragma once

#include <vector>

#include "expmath/errors.hpp"
#include "expmath/exact/rational.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Power series truncated at x^order; coefficient type T is Rational or UniPoly.
template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, T zero = T()) : order_(order), c_(order + 1, zero), zero_(zero) {
        if (order < 0) throw InvalidInput("negative truncation order");
    }
    TruncatedSeries(int order, std::vector<T> coeffs, T zero = T()) : TruncatedSeries(order, zero) {
        for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i) c_[i] = coeffs[i];
    }

    int order() const { return order_; }
    const T& operator[](int i) const { return c_.at(i); }
    T& operator[](int i) { return c_.at(i); }
    const std::vector<T>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check(o);
        for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.order_, a.zero_);
        for (int i = 0; i <= a.order_; ++i)
            for (int j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

private:
    void check(const TruncatedSeries& o) const {
        if (o.order_ != order_) throw InvalidInput("series truncation orders differ");
    }
    int order_;
    std::vector<T> c_;
    T zero_;
};

// Coefficient n becomes coefficient n times (1+z)^n, truncated at z^k (the map x -> x + x z).
TruncatedSeries<UniPoly> series_substitute_dilate(const TruncatedSeries<UniPoly>& s, int k,
                                                  const std::string& zvar = "z");

// p mod z^(k+1)
UniPoly truncate_poly(const UniPoly& p, int k);

}  // namespace expmath
