#include "expmath/exact/series.hpp"

namespace expmath {

UniPoly truncate_poly(const UniPoly& p, int k) {
    if (p.degree() <= k) return p;
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + k + 1);
    return UniPoly(std::move(c), p.var());
}

TruncatedSeries<UniPoly> series_substitute_dilate(const TruncatedSeries<UniPoly>& s, int k, const std::string& zvar) {
    TruncatedSeries<UniPoly> out(s.order(), UniPoly(Rational(0), zvar));
    // (1+z)^n mod z^(k+1) has binomial coefficients C(n, j), j <= k
    for (int n = 0; n <= s.order(); ++n) {
        if (s[n].is_zero()) continue;
        std::vector<Rational> b(k + 1);
        for (int j = 0; j <= k; ++j) b[j] = binomial(n, j);
        out[n] = truncate_poly(s[n].with_var(zvar) * UniPoly(std::move(b), zvar), k);
    }
    return out;
}

}  // namespace expmath
