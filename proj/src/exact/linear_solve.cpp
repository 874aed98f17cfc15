#include "expmath/exact/linear_solve.hpp"

namespace expmath {

namespace {

template <class R, class F, class ToField>
LinearSolution<F> read_solution(const ReducedForm<R>& red, std::size_t nvars, bool has_rhs, ToField to_field,
                                const F& zero) {
    const auto& m = red.m;
    std::size_t rank = red.pivot_cols.size();
    if (has_rhs) {
        for (std::size_t i = rank; i < m.size(); ++i)
            if (!ring_is_zero(m[i][nvars])) throw NoSolution();
    }
    LinearSolution<F> sol;
    sol.particular.assign(nvars, zero);
    if (has_rhs)
        for (std::size_t i = 0; i < rank; ++i) sol.particular[red.pivot_cols[i]] = to_field(m[i][nvars], red.det);
    std::vector<bool> is_pivot(nvars, false);
    for (int c : red.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < nvars; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(nvars, zero);
        v[f] = F(1);
        for (std::size_t i = 0; i < rank; ++i) v[red.pivot_cols[i]] = -to_field(m[i][f], red.det);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

}  // namespace

LinearSolution<Rational> solve_linear(const Matrix<Rational>& a, const std::vector<Rational>& rhs) {
    std::size_t rows = a.size();
    if (rhs.size() != rows) throw InvalidInput("rhs length does not match matrix");
    std::size_t cols = rows ? a[0].size() : 0;
    Matrix<Integer> m(rows, std::vector<Integer>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw InvalidInput("ragged matrix");
        Integer l = rhs[i].get_den();
        for (const auto& x : a[i]) l = lcm(l, x.get_den());
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rational(a[i][j] * l).get_num();
        m[i][cols] = Rational(rhs[i] * l).get_num();
    }
    if (rows == 0) {
        LinearSolution<Rational> s;
        s.particular.assign(cols, 0);
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<Rational> v(cols, 0);
            v[f] = 1;
            s.nullspace.push_back(v);
        }
        return s;
    }
    auto red = fraction_free_reduce(m, cols);
    return read_solution<Integer, Rational>(
        red, cols, true, [](const Integer& x, const Integer& d) { return make_rational(x, d); }, Rational(0));
}

LinearSolution<RatFunc> solve_linear(const Matrix<RatFunc>& a, const std::vector<RatFunc>& rhs, const Deadline* dl) {
    std::size_t rows = a.size();
    if (rhs.size() != rows) throw InvalidInput("rhs length does not match matrix");
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::string> vars;
    for (const auto& row : a)
        for (const auto& x : row) vars = merge_vars(vars, merge_vars(x.num().vars(), x.den().vars()));
    for (const auto& x : rhs) vars = merge_vars(vars, merge_vars(x.num().vars(), x.den().vars()));
    Matrix<MultiPoly> m(rows, std::vector<MultiPoly>(cols + 1, MultiPoly(vars)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw InvalidInput("ragged matrix");
        MultiPoly l = rhs[i].den().with_vars(vars);
        for (const auto& x : a[i]) l = lcm(l, x.den());
        l = l.with_vars(vars);
        for (std::size_t j = 0; j <= cols; ++j) {
            const RatFunc& x = j < cols ? a[i][j] : rhs[i];
            m[i][j] = (x.num() * exact_div(l, x.den())).with_vars(vars);
        }
    }
    LinearSolution<RatFunc> s;
    if (rows == 0) {
        s.particular.assign(cols, RatFunc(0));
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<RatFunc> v(cols, RatFunc(0));
            v[f] = RatFunc(1);
            s.nullspace.push_back(v);
        }
        return s;
    }
    auto red = fraction_free_reduce(m, cols, dl);
    return read_solution<MultiPoly, RatFunc>(
        red, cols, true, [](const MultiPoly& x, const MultiPoly& d) { return RatFunc(x, d); }, RatFunc(0));
}

std::vector<std::vector<MultiPoly>> nullspace_polynomial(const Matrix<MultiPoly>& a, const Deadline* dl) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::string> vars;
    for (const auto& row : a)
        for (const auto& x : row) vars = merge_vars(vars, x.vars());
    Matrix<MultiPoly> m = a;
    for (auto& row : m)
        for (auto& x : row) x = x.with_vars(vars);
    std::vector<std::vector<MultiPoly>> out;
    if (m.empty()) {
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<MultiPoly> v(cols, MultiPoly(vars));
            v[f] = MultiPoly(Rational(1), vars);
            out.push_back(v);
        }
        return out;
    }
    auto red = fraction_free_reduce(m, cols, dl);
    std::size_t rank = red.pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : red.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<MultiPoly> v(cols, MultiPoly(vars));
        v[f] = red.det;
        for (std::size_t i = 0; i < rank; ++i) v[red.pivot_cols[i]] = -red.m[i][f];
        MultiPoly g(vars);
        for (const auto& x : v)
            if (!x.is_zero()) g = gcd(g, x);
        for (auto& x : v) x = exact_div(x, g);
        Rational c = 0;
        for (const auto& x : v)
            if (!x.is_zero()) {
                c = x.content();
                break;
            }
        Integer num = 0, den = 1;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            Rational cx = x.content();
            num = gcd(num, cx.get_num());
            den = lcm(den, cx.get_den());
        }
        Rational scale = make_rational(den, num);
        if (c < 0) scale = -scale;
        for (auto& x : v) x *= scale;
        out.push_back(std::move(v));
    }
    return out;
}

Rational determinant(const Matrix<Rational>& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Matrix<Integer> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw InvalidInput("determinant of non-square matrix");
        Integer l = 1;
        for (const auto& x : a[i]) l = lcm(l, x.get_den());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j] * l).get_num();
    }
    auto red = fraction_free_reduce(m, n);
    if (red.pivot_cols.size() < n) return 0;
    Integer d = red.det;
    if (red.swaps % 2) d = -d;
    return make_rational(d, scale);
}

}  // namespace expmath
