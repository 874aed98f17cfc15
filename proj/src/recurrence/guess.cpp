#include <cstdint>

#include "expmath/exact/matrix.hpp"
#include "expmath/recurrence/recurrence.hpp"

namespace expmath {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL};  // 2^61-1 and a 62-bit prime

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 zmod(const Integer& z, u64 p) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Integer(std::to_string(p)).get_mpz_t());
    return std::stoull(r.get_str());
}

// Rank of the (I,J) system modulo p over the given equation window. Returns -1 if some
// denominator vanishes mod p.
long modular_rank(const std::vector<Rational>& x, long offset, int I, int J, long n_from, long n_to, u64 p) {
    std::size_t n = x.size();
    std::vector<u64> xm(n);
    for (std::size_t i = 0; i < n; ++i) {
        u64 d = zmod(x[i].get_den(), p);
        if (d == 0) return -1;
        xm[i] = mulmod(zmod(x[i].get_num(), p), powmod(d, p - 2, p), p);
    }
    std::size_t cols = static_cast<std::size_t>((I + 1) * (J + 1));
    std::vector<std::vector<u64>> m;
    for (long k = n_from; k < n_to; ++k) {
        std::vector<u64> row(cols);
        u64 nk = static_cast<u64>(((k % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
        for (int i = 0; i <= I; ++i) {
            u64 v = xm[static_cast<std::size_t>(k - offset + i)];
            for (int j = 0; j <= J; ++j) {
                row[i * (J + 1) + j] = v;
                v = mulmod(v, nk, p);
            }
        }
        m.push_back(std::move(row));
    }
    long rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
        std::size_t piv = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][c]) { piv = r; break; }
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        u64 inv = powmod(m[rank][c], p - 2, p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (!m[r][c]) continue;
            u64 f = mulmod(m[r][c], inv, p);
            for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + p - mulmod(f, m[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::optional<RecurrenceOperator> guess_recurrence_exact(const SequenceSample& data, int I, int J,
                                                         const GuessOptions& opt) {
    long need = static_cast<long>((I + 1) * (J + 1) + I + opt.margin);
    if (static_cast<long>(data.size()) < need)
        throw InsufficientData("need " + std::to_string(need) + " terms for order " + std::to_string(I) +
                               ", degree " + std::to_string(J));
    long first = data.offset;
    long last_eq = data.end() - I;  // equations for n in [first, last_eq)
    long solve_to = last_eq - opt.margin;
    std::size_t cols = static_cast<std::size_t>((I + 1) * (J + 1));
    if (opt.modular_precheck) {
        for (u64 p : kPrimes) {
            long r = modular_rank(data.values, data.offset, I, J, first, solve_to, p);
            if (r < 0) continue;
            // rank mod p never exceeds the rank over Q, so full rank settles it
            if (r == static_cast<long>(cols)) return std::nullopt;
            break;
        }
    }
    auto build_rows = [&](long from, long to) {
        Matrix<Integer> m;
        for (long k = from; k < to; ++k) {
            std::vector<Rational> row(cols);
            for (int i = 0; i <= I; ++i) {
                Rational v = data.at(k + i);
                for (int j = 0; j <= J; ++j) {
                    row[i * (J + 1) + j] = v;
                    v *= k;
                }
            }
            Integer l = 1;
            for (const auto& v : row) l = lcm(l, v.get_den());
            std::vector<Integer> irow(cols);
            for (std::size_t c = 0; c < cols; ++c) irow[c] = Rational(row[c] * l).get_num();
            m.push_back(std::move(irow));
        }
        return m;
    };
    auto candidates = [&](const Matrix<Integer>& m) {
        std::vector<RecurrenceOperator> out;
        auto red = fraction_free_reduce(m, cols);
        std::size_t rank = red.pivot_cols.size();
        std::vector<bool> is_pivot(cols, false);
        for (int c : red.pivot_cols) is_pivot[c] = true;
        for (std::size_t f = 0; f < cols && rank < cols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Integer> v(cols, 0);
            v[f] = red.det;
            for (std::size_t i = 0; i < rank; ++i) v[red.pivot_cols[i]] = -red.m[i][f];
            std::vector<UniPoly> cs;
            for (int i = 0; i <= I; ++i) {
                std::vector<Rational> c(J + 1);
                for (int j = 0; j <= J; ++j) c[j] = v[i * (J + 1) + j];
                cs.push_back(UniPoly(c, "n"));
            }
            if (cs.back().is_zero()) continue;
            out.push_back(RecurrenceOperator(cs, "n").normalized());
        }
        return out;
    };
    // solve on the leading equations, hold out the last `margin` ones
    Matrix<Integer> m = build_rows(first, solve_to);
    auto cands = candidates(m);
    if (cands.empty()) return std::nullopt;
    for (const auto& op : cands)
        if (verify(op, data).pass) return op;
    // some combination of the candidates may still survive the held-out equations
    Matrix<Integer> held = build_rows(solve_to, last_eq);
    m.insert(m.end(), held.begin(), held.end());
    for (const auto& op : candidates(m))
        if (verify(op, data).pass) return op;
    return std::nullopt;
}

RecurrenceOperator guess_recurrence(const SequenceSample& data, int max_order, int max_degree,
                                    const GuessOptions& opt) {
    bool tried = false;
    for (int s = 0; s <= max_order + max_degree; ++s)
        for (int I = 0; I <= std::min(s, max_order); ++I) {
            int J = s - I;
            if (J > max_degree || I < 1) continue;
            long need = static_cast<long>((I + 1) * (J + 1) + I + opt.margin);
            if (static_cast<long>(data.size()) < need) continue;
            tried = true;
            if (auto op = guess_recurrence_exact(data, I, J, opt)) return *op;
        }
    if (!tried)
        throw InsufficientData("sequence of length " + std::to_string(data.size()) +
                               " is too short for every (order, degree) within the caps");
    throw NotFound("no recurrence with order <= " + std::to_string(max_order) + " and degree <= " +
                       std::to_string(max_degree),
                   "guess");
}

}  // namespace expmath
