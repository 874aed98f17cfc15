#include "expmath/paths/lattice_paths.hpp"

#include <algorithm>

namespace expmath {

void SlopeProblem::validate() const {
    if (a < 1 || b < 1 || n < 1) throw InvalidInput("slope problem needs a, b, n >= 1");
}

void Slope3DProblem::validate() const {
    if (a < 1 || b < 1 || c < 1 || n < 1) throw InvalidInput("3D slope problem needs a, b, c, n >= 1");
}

namespace {

// Column sweep over x; col[y] holds the count at (x, y). Calls emit(n, value) at x = b n.
template <class Emit>
void sweep_2d(long a, long b, long N, Emit emit) {
    const long X = b * N, Y = a * N;
    std::vector<Integer> col(Y + 1);
    col[0] = 1;
    for (long x = 0; x <= X; ++x) {
        long top = std::min(Y, a * x / b);
        for (long y = 1; y <= top; ++y) col[y] += col[y - 1];
        if (x > 0 && x % b == 0) emit(x / b, col[a * (x / b)]);
    }
}

template <class Emit>
void sweep_3d(long a, long b, long c, long N, Emit emit) {
    const long X = b * c * N, Y = a * c * N, Z = a * b * N;
    const long W = Z + 1;
    std::vector<Integer> layer((Y + 1) * W);
    layer[0] = 1;
    for (long x = 0; x <= X; ++x) {
        for (long y = 0; y <= Y; ++y) {
            bool row_ok = a * x <= b * y;
            for (long z = 0; z <= Z; ++z) {
                Integer& v = layer[y * W + z];
                if (!row_ok || b * y > c * z) {
                    v = 0;
                    continue;
                }
                if (x == 0 && y == 0 && z == 0) continue;
                if (y > 0) v += layer[(y - 1) * W + z];
                if (z > 0) v += layer[y * W + z - 1];
            }
        }
        if (x > 0 && x % (b * c) == 0) {
            long n = x / (b * c);
            emit(n, layer[(a * c * n) * W + a * b * n]);
        }
    }
}

void add_shifted(std::vector<Integer>& dst, const std::vector<Integer>& src, bool shift) {
    std::size_t s = shift ? 1 : 0;
    if (dst.size() < src.size() + s) dst.resize(src.size() + s);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + s] += src[i];
}

}  // namespace

Integer count_2d(const SlopeProblem& prob) {
    prob.validate();
    Integer out;
    sweep_2d(prob.a, prob.b, prob.n, [&](long n, const Integer& v) {
        if (n == prob.n) out = v;
    });
    return out;
}

SequenceSample count_2d_series(long a, long b, long N) {
    if (N < 1) return {1, {}};
    SlopeProblem{a, b, N}.validate();
    SequenceSample s{1, {}};
    s.values.reserve(N);
    sweep_2d(a, b, N, [&](long, const Integer& v) { s.values.emplace_back(v); });
    return s;
}

Integer count_3d(const Slope3DProblem& prob) {
    prob.validate();
    Integer out;
    sweep_3d(prob.a, prob.b, prob.c, prob.n, [&](long n, const Integer& v) {
        if (n == prob.n) out = v;
    });
    return out;
}

SequenceSample count_3d_series(long a, long b, long c, long N) {
    if (N < 1) return {1, {}};
    Slope3DProblem{a, b, c, N}.validate();
    SequenceSample s{1, {}};
    s.values.reserve(N);
    sweep_3d(a, b, c, N, [&](long, const Integer& v) { s.values.emplace_back(v); });
    return s;
}

Integer total_3d(long a, long b, long c, long n) {
    return multinomial({b * c * n, a * c * n, a * b * n});
}

std::vector<Integer> time_above_histogram(long a, long b, long n) {
    SlopeProblem{a, b, n}.validate();
    const long X = b * n, Y = a * n;
    // step midpoints: E from (x,y) at (x+1/2, y), N from (x,y) at (x, y+1/2)
    auto above_e = [&](long x, long y) { return 2 * b * y > a * (2 * x + 1); };
    auto above_n = [&](long x, long y) { return b * (2 * y + 1) > 2 * a * x; };

    std::vector<std::vector<Integer>> col(Y + 1);
    col[0] = {1};
    for (long x = 0; x <= X; ++x) {
        if (x > 0) {
            for (long y = 0; y <= Y; ++y) {
                std::vector<Integer> next;
                add_shifted(next, col[y], above_e(x - 1, y));
                col[y] = std::move(next);
            }
        }
        for (long y = 1; y <= Y; ++y) add_shifted(col[y], col[y - 1], above_n(x, y - 1));
    }
    std::vector<Integer> hist = col[Y];
    hist.resize((a + b) * n + 1);
    return hist;
}

}  // namespace expmath
