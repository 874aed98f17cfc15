#include "expmath/exact/unipoly.hpp"

#include <sstream>

#include "expmath/errors.hpp"

namespace expmath {

namespace {

const Rational kZero = 0;

std::string pick_var(const UniPoly& a, const UniPoly& b) {
    if (a.is_constant()) return b.is_constant() ? a.var() : b.var();
    if (!b.is_constant() && a.var() != b.var())
        throw InvalidInput("polynomials in different variables: " + a.var() + ", " + b.var());
    return a.var();
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly::UniPoly(const Rational& c, std::string var) : var_(std::move(var)) {
    if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, int deg, const std::string& var) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v), var);
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots, const std::string& var) {
    UniPoly r(1, var);
    for (const auto& x : roots) r *= UniPoly({-x, 1}, var);
    return r;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& UniPoly::leading() const { return c_.empty() ? kZero : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::shift(const Rational& s) const {
    // Horner in the polynomial ring: p(x+s)
    UniPoly r(Rational(0), var_);
    UniPoly lin({s, 1}, var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= lin;
        r += UniPoly(*it, var_);
    }
    r.var_ = var_;
    return r;
}

UniPoly UniPoly::scale_arg(const Rational& s) const {
    std::vector<Rational> v = c_;
    Rational pw = 1;
    for (auto& c : v) { c *= pw; pw *= s; }
    return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly r(Rational(0), q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * q;
        r += UniPoly(*it, q.var());
    }
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational l = leading();
    for (auto& c : r.c_) c /= l;
    return r;
}

Rational UniPoly::content() const {
    if (is_zero()) return 1;
    Integer g = 0, l = 1;
    for (const auto& c : c_) {
        if (c == 0) continue;
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rational r = make_rational(g, l);
    if (leading() < 0) r = -r;
    return r;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Rational cont = content();
    UniPoly r = *this;
    for (auto& c : r.c_) c /= cont;
    return r;
}

std::vector<Integer> UniPoly::integer_coeffs() const {
    UniPoly p = primitive();
    std::vector<Integer> v;
    v.reserve(p.c_.size());
    for (const auto& c : p.c_) v.push_back(c.get_num());
    return v;
}

int UniPoly::root_multiplicity(const Rational& r) const {
    if (is_zero()) throw InvalidInput("root multiplicity of zero polynomial");
    int m = 0;
    UniPoly p = *this;
    UniPoly lin({-r, 1}, var_);
    while (p.eval(r) == 0) {
        p = p / lin;
        ++m;
    }
    return m;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    var_ = pick_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    var_ = pick_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    std::string v = pick_var(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(Rational(0), v);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r), v);
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) { c_.clear(); return *this; }
    for (auto& c : c_) c *= s;
    return *this;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << expmath::to_string(a);
            continue;
        }
        if (a != 1) os << expmath::to_string(a) << "*";
        os << var_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::string v = pick_var(a, b);
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {UniPoly(Rational(0), v), a.with_var(v)};
    std::vector<Rational> q(da - db + 1);
    const Rational& lb = b.leading();
    for (int i = da; i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {UniPoly(std::move(q), v), UniPoly(std::move(r), v)};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

bool divides(const UniPoly& d, const UniPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    // primitive remainder sequence keeps the coefficients small
    UniPoly x = a.is_zero() ? a : a.primitive();
    UniPoly y = b.is_zero() ? b : b.primitive();
    std::string v = pick_var(a, b);
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = y;
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic().with_var(v);
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(Rational(0), pick_var(a, b));
    return ((a * b) / gcd(a, b)).monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r(Rational(1), p.var()), base = p;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    std::string v = pick_var(a, b);
    UniPoly r0 = a, r1 = b;
    UniPoly s0(Rational(1), v), s1(Rational(0), v);
    UniPoly t0(Rational(0), v), t1(Rational(1), v);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        UniPoly s2 = s0 - q * s1; s0 = s1; s1 = s2;
        UniPoly t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational l = r0.leading();
    return {r0 * (1 / l), s0 * (1 / l), t0 * (1 / l)};
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    // Euclidean recurrence: res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r)
    if (a.is_zero() || b.is_zero()) return 0;
    int da = a.degree(), db = b.degree();
    if (da == 0) return rpow(a.leading(), db);
    if (db == 0) return rpow(b.leading(), da);
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    Rational sign = ((da % 2) && (db % 2)) ? -1 : 1;
    return sign * rpow(b.leading(), da - r.degree()) * resultant(b, r);
}

}  // namespace expmath
