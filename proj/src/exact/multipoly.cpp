#include "expmath/exact/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "expmath/errors.hpp"

namespace expmath {

namespace {

const Rational kZero = 0;

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Bring both operands onto one variable list.
void unify(MultiPoly& a, MultiPoly& b) {
    if (a.vars() == b.vars()) return;
    auto v = merge_vars(a.vars(), b.vars());
    a = a.with_vars(v);
    b = b.with_vars(v);
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> r = a;
    for (const auto& v : b)
        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    return r;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(const Rational& c, std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (c != 0) terms_[Exponents(vars_.size(), 0)] = c;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    MultiPoly r(std::move(vars));
    Exponents e(r.vars_.size(), 0);
    e[r.var_index(name)] = 1;
    r.terms_[e] = 1;
    return r;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, std::vector<std::string> vars) {
    if (!p.is_constant() && std::find(vars.begin(), vars.end(), p.var()) == vars.end()) vars.push_back(p.var());
    MultiPoly r(std::move(vars));
    int idx = p.is_constant() ? -1 : r.var_index(p.var());
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        Exponents e(r.vars_.size(), 0);
        if (idx >= 0) e[idx] = i;
        r.terms_[e] = p.coeff(i);
    }
    return r;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        map[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw InvalidInput("variable " + vars_[i] + " dropped while in use");
            ne[map[i]] = e[i];
        }
        r.terms_[ne] = c;
    }
    return r;
}

std::vector<std::string> MultiPoly::active_vars() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    std::vector<std::string> r;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) r.push_back(vars_[i]);
    return r;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return total(terms_.rbegin()->first);
}

int MultiPoly::degree_in(const std::string& var) const {
    if (terms_.empty()) return -1;
    int idx = var_index(var);
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
    return *terms_.rbegin();
}

const Rational& MultiPoly::leading_coeff() const {
    return terms_.empty() ? kZero : terms_.rbegin()->second;
}

MultiPoly MultiPoly::coeff_in(const std::string& var, int d) const {
    int idx = var_index(var);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int ed = idx < 0 ? 0 : e[idx];
        if (ed != d) continue;
        Exponents ne = e;
        if (idx >= 0) ne[idx] = 0;
        r.terms_[ne] = c;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::as_univariate_in(const std::string& var) const {
    int deg = degree_in(var);
    std::vector<MultiPoly> r(std::max(deg + 1, 0), MultiPoly(vars_));
    int idx = var_index(var);
    for (const auto& [e, c] : terms_) {
        int ed = idx < 0 ? 0 : e[idx];
        Exponents ne = e;
        if (idx >= 0) ne[idx] = 0;
        r[ed].terms_[ne] = c;
    }
    return r;
}

UniPoly MultiPoly::to_unipoly(const std::string& var) const {
    auto act = active_vars();
    if (act.size() > 1 || (act.size() == 1 && act[0] != var))
        throw InvalidInput("polynomial is not univariate in " + var + ": " + to_string());
    int idx = var_index(var);
    std::vector<Rational> c(std::max(degree_in(var) + 1, 0));
    for (const auto& [e, v] : terms_) c[idx < 0 ? 0 : e[idx]] = v;
    return UniPoly(std::move(c), var);
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    MultiPoly r = partial_eval(point);
    return r.constant_value();
}

MultiPoly MultiPoly::partial_eval(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> val(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end()) val[i] = &it->second;
    }
    // cache powers per variable
    std::vector<std::vector<Rational>> pw(vars_.size());
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        Exponents ne = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!val[i] || e[i] == 0) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(1);
            while (static_cast<int>(p.size()) <= e[i]) p.push_back(p.back() * *val[i]);
            t *= p[e[i]];
            ne[i] = 0;
        }
        r.add_term(ne, t);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    auto coeffs = as_univariate_in(var);
    MultiPoly v = value;
    MultiPoly r(vars_);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * v;
        r += *it;
    }
    return r;
}

MultiPoly MultiPoly::shift(const std::string& var, const Rational& s) const {
    if (var_index(var) < 0 || s == 0) return *this;
    return substitute(var, variable(var, vars_) + MultiPoly(s, vars_));
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 1;
    Integer g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rational r = make_rational(g, l);
    if (leading_coeff() < 0) r = -r;
    return r;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Rational inv = 1 / content();
    return *this * inv;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (1 / leading_coeff());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.vars_ != vars_) {
        MultiPoly b = o;
        unify(*this, b);
        return *this += b;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.vars_ != vars_) {
        MultiPoly b = o;
        unify(*this, b);
        return *this -= b;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
    if (a0.vars_ != b0.vars_) {
        MultiPoly a = a0, b = b0;
        unify(a, b);
        return a * b;
    }
    MultiPoly r(a0.vars_);
    if (a0.is_zero() || b0.is_zero()) return r;
    std::size_t nv = a0.vars_.size();
    Exponents e(nv);
    for (const auto& [ea, ca] : a0.terms_)
        for (const auto& [eb, cb] : b0.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ == o.vars_) return terms_ == o.terms_;
    MultiPoly a = *this, b = o;
    unify(a, b);
    return a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool mono = total(e) > 0;
        bool need_star = false;
        if (!mono || a != 1) {
            os << expmath::to_string(a);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r(Rational(1), p.vars()), base = p;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

namespace {

bool try_exact_div(const MultiPoly& a0, const MultiPoly& b0, MultiPoly& q) {
    if (b0.is_zero()) throw InvalidInput("multivariate division by zero");
    MultiPoly a = a0, b = b0;
    if (a.vars() != b.vars()) {
        auto v = merge_vars(a.vars(), b.vars());
        a = a.with_vars(v);
        b = b.with_vars(v);
    }
    q = MultiPoly(a.vars());
    if (b.is_constant()) {
        q = a * (1 / b.constant_value());
        return true;
    }
    auto [lb, lc] = b.leading_term();
    std::size_t nv = lb.size();
    MultiPoly r = a;
    Exponents qe(nv);
    while (!r.is_zero()) {
        auto [lr, rc] = r.leading_term();
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = lr[i] - lb[i];
            if (qe[i] < 0) return false;
        }
        Rational f = rc / lc;
        q.add_term(qe, f);
        for (const auto& [e, c] : b.terms()) {
            Exponents ne(nv);
            for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + qe[i];
            r.add_term(ne, -f * c);
        }
    }
    return true;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in var
MultiPoly content_in(const MultiPoly& p, const std::string& var) {
    auto cs = p.as_univariate_in(var);
    MultiPoly g(p.vars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) return MultiPoly(Rational(1), p.vars());
    }
    return g;
}

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    int db = b.degree_in(var);
    MultiPoly lcb = b.coeff_in(var, db);
    MultiPoly x = MultiPoly::variable(var, a.vars());
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        MultiPoly lcr = r.coeff_in(var, dr);
        r = lcb * r - lcr * pow(x, dr - db) * b;
    }
    return r;
}

MultiPoly gcd_impl(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = a0, b = b0;
    unify(a, b);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1), a.vars());
    auto va = a.active_vars(), vb = b.active_vars();
    if (va.size() == 1 && vb.size() == 1 && va[0] == vb[0]) {
        UniPoly g = gcd(a.to_unipoly(va[0]), b.to_unipoly(va[0]));
        return MultiPoly::from_unipoly(g, a.vars());
    }
    // main variable: first active variable of a, in list order
    std::string v = va[0];
    if (std::find(vb.begin(), vb.end(), v) == vb.end()) return gcd_impl(content_in(a, v), b);
    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
    MultiPoly g = gcd_impl(ca, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = exact_div(r, content_in(r, v));
            if (pb.degree_in(v) == 0) {
                pa = MultiPoly(Rational(1), a.vars());
                break;
            }
        }
    }
    MultiPoly h = exact_div(pa, content_in(pa, v));
    return (g * h).monic();
}

}  // namespace

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_exact_div(a, b, q)) throw InvalidInput("inexact multivariate division");
    return q;
}

bool divides(const MultiPoly& d, const MultiPoly& a) {
    if (d.is_zero()) return a.is_zero();
    MultiPoly q;
    return try_exact_div(a, d, q);
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(merge_vars(a.vars(), b.vars()));
    return exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace expmath
