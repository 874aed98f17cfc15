#include "expmath/exact/ratfunc.hpp"

#include "expmath/errors.hpp"

namespace expmath {

RatFunc::RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1), p.vars()) {}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    auto v = merge_vars(num_.vars(), den_.vars());
    num_ = num_.with_vars(v);
    den_ = den_.with_vars(v);
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1), v);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational l = den_.leading_coeff();
    if (l != 1) {
        num_ *= 1 / l;
        den_ *= 1 / l;
    }
}

Rational RatFunc::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

std::vector<std::string> RatFunc::active_vars() const {
    auto a = num_.active_vars();
    auto b = den_.active_vars();
    return merge_vars(a, b);
}

Rational RatFunc::eval(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw InvalidInput("rational function evaluated at a pole");
    return num_.eval(point) / d;
}

RatFunc RatFunc::partial_eval(const std::map<std::string, Rational>& point) const {
    MultiPoly d = den_.partial_eval(point);
    if (d.is_zero()) throw InvalidInput("rational function evaluated at a pole");
    return RatFunc(num_.partial_eval(point), d);
}

RatFunc RatFunc::substitute(const std::string& var, const RatFunc& value) const {
    // p(v = a/b) = (sum c_i a^i b^(d-i)) / b^d, applied to numerator and denominator
    auto sub = [&](const MultiPoly& p, int deg) {
        auto cs = p.as_univariate_in(var);
        MultiPoly r(p.vars());
        MultiPoly apow(Rational(1), p.vars());
        for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
            r += cs[i] * apow * pow(value.den(), static_cast<unsigned>(deg - i));
            apow *= value.num();
        }
        return r;
    };
    int d = std::max(num_.degree_in(var), den_.degree_in(var));
    if (d <= 0) return *this;
    return RatFunc(sub(num_, d), sub(den_, d));
}

RatFunc RatFunc::shift(const std::string& var, const Rational& s) const {
    return RatFunc(num_.shift(var, s), den_.shift(var, s));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc(MultiPoly(merge_vars(num_.vars(), o.num_.vars())));
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw InvalidInput("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

std::string RatFunc::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc pow(const RatFunc& f, int e) {
    if (e < 0) return RatFunc(Rational(1)) / pow(f, -e);
    return RatFunc(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

}  // namespace expmath
