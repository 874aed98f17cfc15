#include "expmath/exact/parse.hpp"

#include <algorithm>
#include <cctype>

#include "expmath/errors.hpp"

namespace expmath {

namespace {

class Parser {
public:
    Parser(const std::string& s, std::vector<std::string> vars) : s_(s), vars_(std::move(vars)) {}

    RatFunc run() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

    const std::vector<std::string>& vars() const { return vars_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidInput("parse error at " + std::to_string(pos_) + " in '" + s_ + "': " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            skip();
            if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') return r;
            if (accept('*')) r *= unary();
            else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    bool power_op() {
        skip();
        if (accept('^')) return true;
        if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    long exponent() {
        bool neg = false;
        if (accept('-')) neg = true;
        bool paren = accept('(');
        if (paren && accept('-')) neg = !neg;
        skip();
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected integer exponent");
        long e = std::stol(s_.substr(st, pos_ - st));
        if (paren && !accept(')')) fail("expected ')'");
        return neg ? -e : e;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (power_op()) {
            long e = exponent();
            if (base.is_zero() && e < 0) fail("zero to negative power");
            return pow(base, static_cast<int>(e));
        }
        return base;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            RatFunc num(parse_rational(s_.substr(st, pos_ - st)));
            // implicit product: 3N, 2(n+1)
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '('))
                return num * power();
            return num;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(st, pos_ - st);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
            return RatFunc(MultiPoly::variable(name, vars_));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& var_order) {
    Parser p(text, var_order);
    RatFunc r = p.run();
    return RatFunc(r.num().with_vars(p.vars()), r.den().with_vars(p.vars()));
}

MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& var_order) {
    RatFunc r = parse_ratfunc(text, var_order);
    if (!r.is_polynomial()) throw InvalidInput("expected a polynomial: " + text);
    return r.num() * (1 / r.den().constant_value());
}

UniPoly parse_unipoly(const std::string& text, const std::string& var) {
    MultiPoly p = parse_multipoly(text, {var});
    return p.to_unipoly(var);
}

}  // namespace expmath
