#include "expmath/exact/rational.hpp"

#include <algorithm>
#include <cmath>

#include "expmath/errors.hpp"

namespace expmath {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidInput("empty rational");
    if (s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg) ip.erase(0, 1);
            if (ip.empty()) ip = "0";
            if (!valid_int(ip) || (!fp.empty() && !valid_int(fp)) || (!fp.empty() && fp[0] == '-'))
                throw InvalidInput("bad rational '" + text + "'");
            Integer num(ip + fp, 10), den = ipow(Integer(10), fp.size());
            if (neg) num = -num;
            return make_rational(num, den);
        }
        if (!valid_int(s)) throw InvalidInput("bad rational '" + text + "'");
        return Rational(Integer(s, 10));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw InvalidInput("bad rational '" + text + "'");
    return make_rational(Integer(a, 10), Integer(b, 10));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(long n) {
    if (n < 0) throw InvalidInput("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(const std::vector<long>& parts) {
    Integer r = 1;
    long total = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw InvalidInput("zero to a negative power");
        return rpow(1 / base, -e);
    }
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::vector<Integer> positive_divisors(const Integer& n, std::size_t cap) {
    if (n == 0) throw InvalidInput("divisors of zero");
    Integer m = abs(n);
    // trial factorization, adequate for the small constants this is used on
    std::vector<std::pair<Integer, int>> fac;
    Integer p = 2;
    while (p * p <= m) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
        if (p > 1000000) break;
    }
    if (m > 1) fac.push_back({m, 1});
    std::vector<Integer> divs{1};
    for (auto& [q, e] : fac) {
        std::size_t sz = divs.size();
        Integer pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
            if (divs.size() > cap) throw InvalidInput("too many divisors");
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

double to_double(const Rational& q) { return q.get_d(); }

double log10_abs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log10(std::fabs(mn / md)) + static_cast<double>(en - ed) * std::log10(2.0);
}

}  // namespace expmath
