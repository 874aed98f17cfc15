#include "expmath/recurrence/recurrence.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "expmath/exact/multipoly.hpp"
#include "expmath/exact/parse.hpp"

namespace expmath {

const Rational& SequenceSample::at(long n) const {
    if (n < offset || n >= end()) throw InvalidInput("sequence index " + std::to_string(n) + " out of range");
    return values[static_cast<std::size_t>(n - offset)];
}

SequenceSample SequenceSample::slice(long from, long to) const {
    if (from < offset || to > end() || from > to) throw InvalidInput("bad sequence slice");
    SequenceSample s;
    s.offset = from;
    s.values.assign(values.begin() + (from - offset), values.begin() + (to - offset));
    return s;
}

SequenceSample read_sequence(std::istream& in) {
    SequenceSample s;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream is(line.substr(first + 1));
            std::string key;
            long v;
            if (is >> key >> v && key == "offset") s.offset = v;
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        s.values.push_back(parse_rational(line.substr(first, last - first + 1)));
    }
    return s;
}

void write_sequence(std::ostream& out, const SequenceSample& s) {
    if (s.offset != 0) out << "# offset " << s.offset << "\n";
    for (const auto& v : s.values) out << to_string(v) << "\n";
}

RecurrenceOperator::RecurrenceOperator(std::vector<UniPoly> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
    for (auto& c : c_) c = c.with_var(var_);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) throw InvalidInput("zero recurrence operator");
}

int RecurrenceOperator::degree() const {
    int d = 0;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

RecurrenceOperator RecurrenceOperator::normalized() const {
    UniPoly g(Rational(0), var_);
    for (const auto& c : c_) g = gcd(g, c);
    std::vector<UniPoly> v;
    for (const auto& c : c_) v.push_back(c / g);
    Integer num = 0, den = 1;
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        Rational ct = c.content();
        num = gcd(num, ct.get_num());
        den = lcm(den, ct.get_den());
    }
    Rational sc = make_rational(den, num);
    if (v.back().leading() < 0) sc = -sc;
    for (auto& c : v) c *= sc;
    return RecurrenceOperator(std::move(v), var_);
}

RecurrenceOperator RecurrenceOperator::shift_argument(long s) const {
    std::vector<UniPoly> v;
    for (const auto& c : c_) v.push_back(c.shift(s));
    return RecurrenceOperator(std::move(v), var_);
}

Rational RecurrenceOperator::apply(const SequenceSample& x, long n) const {
    Rational acc = 0, nn = n;
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += c_[i].eval(nn) * x.at(n + i);
    }
    return acc;
}

std::string RecurrenceOperator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = order(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")";
        if (i >= 1) os << "*N";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

nlohmann::json RecurrenceOperator::to_json() const {
    nlohmann::json j;
    j["var"] = var_;
    j["order"] = order();
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : c_) cs.push_back(c.to_string());
    j["coeffs"] = cs;
    return j;
}

RecurrenceOperator RecurrenceOperator::from_json(const nlohmann::json& j) {
    std::string var = j.value("var", "n");
    std::vector<UniPoly> cs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) cs.push_back(parse_unipoly(c.get<std::string>(), var));
        else if (c.is_array()) {
            std::vector<Rational> v;
            for (const auto& x : c) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
            cs.push_back(UniPoly(v, var));
        } else {
            cs.push_back(UniPoly(Rational(c.get<long>()), var));
        }
    }
    return RecurrenceOperator(cs, var);
}

RecurrenceOperator RecurrenceOperator::parse(const std::string& text, const std::string& var) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.rfind("0=", 0) == 0) s = s.substr(2);
    for (const std::string& suffix : {"*x_" + var, "x_" + var, "*x(" + var + ")", "x(" + var + ")"}) {
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
            s = s.substr(0, s.size() - suffix.size());
            break;
        }
    }
    MultiPoly p = parse_multipoly(s, {var, "N"});
    auto act = p.active_vars();
    for (const auto& v : act)
        if (v != var && v != "N") throw InvalidInput("unexpected symbol '" + v + "' in operator");
    auto layers = p.as_univariate_in("N");
    std::vector<UniPoly> cs;
    for (const auto& l : layers) cs.push_back(l.to_unipoly(var));
    return RecurrenceOperator(cs, var);
}

VerifyResult verify(const RecurrenceOperator& op, const SequenceSample& data) {
    int I = op.order();
    if (static_cast<long>(data.size()) <= I) throw InvalidInput("verify needs more terms than the order");
    for (long n = data.offset; n + I < data.end(); ++n)
        if (op.apply(data, n) != 0) return {false, n};
    return {true, 0};
}

SequenceSample unroll(const RecurrenceOperator& op, const SequenceSample& initial, std::size_t count) {
    int I = op.order();
    if (static_cast<int>(initial.size()) < I) throw InvalidInput("unroll needs order-many initial values");
    SequenceSample out;
    out.offset = initial.offset;
    out.values.assign(initial.values.begin(), initial.values.begin() + std::min<std::size_t>(I, count));
    if (I == 0) {
        // c_0(n) x_n = 0 forces zeros wherever c_0 does not vanish
        for (std::size_t k = 0; k < count; ++k) {
            long n = out.offset + static_cast<long>(k);
            if (op.coeff(0).eval(n) == 0) throw SingularPoint(n);
            out.values.push_back(0);
        }
        return out;
    }
    // integer-friendly path: evaluate coefficients as rationals once per step
    while (out.values.size() < count) {
        long n = out.end() - I;
        Rational lead = op.coeff(I).eval(n);
        if (lead == 0) throw SingularPoint(n);
        Rational acc = 0;
        for (int i = 0; i < I; ++i) {
            if (op.coeff(i).is_zero()) continue;
            acc += op.coeff(i).eval(n) * out.values[static_cast<std::size_t>(n - out.offset + i)];
        }
        out.values.push_back(-acc / lead);
    }
    return out;
}

bool operators_equal_up_to_unit(const RecurrenceOperator& a, const RecurrenceOperator& b) {
    return a.normalized() == b.normalized();
}

std::optional<long> verifying_shift(const RecurrenceOperator& op, const SequenceSample& data, long range) {
    for (long d = 0; d <= range; ++d)
        for (long s : {-d, d}) {
            if (verify(op.shift_argument(s), data).pass) return s;
            if (d == 0) break;
        }
    return std::nullopt;
}

}  // namespace expmath
