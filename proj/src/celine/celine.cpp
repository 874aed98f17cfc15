#include "expmath/celine/celine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "expmath/exact/linear_solve.hpp"
#include "expmath/exact/parse.hpp"
#include "expmath/exact/poly_nullspace.hpp"

namespace expmath {

namespace {

std::vector<std::string> aux_vars(const std::vector<std::string>& params) {
    std::vector<std::string> v{"k"};
    v.insert(v.end(), params.begin(), params.end());
    return v;
}

std::vector<std::string> term_vars(const std::vector<std::string>& params) {
    std::vector<std::string> v{"n", "k"};
    v.insert(v.end(), params.begin(), params.end());
    return v;
}

std::vector<std::string> operator_vars(const std::vector<std::string>& params) {
    std::vector<std::string> v{"n"};
    v.insert(v.end(), params.begin(), params.end());
    return v;
}

// All exponent vectors of length D summing to d.
void compositions(int D, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == D - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = d; a >= 0; --a) {
        cur.push_back(a);
        compositions(D, d - a, cur, out);
        cur.pop_back();
    }
}

MultiPoly clear_to(const RatFunc& f, const MultiPoly& den, const std::vector<std::string>& vars) {
    // f * den, which must be a polynomial
    return exact_div(f.num().with_vars(vars) * den.with_vars(vars), f.den().with_vars(vars));
}

std::map<std::string, Rational> with_k(std::map<std::string, Rational> p, long k) {
    p["k"] = k;
    return p;
}

}  // namespace

// ---------------------------------------------------------------- AuxSequence

AuxSequence AuxSequence::from_operator(const RecurrenceOperator& op, std::vector<Rational> initials, int d) {
    AuxSequence a;
    for (const auto& c : op.coeffs()) a.coeffs.emplace_back(MultiPoly::from_unipoly(c.with_var("k"), {"k"}));
    a.initials = std::move(initials);
    a.d = d;
    a.validate();
    return a;
}

AuxSequence AuxSequence::fibonacci(int d) {
    AuxSequence a;
    a.coeffs = {RatFunc(-1), RatFunc(-1), RatFunc(1)};
    a.initials = {0, 1};
    a.d = d;
    return a;
}

AuxSequence AuxSequence::central_trinomial(int d) {
    // (k+2) a_{k+2} - (2k+3) a_{k+1} - 3(k+1) a_k = 0
    MultiPoly k = MultiPoly::variable("k");
    AuxSequence a;
    a.coeffs = {RatFunc(k * Rational(-3) - MultiPoly(Rational(3), {"k"})),
                RatFunc(k * Rational(-2) - MultiPoly(Rational(3), {"k"})), RatFunc(k + MultiPoly(Rational(2), {"k"}))};
    a.initials = {1, 1};
    a.d = d;
    return a;
}

void AuxSequence::validate() const {
    if (order() < 1) throw InvalidInput("auxiliary recurrence needs order at least 1");
    if (coeffs.back().is_zero()) throw InvalidInput("auxiliary recurrence has zero leading coefficient");
    if (static_cast<int>(initials.size()) < order())
        throw InvalidInput("auxiliary sequence needs " + std::to_string(order()) + " initial values");
    if (d < 1) throw InvalidInput("auxiliary power d must be positive");
}

std::vector<Rational> AuxSequence::values(long count, const std::map<std::string, Rational>& params) const {
    validate();
    std::vector<Rational> a(initials.begin(), initials.end());
    int D = order();
    while (static_cast<long>(a.size()) < count) {
        long k = static_cast<long>(a.size()) - D;
        auto pt = with_k(params, k);
        Rational lead;
        try {
            lead = coeffs[D].eval(pt);
        } catch (const Error&) {
            throw LeadingCoefficientVanishes(k);
        }
        if (lead == 0) throw LeadingCoefficientVanishes(k);
        Rational s = 0;
        for (int t = 0; t < D; ++t) s += coeffs[t].eval(pt) * a[k + t];
        a.push_back(Rational(-s / lead));
    }
    a.resize(std::max<long>(count, 0));
    return a;
}

nlohmann::json AuxSequence::to_json() const {
    nlohmann::json j;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_string());
    j["coeffs"] = cs;
    nlohmann::json iv = nlohmann::json::array();
    for (const auto& v : initials) iv.push_back(to_string(v));
    j["initials"] = iv;
    j["d"] = d;
    return j;
}

AuxSequence AuxSequence::from_json(const nlohmann::json& j, const std::vector<std::string>& params) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "coeffs" && it.key() != "initials" && it.key() != "d")
            throw InvalidInput("unknown key '" + it.key() + "' in auxiliary sequence");
    AuxSequence a;
    auto vars = aux_vars(params);
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) a.coeffs.push_back(parse_ratfunc(c.get<std::string>(), vars));
        else a.coeffs.emplace_back(Rational(c.get<long>()));
    }
    for (const auto& v : j.at("initials"))
        a.initials.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    a.d = j.value("d", 1);
    for (const auto& c : a.coeffs)
        for (const auto& v : c.active_vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                throw InvalidInput("auxiliary coefficient uses undeclared symbol '" + v + "'");
    a.validate();
    return a;
}

std::vector<RatFunc> reduce_shift(const AuxSequence& aux, long j) {
    aux.validate();
    if (j < 0) throw InvalidInput("reduce_shift needs j >= 0");
    int D = aux.order();
    std::vector<std::vector<RatFunc>> c;
    for (long jj = 0; jj <= j; ++jj) {
        std::vector<RatFunc> v(D, RatFunc(0));
        if (jj < D) {
            v[jj] = RatFunc(1);
        } else {
            // a_{k+jj} = -sum_{t<D} r_t(k+s)/r_D(k+s) a_{k+s+t}, s = jj - D
            long s = jj - D;
            RatFunc lead = aux.coeffs[D].shift("k", s);
            for (int t = 0; t < D; ++t) {
                RatFunc f = -(aux.coeffs[t].shift("k", s) / lead);
                if (f.is_zero()) continue;
                for (int m = 0; m < D; ++m)
                    if (!c[s + t][m].is_zero()) v[m] += f * c[s + t][m];
            }
        }
        c.push_back(std::move(v));
    }
    return c.back();
}

// ---------------------------------------------------------------- ParamOperator

ParamOperator::ParamOperator(std::vector<MultiPoly> coeffs, std::vector<std::string> params)
    : c_(std::move(coeffs)), params_(std::move(params)) {
    auto vars = operator_vars(params_);
    for (auto& c : c_) c = c.with_vars(vars);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) throw InvalidInput("zero recurrence operator");
}

ParamOperator ParamOperator::normalized() const {
    auto vars = operator_vars(params_);
    MultiPoly g;
    bool first = true;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        g = first ? c : gcd(g, c);
        first = false;
    }
    std::vector<MultiPoly> out;
    for (const auto& c : c_) out.push_back(c.is_zero() ? c : exact_div(c, g).with_vars(vars));
    // common rational content
    Integer num_g = 0, den_l = 1;
    for (const auto& c : out)
        for (const auto& [e, v] : c.terms()) {
            num_g = gcd(num_g, Integer(abs(v.get_num())));
            den_l = lcm(den_l, Integer(v.get_den()));
        }
    Rational scale = make_rational(den_l, num_g);
    if (out.back().leading_coeff() < 0) scale = -scale;
    for (auto& c : out) c *= scale;
    return ParamOperator(out, params_);
}

RecurrenceOperator ParamOperator::specialize(const std::map<std::string, Rational>& values) const {
    std::vector<UniPoly> u;
    for (const auto& c : c_) {
        MultiPoly p = values.empty() ? c : c.partial_eval(values);
        for (const auto& v : p.active_vars())
            if (v != "n") throw InvalidInput("parameter '" + v + "' has no value");
        u.push_back(p.to_unipoly("n"));
    }
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    if (u.empty()) throw InvalidInput("operator vanishes at this specialization");
    return RecurrenceOperator(u, "n");
}

std::string ParamOperator::to_string() const {
    if (params_.empty()) return specialize().to_string();
    std::string s;
    for (int i = order(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].to_string() + ")";
        if (i == 1) s += "*N";
        else if (i > 1) s += "*N^" + std::to_string(i);
    }
    return s;
}

// ---------------------------------------------------------------- direct sums

SequenceSample direct_sum_terms(const ProperHypTerm& h, const AuxSequence* aux, long count,
                                const std::map<std::string, Rational>& params, const SumWindow& w) {
    SequenceSample out;
    long max_k = std::max<long>(w.hi_slope * (count - 1) + w.hi_offset, 0) + 1;
    std::vector<Rational> a;
    if (aux) a = aux->values(max_k + 1, params);
    int d = aux ? aux->d : 0;
    for (long n = 0; n < count; ++n) {
        long lo = w.lo, hi = w.hi_slope * n + w.hi_offset;
        if (!w.explicit_bounds) {
            if (h.eval(n, lo - 1, params) != 0 || h.eval(n, hi + 1, params) != 0)
                throw UnboundedSupport("summand does not vanish outside k = " + std::to_string(lo) + ".." +
                                       std::to_string(hi) + " at n = " + std::to_string(n));
        }
        if (aux && lo < 0) throw InvalidInput("auxiliary sequence is indexed from 0");
        Rational s = 0;
        for (long k = lo; k <= hi; ++k) {
            Rational t = h.eval(n, k, params);
            if (t == 0) continue;
            if (aux) t *= rpow(a.at(k), d);
            s += t;
        }
        out.values.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------- Celine

nlohmann::json CelineResult::report() const {
    nlohmann::json j;
    j["operator"] = op.to_string();
    j["order"] = op.order();
    j["I"] = I;
    j["J"] = J;
    j["verified_terms"] = verified_terms;
    j["valid_from"] = valid_from;
    if (!specializations.empty()) {
        nlohmann::json sp = nlohmann::json::array();
        for (const auto& m : specializations) {
            nlohmann::json e;
            for (const auto& [k, v] : m) e[k] = to_string(v);
            sp.push_back(e);
        }
        j["specializations"] = sp;
    }
    return j;
}

namespace {

// Checks op against direct sums; returns the smallest start index that works (<= max_start).
std::optional<long> check_against_sums(const RecurrenceOperator& op, const SequenceSample& x, long max_start) {
    for (long s = 0; s <= max_start; ++s) {
        SequenceSample tail = x.slice(s, x.end());
        if (verify(op, tail).pass) return s;
    }
    return std::nullopt;
}

}  // namespace

CelineResult find_sum_recurrence(const ProperHypTerm& h, const AuxSequence* aux, int I, int J,
                                 const CelineOptions& opt) {
    if (I < 1 || J < 0) throw InvalidInput("Celine ansatz needs I >= 1 and J >= 0");
    if (aux) aux->validate();
    Deadline dl(opt.timeout_s);
    const auto& params = h.params;
    auto vars = term_vars(params);

    // G_{i,j} over a common denominator of linear forms
    std::vector<std::vector<FactoredRatio>> fr(I + 1, std::vector<FactoredRatio>(J + 1));
    std::map<LinearForm, int> common;
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) {
            fr[i][j] = factored_ratio(h, i, j, vars);
            for (const auto& [f, m] : fr[i][j].denominator) common[f] = std::max(common[f], m);
        }
    std::vector<std::vector<MultiPoly>> T(I + 1, std::vector<MultiPoly>(J + 1));
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) {
            MultiPoly t = fr[i][j].numerator;
            for (const auto& [f, m] : common) {
                auto it = fr[i][j].denominator.find(f);
                int rest = m - (it == fr[i][j].denominator.end() ? 0 : it->second);
                if (rest > 0) t *= pow(f.poly(vars), static_cast<unsigned>(rest));
            }
            T[i][j] = t;
        }
    dl.check("celine setup");

    // aux part: for each j, map from exponent vector alpha to a polynomial in k
    std::vector<std::map<std::vector<int>, MultiPoly>> Q(J + 1);
    if (!aux) {
        for (int j = 0; j <= J; ++j) Q[j][{}] = MultiPoly(Rational(1), vars);
    } else {
        int D = aux->order(), d = aux->d;
        std::vector<std::vector<int>> alphas;
        std::vector<int> cur;
        compositions(D, d, cur, alphas);
        std::vector<std::vector<MultiPoly>> chat(J + 1);
        std::vector<MultiPoly> Dj(J + 1);
        MultiPoly L(Rational(1), vars);
        for (int j = 0; j <= J; ++j) {
            auto c = reduce_shift(*aux, j);
            MultiPoly den(Rational(1), vars);
            for (const auto& cm : c)
                if (!cm.is_zero()) den = lcm(den, cm.den().with_vars(vars)).with_vars(vars);
            Dj[j] = den;
            for (const auto& cm : c) chat[j].push_back(cm.is_zero() ? MultiPoly(vars) : clear_to(cm, den, vars));
            L = lcm(L, pow(den, static_cast<unsigned>(d))).with_vars(vars);
            dl.check("celine reduction");
        }
        for (int j = 0; j <= J; ++j) {
            MultiPoly scale = exact_div(L, pow(Dj[j], static_cast<unsigned>(d))).with_vars(vars);
            for (const auto& al : alphas) {
                MultiPoly q = scale * Rational(multinomial(std::vector<long>(al.begin(), al.end())));
                bool zero = false;
                for (int m = 0; m < D && !zero; ++m) {
                    if (al[m] == 0) continue;
                    if (chat[j][m].is_zero()) zero = true;
                    else q *= pow(chat[j][m], static_cast<unsigned>(al[m]));
                }
                if (!zero && !q.is_zero()) Q[j][al] = q.with_vars(vars);
            }
        }
    }

    // rows indexed by (alpha, power of k); columns by (i, j)
    int ncols = (I + 1) * (J + 1);
    std::map<std::pair<std::vector<int>, int>, std::vector<MultiPoly>> rows;
    auto ovars = operator_vars(params);
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) {
            int col = i * (J + 1) + j;
            for (const auto& [al, q] : Q[j]) {
                MultiPoly prod = T[i][j] * q;
                auto parts = prod.as_univariate_in("k");
                for (int e = 0; e < static_cast<int>(parts.size()); ++e) {
                    if (parts[e].is_zero()) continue;
                    auto& row = rows[{al, e}];
                    if (row.empty()) row.assign(ncols, MultiPoly(ovars));
                    row[col] = parts[e].with_vars(ovars);
                }
            }
            dl.check("celine system");
        }
    if (rows.empty()) throw InternalError("Celine system has no equations");

    std::vector<std::vector<MultiPoly>> basis;
    if (params.empty()) {
        Matrix<UniPoly> m;
        std::set<std::vector<std::string>> seen;
        for (const auto& [key, row] : rows) {
            std::vector<UniPoly> u;
            std::vector<std::string> sig;
            for (const auto& e : row) {
                u.push_back(e.to_unipoly("n"));
                sig.push_back(u.back().to_string());
            }
            if (seen.insert(sig).second) m.push_back(std::move(u));
        }
        for (const auto& v : polynomial_nullspace(m, "n", &dl)) {
            std::vector<MultiPoly> mv;
            for (const auto& e : v) mv.push_back(MultiPoly::from_unipoly(e, ovars));
            basis.push_back(std::move(mv));
        }
    } else {
        Matrix<MultiPoly> m;
        for (const auto& [key, row] : rows) m.push_back(row);
        basis = nullspace_polynomial(m, &dl);
    }

    // candidate operators, best (lowest order) first
    std::vector<ParamOperator> cands;
    for (const auto& v : basis) {
        std::vector<MultiPoly> c(I + 1, MultiPoly(ovars));
        for (int i = 0; i <= I; ++i)
            for (int j = 0; j <= J; ++j) c[i] += v[i * (J + 1) + j].with_vars(ovars);
        std::size_t z = 0;
        while (z < c.size() && c[z].is_zero()) ++z;
        if (z == c.size()) continue;
        // N^z * L: keep L, with n -> n - z
        std::vector<MultiPoly> low;
        for (std::size_t i = z; i < c.size(); ++i) low.push_back(c[i].shift("n", -static_cast<long>(z)));
        cands.push_back(ParamOperator(low, params).normalized());
    }
    if (cands.empty())
        throw NotFound("only trivial solutions at I = " + std::to_string(I) + ", J = " + std::to_string(J), "celine");
    std::stable_sort(cands.begin(), cands.end(),
                     [](const ParamOperator& a, const ParamOperator& b) { return a.order() < b.order(); });

    // enforced verification against direct sums
    long count = std::max<long>(opt.verify_terms, 30) + I;
    std::vector<std::map<std::string, Rational>> points;
    if (params.empty()) {
        points.push_back({});
    } else {
        for (long v : {1L, 2L, 3L}) {
            std::map<std::string, Rational> p;
            for (const auto& name : params) p[name] = v;
            points.push_back(p);
        }
        std::map<std::string, Rational> mixed;
        long v = 5;
        for (const auto& name : params) mixed[name] = make_rational(Integer(v += 2), Integer(3));
        points.push_back(mixed);
    }
    for (const auto& cand : cands) {
        CelineResult res;
        res.op = cand;
        res.I = I;
        res.J = J;
        bool ok = true;
        long valid_from = 0;
        for (const auto& pt : points) {
            RecurrenceOperator spec;
            try {
                spec = cand.specialize(pt);
            } catch (const InvalidInput&) {
                continue;  // vanishes identically at this point
            }
            SequenceSample x = direct_sum_terms(h, aux, count, pt, opt.window);
            auto s = check_against_sums(spec, x, I);
            if (!s) {
                ok = false;
                break;
            }
            valid_from = std::max(valid_from, *s);
        }
        if (ok) {
            res.valid_from = valid_from;
            res.verified_terms = count - valid_from - cand.order();
            if (!params.empty()) res.specializations = points;
            return res;
        }
    }
    throw VerificationFailed("Celine operator at I = " + std::to_string(I) + ", J = " + std::to_string(J) +
                             " does not match the directly summed terms");
}

CelineResult search_sum_recurrence(const ProperHypTerm& h, const AuxSequence* aux, int max_I, int max_J,
                                   const CelineOptions& opt) {
    bool timed_out = false;
    for (int s = 1; s <= max_I + max_J; ++s)
        for (int I = 1; I <= std::min(s, max_I); ++I) {
            int J = s - I;
            if (J > max_J) continue;
            try {
                return find_sum_recurrence(h, aux, I, J, opt);
            } catch (const Timeout&) {
                timed_out = true;
            } catch (const VerificationFailed&) {
                throw;
            } catch (const NotFound&) {
            }
        }
    throw NotFound(std::string("no recurrence with I <= ") + std::to_string(max_I) + ", J <= " +
                       std::to_string(max_J) + (timed_out ? " (some attempts timed out)" : ""),
                   "celine");
}

CelineResult nested_sum(const ProperHypTerm& outer, const RecurrenceOperator& inner,
                        std::vector<Rational> inner_initials, int max_I, int max_J, const CelineOptions& opt) {
    AuxSequence aux = AuxSequence::from_operator(inner, std::move(inner_initials), 1);
    return search_sum_recurrence(outer, &aux, max_I, max_J, opt);
}

}  // namespace expmath
