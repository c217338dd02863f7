#include "ncborel/scalar_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ncborel {

namespace {

// Function-local static so that clients whose own static initializers call
// ParamContext::standard() never observe a not-yet-constructed name list.
const std::vector<std::string>& canonical_names() {
    static const std::vector<std::string> names = {"lam", "k1", "k2", "k3"};
    return names;
}

GaussianRational gpow(const GaussianRational& c, std::uint32_t n) {
    GaussianRational r = 1;
    for (std::uint32_t j = 0; j < n; ++j) r *= c;
    return r;
}

// gcd on nonnegative rationals: gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d).
BigRat rat_gcd(const BigRat& a, const BigRat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const BigInt an = boost::multiprecision::numerator(a);
    const BigInt ad = boost::multiprecision::denominator(a);
    const BigInt bn = boost::multiprecision::numerator(b);
    const BigInt bd = boost::multiprecision::denominator(b);
    return BigRat(boost::multiprecision::gcd(an * bd, bn * ad), ad * bd);
}

// Graded-lex comparison on exponent vectors: total degree first, then lex.
bool gradlex_less(const ScalarPoly::Exps& a, const ScalarPoly::Exps& b) {
    std::uint64_t ta = 0, tb = 0;
    for (auto e : a) ta += e;
    for (auto e : b) tb += e;
    if (ta != tb) return ta < tb;
    return a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// ParamContext

const ParamContext::Ptr& ParamContext::standard() {
    static const Ptr instance(new ParamContext(canonical_names()));
    return instance;
}

ParamContext::Ptr ParamContext::with_symbols(std::vector<std::string> extra) {
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    std::vector<std::string> names = canonical_names();
    for (auto& s : extra) {
        if (std::find(canonical_names().begin(), canonical_names().end(), s) ==
            canonical_names().end())
            names.push_back(std::move(s));
    }
    if (names.size() == canonical_names().size()) return standard();
    return Ptr(new ParamContext(std::move(names)));
}

std::optional<std::size_t> ParamContext::index_of(const std::string& name) const {
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return j;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ScalarPoly

ScalarPoly ScalarPoly::zero(ParamContext::Ptr ctx) {
    return ScalarPoly(TermMap{}, std::move(ctx));
}

ScalarPoly ScalarPoly::constant(GaussianRational c, ParamContext::Ptr ctx) {
    TermMap t;
    if (!c.is_zero()) t.emplace(Exps(ctx->size(), 0), std::move(c));
    return ScalarPoly(std::move(t), std::move(ctx));
}

ScalarPoly ScalarPoly::one(ParamContext::Ptr ctx) {
    return constant(GaussianRational(1), std::move(ctx));
}

ScalarPoly ScalarPoly::param(std::size_t idx, ParamContext::Ptr ctx) {
    if (idx >= ctx->size())
        throw ContextError("parameter index out of range for context");
    Exps e(ctx->size(), 0);
    e[idx] = 1;
    TermMap t;
    t.emplace(std::move(e), GaussianRational(1));
    return ScalarPoly(std::move(t), std::move(ctx));
}

ScalarPoly ScalarPoly::lambda(ParamContext::Ptr ctx) {
    return param(kParamLambda, std::move(ctx));
}

ScalarPoly ScalarPoly::k(int a, ParamContext::Ptr ctx) {
    if (a < 1 || a > 3) throw ContextError("k index must be 1, 2 or 3");
    return param(static_cast<std::size_t>(a), std::move(ctx));
}

ScalarPoly ScalarPoly::monomial(Exps e, GaussianRational c, ParamContext::Ptr ctx) {
    if (e.size() != ctx->size())
        throw ContextError("exponent vector length does not match context");
    TermMap t;
    if (!c.is_zero()) t.emplace(std::move(e), std::move(c));
    return ScalarPoly(std::move(t), std::move(ctx));
}

bool ScalarPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

GaussianRational ScalarPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::uint32_t ScalarPoly::degree_in(std::size_t idx) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(idx));
    return d;
}

std::uint32_t ScalarPoly::k_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[kParamK1] + e[kParamK2] + e[kParamK3]);
    return d;
}

std::uint32_t ScalarPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void ScalarPoly::insert_term(const Exps& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ScalarPoly::check_same_context(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.ctx_ == b.ctx_) return;
    if (*a.ctx_ == *b.ctx_) return;
    throw ContextError("scalar polynomials built over different parameter contexts");
}

ScalarPoly ScalarPoly::operator-() const {
    TermMap t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return ScalarPoly(std::move(t), ctx_);
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly::check_same_context(a, b);
    ScalarPoly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    return r;
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly::check_same_context(a, b);
    ScalarPoly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, -c);
    return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly::check_same_context(a, b);
    ScalarPoly r = ScalarPoly::zero(a.ctx_);
    ScalarPoly::Exps e(a.ctx_->size(), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

ScalarPoly ScalarPoly::operator*(const GaussianRational& c) const {
    TermMap t;
    if (!c.is_zero())
        for (const auto& [e, x] : terms_) t.emplace(e, x * c);
    return ScalarPoly(std::move(t), ctx_);
}

ScalarPoly ScalarPoly::operator/(const GaussianRational& c) const {
    if (c.is_zero()) throw DivisionError("scalar polynomial division by zero");
    TermMap t;
    for (const auto& [e, x] : terms_) t.emplace(e, x / c);
    return ScalarPoly(std::move(t), ctx_);
}

bool ScalarPoly::operator==(const ScalarPoly& o) const {
    check_same_context(*this, o);
    return terms_ == o.terms_;
}

bool ScalarPoly::operator<(const ScalarPoly& o) const {
    return terms_ < o.terms_;
}

ScalarPoly ScalarPoly::substitute(
    const std::map<std::string, GaussianRational>& bindings) const {
    std::vector<std::optional<GaussianRational>> bound(ctx_->size());
    for (const auto& [name, value] : bindings) {
        auto idx = ctx_->index_of(name);
        if (!idx) throw ContextError("substitute: unknown parameter '" + name + "'");
        bound[*idx] = value;
    }
    ScalarPoly r = ScalarPoly::zero(ctx_);
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        GaussianRational nc = c;
        for (std::size_t j = 0; j < ne.size(); ++j) {
            if (bound[j] && ne[j] > 0) {
                nc *= gpow(*bound[j], ne[j]);
                ne[j] = 0;
            }
        }
        r.insert_term(ne, nc);
    }
    return r;
}

ScalarPoly ScalarPoly::shift_lambda(std::uint32_t n) const {
    if (n == 0) return *this;
    TermMap t;
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        ne[kParamLambda] += n;
        t.emplace(std::move(ne), c);
    }
    return ScalarPoly(std::move(t), ctx_);
}

bool ScalarPoly::divisible_by_lambda() const {
    for (const auto& [e, c] : terms_)
        if (e[kParamLambda] == 0) return false;
    return true;
}

ScalarPoly ScalarPoly::divide_by_lambda() const {
    TermMap t;
    for (const auto& [e, c] : terms_) {
        if (e[kParamLambda] == 0)
            throw DivisionError("polynomial not divisible by lam: " + str());
        Exps ne = e;
        ne[kParamLambda] -= 1;
        t.emplace(std::move(ne), c);
    }
    return ScalarPoly(std::move(t), ctx_);
}

std::pair<ScalarPoly::Exps, GaussianRational> ScalarPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (gradlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::optional<ScalarPoly> ScalarPoly::try_divide(const ScalarPoly& divisor) const {
    check_same_context(*this, divisor);
    if (divisor.is_zero()) return std::nullopt;
    ScalarPoly rem = *this;
    ScalarPoly quot = ScalarPoly::zero(ctx_);
    const auto [dlt_e, dlt_c] = divisor.leading_term();
    // Leading-term reduction under graded lex.  When the quotient exists the
    // leading term of the remainder is always reducible, so a single failed
    // step proves the division is not exact.
    while (!rem.is_zero()) {
        const auto [rlt_e, rlt_c] = rem.leading_term();
        Exps qe(rlt_e.size());
        for (std::size_t j = 0; j < qe.size(); ++j) {
            if (rlt_e[j] < dlt_e[j]) return std::nullopt;
            qe[j] = rlt_e[j] - dlt_e[j];
        }
        ScalarPoly qterm = ScalarPoly::monomial(std::move(qe), rlt_c / dlt_c, ctx_);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

ScalarPoly ScalarPoly::truncate_k_degree(std::uint32_t bound) const {
    TermMap t;
    for (const auto& [e, c] : terms_)
        if (e[kParamK1] + e[kParamK2] + e[kParamK3] <= bound) t.emplace(e, c);
    return ScalarPoly(std::move(t), ctx_);
}

std::map<std::uint32_t, ScalarPoly> ScalarPoly::split_by_k_degree() const {
    std::map<std::uint32_t, ScalarPoly> parts;
    for (const auto& [e, c] : terms_) {
        const std::uint32_t d = e[kParamK1] + e[kParamK2] + e[kParamK3];
        auto it = parts.find(d);
        if (it == parts.end())
            it = parts.emplace(d, ScalarPoly::zero(ctx_)).first;
        it->second.insert_term(e, c);
    }
    return parts;
}

std::map<std::uint32_t, ScalarPoly> ScalarPoly::split_by_lambda_degree() const {
    std::map<std::uint32_t, ScalarPoly> parts;
    for (const auto& [e, c] : terms_) {
        const std::uint32_t d = e[kParamLambda];
        auto it = parts.find(d);
        if (it == parts.end())
            it = parts.emplace(d, ScalarPoly::zero(ctx_)).first;
        it->second.insert_term(e, c);
    }
    return parts;
}

BigRat ScalarPoly::content() const {
    BigRat g = 0;
    for (const auto& [e, c] : terms_) {
        if (c.re() != 0) g = rat_gcd(g, boost::multiprecision::abs(c.re()));
        if (c.im() != 0) g = rat_gcd(g, boost::multiprecision::abs(c.im()));
    }
    return g == 0 ? BigRat(1) : g;
}

GaussianRational ScalarPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        // Monomial text: name^exp factors joined by '*'.
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->name(j);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        // Pull a leading minus out of real or purely imaginary coefficients;
        // mixed complex coefficients are parenthesized instead.
        GaussianRational mag = c;
        bool negative = false;
        if (c.is_real()) {
            negative = c.re() < 0;
        } else if (c.re() == 0) {
            negative = c.im() < 0;
        }
        if (negative) mag = -c;

        std::string body;
        if (mono.empty()) {
            body = mag.is_real() || mag.re() == 0 ? mag.str() : "(" + mag.str() + ")";
        } else if (mag.is_one()) {
            body = mono;
        } else if (mag.is_real() || mag.re() == 0) {
            body = mag.str() + "*" + mono;
        } else {
            body = "(" + mag.str() + ")*" + mono;
        }

        if (first) {
            if (negative) os << "-";
            os << body;
            first = false;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) {
    return os << p.str();
}

// ---------------------------------------------------------------------------
// ScalarFraction

ScalarFraction::ScalarFraction(ScalarPoly num)
    : num_(std::move(num)), den_(ScalarPoly::one(num_.ctx())) {}

ScalarFraction::ScalarFraction(ScalarPoly num, ScalarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionError("scalar fraction with zero denominator");
    normalize();
}

void ScalarFraction::normalize() {
    if (num_.is_zero()) {
        den_ = ScalarPoly::one(num_.ctx());
        return;
    }
    const auto [e, c] = den_.leading_term();
    if (!c.is_one()) {
        num_ = num_ / c;
        den_ = den_ / c;
    }
}

ScalarFraction ScalarFraction::operator-() const {
    ScalarFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
    return ScalarFraction(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b) {
    if (b.is_zero()) throw DivisionError("scalar fraction division by zero");
    return ScalarFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool ScalarFraction::operator==(const ScalarFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<ScalarPoly> ScalarFraction::as_poly() const {
    return num_.try_divide(den_);
}

std::string ScalarFraction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ScalarFraction& f) {
    return os << f.str();
}

}  // namespace ncborel
