#include "ncborel/algebra.hpp"

#include <ostream>
#include <sstream>

namespace ncborel {

// ---------------------------------------------------------------------------
// NcPoly basics

NcPoly NcPoly::zero(ParamContext::Ptr ctx) {
    return NcPoly(TermMap{}, std::move(ctx));
}

NcPoly NcPoly::one(ParamContext::Ptr ctx) {
    return monomial(Monomial{}, std::move(ctx));
}

NcPoly NcPoly::generator(int a, ParamContext::Ptr ctx) {
    Monomial m;
    switch (a) {
        case 1: m.a = 1; break;
        case 2: m.b = 1; break;
        case 3: m.c = 1; break;
        default: throw Error("generator index must be 1, 2 or 3");
    }
    return monomial(m, std::move(ctx));
}

NcPoly NcPoly::scalar(ScalarPoly s) {
    auto ctx = s.ctx();
    TermMap t;
    if (!s.is_zero()) t.emplace(Monomial{}, std::move(s));
    return NcPoly(std::move(t), std::move(ctx));
}

NcPoly NcPoly::monomial(Monomial m, ScalarPoly coeff) {
    auto ctx = coeff.ctx();
    TermMap t;
    if (!coeff.is_zero()) t.emplace(m, std::move(coeff));
    return NcPoly(std::move(t), std::move(ctx));
}

NcPoly NcPoly::monomial(Monomial m, ParamContext::Ptr ctx) {
    TermMap t;
    t.emplace(m, ScalarPoly::one(ctx));
    return NcPoly(std::move(t), std::move(ctx));
}

bool NcPoly::is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

ScalarPoly NcPoly::scalar_part() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? ScalarPoly::zero(ctx_) : it->second;
}

std::uint32_t NcPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

std::uint32_t NcPoly::grade() const {
    std::uint32_t g = 0;
    for (const auto& [m, c] : terms_)
        g = std::max(g, m.total() + c.degree_in(kParamLambda));
    return g;
}

std::map<std::uint32_t, NcPoly> NcPoly::grade_parts() const {
    std::map<std::uint32_t, NcPoly> parts;
    for (const auto& [m, c] : terms_) {
        for (const auto& [l, part] : c.split_by_lambda_degree()) {
            const std::uint32_t g = m.total() + l;
            auto it = parts.find(g);
            if (it == parts.end()) it = parts.emplace(g, NcPoly::zero(ctx_)).first;
            it->second.add_term(m, part);
        }
    }
    return parts;
}

void NcPoly::check_same_context(const NcPoly& f, const NcPoly& g) {
    if (f.ctx_ == g.ctx_ || *f.ctx_ == *g.ctx_) return;
    throw ContextError("algebra elements built over different parameter contexts");
}

void NcPoly::add_term(const Monomial& m, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    TermMap t;
    for (const auto& [m, c] : terms_) t.emplace(m, -c);
    return NcPoly(std::move(t), ctx_);
}

NcPoly operator+(const NcPoly& f, const NcPoly& g) {
    NcPoly::check_same_context(f, g);
    NcPoly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

NcPoly operator-(const NcPoly& f, const NcPoly& g) {
    NcPoly::check_same_context(f, g);
    NcPoly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

// ---------------------------------------------------------------------------
// Multiplication

NcPoly normal_mul_words(const Monomial& u, const Monomial& v, ParamContext::Ptr ctx) {
    // (x1^a1 x2^b1 x3^c1)(x1^a2 x2^b2 x3^c2)
    //   = x1^a1 (x1 - 2 m lam)^a2 x2^(b1+b2) x3^(c1+c2),  m = b1 + c1,
    // expanded binomially in powers of lam.
    const std::uint32_t m = u.b + u.c;
    NcPoly out = NcPoly::zero(ctx);
    const ScalarPoly::Exps base(ctx->size(), 0);
    for (std::uint32_t j = 0; j <= v.a; ++j) {
        // C(a2, j) x1^(a1+j) (-2 m lam)^(a2-j)
        const std::uint32_t p = v.a - j;
        BigInt num = binomial(v.a, j);
        BigInt factor = BigInt(-2) * m;
        for (std::uint32_t t = 0; t < p; ++t) num *= factor;
        if (num == 0) continue;
        ScalarPoly::Exps e = base;
        e[kParamLambda] = p;
        out.add_term(Monomial{u.a + j, u.b + v.b, u.c + v.c},
                     ScalarPoly::monomial(std::move(e), GaussianRational(num), ctx));
    }
    return out;
}

NcPoly operator*(const NcPoly& f, const NcPoly& g) {
    NcPoly::check_same_context(f, g);
    NcPoly r = NcPoly::zero(f.ctx_);
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            const NcPoly prod = normal_mul_words(mf, mg, f.ctx_);
            const ScalarPoly c = cf * cg;
            for (const auto& [m, pc] : prod.terms())
                r.add_term(m, pc * c);
        }
    }
    return r;
}

NcPoly NcPoly::operator*(const ScalarPoly& s) const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

NcPoly NcPoly::operator*(const GaussianRational& c) const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
}

NcPoly NcPoly::operator/(const GaussianRational& c) const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, x] : terms_) r.add_term(m, x / c);
    return r;
}

NcPoly NcPoly::pow(std::uint32_t n) const {
    NcPoly r = NcPoly::one(ctx_);
    for (std::uint32_t j = 0; j < n; ++j) r *= *this;
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    check_same_context(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

NcPoly NcPoly::substitute(
    const std::map<std::string, GaussianRational>& bindings) const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(bindings));
    return r;
}

NcPoly NcPoly::divide_by_lambda() const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.divide_by_lambda());
    return r;
}

NcPoly NcPoly::truncate_k_degree(std::uint32_t bound) const {
    NcPoly r = NcPoly::zero(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.truncate_k_degree(bound));
    return r;
}

ScalarPoly NcPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarPoly::zero(ctx_) : it->second;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Words print in descending order so the highest word leads, e.g.
    // "x1*x2 - 2*lam*x2".
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const ScalarPoly& c = it->second;

        std::string word;
        auto append_power = [&word](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!word.empty()) word += "*";
            word += name;
            if (e > 1) word += "^" + std::to_string(e);
        };
        append_power("x1", m.a);
        append_power("x2", m.b);
        append_power("x3", m.c);

        // Single real or purely imaginary scalar terms carry their sign into
        // the sum; anything else is parenthesized.
        bool negative = false;
        std::string ctext;
        if (c.is_constant()) {
            GaussianRational v = c.constant_value();
            if (v.is_real())
                negative = v.re() < 0;
            else if (v.re() == 0)
                negative = v.im() < 0;
            if (negative) v = -v;
            if (word.empty())
                ctext = v.is_real() || v.re() == 0 ? v.str() : "(" + v.str() + ")";
            else if (v.is_one())
                ctext = "";
            else
                ctext = (v.is_real() || v.re() == 0 ? v.str() : "(" + v.str() + ")");
        } else if (c.terms().size() == 1) {
            const auto& [e, v] = *c.terms().begin();
            GaussianRational mag = v;
            if (v.is_real())
                negative = v.re() < 0;
            else if (v.re() == 0)
                negative = v.im() < 0;
            if (negative) mag = -v;
            ScalarPoly plain = ScalarPoly::monomial(e, mag, c.ctx());
            ctext = plain.str();
        } else {
            ctext = "(" + c.str() + ")";
        }

        std::string body = ctext;
        if (!word.empty()) {
            if (body.empty())
                body = word;
            else
                body += "*" + word;
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

std::ostream& operator<<(std::ostream& os, const NcPoly& p) {
    return os << p.str();
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) {
    return f * g - g * f;
}

// ---------------------------------------------------------------------------
// TensorSquare

TensorSquare TensorSquare::pure(const NcPoly& left, const NcPoly& right) {
    TensorSquare t(left.ctx());
    for (const auto& [u, cu] : left.terms())
        for (const auto& [v, cv] : right.terms())
            t.add_term(u, v, cu * cv);
    return t;
}

void TensorSquare::add_term(const Monomial& u, const Monomial& v, const ScalarPoly& c) {
    if (c.is_zero()) return;
    const Key key{u, v};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSquare operator+(const TensorSquare& s, const TensorSquare& t) {
    TensorSquare r = s;
    for (const auto& [key, c] : t.terms_) r.add_term(key.first, key.second, c);
    return r;
}

TensorSquare operator-(const TensorSquare& s, const TensorSquare& t) {
    TensorSquare r = s;
    for (const auto& [key, c] : t.terms_) r.add_term(key.first, key.second, -c);
    return r;
}

TensorSquare operator*(const TensorSquare& s, const TensorSquare& t) {
    TensorSquare r(s.ctx_);
    for (const auto& [ks, cs] : s.terms_) {
        for (const auto& [kt, ct] : t.terms_) {
            // Componentwise products, each normally ordered independently.
            const NcPoly left = normal_mul_words(ks.first, kt.first, s.ctx_);
            const NcPoly right = normal_mul_words(ks.second, kt.second, s.ctx_);
            const ScalarPoly c = cs * ct;
            for (const auto& [u, cu] : left.terms())
                for (const auto& [v, cv] : right.terms())
                    r.add_term(u, v, cu * cv * c);
        }
    }
    return r;
}

TensorSquare TensorSquare::operator*(const ScalarPoly& c) const {
    TensorSquare r(ctx_);
    for (const auto& [key, x] : terms_) r.add_term(key.first, key.second, x * c);
    return r;
}

TensorSquare TensorSquare::flip() const {
    TensorSquare r(ctx_);
    for (const auto& [key, c] : terms_) r.add_term(key.second, key.first, c);
    return r;
}

std::string TensorSquare::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) os << " + ";
        first = false;
        const NcPoly left = NcPoly::monomial(key.first, c);
        const NcPoly right = NcPoly::monomial(key.second, ctx_);
        os << "(" << left.str() << ") (x) (" << right.str() << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Hopf operations

TensorSquare coproduct(const NcPoly& f) {
    TensorSquare out(f.ctx());
    for (const auto& [m, c] : f.terms()) {
        // Delta(x^n) = sum_j C(n,j) x^j (x) x^(n-j) holds for a single
        // generator because x (x) 1 and 1 (x) x commute; the three generator
        // blocks are then multiplied out in the tensor square.
        auto power_block = [&f](int gen, std::uint32_t n) {
            TensorSquare t(f.ctx());
            for (std::uint32_t j = 0; j <= n; ++j) {
                Monomial u, v;
                switch (gen) {
                    case 1: u.a = j; v.a = n - j; break;
                    case 2: u.b = j; v.b = n - j; break;
                    default: u.c = j; v.c = n - j; break;
                }
                t.add_term(u, v,
                           ScalarPoly::constant(GaussianRational(binomial(n, j)),
                                                f.ctx()));
            }
            return t;
        };
        TensorSquare block = power_block(1, m.a) * power_block(2, m.b);
        block = block * power_block(3, m.c);
        out += block * c;
    }
    return out;
}

ScalarPoly counit(const NcPoly& f) {
    return f.scalar_part();
}

NcPoly antipode(const NcPoly& f) {
    NcPoly out = NcPoly::zero(f.ctx());
    for (const auto& [m, c] : f.terms()) {
        // S reverses the word and negates each letter:
        // S(x1^a x2^b x3^c) = (-1)^(a+b+c) x3^c x2^b x1^a, reordered.
        NcPoly reordered =
            normal_mul_words(Monomial{0, m.b, m.c}, Monomial{m.a, 0, 0}, f.ctx());
        const bool odd = (m.total() % 2) != 0;
        for (const auto& [w, cw] : reordered.terms())
            out.add_term(w, odd ? -(cw * c) : cw * c);
    }
    return out;
}

CentralityCheck is_central(const NcPoly& f) {
    for (int a = 1; a <= 3; ++a) {
        NcPoly w = commutator(NcPoly::generator(a, f.ctx()), f);
        if (!w.is_zero()) return CentralityCheck{false, a, std::move(w)};
    }
    return CentralityCheck{true, 0, NcPoly::zero(f.ctx())};
}

}  // namespace ncborel
