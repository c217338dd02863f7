#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncborel/scalar_poly.hpp"

namespace ncborel {

/// Normally ordered word x1^a x2^b x3^c.
struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;

    std::uint32_t total() const { return a + b + c; }
    auto operator<=>(const Monomial&) const = default;
};

/// Element of the coordinate algebra: finite sum of normally ordered words
/// with ScalarPoly coefficients.  The zero coefficient is never stored.
///
/// Multiplication reorders via the defining relations
///   [x1, x2] = 2 lam x2,  [x1, x3] = 2 lam x3,  [x2, x3] = 0,
/// using the closed form
///   (x2^b x3^c) x1^n = (x1 - 2(b+c) lam)^n x2^b x3^c.
class NcPoly {
public:
    using TermMap = std::map<Monomial, ScalarPoly>;

    /// Zero in the standard context.
    NcPoly() : ctx_(ParamContext::standard()) {}

    static NcPoly zero(ParamContext::Ptr ctx = ParamContext::standard());
    static NcPoly one(ParamContext::Ptr ctx = ParamContext::standard());
    /// x_a for a in {1, 2, 3}.
    static NcPoly generator(int a, ParamContext::Ptr ctx = ParamContext::standard());
    static NcPoly scalar(ScalarPoly s);
    static NcPoly monomial(Monomial m, ScalarPoly coeff);
    static NcPoly monomial(Monomial m, ParamContext::Ptr ctx = ParamContext::standard());

    const ParamContext::Ptr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    /// Coefficient of the unit word (this is also the counit).
    ScalarPoly scalar_part() const;

    /// Largest word length appearing (0 for scalars and zero).
    std::uint32_t degree() const;
    /// Largest lam-weighted grade |word| + deg_lam(coeff) over all terms.
    std::uint32_t grade() const;
    /// Split into lam-weighted homogeneous parts.
    std::map<std::uint32_t, NcPoly> grade_parts() const;

    NcPoly operator-() const;
    friend NcPoly operator+(const NcPoly& f, const NcPoly& g);
    friend NcPoly operator-(const NcPoly& f, const NcPoly& g);
    /// Normally ordered product.
    friend NcPoly operator*(const NcPoly& f, const NcPoly& g);
    NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
    NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

    NcPoly operator*(const ScalarPoly& s) const;
    NcPoly operator*(const GaussianRational& c) const;
    NcPoly operator/(const GaussianRational& c) const;
    NcPoly pow(std::uint32_t n) const;

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    /// Evaluate parameters exactly (context preserved, unbound stay formal).
    NcPoly substitute(const std::map<std::string, GaussianRational>& bindings) const;

    /// Exact quotient of every coefficient by lam; throws DivisionError
    /// when some coefficient is not divisible.
    NcPoly divide_by_lambda() const;

    /// Drop terms whose coefficient k-degree exceeds the bound.
    NcPoly truncate_k_degree(std::uint32_t bound) const;

    ScalarPoly coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const ScalarPoly& c);

    std::string str() const;

private:
    NcPoly(TermMap terms, ParamContext::Ptr ctx)
        : terms_(std::move(terms)), ctx_(std::move(ctx)) {}

    static void check_same_context(const NcPoly& f, const NcPoly& g);

    TermMap terms_;
    ParamContext::Ptr ctx_;
};

std::ostream& operator<<(std::ostream& os, const NcPoly& p);

/// Normally ordered product of two bare words (the rewrite engine behind
/// NcPoly multiplication, exposed for tests and oracles).
NcPoly normal_mul_words(const Monomial& u, const Monomial& v,
                        ParamContext::Ptr ctx = ParamContext::standard());

/// f g - g f.
NcPoly commutator(const NcPoly& f, const NcPoly& g);

/// Element of the algebraic tensor square with componentwise normally
/// ordered multiplication (no braiding).  Coefficients are attached to the
/// pair of words as a whole.
class TensorSquare {
public:
    using Key = std::pair<Monomial, Monomial>;
    using TermMap = std::map<Key, ScalarPoly>;

    explicit TensorSquare(ParamContext::Ptr ctx = ParamContext::standard())
        : ctx_(std::move(ctx)) {}

    static TensorSquare pure(const NcPoly& left, const NcPoly& right);

    const TermMap& terms() const { return terms_; }
    const ParamContext::Ptr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }

    friend TensorSquare operator+(const TensorSquare& s, const TensorSquare& t);
    friend TensorSquare operator-(const TensorSquare& s, const TensorSquare& t);
    friend TensorSquare operator*(const TensorSquare& s, const TensorSquare& t);
    TensorSquare operator*(const ScalarPoly& c) const;
    TensorSquare& operator+=(const TensorSquare& o) { return *this = *this + o; }

    bool operator==(const TensorSquare& o) const { return terms_ == o.terms_; }

    /// Swap the tensor factors (used to test cocommutativity).
    TensorSquare flip() const;

    /// Apply a ScalarPoly-valued functional to the left factor, keeping the
    /// right factor:  sum phi(u) * v.
    template <typename Fn>
    NcPoly contract_left(Fn phi) const {
        NcPoly out = NcPoly::zero(ctx_);
        for (const auto& [key, c] : terms_)
            out += NcPoly::monomial(key.second, phi(key.first) * c);
        return out;
    }

    void add_term(const Monomial& u, const Monomial& v, const ScalarPoly& c);

    std::string str() const;

private:
    TermMap terms_;
    ParamContext::Ptr ctx_;
};

/// Coproduct: the algebra map determined by x_a -> x_a (x) 1 + 1 (x) x_a.
TensorSquare coproduct(const NcPoly& f);

/// Counit: coefficient of the unit word.
ScalarPoly counit(const NcPoly& f);

/// Antipode: the anti-homomorphism determined by x_a -> -x_a.
NcPoly antipode(const NcPoly& f);

/// Centrality report: the first failing commutator witness, if any,
/// scanning generators in the order x1, x2, x3.
struct CentralityCheck {
    bool central;
    int generator = 0;     // 1..3 when a witness exists
    NcPoly witness;        // [x_generator, f], nonzero iff !central
};

CentralityCheck is_central(const NcPoly& f);

}  // namespace ncborel
