#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncborel/rational.hpp"

namespace ncborel {

/// Immutable list of commuting formal parameters.
///
/// The first four slots are always lam, k1, k2, k3 in that order; any extra
/// user symbols follow in lexicographic order.  Contexts compare by value, so
/// two independently constructed contexts with the same symbol list are
/// interchangeable.
class ParamContext {
public:
    using Ptr = std::shared_ptr<const ParamContext>;

    /// The shared default context holding exactly lam, k1, k2, k3.
    static const Ptr& standard();

    /// Standard context extended by extra symbols (deduplicated, sorted).
    /// Symbols colliding with the canonical four are ignored.
    static Ptr with_symbols(std::vector<std::string> extra);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t idx) const { return names_.at(idx); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const ParamContext& o) const { return names_ == o.names_; }

private:
    explicit ParamContext(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

/// Indices of the canonical parameters inside every context.
inline constexpr std::size_t kParamLambda = 0;
inline constexpr std::size_t kParamK1 = 1;
inline constexpr std::size_t kParamK2 = 2;
inline constexpr std::size_t kParamK3 = 3;

/// Sparse commutative polynomial over Q(i) in the parameters of a context.
///
/// Terms are keyed by their exponent vector (one entry per context symbol)
/// and the map never stores a zero coefficient, so representation equality
/// is semantic equality.
class ScalarPoly {
public:
    using Exps = std::vector<std::uint32_t>;
    using TermMap = std::map<Exps, GaussianRational>;

    /// Zero in the standard context.
    ScalarPoly() : ctx_(ParamContext::standard()) {}

    static ScalarPoly zero(ParamContext::Ptr ctx = ParamContext::standard());
    static ScalarPoly constant(GaussianRational c,
                               ParamContext::Ptr ctx = ParamContext::standard());
    static ScalarPoly one(ParamContext::Ptr ctx = ParamContext::standard());
    static ScalarPoly param(std::size_t idx,
                            ParamContext::Ptr ctx = ParamContext::standard());
    static ScalarPoly lambda(ParamContext::Ptr ctx = ParamContext::standard());
    /// k_a for a in {1,2,3}.
    static ScalarPoly k(int a, ParamContext::Ptr ctx = ParamContext::standard());
    static ScalarPoly monomial(Exps e, GaussianRational c, ParamContext::Ptr ctx);

    const ParamContext::Ptr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the empty monomial; requires is_constant().
    GaussianRational constant_value() const;
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    /// Largest exponent of the given parameter over all terms (0 if absent).
    std::uint32_t degree_in(std::size_t idx) const;
    /// Largest combined degree in k1, k2, k3 over all terms.
    std::uint32_t k_degree() const;
    /// Largest total degree (all parameters) over all terms.
    std::uint32_t total_degree() const;

    ScalarPoly operator-() const;
    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator-=(const ScalarPoly& o) { return *this = *this - o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }

    ScalarPoly operator*(const GaussianRational& c) const;
    ScalarPoly operator/(const GaussianRational& c) const;

    bool operator==(const ScalarPoly& o) const;
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }
    /// Deterministic total order (term-map lexicographic); for containers only.
    bool operator<(const ScalarPoly& o) const;

    /// Exact evaluation of the named parameters; unbound parameters stay
    /// formal and the result lives in the same context.
    ScalarPoly substitute(const std::map<std::string, GaussianRational>& bindings) const;

    /// Multiply by lam^n.
    ScalarPoly shift_lambda(std::uint32_t n) const;

    /// Exact quotient by lam; throws DivisionError when some term lacks a
    /// lam factor.
    ScalarPoly divide_by_lambda() const;
    bool divisible_by_lambda() const;

    /// Exact polynomial quotient; NONE when the division is not exact.
    std::optional<ScalarPoly> try_divide(const ScalarPoly& divisor) const;

    /// Drop terms whose combined k-degree exceeds the bound.
    ScalarPoly truncate_k_degree(std::uint32_t bound) const;

    /// Split into homogeneous parts by combined k-degree.
    std::map<std::uint32_t, ScalarPoly> split_by_k_degree() const;

    /// Split into homogeneous parts by lam-degree.
    std::map<std::uint32_t, ScalarPoly> split_by_lambda_degree() const;

    /// Positive rational content: the smallest positive rational q such that
    /// every coefficient of (*this)/q has coprime integral real and imaginary
    /// parts overall.  Zero polynomial has content 1.
    BigRat content() const;

    /// The coefficient of the term whose exponent vector is e (zero if absent).
    GaussianRational coeff(const Exps& e) const;

    /// Leading term under graded-lex order on exponent vectors (total degree
    /// first, then lexicographic); requires a nonzero polynomial.
    std::pair<Exps, GaussianRational> leading_term() const;

    std::string str() const;

private:
    ScalarPoly(TermMap terms, ParamContext::Ptr ctx)
        : terms_(std::move(terms)), ctx_(std::move(ctx)) {}

    void insert_term(const Exps& e, const GaussianRational& c);
    static void check_same_context(const ScalarPoly& a, const ScalarPoly& b);

    TermMap terms_;
    ParamContext::Ptr ctx_;
};

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

/// Formal quotient of two ScalarPoly values.
///
/// The denominator is normalized to have leading coefficient 1 (graded-lex
/// leading term); numerator and denominator are not reduced by a polynomial
/// gcd, which callers must keep in mind for equality tests: use is_zero on a
/// difference via cross-multiplied compare (operator== does exactly that).
class ScalarFraction {
public:
    ScalarFraction() : num_(ScalarPoly::zero()), den_(ScalarPoly::one()) {}
    ScalarFraction(ScalarPoly num);  // implicit: polynomials embed
    ScalarFraction(ScalarPoly num, ScalarPoly den);

    const ScalarPoly& num() const { return num_; }
    const ScalarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    ScalarFraction operator-() const;
    friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b);
    friend ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b);

    /// Cross-multiplied equality: a/b == c/d iff a*d == c*b.
    bool operator==(const ScalarFraction& o) const;
    bool operator!=(const ScalarFraction& o) const { return !(*this == o); }

    /// The exact polynomial this fraction represents, when the division is
    /// exact; NONE otherwise.
    std::optional<ScalarPoly> as_poly() const;

    std::string str() const;

private:
    void normalize();
    ScalarPoly num_;
    ScalarPoly den_;
};

std::ostream& operator<<(std::ostream& os, const ScalarFraction& f);

}  // namespace ncborel
