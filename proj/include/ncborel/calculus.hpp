#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncborel/algebra.hpp"
#include "ncborel/linalg.hpp"

namespace ncborel {

/// Which exterior derivative to use.  The consistent calculus (default
/// everywhere) is Leibniz-compatible with the bimodule relations; the
/// `paper` variant implements the published closed-form monomial formula
/// verbatim and exists only so its claims can be adjudicated.
enum class DVariant { consistent, paper };

/// Wedge-basis index set: bit k-1 set means dx_k is present, e.g. 0b011 is
/// dx1 /\ dx2.  The empty set denotes the degree-0 basis element 1.
using IndexSet = std::uint8_t;

inline int set_degree(IndexSet I) { return __builtin_popcount(I); }
inline bool set_contains(IndexSet I, int a) { return (I >> (a - 1)) & 1; }
inline IndexSet set_of(int a) { return static_cast<IndexSet>(1u << (a - 1)); }
std::vector<int> set_members(IndexSet I);

/// Sign of dx_I /\ dx_K relative to dx_{I union K} in increasing order;
/// 0 when the sets overlap.
int wedge_sign(IndexSet I, IndexSet K);

/// The defining 3-dimensional representation: rho(x_a) = lam * M_a with
/// integer matrices M_a, and the cyclic ray Lambda = e3.  The derivative and
/// the bimodule structure both descend from this data through the dictionary
/// e1 -> dx2, e2 -> dx3, e3 -> -dx1.
struct RhoRep {
    /// Integer matrices M_a, row-major: m[a-1][row][col], rows/cols 0..2.
    static const std::array<std::array<std::array<int, 3>, 3>, 3>& matrices();

    /// rho(x_a) as a ScalarPoly matrix lam * M_a over the given context.
    static Matrix<ScalarPoly> rho(int a, const ParamContext::Ptr& ctx);

    /// Index of the ray Lambda = e3 (0-based).
    static constexpr int lambda_ray = 2;
};

/// Element of the exterior algebra, degree 0..3, in right-coefficient
/// convention: omega = sum_I dx_I * f_I with f_I in R^3_lam.
class Form {
public:
    /// Zero 0-form over the standard context.
    Form() : degree_(0), ctx_(ParamContext::standard()) {}

    static Form zero(int degree, ParamContext::Ptr ctx = ParamContext::standard());
    /// Degree-0 form wrapping an algebra element.
    static Form scalar(NcPoly f);
    /// dx_I with coefficient 1.
    static Form basis(IndexSet I, ParamContext::Ptr ctx = ParamContext::standard());
    /// dx_I * f.
    static Form monomial(IndexSet I, NcPoly f);

    int degree() const { return degree_; }
    const std::map<IndexSet, NcPoly>& comps() const { return comps_; }
    const ParamContext::Ptr& ctx() const { return ctx_; }
    bool is_zero() const { return comps_.empty(); }

    NcPoly coeff(IndexSet I) const;
    void add_comp(IndexSet I, const NcPoly& f);

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    Form operator*(const ScalarPoly& s) const;
    Form operator*(const GaussianRational& c) const;
    /// Right multiplication by an algebra element (no reordering needed).
    Form right_mul(const NcPoly& g) const;

    /// Zero forms compare equal regardless of their degree tag.
    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form substitute(const std::map<std::string, GaussianRational>& bindings) const;
    Form divide_by_lambda() const;
    Form truncate_k_degree(std::uint32_t bound) const;

    /// Largest lam-weighted grade |I| + |word| + deg_lam over all terms.
    std::uint32_t grade() const;
    /// Split into lam-weighted homogeneous parts (keys are total grades).
    std::map<std::uint32_t, Form> grade_parts() const;

    /// Degree-0 content; requires degree() == 0.
    NcPoly as_ncpoly() const;

    std::string str() const;

private:
    int degree_;
    std::map<IndexSet, NcPoly> comps_;
    ParamContext::Ptr ctx_;
};

std::ostream& operator<<(std::ostream& os, const Form& w);

/// f * omega rewritten into right-coefficient convention using the
/// rho-induced bimodule relations and their derivation extension to the
/// wedge basis.
Form move_coeff_left_to_right(const NcPoly& f, const Form& omega);

/// Graded wedge product; returns 0 beyond degree 3.
Form wedge(const Form& omega, const Form& eta);

/// d as the graded inner derivation with theta = -lam^{-1} dx1:
/// d(omega) = -lam^{-1} (omega /\ dx1 - (-1)^deg dx1 /\ omega).
Form d_inner(const Form& omega);

/// d by recursion over word factors from d(x_a) = dx_a, extended to higher
/// degree by the right-handed super-derivation rule with d(dx_a) = 0.
Form d_leibniz(const Form& omega);

/// d on degree 0 by the representation-theoretic shuffle formula.
Form d_shuffle(const NcPoly& f);

/// The published monomial derivative formula, verbatim (arrangement numbers
/// A^k_a = a!/(a-k)! where the shuffle count would be C(a,k)).
Form d_paper_variant(const NcPoly& f);

/// Production entry point: consistent = d_inner; the `paper` variant
/// extends its degree-0 formula with the same super-derivation rule.
Form d(const Form& omega, DVariant variant = DVariant::consistent);

/// Right coefficients of dx1, dx2, dx3 in d(f).
std::array<NcPoly, 3> partials(const NcPoly& f, DVariant variant = DVariant::consistent);

/// Invariant 1-form omega(f) = sum d(f_(1)) * S(f_(2)).
Form invariant_form(const NcPoly& f, DVariant variant = DVariant::consistent);

}  // namespace ncborel
