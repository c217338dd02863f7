#pragma once

#include <array>
#include <vector>

#include "ncborel/hodge.hpp"
#include "ncborel/homology.hpp"

namespace ncborel {

/// Ordering convention giving a meaning to e^{ik.x} when the coordinates do
/// not commute.  All three coincide in the classical limit lam -> 0.
enum class WaveConvention { plain_exp, x1_left, x1_right };

const char* to_cstring(WaveConvention c);

/// Truncated plane wave: wave vector (formal or exact numeric), structural
/// truncation order, and ordering convention.
struct WaveSpec {
    std::array<ScalarPoly, 3> k;
    int order = 0;
    WaveConvention convention = WaveConvention::plain_exp;

    /// Formal wave vector (k1, k2, k3) over the standard context.
    static WaveSpec formal(int order, WaveConvention convention);
};

/// The structural terms of the exponential series; terms[n] collects the
/// products of exactly n letters:
///   plain-exp : (i k.x)^n / n!
///   x1-left   : sum over n1+n2+n3 = n of
///               (i k1 x1)^n1/n1! (i k2 x2)^n2/n2! (i k3 x3)^n3/n3!
///   x1-right  : the same blocks multiplied in the order x2, x3, x1.
/// Everything is normally ordered, so x1-left/x1-right terms differ from the
/// symmetrized plain-exp ones by lam-corrections starting at n = 2.
std::vector<NcPoly> plane_wave_terms(const WaveSpec& w);

/// Sum of the structural terms up to the requested order.
NcPoly plane_wave_series(const WaveSpec& w);

/// Order-by-order residual of a claimed wave identity.  residuals[n] is the
/// order-n left-hand side minus the order-n truncation of the claimed
/// right-hand side; pass demands exact vanishing at every order, while
/// classical_pass only demands vanishing after lam -> 0.
struct WaveCheck {
    std::vector<Form> residuals;
    bool pass = false;
    bool classical_pass = false;
};

/// Adjudicates d e^{ik.x} = dx . ik e^{-i lam k1} e^{ik.x}: the order-n
/// residual is d(terms[n]) - sum_a dx_a (i k_a) sum_{p+q=n-1} E_p terms[q]
/// with E_p = (-i lam k1)^p / p!.
WaveCheck wave_derivative_check(const WaveSpec& w,
                                DVariant variant = DVariant::consistent);

/// Adjudicates box e^{ik.x} = -|k|^2 e^{-2 i lam k1} e^{ik.x}: the order-n
/// residual is box(terms[n]) + |k|^2 sum_{p+q=n-2} E2_p terms[q] with
/// E2_p = (-2 i lam k1)^p / p! (zero right-hand side below order 2).
WaveCheck wave_eigenvalue_check(const WaveSpec& w,
                                DVariant variant = DVariant::consistent);

/// Which wave operator to take the kernel of.
enum class KernelOperator { box0, box1 };

struct KernelEntry {
    int grade = 0;
    Form element;
};

/// Exact nullspace basis of box on 0-forms (box0) or 1-forms (box1), solved
/// blockwise on the lam-weighted grade decomposition up to grade_bound.
/// box maps grade n homogeneously to grade n-2, so every block below grade 2
/// is entirely kernel.  Entries are ordered by grade, then by the
/// deterministic blockwise elimination order.
std::vector<KernelEntry> kernel_find(KernelOperator op, int grade_bound,
                                     Parallelism par = Parallelism::openmp);

}  // namespace ncborel
