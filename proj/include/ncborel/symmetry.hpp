#pragma once

#include <span>

#include "ncborel/algebra.hpp"

namespace ncborel {

/// The 2x2 generator matrices J_1, J_2, J_3 of the Borel Lie algebra in its
/// defining representation.
struct GenMatrix {
    using Mat2 = std::array<std::array<GaussianRational, 2>, 2>;
    /// J_1 = diag(1,-1), J_2 = E_12, J_3 = i E_12.
    static const std::array<Mat2, 3>& matrices();
};

/// Index pair of a dual coordinate function t^i_j, i, j in {1, 2}.
struct TIndex {
    int i = 1;
    int j = 1;
};

/// <J_a, t^i_j> = (J_a)^i_j.
GaussianRational pairing_J_t(int a, TIndex idx);

/// <t^i_j, f> extended linearly from
/// <t^i_j, x1^a x2^b x3^c> = lam^(a+b+c) (J1^a J2^b J3^c)^i_j.
ScalarPoly pairing_t_poly(TIndex idx, const NcPoly& f);

/// Schroedinger (adjoint) action J_a |> f = lam^{-1} [x_a, f].
NcPoly adjoint_action(int a, const NcPoly& f);

/// Coregular action t^i_j |> f = sum <t^i_j, f_(1)> f_(2).
NcPoly coregular_action(TIndex idx, const NcPoly& f);

/// Operator-identity check of the cross relation
///   [J_a |>, t^i_j |>] = sum_k (t^i_k |>) (J_a)^k_j - (J_a)^i_k (t^k_j |>)
/// on a given test set; FAIL carries the first counterexample.
struct CrossRelationVerdict {
    bool pass = true;
    NcPoly counterexample;  // the f that failed
    NcPoly lhs;             // [J_a|>, t^i_j|>] f
    NcPoly rhs;             // right-hand side applied to f
};

CrossRelationVerdict cross_relation_check(int a, TIndex idx,
                                          std::span<const NcPoly> testSet);

}  // namespace ncborel
