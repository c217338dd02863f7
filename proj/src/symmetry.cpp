#include "ncborel/symmetry.hpp"

namespace ncborel {

const std::array<GenMatrix::Mat2, 3>& GenMatrix::matrices() {
    static const std::array<Mat2, 3> m = [] {
        std::array<Mat2, 3> out{};
        const GaussianRational zero(0), one(1);
        // J_1 = [[1, 0], [0, -1]]
        out[0] = {{{one, zero}, {zero, -one}}};
        // J_2 = [[0, 1], [0, 0]]
        out[1] = {{{zero, one}, {zero, zero}}};
        // J_3 = [[0, i], [0, 0]]
        out[2] = {{{zero, GaussianRational::i()}, {zero, zero}}};
        return out;
    }();
    return m;
}

namespace {

GenMatrix::Mat2 mat_mul(const GenMatrix::Mat2& a, const GenMatrix::Mat2& b) {
    GenMatrix::Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            GaussianRational s(0);
            for (int k = 0; k < 2; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

GenMatrix::Mat2 identity2() {
    GenMatrix::Mat2 m{};
    m[0][0] = m[1][1] = GaussianRational(1);
    return m;
}

// J1^a J2^b J3^c as a 2x2 matrix.
GenMatrix::Mat2 word_matrix(const Monomial& m) {
    const auto& J = GenMatrix::matrices();
    GenMatrix::Mat2 out = identity2();
    for (std::uint32_t t = 0; t < m.a; ++t) out = mat_mul(out, J[0]);
    for (std::uint32_t t = 0; t < m.b; ++t) out = mat_mul(out, J[1]);
    for (std::uint32_t t = 0; t < m.c; ++t) out = mat_mul(out, J[2]);
    return out;
}

void check_indices(int a, TIndex idx) {
    if (a < 1 || a > 3) throw Error("generator index must be 1..3");
    if (idx.i < 1 || idx.i > 2 || idx.j < 1 || idx.j > 2)
        throw Error("t-coordinate indices must be 1..2");
}

}  // namespace

GaussianRational pairing_J_t(int a, TIndex idx) {
    check_indices(a, idx);
    return GenMatrix::matrices()[a - 1][idx.i - 1][idx.j - 1];
}

ScalarPoly pairing_t_poly(TIndex idx, const NcPoly& f) {
    check_indices(1, idx);
    ScalarPoly out = ScalarPoly::zero(f.ctx());
    for (const auto& [m, c] : f.terms()) {
        const GaussianRational entry = word_matrix(m)[idx.i - 1][idx.j - 1];
        if (entry.is_zero()) continue;
        // lam^(a+b+c) times the matrix entry.
        ScalarPoly::Exps e(f.ctx()->size(), 0);
        e[kParamLambda] = m.total();
        out += c * ScalarPoly::monomial(std::move(e), entry, f.ctx());
    }
    return out;
}

NcPoly adjoint_action(int a, const NcPoly& f) {
    if (a < 1 || a > 3) throw Error("generator index must be 1..3");
    return commutator(NcPoly::generator(a, f.ctx()), f).divide_by_lambda();
}

NcPoly coregular_action(TIndex idx, const NcPoly& f) {
    check_indices(1, idx);
    const TensorSquare delta = coproduct(f);
    NcPoly out = NcPoly::zero(f.ctx());
    for (const auto& [key, c] : delta.terms()) {
        const ScalarPoly paired =
            pairing_t_poly(idx, NcPoly::monomial(key.first, f.ctx()));
        if (paired.is_zero()) continue;
        out += NcPoly::monomial(key.second, paired * c);
    }
    return out;
}

CrossRelationVerdict cross_relation_check(int a, TIndex idx,
                                          std::span<const NcPoly> testSet) {
    check_indices(a, idx);
    const auto& J = GenMatrix::matrices()[a - 1];
    for (const NcPoly& f : testSet) {
        // Left side: commutator of the two operators on f.
        const NcPoly lhs = adjoint_action(a, coregular_action(idx, f)) -
                           coregular_action(idx, adjoint_action(a, f));
        // Right side: sum_k t^i_k (J_a)^k_j - (J_a)^i_k t^k_j, as operators.
        NcPoly rhs = NcPoly::zero(f.ctx());
        for (int k = 1; k <= 2; ++k) {
            const GaussianRational right = J[k - 1][idx.j - 1];  // (J_a)^k_j
            if (!right.is_zero())
                rhs += coregular_action(TIndex{idx.i, k}, f) * right;
            const GaussianRational left = J[idx.i - 1][k - 1];  // (J_a)^i_k
            if (!left.is_zero())
                rhs -= coregular_action(TIndex{k, idx.j}, f) * left;
        }
        if (!(lhs == rhs)) return CrossRelationVerdict{false, f, lhs, rhs};
    }
    return CrossRelationVerdict{};
}

}  // namespace ncborel
