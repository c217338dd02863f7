#include "ncborel/linalg.hpp"

namespace ncborel {

namespace {

// Deterministic sign fix: flip the vector when its first nonzero entry has a
// graded-lex leading coefficient with negative real part (or, for purely
// imaginary leads, negative imaginary part).
void normalize_sign(std::vector<ScalarPoly>& v) {
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        const auto [e, c] = p.leading_term();
        const bool flip = c.re() < 0 || (c.re() == 0 && c.im() < 0);
        if (flip)
            for (auto& q : v) q = -q;
        return;
    }
}

}  // namespace

std::vector<std::vector<ScalarPoly>> nullspace(const Matrix<ScalarFraction>& m) {
    const ScalarPoly pzero = ScalarPoly::zero(m.zero_element().num().ctx());
    // Clear denominators one row at a time; scaling a row by a nonzero
    // polynomial does not change the nullspace.
    Matrix<ScalarPoly> cleared(m.rows(), m.cols(), pzero);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ScalarPoly common = ScalarPoly::one(pzero.ctx());
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).den().is_one()) common *= m.at(i, j).den();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const ScalarFraction& f = m.at(i, j);
            auto q = common.try_divide(f.den());
            // Always exact: common is a product that includes f.den().
            cleared.at(i, j) = f.num() * q.value();
        }
    }

    auto raw = nullspace_ring(cleared);
    std::vector<std::vector<ScalarPoly>> out;
    out.reserve(raw.size());
    for (auto& v : raw) {
        // Remove the positive rational content shared by all entries.
        BigRat g = 0;
        for (const auto& p : v) {
            if (p.is_zero()) continue;
            BigRat c = p.content();
            if (g == 0)
                g = c;
            else {
                // gcd of two positive rationals via cross-multiplied integers
                const BigInt an = boost::multiprecision::numerator(g);
                const BigInt ad = boost::multiprecision::denominator(g);
                const BigInt bn = boost::multiprecision::numerator(c);
                const BigInt bd = boost::multiprecision::denominator(c);
                g = BigRat(boost::multiprecision::gcd(an * bd, bn * ad), ad * bd);
            }
        }
        if (g != 0 && g != 1)
            for (auto& p : v) p = p / GaussianRational(g);
        normalize_sign(v);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<GaussianRational>> nullspace(const Matrix<GaussianRational>& m) {
    Echelon<GaussianRational> e = fraction_free_reduce(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto c : e.pivot_cols) isPivot[c] = true;

    // Scale each vector by 1/det_scale so the free coordinate reads 1; this
    // matches the usual reduced-echelon free-variable basis.
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f]) continue;
        std::vector<GaussianRational> v(m.cols(), GaussianRational(0));
        v[f] = 1;
        for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
            v[e.pivot_cols[t]] = -(e.m.at(t, f) / e.det_scale);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ncborel
