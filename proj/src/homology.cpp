#include "ncborel/homology.hpp"

#include <algorithm>

#ifdef NCBOREL_HAVE_OPENMP
#include <omp.h>
#endif

namespace ncborel {

// ---------------------------------------------------------------------------
// GradedBasis

std::uint64_t GradedBasis::key_of(IndexSet I, const Monomial& m, std::uint32_t lam) {
    // Exponents stay far below 2^14 in practice; pack for the index map.
    return (static_cast<std::uint64_t>(I) << 56) |
           (static_cast<std::uint64_t>(m.a) << 42) |
           (static_cast<std::uint64_t>(m.b) << 28) |
           (static_cast<std::uint64_t>(m.c) << 14) | lam;
}

GradedBasis GradedBasis::make(int k, int n, ParamContext::Ptr ctx) {
    GradedBasis b;
    b.k_ = k;
    b.n_ = n;
    b.ctx_ = std::move(ctx);
    if (k < 0 || k > 3 || n < 0) return b;
    for (IndexSet I = 0; I < 8; ++I) {
        if (set_degree(I) != k) continue;
        const int rem = n - k;
        if (rem < 0) continue;
        // Descending lexicographic enumeration of (a, b, c); the lam power
        // takes up the remainder.
        for (int a = rem; a >= 0; --a)
            for (int bb = rem - a; bb >= 0; --bb)
                for (int cc = rem - a - bb; cc >= 0; --cc) {
                    const std::uint32_t lam =
                        static_cast<std::uint32_t>(rem - a - bb - cc);
                    b.elems_.push_back(GradedBasisElem{
                        I,
                        Monomial{static_cast<std::uint32_t>(a),
                                 static_cast<std::uint32_t>(bb),
                                 static_cast<std::uint32_t>(cc)},
                        lam});
                }
    }
    for (std::size_t j = 0; j < b.elems_.size(); ++j) {
        const auto& e = b.elems_[j];
        b.index_.emplace(key_of(e.I, e.m, e.lam), j);
    }
    return b;
}

Form GradedBasis::element_form(std::size_t idx) const {
    const auto& e = elems_.at(idx);
    ScalarPoly::Exps exps(ctx_->size(), 0);
    exps[kParamLambda] = e.lam;
    return Form::monomial(
        e.I, NcPoly::monomial(e.m, ScalarPoly::monomial(std::move(exps),
                                                        GaussianRational(1), ctx_)));
}

std::optional<std::size_t> GradedBasis::index_of(IndexSet I, const Monomial& m,
                                                 std::uint32_t lam) const {
    auto it = index_.find(key_of(I, m, lam));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<GaussianRational> GradedBasis::coords_of(const Form& w) const {
    std::vector<GaussianRational> coords(elems_.size(), GaussianRational(0));
    if (w.is_zero()) return coords;
    for (const auto& [I, f] : w.comps()) {
        for (const auto& [m, c] : f.terms()) {
            for (const auto& [exps, q] : c.terms()) {
                if (exps[kParamK1] || exps[kParamK2] || exps[kParamK3])
                    throw Error("graded coordinates require k-free coefficients");
                for (std::size_t j = 4; j < exps.size(); ++j)
                    if (exps[j])
                        throw Error("graded coordinates require parameter-free coefficients");
                auto idx = index_of(I, m, exps[kParamLambda]);
                if (!idx) throw Error("form term lies outside the graded block");
                coords[*idx] += q;
            }
        }
    }
    return coords;
}

Form GradedBasis::form_of(const std::vector<GaussianRational>& coords) const {
    if (coords.size() != elems_.size())
        throw Error("coordinate vector length does not match basis size");
    Form out = Form::zero(k_, ctx_);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        out = out + element_form(j) * coords[j];
    }
    return out;
}

// ---------------------------------------------------------------------------
// d as graded matrices

GradedMatrix d_matrix(int k, int n) {
    GradedBasis source = GradedBasis::make(k, n);
    GradedBasis target = GradedBasis::make(k + 1, n);
    Matrix<GaussianRational> mat(target.size(), source.size(), GaussianRational(0));
    for (std::size_t col = 0; col < source.size(); ++col) {
        const Form df = d(source.element_form(col), DVariant::consistent);
        if (df.is_zero()) continue;
        const auto coords = target.coords_of(df);
        for (std::size_t row = 0; row < coords.size(); ++row)
            if (!coords[row].is_zero()) mat.at(row, col) = coords[row];
    }
    return GradedMatrix{std::move(source), std::move(target), std::move(mat)};
}

// ---------------------------------------------------------------------------
// Cohomology table

namespace {

struct BlockData {
    GradedMatrix dmat;                                  // d out of (k, n)
    std::vector<std::vector<GaussianRational>> kernel;  // nullspace basis
};

// One block's kernel/rank data; pure, independent per (k, n).
BlockData analyze_block(int k, int n) {
    BlockData out{d_matrix(k, n), {}};
    out.kernel = nullspace(out.dmat.mat);
    return out;
}

CohomologyTable assemble(int maxGrade,
                         const std::vector<std::array<BlockData, 4>>& blocks,
                         Parallelism par) {
    CohomologyTable table;
    table.max_grade = maxGrade;
    table.dims.resize(maxGrade + 1);
    table.block_dim.resize(maxGrade + 1);
    table.block_rank.resize(maxGrade + 1);

    // Independent (k, n) tasks again: the quotient rank at (k, n) needs the
    // incoming d-matrix and the lam-shifted kernel of grade n-1.
    std::vector<std::pair<int, int>> tasks;
    for (int n = 0; n <= maxGrade; ++n)
        for (int k = 0; k < 4; ++k) tasks.push_back({n, k});

    std::vector<int> hdim(tasks.size(), 0);

    auto run_task = [&](std::size_t t) {
        const auto [n, k] = tasks[t];
        const BlockData& blk = blocks[n][k];
        const std::size_t dim = blk.dmat.source.size();
        const std::size_t z = blk.kernel.size();

        // Columns: image of incoming d, then lam * kernel basis of (k, n-1).
        const Matrix<GaussianRational>* incoming =
            (k > 0) ? &blocks[n][k - 1].dmat.mat : nullptr;
        const std::vector<std::vector<GaussianRational>>* shifted =
            (n > 0) ? &blocks[n - 1][k].kernel : nullptr;

        std::size_t cols = (incoming ? incoming->cols() : 0) +
                           (shifted ? shifted->size() : 0);
        Matrix<GaussianRational> stacked(dim, cols, GaussianRational(0));
        std::size_t c0 = 0;
        if (incoming) {
            for (std::size_t i = 0; i < incoming->rows(); ++i)
                for (std::size_t j = 0; j < incoming->cols(); ++j)
                    stacked.at(i, j) = incoming->at(i, j);
            c0 = incoming->cols();
        }
        if (shifted) {
            const GradedBasis& from = blocks[n - 1][k].dmat.source;
            const GradedBasis& to = blk.dmat.source;
            for (std::size_t v = 0; v < shifted->size(); ++v) {
                for (std::size_t j = 0; j < (*shifted)[v].size(); ++j) {
                    if ((*shifted)[v][j].is_zero()) continue;
                    const auto& e = from.elems()[j];
                    const auto idx = to.index_of(e.I, e.m, e.lam + 1);
                    // The lam-shift of a grade n-1 element always lands in
                    // grade n.
                    stacked.at(idx.value(), v + c0) = (*shifted)[v][j];
                }
            }
        }
        const std::size_t boundary_rank = rank(stacked);
        hdim[t] = static_cast<int>(z - boundary_rank);
    };

    if (par == Parallelism::openmp) {
#ifdef NCBOREL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    }

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto [n, k] = tasks[t];
        const BlockData& blk = blocks[n][k];
        table.dims[n][k] = hdim[t];
        table.block_dim[n][k] = static_cast<int>(blk.dmat.source.size());
        table.block_rank[n][k] =
            static_cast<int>(blk.dmat.source.size() - blk.kernel.size());
    }
    return table;
}

}  // namespace

CohomologyTable cohomology_dims(int maxGrade, Parallelism par) {
    if (maxGrade < 0) throw Error("cohomology_dims: maxGrade must be >= 0");
    std::vector<std::array<BlockData, 4>> blocks(maxGrade + 1);

    std::vector<std::pair<int, int>> tasks;
    for (int n = 0; n <= maxGrade; ++n)
        for (int k = 0; k < 4; ++k) tasks.push_back({n, k});

    if (par == Parallelism::openmp) {
#ifdef NCBOREL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            const auto [n, k] = tasks[t];
            blocks[n][k] = analyze_block(k, n);
        }
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            const auto [n, k] = tasks[t];
            blocks[n][k] = analyze_block(k, n);
        }
    }
    return assemble(maxGrade, blocks, par);
}

// ---------------------------------------------------------------------------
// Primitives

namespace {

// Group the form's terms by their k-parameter monomial (k1^p k2^q k3^r and
// any user symbols), stripping that factor from each group.
std::map<ScalarPoly::Exps, Form> split_by_param_monomial(const Form& w) {
    std::map<ScalarPoly::Exps, Form> groups;
    const auto& ctx = w.ctx();
    for (const auto& [I, f] : w.comps()) {
        for (const auto& [m, c] : f.terms()) {
            for (const auto& [exps, q] : c.terms()) {
                ScalarPoly::Exps key = exps;
                key[kParamLambda] = 0;  // lam stays with the group content
                ScalarPoly::Exps lamOnly(ctx->size(), 0);
                lamOnly[kParamLambda] = exps[kParamLambda];
                auto it = groups.find(key);
                if (it == groups.end())
                    it = groups.emplace(key, Form::zero(w.degree(), ctx)).first;
                it->second.add_comp(
                    I, NcPoly::monomial(m, ScalarPoly::monomial(lamOnly, q, ctx)));
            }
        }
    }
    return groups;
}

ScalarPoly param_monomial(const ScalarPoly::Exps& e, const ParamContext::Ptr& ctx) {
    return ScalarPoly::monomial(e, GaussianRational(1), ctx);
}

}  // namespace

std::optional<Form> find_primitive(const Form& omega, int gradeBound) {
    Form dw = d(omega, DVariant::consistent);
    if (!dw.is_zero()) throw NotClosedError(std::move(dw));
    if (omega.is_zero()) return Form::zero(std::max(omega.degree() - 1, 0), omega.ctx());
    if (omega.degree() == 0) return std::nullopt;  // nonzero 0-forms have no primitive

    const int k = omega.degree();
    Form eta = Form::zero(k - 1, omega.ctx());
    for (const auto& [pkey, group] : split_by_param_monomial(omega)) {
        for (const auto& [n, part] : group.grade_parts()) {
            if (static_cast<int>(n) > gradeBound) return std::nullopt;
            const GradedMatrix dm = d_matrix(k - 1, static_cast<int>(n));
            const auto b = dm.target.coords_of(part);
            const auto x = solve_minimal(dm.mat, b);
            if (!x) return std::nullopt;
            const Form lift = dm.source.form_of(*x);
            eta = eta + lift * param_monomial(pkey, omega.ctx());
        }
    }
    return eta;
}

}  // namespace ncborel
