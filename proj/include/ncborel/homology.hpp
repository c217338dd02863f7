#pragma once

#include <optional>

#include "ncborel/calculus.hpp"
#include "ncborel/hodge.hpp"

namespace ncborel {

/// Serial reference vs. OpenMP-parallel evaluation of blockwise linear
/// algebra.  Results are identical; the parallel path degrades to serial
/// when the build has no OpenMP support.
enum class Parallelism { serial, openmp };

/// dx_I * x1^a x2^b x3^c * lam^l with |I| + a + b + c + l = n.
struct GradedBasisElem {
    IndexSet I;
    Monomial m;
    std::uint32_t lam;
};

/// Ordered basis of the (form degree k, total grade n) block of the
/// lam-weighted complex.  Ordering: index sets ascending, then words in
/// descending lexicographic order on (a, b, c, lam-power) so that x1 leads,
/// matching the printed convention.
class GradedBasis {
public:
    static GradedBasis make(int k, int n,
                            ParamContext::Ptr ctx = ParamContext::standard());

    int form_degree() const { return k_; }
    int grade() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<GradedBasisElem>& elems() const { return elems_; }
    const ParamContext::Ptr& ctx() const { return ctx_; }

    Form element_form(std::size_t idx) const;

    /// Index of (I, word, lam-power); NONE when outside the block.
    std::optional<std::size_t> index_of(IndexSet I, const Monomial& m,
                                        std::uint32_t lam) const;

    /// Exact coordinates of a form lying in this block; throws Error if the
    /// form has a term outside the block or non-numeric k-content.
    std::vector<GaussianRational> coords_of(const Form& w) const;

    /// Inverse of coords_of.
    Form form_of(const std::vector<GaussianRational>& coords) const;

private:
    int k_ = 0, n_ = 0;
    std::vector<GradedBasisElem> elems_;
    std::map<std::uint64_t, std::size_t> index_;
    ParamContext::Ptr ctx_;

    static std::uint64_t key_of(IndexSet I, const Monomial& m, std::uint32_t lam);
};

/// Exact matrix of the consistent d restricted to one graded block.
struct GradedMatrix {
    GradedBasis source;  // (k, n)
    GradedBasis target;  // (k+1, n)
    Matrix<GaussianRational> mat;
};

/// d as a matrix on the (k, n) block (consistent calculus).
GradedMatrix d_matrix(int k, int n);

/// dim H^k at each grade n <= max_grade, computed blockwise.
///
/// The dimension counts new cohomology generators at grade n: the quotient
/// of ker d by the image of d plus the lam-shift of the grade-(n-1) kernel.
/// Without the shift every lam^n * 1 would be reported again at each grade;
/// with it the table matches the statement "H^0 = C.1, H^1 = H^2 = H^3 = 0".
struct CohomologyTable {
    int max_grade;
    // dims[n][k], n = 0..max_grade, k = 0..3
    std::vector<std::array<int, 4>> dims;
    // Underlying block data for reporting: [n][k]
    std::vector<std::array<int, 4>> block_dim;
    std::vector<std::array<int, 4>> block_rank;  // rank of d out of (k, n)

    bool operator==(const CohomologyTable& o) const {
        return max_grade == o.max_grade && dims == o.dims &&
               block_dim == o.block_dim && block_rank == o.block_rank;
    }
};

CohomologyTable cohomology_dims(int maxGrade,
                                Parallelism par = Parallelism::openmp);

/// Raised by find_primitive when the input is not closed.
struct NotClosedError : Error {
    explicit NotClosedError(Form w)
        : Error("find_primitive: input is not closed; d(input) = " + w.str()),
          witness(std::move(w)) {}
    Form witness;
};

/// Exact primitive: eta with d(eta) = omega and grade(eta) <= gradeBound,
/// solved per graded component (and per k-monomial when the coefficients
/// carry k-parameters); NONE if no solution exists within the bound.
std::optional<Form> find_primitive(const Form& omega, int gradeBound);

}  // namespace ncborel
