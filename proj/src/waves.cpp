#include "ncborel/waves.hpp"

#include "ncborel/errors.hpp"

namespace ncborel {

const char* to_cstring(WaveConvention c) {
    switch (c) {
        case WaveConvention::plain_exp: return "plain";
        case WaveConvention::x1_left: return "x1-left";
        case WaveConvention::x1_right: return "x1-right";
    }
    return "?";
}

WaveSpec WaveSpec::formal(int order, WaveConvention convention) {
    WaveSpec w;
    w.k = {ScalarPoly::k(1), ScalarPoly::k(2), ScalarPoly::k(3)};
    w.order = order;
    w.convention = convention;
    return w;
}

namespace {

ParamContext::Ptr wave_ctx(const WaveSpec& w) {
    const auto& ctx = w.k[0].ctx();
    if (!(*w.k[1].ctx() == *ctx) || !(*w.k[2].ctx() == *ctx))
        throw ContextError("plane_wave_terms: wave vector components live in different contexts");
    return ctx;
}

}  // namespace

std::vector<NcPoly> plane_wave_terms(const WaveSpec& w) {
    if (w.order < 0) throw Error("plane_wave_terms: order must be >= 0");
    const auto ctx = wave_ctx(w);
    const GaussianRational i = GaussianRational::i();

    std::vector<NcPoly> terms;
    terms.reserve(static_cast<std::size_t>(w.order) + 1);

    if (w.convention == WaveConvention::plain_exp) {
        NcPoly ikx = NcPoly::zero(ctx);
        for (int a = 1; a <= 3; ++a)
            ikx += NcPoly::generator(a, ctx) * (w.k[a - 1] * i);
        NcPoly cur = NcPoly::one(ctx);
        terms.push_back(cur);
        for (int n = 1; n <= w.order; ++n) {
            cur = cur * ikx / GaussianRational(n);
            terms.push_back(cur);
        }
        return terms;
    }

    // blocks[a-1][m] = (i k_a x_a)^m / m!
    std::array<std::vector<NcPoly>, 3> blocks;
    for (int a = 1; a <= 3; ++a) {
        auto& blk = blocks[a - 1];
        blk.push_back(NcPoly::one(ctx));
        const NcPoly letter = NcPoly::generator(a, ctx) * (w.k[a - 1] * i);
        for (int m = 1; m <= w.order; ++m)
            blk.push_back(blk[m - 1] * letter / GaussianRational(m));
    }
    for (int n = 0; n <= w.order; ++n) {
        NcPoly t = NcPoly::zero(ctx);
        for (int n1 = 0; n1 <= n; ++n1) {
            for (int n2 = 0; n1 + n2 <= n; ++n2) {
                const int n3 = n - n1 - n2;
                if (w.convention == WaveConvention::x1_left)
                    t += blocks[0][n1] * blocks[1][n2] * blocks[2][n3];
                else
                    t += blocks[1][n2] * blocks[2][n3] * blocks[0][n1];
            }
        }
        terms.push_back(t);
    }
    return terms;
}

NcPoly plane_wave_series(const WaveSpec& w) {
    const auto terms = plane_wave_terms(w);
    NcPoly sum = NcPoly::zero(terms.front().ctx());
    for (const auto& t : terms) sum += t;
    return sum;
}

namespace {

void fill_verdicts(WaveCheck& chk) {
    chk.pass = true;
    chk.classical_pass = true;
    const std::map<std::string, GaussianRational> at0 = {{"lam", GaussianRational(0)}};
    for (const auto& r : chk.residuals) {
        if (!r.is_zero()) chk.pass = false;
        if (!r.substitute(at0).is_zero()) chk.classical_pass = false;
    }
}

/// Powers of a scalar factor divided by the factorial: out[p] = z^p / p!.
std::vector<ScalarPoly> exp_coefficients(const ScalarPoly& z, int order) {
    std::vector<ScalarPoly> out;
    out.push_back(ScalarPoly::one(z.ctx()));
    for (int p = 1; p <= order; ++p)
        out.push_back(out[p - 1] * z / GaussianRational(p));
    return out;
}

}  // namespace

WaveCheck wave_derivative_check(const WaveSpec& w, DVariant variant) {
    const auto terms = plane_wave_terms(w);
    const auto ctx = wave_ctx(w);
    const GaussianRational i = GaussianRational::i();
    // E_p = (-i lam k1)^p / p!
    const auto E = exp_coefficients(ScalarPoly::lambda(ctx) * w.k[0] * (-i), w.order);

    WaveCheck chk;
    for (int n = 0; n <= w.order; ++n) {
        const Form lhs = d(Form::scalar(terms[n]), variant);
        Form rhs = Form::zero(1, ctx);
        for (int a = 1; a <= 3; ++a) {
            NcPoly coeff = NcPoly::zero(ctx);
            for (int p = 0; p <= n - 1; ++p)
                coeff += terms[n - 1 - p] * (E[p] * w.k[a - 1] * i);
            if (!coeff.is_zero()) rhs = rhs + Form::monomial(set_of(a), coeff);
        }
        chk.residuals.push_back(lhs - rhs);
    }
    fill_verdicts(chk);
    return chk;
}

WaveCheck wave_eigenvalue_check(const WaveSpec& w, DVariant variant) {
    const auto terms = plane_wave_terms(w);
    const auto ctx = wave_ctx(w);
    const GaussianRational i = GaussianRational::i();
    // E2_p = (-2 i lam k1)^p / p!
    const auto E2 = exp_coefficients(
        ScalarPoly::lambda(ctx) * w.k[0] * (GaussianRational(-2) * i), w.order);
    ScalarPoly ksq = ScalarPoly::zero(ctx);
    for (const auto& ka : w.k) ksq += ka * ka;

    WaveCheck chk;
    for (int n = 0; n <= w.order; ++n) {
        const NcPoly lhs = box0(terms[n], variant);
        NcPoly rhs = NcPoly::zero(ctx);
        for (int p = 0; p <= n - 2; ++p)
            rhs += terms[n - 2 - p] * (-(E2[p] * ksq));
        chk.residuals.push_back(Form::scalar(lhs - rhs));
    }
    fill_verdicts(chk);
    return chk;
}

std::vector<KernelEntry> kernel_find(KernelOperator op, int grade_bound,
                                     Parallelism par) {
    if (grade_bound < 0) throw Error("kernel_find: grade_bound must be >= 0");
    const int k = (op == KernelOperator::box0) ? 0 : 1;
    const auto ctx = ParamContext::standard();

    std::vector<std::vector<KernelEntry>> per_grade(grade_bound + 1);
    auto run_grade = [&](int g) {
        const GradedBasis src = GradedBasis::make(k, g, ctx);
        if (src.size() == 0) return;
        if (g < 2) {
            // box lowers the grade by 2, so these blocks map into nothing.
            for (std::size_t j = 0; j < src.size(); ++j) {
                const Form img = box(src.element_form(j), DVariant::consistent);
                if (!img.is_zero())
                    throw Error("kernel_find: grade-lowering violated at grade " +
                                std::to_string(g));
                per_grade[g].push_back({g, src.element_form(j)});
            }
            return;
        }
        const GradedBasis tgt = GradedBasis::make(k, g - 2, ctx);
        Matrix<GaussianRational> M(tgt.size(), src.size(), GaussianRational(0));
        for (std::size_t j = 0; j < src.size(); ++j) {
            const auto coords = tgt.coords_of(box(src.element_form(j), DVariant::consistent));
            for (std::size_t r = 0; r < tgt.size(); ++r) M.at(r, j) = coords[r];
        }
        for (const auto& v : nullspace(M))
            per_grade[g].push_back({g, src.form_of(v)});
    };

    if (par == Parallelism::openmp) {
#ifdef NCBOREL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int g = 0; g <= grade_bound; ++g) run_grade(g);
    } else {
        for (int g = 0; g <= grade_bound; ++g) run_grade(g);
    }

    std::vector<KernelEntry> out;
    for (auto& bucket : per_grade)
        for (auto& e : bucket) out.push_back(std::move(e));
    return out;
}

}  // namespace ncborel
