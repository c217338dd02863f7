// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// Each criterion is evaluated exactly (rational arithmetic throughout); the
// timed criteria additionally enforce their wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncborel/claims.hpp"
#include "ncborel/cli.hpp"
#include "ncborel/hodge.hpp"
#include "ncborel/homology.hpp"
#include "ncborel/parse.hpp"
#include "ncborel/print.hpp"
#include "ncborel/symmetry.hpp"
#include "ncborel/waves.hpp"

using namespace ncborel;

namespace {

const ScalarPoly lam = ScalarPoly::lambda();
const std::map<std::string, GaussianRational> kill_lam = {
    {"lam", GaussianRational(0)}};

std::vector<Monomial> words_up_to(std::uint32_t deg) {
    std::vector<Monomial> out;
    for (std::uint32_t t = 0; t <= deg; ++t)
        for (std::uint32_t a = 0; a <= t; ++a)
            for (std::uint32_t b = 0; a + b <= t; ++b)
                out.push_back(Monomial{a, b, t - a - b});
    return out;
}

NcPoly rand_poly(std::mt19937& rng, std::uint32_t maxDeg) {
    const auto pool = words_up_to(maxDeg);
    std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), lampow(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    NcPoly p = NcPoly::zero();
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ScalarPoly c = ScalarPoly::constant(GaussianRational(coef(rng)));
        if (lampow(rng)) c = c * lam;
        p += NcPoly::monomial(pool[pick(rng)], c);
    }
    return p;
}

Form rand_form(std::mt19937& rng, int degree, std::uint32_t maxDeg) {
    Form w = Form::zero(degree);
    for (IndexSet I = 0; I < 8; ++I)
        if (set_degree(I) == degree) w.add_comp(I, rand_poly(rng, maxDeg));
    return w;
}

Form dx(int a) { return Form::basis(set_of(a)); }

// ---------------------------------------------------------------------------
// Criterion 1: the three derivative constructions agree on all 84 monomials
// of total degree <= 6.

bool criterion1(std::string& detail) {
    const auto words = words_up_to(6);
    if (words.size() != 84) {
        detail = "monomial count != 84";
        return false;
    }
    for (const auto& m : words) {
        const NcPoly f = NcPoly::monomial(m);
        const Form a = d_inner(Form::scalar(f));
        if (a != d_leibniz(Form::scalar(f)) || a != d_shuffle(f)) {
            detail = "oracles disagree on " + f.str();
            return false;
        }
    }
    detail = "inner, Leibniz and shuffle derivatives agree on 84 monomials";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: d o d = 0 on every graded block up to grade 6 (as a matrix
// identity) and on 200 randomized forms.

bool criterion2(std::string& detail) {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 1; ++k) {
            const auto first = d_matrix(k, n);
            const auto second = d_matrix(k + 1, n);
            const auto prod = matmul(second.mat, first.mat);
            for (std::size_t r = 0; r < prod.rows(); ++r)
                for (std::size_t c = 0; c < prod.cols(); ++c)
                    if (!prod.at(r, c).is_zero()) {
                        detail = "nonzero d^2 matrix entry in block (k=" +
                                 std::to_string(k) + ", n=" + std::to_string(n) +
                                 ")";
                        return false;
                    }
        }
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        const Form w = rand_form(rng, trial % 3, 4);
        if (!d(d(w)).is_zero()) {
            detail = "d^2 nonzero on randomized form";
            return false;
        }
    }
    detail = "matrix composition zero on all blocks to grade 6; 200 random forms";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 3: the compact commutator relation
// [x_a, dx_b] = delta_{a,1}(1 - delta_{b,1}) lam dx_b - delta_{b,1} lam dx_a
// on all nine generator pairs.

bool criterion3(std::string& detail) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const NcPoly xa = NcPoly::generator(a);
            const Form lhs =
                move_coeff_left_to_right(xa, dx(b)) - dx(b).right_mul(xa);
            Form rhs = Form::zero(1);
            if (a == 1 && b != 1) rhs = rhs + dx(b) * lam;
            if (b == 1) rhs = rhs - dx(a) * lam;
            if (lhs != rhs) {
                detail = "pair (a,b) = (" + std::to_string(a) + "," +
                         std::to_string(b) + ") fails";
                return false;
            }
        }
    detail = "all 9 generator/coordinate-differential commutators match";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: the 8-entry star table and ** = id on the basis plus 100
// randomized forms.

bool criterion4(std::string& detail) {
    struct Expect {
        IndexSet from, to;
        int sign;
    };
    const Expect want[8] = {
        {0b000, 0b111, +1}, {0b001, 0b110, +1}, {0b010, 0b101, -1},
        {0b011, 0b100, +1}, {0b100, 0b011, +1}, {0b101, 0b010, -1},
        {0b110, 0b001, +1}, {0b111, 0b000, +1},
    };
    for (const auto& w : want) {
        const auto e = HodgeTable::lookup(w.from);
        if (e.to != w.to || e.sign != w.sign) {
            detail = "table entry mismatch at index set " +
                     std::to_string(static_cast<int>(w.from));
            return false;
        }
    }
    for (IndexSet I = 0; I < 8; ++I)
        if (star(star(Form::basis(I))) != Form::basis(I)) {
            detail = "** != id on basis form";
            return false;
        }
    std::mt19937 rng(7777);
    for (int trial = 0; trial < 100; ++trial) {
        const Form w = rand_form(rng, trial % 4, 3);
        if (star(star(w)) != w) {
            detail = "** != id on randomized form";
            return false;
        }
    }
    detail = "8 table entries reproduced; ** = id on basis and 100 random forms";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: cohomology table to grade 6: H^0 = C.1 at grade 0 and nothing
// else anywhere.

bool criterion5(std::string& detail) {
    const auto table = cohomology_dims(6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 3; ++k) {
            const int want = (n == 0 && k == 0) ? 1 : 0;
            if (table.dims[n][k] != want) {
                detail = "dim H^" + std::to_string(k) + " at grade " +
                         std::to_string(n) + " is " +
                         std::to_string(table.dims[n][k]) + ", expected " +
                         std::to_string(want);
                return false;
            }
        }
    detail = "H^0 = C.1 at grade 0; H^1 = H^2 = H^3 = 0 at all grades <= 6";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: the scalar wave-operator kernel claims.

bool criterion6(std::string& detail) {
    const NcPoly x1 = NcPoly::generator(1), x2 = NcPoly::generator(2),
                 x3 = NcPoly::generator(3);
    const NcPoly degree_one[] = {NcPoly::one(), x1, x2, x3,
                                 NcPoly::scalar(lam)};
    for (const auto& f : degree_one)
        if (!box0(f).is_zero()) {
            detail = "box nonzero on grade <= 1 element " + f.str();
            return false;
        }
    const NcPoly mixed[] = {x1 * x2, x1 * x3, x2 * x3};
    for (const auto& f : mixed)
        if (!box0(f).is_zero()) {
            detail = "box nonzero on mixed product " + f.str();
            return false;
        }
    const NcPoly diffs[] = {x1 * x1 - x2 * x2, x1 * x1 - x3 * x3,
                            x2 * x2 - x3 * x3};
    for (const auto& f : diffs)
        if (!box0(f).is_zero()) {
            detail = "box nonzero on square difference " + f.str();
            return false;
        }
    const NcPoly two = NcPoly::one() + NcPoly::one();
    if (box0(x2 * x2) != two) {
        detail = "box(x2^2) != 2";
        return false;
    }
    detail = "grade-1 block, mixed products, square differences harmonic; "
             "box(x2^2) = 2";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: classical limit of d, box and the partials on all monomials
// of degree <= 5.

bool criterion7(std::string& detail) {
    for (const auto& m : words_up_to(5)) {
        const NcPoly f = NcPoly::monomial(m);
        // Commutative gradient.
        std::array<NcPoly, 3> grad = {NcPoly::zero(), NcPoly::zero(),
                                      NcPoly::zero()};
        const std::uint32_t e[3] = {m.a, m.b, m.c};
        for (int a = 0; a < 3; ++a) {
            if (e[a] == 0) continue;
            Monomial n = m;
            if (a == 0) n.a -= 1;
            if (a == 1) n.b -= 1;
            if (a == 2) n.c -= 1;
            grad[a] = NcPoly::monomial(n) * GaussianRational(
                                                static_cast<long>(e[a]));
        }
        // Commutative Laplacian.
        NcPoly lap = NcPoly::zero();
        for (int a = 0; a < 3; ++a) {
            if (e[a] < 2) continue;
            Monomial n = m;
            if (a == 0) n.a -= 2;
            if (a == 1) n.b -= 2;
            if (a == 2) n.c -= 2;
            lap += NcPoly::monomial(n) *
                   GaussianRational(static_cast<long>(e[a]) * (e[a] - 1));
        }
        Form dClassical = Form::zero(1);
        for (int a = 0; a < 3; ++a)
            if (!grad[a].is_zero()) dClassical.add_comp(set_of(a + 1), grad[a]);
        if (d(Form::scalar(f)).substitute(kill_lam) != dClassical) {
            detail = "classical d mismatch on " + f.str();
            return false;
        }
        const auto p = partials(f);
        for (int a = 0; a < 3; ++a)
            if (p[a].substitute(kill_lam) != grad[a]) {
                detail = "classical partial mismatch on " + f.str();
                return false;
            }
        if (box0(f).substitute(kill_lam) != lap) {
            detail = "classical box mismatch on " + f.str();
            return false;
        }
    }
    detail = "d, partials and box match the flat 3d calculus at lam = 0 "
             "(all 56 monomials of degree <= 5)";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: plane-wave identity adjudication to k-order 4.

bool criterion8(std::string& detail) {
    const WaveConvention convs[] = {WaveConvention::plain_exp,
                                    WaveConvention::x1_left,
                                    WaveConvention::x1_right};
    const DVariant vars[] = {DVariant::consistent, DVariant::paper};
    for (const auto c : convs)
        for (const auto v : vars)
            for (int kind = 0; kind < 2; ++kind) {
                const auto wc =
                    kind == 0
                        ? wave_derivative_check(WaveSpec::formal(4, c), v)
                        : wave_eigenvalue_check(WaveSpec::formal(4, c), v);
                if (wc.residuals.size() != 5) {
                    detail = "unexpected residual count";
                    return false;
                }
                if (!wc.classical_pass) {
                    detail = "nonzero classical residual for convention " +
                             std::string(to_cstring(c));
                    return false;
                }
                for (const auto& r : wc.residuals)
                    if (!r.substitute(kill_lam).is_zero()) {
                        detail = "order-by-order classical residual nonzero";
                        return false;
                    }
                bool allzero = true;
                for (const auto& r : wc.residuals) allzero = allzero && r.is_zero();
                if (wc.pass != allzero) {
                    detail = "verdict inconsistent with residuals";
                    return false;
                }
                if (wc.pass) {
                    detail = "an exact pass appeared where the lam-corrections "
                             "should obstruct";
                    return false;
                }
            }
    // Hand-derived order-2 residual for (symmetric ordering, consistent d):
    // (lam/2) k1^2 dx1 - lam k1 (k . dx).
    const ScalarPoly k1 = ScalarPoly::k(1), k2 = ScalarPoly::k(2),
                     k3 = ScalarPoly::k(3);
    const auto wc = wave_derivative_check(
        WaveSpec::formal(2, WaveConvention::plain_exp));
    Form expect = dx(1) * (lam * k1 * k1 * GaussianRational::ratio(1, 2));
    expect = expect - (dx(1) * k1 + dx(2) * k2 + dx(3) * k3) * (lam * k1);
    if (wc.residuals[2] != expect) {
        detail = "frozen order-2 residual mismatch";
        return false;
    }
    detail = "classical residuals vanish for all 3x2x2 combinations; no exact "
             "pass; frozen order-2 residual reproduced";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 9: claims report coverage and determinism.

bool criterion9(std::string& detail) {
    const ClaimReport rep = claims_report();
    if (rep.entries.size() < 20) {
        detail = "fewer than 20 adjudicated claims";
        return false;
    }
    const char* prefixes[] = {"C-BIM",  "C-CAS",         "C-CAS-D", "C-ADJ",
                              "C-COREG", "C-CROSS",      "C-PARTIALS",
                              "C-HODGE-TABLE", "C-KER0", "C-KER1",  "C-MAG-F",
                              "C-MAG-BOX", "C-PRIM"};
    for (const char* p : prefixes) {
        bool found = false;
        for (const auto& e : rep.entries)
            if (e.id.rfind(p, 0) == 0) {
                found = true;
                break;
            }
        if (!found) {
            detail = std::string("no claim with id prefix ") + p;
            return false;
        }
    }
    std::size_t verdicts = 0;
    for (const auto& e : rep.entries) {
        if (e.computed.empty()) {
            detail = "claim " + e.id + " has no computed witness";
            return false;
        }
        if (e.status == ClaimStatus::PASS || e.status == ClaimStatus::FAIL ||
            e.status == ClaimStatus::AMBIGUOUS)
            ++verdicts;
    }
    if (verdicts != rep.entries.size()) {
        detail = "some claim lacks a definite verdict";
        return false;
    }
    const std::string once = format_report(rep, OutputFormat::json);
    const std::string twice = format_report(claims_report(), OutputFormat::json);
    if (once != twice) {
        detail = "report bytes are not deterministic";
        return false;
    }
    detail = std::to_string(rep.entries.size()) +
             " claims adjudicated (PASS " +
             std::to_string(rep.count(ClaimStatus::PASS)) + ", FAIL " +
             std::to_string(rep.count(ClaimStatus::FAIL)) + ", AMBIGUOUS " +
             std::to_string(rep.count(ClaimStatus::AMBIGUOUS)) +
             "); byte-deterministic";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 10: quantum-symmetry covariance and pairing multiplicativity.

bool criterion10(std::string& detail) {
    std::mt19937 rng(1314);
    const TIndex all_idx[4] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (int trial = 0; trial < 40; ++trial) {
        const NcPoly f = rand_poly(rng, 3), g = rand_poly(rng, 3);
        for (int a = 1; a <= 3; ++a)
            if (adjoint_action(a, f * g) !=
                adjoint_action(a, f) * g + f * adjoint_action(a, g)) {
                detail = "J-action derivation rule fails";
                return false;
            }
        for (const auto idx : all_idx) {
            NcPoly rhs = NcPoly::zero();
            ScalarPoly pairing_rhs = ScalarPoly::zero();
            for (int k = 1; k <= 2; ++k) {
                rhs += coregular_action({idx.i, k}, f) *
                       coregular_action({k, idx.j}, g);
                pairing_rhs = pairing_rhs + pairing_t_poly({idx.i, k}, f) *
                                                pairing_t_poly({k, idx.j}, g);
            }
            if (coregular_action(idx, f * g) != rhs) {
                detail = "t-action covariance fails";
                return false;
            }
            if (pairing_t_poly(idx, f * g) != pairing_rhs) {
                detail = "pairing multiplicativity fails";
                return false;
            }
        }
    }
    detail = "J derivation rule, t-matrix covariance and pairing "
             "multiplicativity exact on 40 random pairs of degree <= 3";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 11: CLI round trip and golden outputs.

std::string read_file(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int run_cli_to(const std::vector<std::string>& args, std::string& out) {
    const std::filesystem::path tmp = "acceptance_cli_out.tmp";
    std::filesystem::remove(tmp);
    std::vector<std::string> full = {"ncborel", "--out", tmp.string()};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    const int code = run(static_cast<int>(argv.size()), argv.data());
    out = std::filesystem::exists(tmp) ? read_file(tmp) : std::string();
    std::filesystem::remove(tmp);
    return code;
}

bool criterion11(std::string& detail) {
    std::mt19937 rng(445566);
    for (int t = 0; t < 60; ++t) {
        NcPoly p = rand_poly(rng, 3);
        if (p.is_zero()) p = NcPoly::one();
        const Value v = parse_value(p.str());
        if (!std::holds_alternative<NcPoly>(v) || std::get<NcPoly>(v) != p) {
            detail = "polynomial round trip failed on " + p.str();
            return false;
        }
    }
    for (int t = 0; t < 40; ++t) {
        Form w = rand_form(rng, 1 + t % 3, 3);
        if (w.is_zero()) w = Form::basis(set_of(1));
        const Value v = parse_value(w.str());
        if (!std::holds_alternative<Form>(v) || std::get<Form>(v) != w) {
            detail = "form round trip failed on " + w.str();
            return false;
        }
    }
    const char* dir = std::getenv("NCBOREL_GOLDEN_DIR");
    if (!dir) {
        detail = "NCBOREL_GOLDEN_DIR is not set";
        return false;
    }
    std::string coh;
    if (run_cli_to({"--format", "text", "cohomology", "--max-grade", "4"},
                   coh) != 0) {
        detail = "cohomology subcommand failed";
        return false;
    }
    if (coh != read_file(std::filesystem::path(dir) / "cohomology_grade4.txt")) {
        detail = "cohomology output differs from golden file";
        return false;
    }
    std::string rep;
    if (run_cli_to({"--format", "json", "report"}, rep) != 0) {
        detail = "report subcommand failed";
        return false;
    }
    if (rep != read_file(std::filesystem::path(dir) / "report.json")) {
        detail = "report json differs from golden file";
        return false;
    }
    detail = "100-case parse/print round trip; cohomology and report match "
             "golden bytes";
    return true;
}

struct Criterion {
    int number;
    const char* title;
    std::function<bool(std::string&)> fn;
    double budget_s;  // 0 = untimed
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "derivative oracle equivalence", criterion1, 5.0},
        {2, "d^2 = 0", criterion2, 10.0},
        {3, "coordinate/differential commutators", criterion3, 0.0},
        {4, "Hodge star table and involution", criterion4, 0.0},
        {5, "graded de Rham cohomology", criterion5, 60.0},
        {6, "wave-operator kernel identities", criterion6, 0.0},
        {7, "classical limit", criterion7, 0.0},
        {8, "plane-wave identity adjudication", criterion8, 0.0},
        {9, "claims report coverage", criterion9, 0.0},
        {10, "quantum-symmetry covariance", criterion10, 0.0},
        {11, "CLI round trip and golden outputs", criterion11, 0.0},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double secs =
            std::chrono::duration<double>(t1 - t0).count();
        if (ok && c.budget_s > 0.0 && secs > c.budget_s) {
            ok = false;
            detail = "exceeded time budget of " + std::to_string(c.budget_s) +
                     " s";
        }
        std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n",
                    ok ? "PASS" : "FAIL", c.number, c.title, detail.c_str(),
                    secs);
        all_pass = all_pass && ok;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass"
                                 : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
