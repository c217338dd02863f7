#include "ncborel/calculus.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ncborel {

std::vector<int> set_members(IndexSet I) {
    std::vector<int> m;
    for (int a = 1; a <= 3; ++a)
        if (set_contains(I, a)) m.push_back(a);
    return m;
}

int wedge_sign(IndexSet I, IndexSet K) {
    if (I & K) return 0;
    // Count the transpositions needed to merge sorted(I) ++ sorted(K):
    // one inversion per pair (i in I, k in K) with i > k.
    int inv = 0;
    for (int i = 1; i <= 3; ++i)
        if (set_contains(I, i))
            for (int k = 1; k < i; ++k)
                if (set_contains(K, k)) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Representation and the induced bimodule tables

const std::array<std::array<std::array<int, 3>, 3>, 3>& RhoRep::matrices() {
    // rho(x1) = lam diag(1,1,-1), rho(x2) = lam E_13, rho(x3) = lam E_23.
    static const std::array<std::array<std::array<int, 3>, 3>, 3> m = {{
        {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}},
        {{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
        {{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}},
    }};
    return m;
}

Matrix<ScalarPoly> RhoRep::rho(int a, const ParamContext::Ptr& ctx) {
    Matrix<ScalarPoly> out(3, 3, ScalarPoly::zero(ctx));
    const auto& m = matrices()[a - 1];
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (m[r][c] != 0)
                out.at(r, c) = lam * GaussianRational(m[r][c]);
    return out;
}

namespace {

// Dictionary between the representation basis e_i and the 1-form basis:
// e1 = dx2, e2 = dx3, e3 = -dx1 (and conversely dx1 = -e3 etc.).
struct EDict {
    // dx_b corresponds to sign * e_index (index 1..3).
    static std::pair<int, int> vector_of_form(int b) {
        switch (b) {
            case 1: return {3, -1};
            case 2: return {1, +1};
            default: return {2, +1};
        }
    }
    // e_i corresponds to sign * dx_index.
    static std::pair<int, int> form_of_vector(int i) {
        switch (i) {
            case 1: return {2, +1};
            case 2: return {3, +1};
            default: return {1, -1};
        }
    }
};

// Commutation tables derived once from the representation matrices:
//   comm1[a-1][b-1]:  [x_a, dx_b]        = sum coeff * lam * dx_{b'}
//   commI[a-1][I]:    [x_a, dx_I]        = sum coeff * lam * dx_J
// The wedge-set table is the derivation extension of the 1-form table.
struct BimoduleTable {
    std::array<std::array<std::vector<std::pair<int, int>>, 3>, 3> comm1;
    std::array<std::array<std::vector<std::pair<IndexSet, int>>, 8>, 3> commI;

    static const BimoduleTable& instance() {
        static const BimoduleTable t;
        return t;
    }

private:
    BimoduleTable() {
        const auto& M = RhoRep::matrices();
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                const auto [i, s] = EDict::vector_of_form(b);
                // [x_a, e_i] = lam * sum_j M_a[j][i] e_j
                for (int j = 1; j <= 3; ++j) {
                    const int mji = M[a - 1][j - 1][i - 1];
                    if (mji == 0) continue;
                    const auto [bp, t] = EDict::form_of_vector(j);
                    comm1[a - 1][b - 1].push_back({bp, s * mji * t});
                }
            }
        }
        // Extend to wedge sets as a derivation:
        // [x_a, dx_{i1} /\ ... ] = sum_p dx_{i1} /\ ... [x_a, dx_{ip}] ...
        for (int a = 1; a <= 3; ++a) {
            for (IndexSet I = 0; I < 8; ++I) {
                std::map<IndexSet, int> acc;
                const auto members = set_members(I);
                for (std::size_t p = 0; p < members.size(); ++p) {
                    for (const auto& [bp, coeff] : comm1[a - 1][members[p] - 1]) {
                        // Replace member p by bp, keeping wedge order.
                        std::vector<int> word = members;
                        word[p] = bp;
                        // Repeated letter kills the wedge.
                        bool dup = false;
                        for (std::size_t q = 0; q < word.size(); ++q)
                            if (q != p && word[q] == bp) dup = true;
                        if (dup) continue;
                        // Sort and track the permutation sign.
                        int inv = 0;
                        for (std::size_t q1 = 0; q1 < word.size(); ++q1)
                            for (std::size_t q2 = q1 + 1; q2 < word.size(); ++q2)
                                if (word[q1] > word[q2]) ++inv;
                        IndexSet J = 0;
                        for (int w : word) J |= set_of(w);
                        const int sgn = (inv % 2 == 0) ? 1 : -1;
                        acc[J] += coeff * sgn;
                    }
                }
                for (const auto& [J, c] : acc)
                    if (c != 0) commI[a - 1][I].push_back({J, c});
            }
        }
    }
};

// Moves a bare word x1^a x2^b x3^c across the basis form dx_I, producing
// sum_J dx_J * h_J.  Letters are processed from the right end of the word
// (the one adjacent to dx_I), each step using
//   x_l (dx_J h) = dx_J (x_l h) + [x_l, dx_J] h.
std::map<IndexSet, NcPoly> move_word(const Monomial& mono, IndexSet I,
                                     const ParamContext::Ptr& ctx) {
    const auto& table = BimoduleTable::instance();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    std::map<IndexSet, NcPoly> state;
    state.emplace(I, NcPoly::one(ctx));

    auto step = [&](int letter) {
        const NcPoly xl = NcPoly::generator(letter, ctx);
        std::map<IndexSet, NcPoly> next;
        auto add = [&next](IndexSet J, const NcPoly& h) {
            auto it = next.find(J);
            if (it == next.end())
                next.emplace(J, h);
            else
                it->second += h;
        };
        for (const auto& [J, h] : state) {
            add(J, xl * h);
            for (const auto& [K, c] : table.commI[letter - 1][J])
                add(K, h * (lam * GaussianRational(c)));
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero())
                it = next.erase(it);
            else
                ++it;
        }
        state = std::move(next);
    };

    for (std::uint32_t t = 0; t < mono.c; ++t) step(3);
    for (std::uint32_t t = 0; t < mono.b; ++t) step(2);
    for (std::uint32_t t = 0; t < mono.a; ++t) step(1);
    return state;
}

}  // namespace

// ---------------------------------------------------------------------------
// Form

Form Form::zero(int degree, ParamContext::Ptr ctx) {
    if (degree < 0 || degree > 3) throw DegreeError("form degree must be 0..3");
    Form f;
    f.degree_ = degree;
    f.ctx_ = std::move(ctx);
    return f;
}

Form Form::scalar(NcPoly f) {
    Form w = zero(0, f.ctx());
    w.add_comp(0, f);
    return w;
}

Form Form::basis(IndexSet I, ParamContext::Ptr ctx) {
    Form w = zero(set_degree(I), ctx);
    w.add_comp(I, NcPoly::one(ctx));
    return w;
}

Form Form::monomial(IndexSet I, NcPoly f) {
    Form w = zero(set_degree(I), f.ctx());
    w.add_comp(I, f);
    return w;
}

NcPoly Form::coeff(IndexSet I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? NcPoly::zero(ctx_) : it->second;
}

void Form::add_comp(IndexSet I, const NcPoly& f) {
    if (f.is_zero()) return;
    if (set_degree(I) != degree_)
        throw DegreeError("component index set does not match form degree");
    auto it = comps_.find(I);
    if (it == comps_.end()) {
        comps_.emplace(I, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Form Form::operator-() const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.comps_.emplace(I, -f);
    return w;
}

Form operator+(const Form& a, const Form& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_)
        throw DegreeError("cannot add forms of different degree");
    Form w = a;
    for (const auto& [I, f] : b.comps_) w.add_comp(I, f);
    return w;
}

Form operator-(const Form& a, const Form& b) {
    return a + (-b);
}

Form Form::operator*(const ScalarPoly& s) const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f * s);
    return w;
}

Form Form::operator*(const GaussianRational& c) const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f * c);
    return w;
}

Form Form::right_mul(const NcPoly& g) const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f * g);
    return w;
}

bool Form::operator==(const Form& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (degree_ != o.degree_) return false;
    return comps_ == o.comps_;
}

Form Form::substitute(const std::map<std::string, GaussianRational>& bindings) const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f.substitute(bindings));
    return w;
}

Form Form::divide_by_lambda() const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f.divide_by_lambda());
    return w;
}

Form Form::truncate_k_degree(std::uint32_t bound) const {
    Form w = zero(degree_, ctx_);
    for (const auto& [I, f] : comps_) w.add_comp(I, f.truncate_k_degree(bound));
    return w;
}

std::uint32_t Form::grade() const {
    std::uint32_t g = 0;
    for (const auto& [I, f] : comps_)
        g = std::max(g, static_cast<std::uint32_t>(set_degree(I)) + f.grade());
    return g;
}

std::map<std::uint32_t, Form> Form::grade_parts() const {
    std::map<std::uint32_t, Form> parts;
    for (const auto& [I, f] : comps_) {
        for (const auto& [g, part] : f.grade_parts()) {
            const std::uint32_t total = g + static_cast<std::uint32_t>(set_degree(I));
            auto it = parts.find(total);
            if (it == parts.end())
                it = parts.emplace(total, Form::zero(degree_, ctx_)).first;
            it->second.add_comp(I, part);
        }
    }
    return parts;
}

NcPoly Form::as_ncpoly() const {
    if (degree_ != 0) throw DegreeError("as_ncpoly requires a degree-0 form");
    return coeff(0);
}

std::string Form::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : comps_) {
        std::string basis;
        for (int a = 1; a <= 3; ++a) {
            if (!set_contains(I, a)) continue;
            if (!basis.empty()) basis += "/\\";
            basis += "dx" + std::to_string(a);
        }
        // A single-word coefficient with sign-compatible scalar keeps the
        // flat product shape; anything else is parenthesized.
        std::string body;
        bool negative = false;
        if (basis.empty()) {
            body = f.str();
        } else if (f.terms().size() == 1) {
            const auto& [m, c] = *f.terms().begin();
            NcPoly mono = NcPoly::monomial(m, c);
            std::string s = mono.str();
            if (!s.empty() && s[0] == '-') {
                negative = true;
                s = s.substr(1);
                // NcPoly::str never emits a space after a leading minus.
            }
            if (s == "1")
                body = basis;
            else
                body = basis + "*" + s;
        } else {
            body = basis + "*(" + f.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            os << body;
            first = false;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Form& w) {
    return os << w.str();
}

// ---------------------------------------------------------------------------
// Bimodule move and wedge

Form move_coeff_left_to_right(const NcPoly& f, const Form& omega) {
    Form out = Form::zero(omega.degree(), omega.ctx());
    for (const auto& [I, g] : omega.comps()) {
        for (const auto& [mono, s] : f.terms()) {
            const auto moved = move_word(mono, I, omega.ctx());
            for (const auto& [J, h] : moved)
                out.add_comp(J, (h * g) * s);
        }
    }
    return out;
}

Form wedge(const Form& omega, const Form& eta) {
    const int dw = omega.degree(), de = eta.degree();
    if (dw + de > 3) return Form::zero(3, omega.ctx());
    Form out = Form::zero(dw + de, omega.ctx());
    for (const auto& [I, f] : omega.comps()) {
        for (const auto& [J, g] : eta.comps()) {
            // dx_I f /\ dx_J g = dx_I /\ (f dx_J) g; move f across dx_J.
            for (const auto& [mono, s] : f.terms()) {
                const auto moved = move_word(mono, J, omega.ctx());
                for (const auto& [K, h] : moved) {
                    const int sgn = wedge_sign(I, K);
                    if (sgn == 0) continue;
                    NcPoly coeff = (h * g) * s;
                    if (sgn < 0) coeff = -coeff;
                    out.add_comp(I | K, coeff);
                }
            }
        }
    }
    return out;
}

// Left-wedge by a coefficient-1 basis form (no bimodule moves needed).
static Form wedge_basis_left(IndexSet I, const Form& phi) {
    if (set_degree(I) + phi.degree() > 3) return Form::zero(3, phi.ctx());
    Form out = Form::zero(set_degree(I) + phi.degree(), phi.ctx());
    for (const auto& [J, h] : phi.comps()) {
        const int sgn = wedge_sign(I, J);
        if (sgn == 0) continue;
        out.add_comp(I | J, sgn < 0 ? -h : h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exterior derivatives

Form d_inner(const Form& omega) {
    if (omega.degree() == 3) return Form::zero(3, omega.ctx());
    const Form theta_basis = Form::basis(set_of(1), omega.ctx());
    Form comm = wedge(omega, theta_basis);
    const Form other = wedge(theta_basis, omega);
    if (omega.degree() % 2 == 0)
        comm = comm - other;
    else
        comm = comm + other;
    // d(omega) = -lam^{-1} (omega /\ dx1 - (-1)^deg dx1 /\ omega); the
    // commutator is always divisible by lam.
    return -(comm.divide_by_lambda());
}

static Form d_leibniz_word(const Monomial& m, const ParamContext::Ptr& ctx) {
    if (m.total() == 0) return Form::zero(1, ctx);
    int letter;
    Monomial rest = m;
    if (m.a > 0) {
        letter = 1;
        rest.a -= 1;
    } else if (m.b > 0) {
        letter = 2;
        rest.b -= 1;
    } else {
        letter = 3;
        rest.c -= 1;
    }
    // d(x_l w) = dx_l * w + x_l * d(w)
    Form out = Form::monomial(set_of(letter), NcPoly::monomial(rest, ctx));
    out = out + move_coeff_left_to_right(NcPoly::generator(letter, ctx),
                                         d_leibniz_word(rest, ctx));
    return out;
}

static Form d_leibniz0(const NcPoly& f) {
    Form out = Form::zero(1, f.ctx());
    for (const auto& [m, c] : f.terms())
        out = out + d_leibniz_word(m, f.ctx()) * c;
    return out;
}

Form d_leibniz(const Form& omega) {
    if (omega.degree() == 0) return d_leibniz0(omega.as_ncpoly());
    if (omega.degree() == 3) return Form::zero(3, omega.ctx());
    Form out = Form::zero(omega.degree() + 1, omega.ctx());
    for (const auto& [I, f] : omega.comps())
        out = out + wedge_basis_left(I, d_leibniz0(f));
    return out;
}

Form d_shuffle(const NcPoly& f) {
    const auto& ctx = f.ctx();
    Form out = Form::zero(1, ctx);
    const Matrix<ScalarPoly> r1 = RhoRep::rho(1, ctx);
    const Matrix<ScalarPoly> r2 = RhoRep::rho(2, ctx);
    const Matrix<ScalarPoly> r3 = RhoRep::rho(3, ctx);

    auto apply = [](const Matrix<ScalarPoly>& m, const std::vector<ScalarPoly>& v) {
        return m.apply(v);
    };

    for (const auto& [mono, s] : f.terms()) {
        // Subwords of the normal word are determined by how many copies of
        // each letter are taken; each choice carries the shuffle multiplicity
        // C(a,j1) C(b,j2) C(c,j3).
        for (std::uint32_t j1 = 0; j1 <= mono.a; ++j1)
            for (std::uint32_t j2 = 0; j2 <= mono.b; ++j2)
                for (std::uint32_t j3 = 0; j3 <= mono.c; ++j3) {
                    if (j1 + j2 + j3 == 0) continue;
                    // rho_Lambda(x1^j1 x2^j2 x3^j3) = rho1^j1 rho2^j2 rho3^j3 e3
                    std::vector<ScalarPoly> v(3, ScalarPoly::zero(ctx));
                    v[RhoRep::lambda_ray] = ScalarPoly::one(ctx);
                    for (std::uint32_t t = 0; t < j3; ++t) v = apply(r3, v);
                    for (std::uint32_t t = 0; t < j2; ++t) v = apply(r2, v);
                    for (std::uint32_t t = 0; t < j1; ++t) v = apply(r1, v);
                    bool all_zero = true;
                    for (const auto& x : v)
                        if (!x.is_zero()) all_zero = false;
                    if (all_zero) continue;

                    const BigInt mult = binomial(mono.a, j1) * binomial(mono.b, j2) *
                                        binomial(mono.c, j3);
                    const Monomial rest{mono.a - j1, mono.b - j2, mono.c - j3};
                    const ScalarPoly factor = s * GaussianRational(mult);
                    // Dictionary e1 -> dx2, e2 -> dx3, e3 -> -dx1, and one
                    // overall lam^{-1} from the shuffle formula.
                    for (int i = 1; i <= 3; ++i) {
                        const ScalarPoly& vi = v[i - 1];
                        if (vi.is_zero()) continue;
                        const auto [b, sign] = i == 1   ? std::pair{2, +1}
                                               : i == 2 ? std::pair{3, +1}
                                                        : std::pair{1, -1};
                        ScalarPoly c = vi.divide_by_lambda() * factor;
                        if (sign < 0) c = -c;
                        out.add_comp(set_of(b), NcPoly::monomial(rest, ctx) * c);
                    }
                }
    }
    return out;
}

Form d_paper_variant(const NcPoly& f) {
    const auto& ctx = f.ctx();
    Form out = Form::zero(1, ctx);
    const ScalarPoly::Exps base(ctx->size(), 0);
    auto lam_pow = [&](std::uint32_t p, GaussianRational c) {
        ScalarPoly::Exps e = base;
        e[kParamLambda] = p;
        return ScalarPoly::monomial(std::move(e), std::move(c), ctx);
    };
    for (const auto& [m, s] : f.terms()) {
        // dx1 sum: -dx1 sum_{k=1..a} A^k_a (-1)^k lam^{k-1} x1^{a-k} x2^b x3^c
        for (std::uint32_t k = 1; k <= m.a; ++k) {
            BigInt A = falling_factorial(m.a, k);
            GaussianRational c{(k % 2 == 0) ? -A : A};  // -(-1)^k A
            out.add_comp(set_of(1),
                         NcPoly::monomial(Monomial{m.a - k, m.b, m.c},
                                          lam_pow(k - 1, c) * s));
        }
        // dx2 sum: dx2 sum_{k=0..a} A^k_a b lam^k x1^{a-k} x2^{b-1} x3^c
        if (m.b > 0) {
            for (std::uint32_t k = 0; k <= m.a; ++k) {
                BigInt A = falling_factorial(m.a, k) * m.b;
                out.add_comp(set_of(2),
                             NcPoly::monomial(Monomial{m.a - k, m.b - 1, m.c},
                                              lam_pow(k, GaussianRational(A)) * s));
            }
        }
        // dx3 sum: dx3 sum_{k=0..a} A^k_a c lam^k x1^{a-k} x2^b x3^{c-1}
        if (m.c > 0) {
            for (std::uint32_t k = 0; k <= m.a; ++k) {
                BigInt A = falling_factorial(m.a, k) * m.c;
                out.add_comp(set_of(3),
                             NcPoly::monomial(Monomial{m.a - k, m.b, m.c - 1},
                                              lam_pow(k, GaussianRational(A)) * s));
            }
        }
    }
    return out;
}

Form d(const Form& omega, DVariant variant) {
    if (variant == DVariant::consistent) return d_inner(omega);
    if (omega.degree() == 0) return d_paper_variant(omega.as_ncpoly());
    if (omega.degree() == 3) return Form::zero(3, omega.ctx());
    Form out = Form::zero(omega.degree() + 1, omega.ctx());
    for (const auto& [I, f] : omega.comps())
        out = out + wedge_basis_left(I, d_paper_variant(f));
    return out;
}

std::array<NcPoly, 3> partials(const NcPoly& f, DVariant variant) {
    const Form df = d(Form::scalar(f), variant);
    return {df.coeff(set_of(1)), df.coeff(set_of(2)), df.coeff(set_of(3))};
}

Form invariant_form(const NcPoly& f, DVariant variant) {
    const TensorSquare delta = coproduct(f);
    Form out = Form::zero(1, f.ctx());
    for (const auto& [key, c] : delta.terms()) {
        const Form du = d(Form::scalar(NcPoly::monomial(key.first, f.ctx())), variant);
        if (du.is_zero()) continue;
        const NcPoly sv = antipode(NcPoly::monomial(key.second, f.ctx()));
        out = out + du.right_mul(sv) * c;
    }
    return out;
}

}  // namespace ncborel
