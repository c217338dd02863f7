#include "ncborel/hodge.hpp"

namespace ncborel {

namespace {
constexpr IndexSet S1 = 0b001, S2 = 0b010, S3 = 0b100;
}

const std::array<HodgeTable::Entry, 8>& HodgeTable::entries() {
    // The published table:
    //   *1 = dx1/\dx2/\dx3          *(dx1/\dx2) = dx3
    //   *dx1 = dx2/\dx3             *(dx1/\dx3) = -dx2
    //   *dx2 = -(dx1/\dx3)          *(dx2/\dx3) = dx1
    //   *dx3 = dx1/\dx2             *(dx1/\dx2/\dx3) = 1
    static const std::array<Entry, 8> table = {{
        {0, S1 | S2 | S3, +1},
        {S1, S2 | S3, +1},
        {S2, S1 | S3, -1},
        {S1 | S2, S3, +1},
        {S3, S1 | S2, +1},
        {S1 | S3, S2, -1},
        {S2 | S3, S1, +1},
        {S1 | S2 | S3, 0, +1},
    }};
    return table;
}

HodgeTable::Entry HodgeTable::lookup(IndexSet I) {
    for (const auto& e : entries())
        if (e.from == I) return e;
    throw DegreeError("no Hodge table entry for index set");
}

Form star(const Form& omega) {
    Form out = Form::zero(3 - omega.degree(), omega.ctx());
    for (const auto& [I, f] : omega.comps()) {
        const auto e = HodgeTable::lookup(I);
        out.add_comp(e.to, e.sign < 0 ? -f : f);
    }
    return out;
}

Form codifferential(const Form& omega, DVariant variant) {
    return star(d(star(omega), variant));
}

Form box(const Form& omega, DVariant variant) {
    if (omega.degree() >= 2)
        throw DegreeError("box is defined on degree 0 and 1 only");
    return star(d(star(d(omega, variant)), variant));
}

NcPoly box0(const NcPoly& f, DVariant variant) {
    return box(Form::scalar(f), variant).as_ncpoly();
}

FieldStrength field_strength(const Form& A, DVariant variant) {
    if (A.degree() != 1)
        throw DegreeError("field_strength requires a degree-1 potential");
    FieldStrength out{d(A, variant), {NcPoly::zero(A.ctx()), NcPoly::zero(A.ctx()),
                                      NcPoly::zero(A.ctx())}};
    // B_a = epsilon_{abc} partial^b A^c over the three components of A.
    std::array<std::array<NcPoly, 3>, 3> dA;  // dA[c-1][b-1] = partial^b A^c
    for (int c = 1; c <= 3; ++c) {
        auto p = partials(A.coeff(set_of(c)), variant);
        dA[c - 1] = {p[0], p[1], p[2]};
    }
    static constexpr int eps[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
        {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
        {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
    };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                const int s = eps[a - 1][b - 1][c - 1];
                if (s == 0) continue;
                if (s > 0)
                    out.B[a - 1] += dA[c - 1][b - 1];
                else
                    out.B[a - 1] -= dA[c - 1][b - 1];
            }
    return out;
}

}  // namespace ncborel
