#pragma once

#include "ncborel/calculus.hpp"

namespace ncborel {

/// The Hodge star on wedge basis elements for the identity metric
/// dx_a (x) dx_a: a signed pairing I -> I* covering all 8 basis forms.
struct HodgeTable {
    struct Entry {
        IndexSet from;
        IndexSet to;
        int sign;
    };
    /// All 8 entries in ascending order of the source index set.
    static const std::array<Entry, 8>& entries();
    /// Lookup of a single basis form.
    static Entry lookup(IndexSet I);
};

/// Basis-wise star, coefficients inert on the right: *(dx_I f) = (*dx_I) f.
Form star(const Form& omega);

/// Codifferential delta = * d *.
Form codifferential(const Form& omega, DVariant variant = DVariant::consistent);

/// Wave operator box = * d * d, defined on degree 0 and 1 (the published
/// usage); degree >= 2 raises DegreeError.
Form box(const Form& omega, DVariant variant = DVariant::consistent);

/// Convenience wrapper: box on a degree-0 element.
NcPoly box0(const NcPoly& f, DVariant variant = DVariant::consistent);

/// Field strength of a gauge potential: F = dA and the magnetic components
/// B_a = epsilon_{abc} partial^b A^c.
struct FieldStrength {
    Form F;
    std::array<NcPoly, 3> B;
};

FieldStrength field_strength(const Form& A, DVariant variant = DVariant::consistent);

}  // namespace ncborel
