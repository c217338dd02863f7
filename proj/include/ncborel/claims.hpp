#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncborel/waves.hpp"

namespace ncborel {

enum class ClaimStatus { PASS, FAIL, AMBIGUOUS };

const char* to_cstring(ClaimStatus s);

/// One adjudicated identity from the source article: where it is stated,
/// what it says, under which calculus variant (and, for wave claims, which
/// exponential convention) it was evaluated, and the computed vs. claimed
/// values.  Statuses are decided by computation at report time, never
/// hard-coded.
struct ClaimEntry {
    std::string id;          // stable unique id, e.g. "C-CAS-D.paper"
    std::string location;    // section tag, e.g. "S4"
    std::string quote;       // the statement, ASCII transliteration
    std::string variant;     // "consistent", "paper", "both", or "-"
    std::string convention;  // wave ordering convention, "" when irrelevant
    ClaimStatus status = ClaimStatus::FAIL;
    std::string computed;
    std::string claimed;
};

struct ClaimReport {
    std::vector<ClaimEntry> entries;

    /// First entry with the given id, or null.
    const ClaimEntry* find(const std::string& id) const;
    std::size_t count(ClaimStatus s) const;
};

/// The per-identity catalog: bimodule relations, monomial derivative,
/// partial-derivative expansions, Casimir claims, Hodge table, cohomology,
/// primitive steps, spin-0 and spin-1 kernel items.  Every identity is
/// evaluated under both calculus variants; entries merge into a single
/// "both" row when the two variants agree bit-for-bit.
ClaimReport catalog_check();

/// How to read the symbol C in the magnetic gauge potential.
enum class CReading { casimir_x1sq, free_constant };

const char* to_cstring(CReading r);

/// Builds the magnetic gauge potential
///   A = (1/4){ (sum_a k_a dx_a)(C + x1x2 + x2x3 + x1x3) + sum_a k_a dx_a x_a^2 }
/// under the chosen reading of C, then adjudicates the displayed field
/// strength F = dA and the field equation box A = J = k.dx under both
/// calculus variants.
ClaimReport magnetic_check(const std::array<ScalarPoly, 3>& k, CReading interpretC);

/// The consolidated deterministic report over every adjudicated claim,
/// including the wave-identity verdict matrices and the magnetic checks for
/// a formal wave vector under both readings of C.  Entries appear in a fixed
/// narrative order; re-running is bit-identical.
ClaimReport claims_report(Parallelism par = Parallelism::openmp);

}  // namespace ncborel
