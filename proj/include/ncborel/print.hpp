#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncborel/claims.hpp"
#include "ncborel/homology.hpp"
#include "ncborel/parse.hpp"
#include "ncborel/waves.hpp"

namespace ncborel {

/// Serialization targets of the CLI.  Text and latex use the canonical
/// monomial order of the engine printers; json documents carry a top-level
/// "schema": "ncborel/1" field.
enum class OutputFormat { text, json, latex };

const char* to_cstring(OutputFormat f);

std::string format_ncpoly(const NcPoly& p, OutputFormat f);
std::string format_form(const Form& w, OutputFormat f);
std::string format_value(const Value& v, OutputFormat f);
std::string format_partials(const std::array<NcPoly, 3>& p, OutputFormat f);
std::string format_cohomology(const CohomologyTable& t, OutputFormat f);
std::string format_kernel(const std::vector<KernelEntry>& k, OutputFormat f);
std::string format_wave(const WaveCheck& w, OutputFormat f);
std::string format_report(const ClaimReport& r, OutputFormat f);

}  // namespace ncborel
