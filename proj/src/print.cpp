#include "ncborel/print.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ncborel {

namespace {

using Json = nlohmann::ordered_json;

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

/// Translates a canonical text rendering into LaTeX math.  The canonical
/// surface syntax is regular enough that a token-wise substitution is exact.
std::string latex_math(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    auto is = [&](const char* lit) {
        return s.compare(i, std::char_traits<char>::length(lit), lit) == 0;
    };
    while (i < s.size()) {
        if (is("dx1") || is("dx2") || is("dx3")) {
            out += "\\mathrm{d}x_";
            out += s[i + 2];
            i += 3;
        } else if (is("lam")) {
            out += "\\lambda";
            i += 3;
        } else if (is("x1") || is("x2") || is("x3") || is("k1") || is("k2") ||
                   is("k3")) {
            out += s[i];
            out += '_';
            out += s[i + 1];
            i += 2;
        } else if (is("/\\")) {
            out += " \\wedge ";
            i += 2;
        } else if (s[i] == '*') {
            out += " \\, ";
            ++i;
        } else {
            out += s[i];
            ++i;
        }
    }
    return out;
}

/// Escapes text (claim quotes, witnesses) for a LaTeX document body.
std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '_': out += "\\_"; break;
            case '^': out += "\\^{}"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '#': out += "\\#"; break;
            case '$': out += "\\$"; break;
            case '%': out += "\\%"; break;
            case '&': out += "\\&"; break;
            case '~': out += "\\~{}"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

const char* to_cstring(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::latex: return "latex";
    }
    return "?";
}

std::string format_ncpoly(const NcPoly& p, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return p.str() + "\n";
        case OutputFormat::latex: return latex_math(p.str()) + "\n";
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "ncpoly";
            j["text"] = p.str();
            return finish(j);
        }
    }
    return "";
}

std::string format_form(const Form& w, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return w.str() + "\n";
        case OutputFormat::latex: return latex_math(w.str()) + "\n";
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "form";
            j["degree"] = w.degree();
            j["text"] = w.str();
            return finish(j);
        }
    }
    return "";
}

std::string format_value(const Value& v, OutputFormat f) {
    if (std::holds_alternative<NcPoly>(v))
        return format_ncpoly(std::get<NcPoly>(v), f);
    return format_form(std::get<Form>(v), f);
}

std::string format_partials(const std::array<NcPoly, 3>& p, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (int a = 0; a < 3; ++a)
                os << "partial" << a + 1 << ": " << p[a].str() << "\n";
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            for (int a = 0; a < 3; ++a)
                os << "\\partial^" << a + 1 << " f = " << latex_math(p[a].str())
                   << "\n";
            return os.str();
        }
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "partials";
            for (int a = 0; a < 3; ++a)
                j["partial" + std::to_string(a + 1)] = p[a].str();
            return finish(j);
        }
    }
    return "";
}

std::string format_cohomology(const CohomologyTable& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: {
            std::ostringstream os;
            os << "grade  H^0  H^1  H^2  H^3\n";
            for (int n = 0; n <= t.max_grade; ++n) {
                os << std::left << std::setw(7) << n;
                for (int k = 0; k < 4; ++k)
                    os << std::left << std::setw(5) << t.dims[n][k];
                // setw pads trailing spaces; trim them for byte stability.
                std::string line = os.str();
                while (!line.empty() && line.back() == ' ') line.pop_back();
                os.str(std::string());
                os << line << "\n";
            }
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            os << "\\begin{tabular}{r|rrrr}\n";
            os << "$n$ & $H^0$ & $H^1$ & $H^2$ & $H^3$ \\\\\n\\hline\n";
            for (int n = 0; n <= t.max_grade; ++n) {
                os << n;
                for (int k = 0; k < 4; ++k) os << " & " << t.dims[n][k];
                os << " \\\\\n";
            }
            os << "\\end{tabular}\n";
            return os.str();
        }
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "cohomology";
            j["max_grade"] = t.max_grade;
            j["dims"] = t.dims;
            j["block_dim"] = t.block_dim;
            j["block_rank"] = t.block_rank;
            return finish(j);
        }
    }
    return "";
}

namespace {

std::string kernel_element_str(const KernelEntry& e) {
    return e.element.str();
}

}  // namespace

std::string format_kernel(const std::vector<KernelEntry>& k, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (const KernelEntry& e : k)
                os << "grade " << e.grade << ": " << kernel_element_str(e)
                   << "\n";
            if (k.empty()) os << "empty kernel\n";
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            os << "\\begin{itemize}\n";
            for (const KernelEntry& e : k)
                os << "\\item grade " << e.grade << ": $"
                   << latex_math(kernel_element_str(e)) << "$\n";
            os << "\\end{itemize}\n";
            return os.str();
        }
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "kernel";
            Json arr = Json::array();
            for (const KernelEntry& e : k) {
                Json je;
                je["grade"] = e.grade;
                je["element"] = kernel_element_str(e);
                arr.push_back(je);
            }
            j["entries"] = arr;
            return finish(j);
        }
    }
    return "";
}

std::string format_wave(const WaveCheck& w, OutputFormat f) {
    auto verdict = [&w]() -> std::string {
        if (w.pass) return "PASS";
        for (std::size_t n = 0; n < w.residuals.size(); ++n)
            if (!w.residuals[n].is_zero())
                return "FAIL (first nonzero residual at k-order " +
                       std::to_string(n) + ")";
        return "FAIL";
    };
    switch (f) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (std::size_t n = 0; n < w.residuals.size(); ++n)
                os << "residual order " << n << ": " << w.residuals[n].str()
                   << "\n";
            os << "verdict: " << verdict() << "\n";
            os << "classical limit: " << (w.classical_pass ? "PASS" : "FAIL")
               << "\n";
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            os << "\\begin{itemize}\n";
            for (std::size_t n = 0; n < w.residuals.size(); ++n)
                os << "\\item order " << n << ": $"
                   << latex_math(w.residuals[n].str()) << "$\n";
            os << "\\item verdict: " << latex_escape(verdict()) << "\n";
            os << "\\item classical limit: "
               << (w.classical_pass ? "PASS" : "FAIL") << "\n";
            os << "\\end{itemize}\n";
            return os.str();
        }
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "wave-check";
            Json arr = Json::array();
            for (const auto& r : w.residuals) arr.push_back(r.str());
            j["residuals"] = arr;
            j["pass"] = w.pass;
            j["classical_pass"] = w.classical_pass;
            return finish(j);
        }
    }
    return "";
}

std::string format_report(const ClaimReport& r, OutputFormat f) {
    auto counts_line = [&r]() {
        std::ostringstream os;
        os << r.entries.size() << " claims: " << r.count(ClaimStatus::PASS)
           << " PASS, " << r.count(ClaimStatus::FAIL) << " FAIL, "
           << r.count(ClaimStatus::AMBIGUOUS) << " AMBIGUOUS";
        return os.str();
    };
    switch (f) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (const ClaimEntry& e : r.entries) {
                os << "[" << to_cstring(e.status) << "] " << e.id << " ("
                   << e.location << ") variant=" << e.variant;
                if (!e.convention.empty()) os << " convention=" << e.convention;
                os << "\n";
                os << "    claim: " << e.claimed << "\n";
                os << "    quote: " << e.quote << "\n";
                os << "    computed: " << e.computed << "\n";
            }
            os << counts_line() << "\n";
            return os.str();
        }
        case OutputFormat::latex: {
            std::ostringstream os;
            os << "\\begin{description}\n";
            for (const ClaimEntry& e : r.entries) {
                os << "\\item[" << latex_escape(e.id) << "] ("
                   << latex_escape(e.location) << ", "
                   << latex_escape(e.variant) << ") \\textbf{"
                   << to_cstring(e.status) << "}: " << latex_escape(e.claimed)
                   << " --- computed: " << latex_escape(e.computed) << "\n";
            }
            os << "\\end{description}\n";
            os << "% " << counts_line() << "\n";
            return os.str();
        }
        case OutputFormat::json: {
            Json j;
            j["schema"] = "ncborel/1";
            j["kind"] = "claim-report";
            Json counts;
            counts["pass"] = r.count(ClaimStatus::PASS);
            counts["fail"] = r.count(ClaimStatus::FAIL);
            counts["ambiguous"] = r.count(ClaimStatus::AMBIGUOUS);
            j["counts"] = counts;
            Json arr = Json::array();
            for (const ClaimEntry& e : r.entries) {
                Json je;
                je["id"] = e.id;
                je["location"] = e.location;
                je["quote"] = e.quote;
                je["variant"] = e.variant;
                if (!e.convention.empty()) je["convention"] = e.convention;
                je["status"] = to_cstring(e.status);
                je["computed"] = e.computed;
                je["claimed"] = e.claimed;
                arr.push_back(je);
            }
            j["entries"] = arr;
            return finish(j);
        }
    }
    return "";
}

}  // namespace ncborel
