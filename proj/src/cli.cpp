#include "ncborel/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncborel/claims.hpp"
#include "ncborel/homology.hpp"
#include "ncborel/parse.hpp"
#include "ncborel/print.hpp"
#include "ncborel/symmetry.hpp"
#include "ncborel/waves.hpp"

namespace ncborel {

namespace {

std::string read_expr_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "latex") return OutputFormat::latex;
    return OutputFormat::text;
}

DVariant parse_variant(const std::string& name) {
    return name == "paper" ? DVariant::paper : DVariant::consistent;
}

const char* parse_error_kind(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::lexical: return "lexical";
        case ParseError::Kind::syntax: return "syntax";
        case ParseError::Kind::degree: return "degree";
    }
    return "?";
}

int write_out(const std::string& payload, const std::string& outFile) {
    if (outFile.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(outFile, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << outFile << "\n";
        return 1;
    }
    os << payload;
    return 0;
}

Form as_form(const Value& v) {
    if (std::holds_alternative<Form>(v)) return std::get<Form>(v);
    return Form::scalar(std::get<NcPoly>(v));
}

NcPoly as_poly(const Value& v) {
    if (std::holds_alternative<NcPoly>(v)) return std::get<NcPoly>(v);
    const Form& f = std::get<Form>(v);
    if (f.degree() == 0) return f.as_ncpoly();
    throw DegreeError("this subcommand requires a 0-form expression");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{
        "ncborel: exact calculus, Hodge theory, cohomology and claim "
        "adjudication on the noncommutative space R^3_lam"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string outFile;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--out", outFile,
                   "write output bytes to FILE instead of stdout");

    const std::vector<std::string> variants = {"consistent", "paper"};

    std::string mulExpr;
    CLI::App* mul = app.add_subcommand("mul", "parse, normal-order and print");
    mul->fallthrough();
    mul->add_option("EXPR", mulExpr, "expression ('-' reads stdin)")->required();

    std::string dExpr, dVariant = "consistent";
    CLI::App* dcmd = app.add_subcommand("d", "exterior derivative");
    dcmd->fallthrough();
    dcmd->add_option("--variant", dVariant, "calculus variant")
        ->check(CLI::IsMember(variants));
    dcmd->add_option("EXPR", dExpr, "expression ('-' reads stdin)")->required();

    std::string starExpr;
    CLI::App* starCmd = app.add_subcommand("star", "Hodge star");
    starCmd->fallthrough();
    starCmd->add_option("EXPR", starExpr, "expression ('-' reads stdin)")
        ->required();

    std::string boxExpr, boxVariant = "consistent";
    CLI::App* boxCmd =
        app.add_subcommand("box", "wave operator on 0- and 1-forms");
    boxCmd->fallthrough();
    boxCmd->add_option("--variant", boxVariant, "calculus variant")
        ->check(CLI::IsMember(variants));
    boxCmd->add_option("EXPR", boxExpr, "expression ('-' reads stdin)")
        ->required();

    std::string partExpr, partVariant = "consistent";
    CLI::App* partCmd =
        app.add_subcommand("partials", "the three partial derivatives");
    partCmd->fallthrough();
    partCmd->add_option("--variant", partVariant, "calculus variant")
        ->check(CLI::IsMember(variants));
    partCmd->add_option("EXPR", partExpr, "expression ('-' reads stdin)")
        ->required();

    std::string kernelOp;
    int kernelGrade = -1;
    CLI::App* kernelCmd =
        app.add_subcommand("kernel", "exact nullspace of the wave operator");
    kernelCmd->fallthrough();
    kernelCmd->add_option("--operator", kernelOp, "which operator")
        ->check(CLI::IsMember({"box0", "box1"}))
        ->required();
    kernelCmd->add_option("--grade", kernelGrade,
                          "grade bound (default 6 for box0, 5 for box1)");

    int maxGrade = 6;
    CLI::App* cohCmd =
        app.add_subcommand("cohomology", "graded de Rham cohomology table");
    cohCmd->fallthrough();
    cohCmd->add_option("--max-grade", maxGrade, "largest grade to include");

    std::string primExpr;
    int gradeBound = 8;
    CLI::App* primCmd =
        app.add_subcommand("primitive", "solve d(eta) = omega exactly");
    primCmd->fallthrough();
    primCmd->add_option("EXPR", primExpr, "closed form ('-' reads stdin)")
        ->required();
    primCmd->add_option("--grade-bound", gradeBound,
                        "largest grade searched for the primitive");

    int waveOrder = 4;
    std::string waveConv = "plain", waveCheckKind = "d",
                waveVariant = "consistent";
    CLI::App* waveCmd = app.add_subcommand(
        "wave", "order-by-order plane-wave identity residuals");
    waveCmd->fallthrough();
    waveCmd->add_option("--order", waveOrder, "truncation order in k");
    waveCmd->add_option("--convention", waveConv, "plane-wave ordering")
        ->check(CLI::IsMember({"plain", "x1-left", "x1-right"}));
    waveCmd->add_option("--check", waveCheckKind,
                        "identity to test: d (derivative) or box (eigenvalue)")
        ->check(CLI::IsMember({"d", "box"}));
    waveCmd->add_option("--variant", waveVariant, "calculus variant")
        ->check(CLI::IsMember(variants));

    std::string actionGen, actionExpr;
    CLI::App* actionCmd =
        app.add_subcommand("action", "quantum-symmetry action on a 0-form");
    actionCmd->fallthrough();
    actionCmd->add_option("--gen", actionGen, "acting generator")
        ->check(CLI::IsMember({"J1", "J2", "J3", "t11", "t12", "t21", "t22"}))
        ->required();
    actionCmd->add_option("EXPR", actionExpr, "expression ('-' reads stdin)")
        ->required();

    CLI::App* reportCmd = app.add_subcommand(
        "report", "adjudicate every identity asserted in the source article");
    reportCmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OutputFormat fmt = parse_format(format);
    try {
        std::string payload;
        if (*mul) {
            payload = format_value(parse_value(read_expr_arg(mulExpr)), fmt);
        } else if (*dcmd) {
            Form w = as_form(parse_value(read_expr_arg(dExpr)));
            payload = format_form(d(w, parse_variant(dVariant)), fmt);
        } else if (*starCmd) {
            Form w = as_form(parse_value(read_expr_arg(starExpr)));
            payload = format_form(star(w), fmt);
        } else if (*boxCmd) {
            Value v = parse_value(read_expr_arg(boxExpr));
            DVariant var = parse_variant(boxVariant);
            if (std::holds_alternative<NcPoly>(v) ||
                std::get<Form>(v).degree() == 0)
                payload = format_ncpoly(box0(as_poly(v), var), fmt);
            else
                payload = format_form(box(std::get<Form>(v), var), fmt);
        } else if (*partCmd) {
            NcPoly f = as_poly(parse_value(read_expr_arg(partExpr)));
            payload = format_partials(partials(f, parse_variant(partVariant)),
                                      fmt);
        } else if (*kernelCmd) {
            KernelOperator op = kernelOp == "box0" ? KernelOperator::box0
                                                   : KernelOperator::box1;
            int grade = kernelGrade >= 0
                            ? kernelGrade
                            : (op == KernelOperator::box0 ? 6 : 5);
            payload = format_kernel(kernel_find(op, grade), fmt);
        } else if (*cohCmd) {
            payload = format_cohomology(cohomology_dims(maxGrade), fmt);
        } else if (*primCmd) {
            Form w = as_form(parse_value(read_expr_arg(primExpr)));
            std::optional<Form> eta = find_primitive(w, gradeBound);
            if (!eta) {
                std::cerr << "no primitive of grade <= " << gradeBound
                          << " exists\n";
                return 1;
            }
            payload = format_form(*eta, fmt);
        } else if (*waveCmd) {
            WaveConvention conv = waveConv == "x1-left"
                                      ? WaveConvention::x1_left
                                  : waveConv == "x1-right"
                                      ? WaveConvention::x1_right
                                      : WaveConvention::plain_exp;
            WaveSpec spec = WaveSpec::formal(waveOrder, conv);
            DVariant var = parse_variant(waveVariant);
            WaveCheck chk = waveCheckKind == "box"
                                ? wave_eigenvalue_check(spec, var)
                                : wave_derivative_check(spec, var);
            payload = format_wave(chk, fmt);
        } else if (*actionCmd) {
            NcPoly f = as_poly(parse_value(read_expr_arg(actionExpr)));
            NcPoly result = NcPoly::zero();
            if (actionGen[0] == 'J') {
                result = adjoint_action(actionGen[1] - '0', f);
            } else {
                TIndex t{actionGen[1] - '0', actionGen[2] - '0'};
                result = coregular_action(t, f);
            }
            payload = format_ncpoly(result, fmt);
        } else if (*reportCmd) {
            payload = format_report(claims_report(), fmt);
        }
        return write_out(payload, outFile);
    } catch (const ParseError& e) {
        std::cerr << "parse error (" << parse_error_kind(e.kind) << ") at byte "
                  << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ncborel
