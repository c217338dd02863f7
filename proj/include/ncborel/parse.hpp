#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ncborel/algebra.hpp"
#include "ncborel/calculus.hpp"
#include "ncborel/errors.hpp"

namespace ncborel {

/// Abstract syntax tree for the ASCII surface language.
///
/// Grammar (left-associative, precedence ^ > * = /\ > binary +/-):
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/\') unary)*
///   unary  := '-' unary | factor
///   factor := atom ('^' nat)?
///   atom   := identifier | rational | '(' expr ')'
///
/// Identifiers: x1 x2 x3 dx1 dx2 dx3 lam k1 k2 k3 i.  Rationals are
/// "p" or "p/q" with no interior spaces, so "/\" (wedge) stays
/// unambiguous: '/' continues a number only when a digit follows.
struct Expr {
    enum class Kind {
        rational,    ///< literal; payload in `value`
        imag_unit,   ///< the Gaussian unit i
        lam,         ///< the deformation parameter
        kparam,      ///< wave covector component k1..k3; payload in `index`
        generator,   ///< x1..x3; payload in `index`
        basis_form,  ///< dx1..dx3; payload in `index`
        neg,         ///< one child
        add,         ///< two children
        sub,         ///< two children
        mul,         ///< two children; algebra/module product
        wedge,       ///< two children; exterior product
        pow          ///< one child; payload in `exponent`
    };

    Kind kind = Kind::rational;
    BigRat value = 0;
    int index = 0;
    std::uint32_t exponent = 0;
    std::size_t offset = 0;  ///< byte offset of the node in the source
    std::vector<Expr> kids;
};

/// Parses the surface grammar.  Throws ParseError with Kind::lexical for
/// tokenization failures and Kind::syntax for grammar failures; both carry
/// the byte offset of the offending input.
Expr parse(const std::string& src);

/// A fully elaborated expression: a polynomial of R^3_lam or a differential
/// form with polynomial coefficients.
using Value = std::variant<NcPoly, Form>;

/// Elaborates an AST to a Value over the standard parameter context.
/// Degree violations (wedge involving a 0-form, sums of mixed degree,
/// powers of forms, products of forms written with '*') throw ParseError
/// with Kind::degree and the offset of the offending operator.
Value elaborate(const Expr& e);

/// parse followed by elaborate.
Value parse_value(const std::string& src);

}  // namespace ncborel
