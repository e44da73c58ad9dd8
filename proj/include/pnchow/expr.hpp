#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pnchow/bundle.hpp"

namespace pnchow {

// Abstract syntax for bundle expressions, e.g. "T(-1)^3" or
// "wedge(2, T(-1))".  The ambient dimension is supplied at elaboration, so
// one expression can be evaluated on every P^n.
//
// grammar:
//   expr   := term ('+' term)*
//   term   := factor ('^' UINT)?
//   factor := 'O' ('(' INT ')')? | 'T(-1)' | 'Omega(' UINT ',' INT ')'
//           | ('wedge'|'sym'|'hom') '(' UINT ',' expr ')'
//           | 'dual' '(' expr ')' | 'twist' '(' expr ',' INT ')'
//           | '(' expr ')'
struct BundleExpr {
    enum class Kind { Line, TangentTwist, Omega, Sum, Pow, Wedge, Sym, Dual, Twist };

    Kind kind;
    long a = 0;  // Line: twist d; Omega: p; Pow/Wedge/Sym: exponent
    long b = 0;  // Omega: t; Twist: d
    std::vector<std::shared_ptr<const BundleExpr>> kids;

    friend bool operator==(const BundleExpr& x, const BundleExpr& y);
};

using ExprPtr = std::shared_ptr<const BundleExpr>;

// throws parse_error with byte offset and expected-token description
ExprPtr parse_expr(std::string_view src);

std::string print_expr(const BundleExpr& e);

Bundle elaborate(const BundleExpr& e, int n);

}  // namespace pnchow
