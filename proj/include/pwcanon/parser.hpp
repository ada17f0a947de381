#pragma once

#include <string_view>

#include "pwcanon/pw_expr.hpp"

namespace pwcanon {

// Surface language:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := rational | 'x' | '(' expr ')' | pw
//   pw     := 'pw' '{' branch (';' branch)* ';' 'otherwise' ':' expr '}'
//   branch := 'x' ('<' | '=' | '<=') ['-'] rational ':' expr
// Rational literals are digits with an optional '/'-digits tail and no inner
// whitespace; '/' is not an operator. Branch breakpoints must be strictly
// increasing; a breakpoint may repeat only as 'x < b' immediately followed by
// 'x = b'. A missing point branch inherits the region piece on its left; a
// missing region branch falls through to the next region in order (or to
// 'otherwise'); 'x <= b' supplies both at once.
//
// Throws SyntaxError (with byte offset), NonMonotoneConditions,
// DuplicateCondition.
PwExprPtr parse(std::string_view text);

// One signed rational literal with nothing around it but whitespace; used for
// command-line values. Throws SyntaxError.
Rational parse_rational(std::string_view text);

}  // namespace pwcanon
