#pragma once

#include "stablemac/almostsym.hpp"
#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"
#include "stablemac/symfunc.hpp"
#include "stablemac/xpoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace stablemac::io {

// Expression parser over the tokens q, t, x<k>, integers, + - * / ^ ( ).
// Division is restricted to scalar (x-free) divisors. nvars = -1 infers the
// variable count from the largest index present. Throws std::invalid_argument
// on malformed input.
XPoly parse_xpoly(const std::string& s, int nvars = -1);

// Scalar parse: an expression with no x variables.
Qt parse_qt(const std::string& s);

// "2,0", "0,1,2", or "empty" (CLI form); also accepts "(2,0)" and "()".
Composition parse_composition(const std::string& s);

// "2,1", "[2,1]", "empty", "[]".
Partition parse_partition(const std::string& s);

// Inverse of SymFunc::str / AlmostSym::str.
SymFunc parse_symfunc(const std::string& s);
AlmostSym parse_almostsym(const std::string& s);

// Sparse weight rendering: [(i, "scalar"), ...] listing nonzero entries.
std::string weight_str(const std::vector<Qt>& w);
nlohmann::json weight_json(const std::vector<Qt>& w);

// Rendering with Hall-Littlewood tails: each x-monomial group's tail part is
// expanded in the P basis, e.g. "x1 * P[1,1](x2+...)".
std::string almostsym_hlp_str(const AlmostSym& f);

nlohmann::json almostsym_json(const AlmostSym& f);
nlohmann::json symfunc_json(const SymFunc& f);
nlohmann::json xpoly_json(const XPoly& f);

}  // namespace stablemac::io
