#pragma once

#include <string>

#include "jacinf/errors.hpp"
#include "jacinf/polymap.hpp"

namespace jacinf {

/// Parse one polynomial expression in x, y. Grammar:
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*'? factor)*        (implicit multiplication allowed)
///   factor := base ('^' nat)?
///   base   := 'x' | 'y' | rational | '(' expr ')'
/// Whitespace-insensitive. Unknown identifiers are rejected.
Poly parse_poly_xy(const std::string& text);

/// Parse a map source "P; Q". A leading '@' names a file to read instead.
PolyMap parse_map(const std::string& source);

}  // namespace jacinf
