#pragma once

// Parser for the class-specifier mini-grammar used by the command line:
//   D(n,J)  Dinv(n,J)  S(2,3,2*)  L(n)  R(n)  Arc(n)  Cnk(n,k)  Orbit(n,J)
// with closure wrappers HC[...] and VC[...]. Masks are written {1,4,5};
// a trailing * marks the last-entry star, a leading * the first-entry star.

#include <string_view>

#include "cycdes/classes.hpp"

namespace cycdes {

/// Throws std::invalid_argument with the offending offset on parse errors.
PermSet parse_class_spec(std::string_view text);

}  // namespace cycdes
