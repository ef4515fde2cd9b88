#pragma once

#include <string>

#include "bloblint/ast.hpp"

namespace bloblint {

// Parses one compilation unit of the supported Java subset. Unsupported
// constructs inside balanced braces become Opaque nodes instead of failing.
// Throws LexError/ParseError (with line/column) when braces are unbalanced
// or a top-level declaration is unreadable.
SyntaxTree parse(const std::string& text);

}  // namespace bloblint
