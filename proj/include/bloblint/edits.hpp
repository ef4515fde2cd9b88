#pragma once

#include <string>
#include <vector>

#include "bloblint/source.hpp"

namespace bloblint {

// One span-anchored rewrite. An empty replacement deletes the span; an
// empty span inserts at span.begin.
struct TextEdit {
  Span span;
  std::string replacement;
};

// Applies a set of pairwise non-overlapping edits to `text`. Bytes outside
// the edited spans are preserved exactly. Throws OverlapError if two spans
// intersect, std::out_of_range if a span exceeds the text.
std::string apply_edits(const std::string& text, std::vector<TextEdit> edits);

}  // namespace bloblint
