#include "bloblint/edits.hpp"

#include <algorithm>

#include "bloblint/errors.hpp"

namespace bloblint {

std::string apply_edits(const std::string& text, std::vector<TextEdit> edits) {
  std::sort(edits.begin(), edits.end(), [](const TextEdit& a, const TextEdit& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return a.span.end < b.span.end;
  });
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const Span& s = edits[i].span;
    if (s.end < s.begin || s.end > text.size())
      throw std::out_of_range("edit span out of range");
    if (i > 0) {
      const Span& prev = edits[i - 1].span;
      // Two pure insertions at the same offset would be order-dependent.
      bool both_empty = prev.empty() && s.empty();
      if (prev.end > s.begin || (both_empty && prev.begin == s.begin))
        throw OverlapError("overlapping edits at byte " +
                           std::to_string(s.begin));
    }
  }
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const TextEdit& e : edits) {
    out.append(text, cursor, e.span.begin - cursor);
    out.append(e.replacement);
    cursor = e.span.end;
  }
  out.append(text, cursor, text.size() - cursor);
  return out;
}

}  // namespace bloblint
