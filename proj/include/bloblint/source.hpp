#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bloblint {

// Half-open byte range [begin, end) into a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool contains(std::size_t offset) const {
    return begin <= offset && offset < end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span& a, const Span& b) {
    return a.begin == b.begin && a.end == b.end;
  }
};

struct LineCol {
  int line = 1;  // 1-based
  int col = 1;   // 1-based, in bytes
};

// Offset -> line/column mapping for one text buffer.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(const std::string& text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  LineCol locate(std::size_t offset) const {
    std::size_t lo = 0, hi = line_starts_.size();
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (line_starts_[mid] <= offset)
        lo = mid;
      else
        hi = mid;
    }
    return {static_cast<int>(lo) + 1,
            static_cast<int>(offset - line_starts_[lo]) + 1};
  }

  int line_of(std::size_t offset) const { return locate(offset).line; }
  std::size_t line_count() const { return line_starts_.size(); }

 private:
  std::vector<std::size_t> line_starts_;
};

}  // namespace bloblint
