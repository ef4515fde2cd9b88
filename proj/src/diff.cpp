#include "bloblint/diff.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bloblint {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

enum class Op { Keep, Del, Add };

// LCS-based line script; quadratic, fine at source-file scale.
std::vector<std::pair<Op, const std::string*>> edit_script(const std::vector<std::string>& a,
                                                           const std::vector<std::string>& b) {
  std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
  std::vector<std::pair<Op, const std::string*>> script;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (a[i] == b[j]) {
      script.emplace_back(Op::Keep, &a[i]);
      ++i;
      ++j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      script.emplace_back(Op::Del, &a[i]);
      ++i;
    } else {
      script.emplace_back(Op::Add, &b[j]);
      ++j;
    }
  }
  for (; i < n; ++i) script.emplace_back(Op::Del, &a[i]);
  for (; j < m; ++j) script.emplace_back(Op::Add, &b[j]);
  return script;
}

}  // namespace

std::string unified_diff(const std::string& before, const std::string& after,
                         const std::string& path, int context) {
  if (before == after) return "";
  std::vector<std::string> a = split_lines(before);
  std::vector<std::string> b = split_lines(after);
  auto script = edit_script(a, b);

  std::ostringstream out;
  out << "--- a/" << path << "\n+++ b/" << path << "\n";

  std::size_t idx = 0;
  int a_line = 1, b_line = 1;
  while (idx < script.size()) {
    // find the next difference
    while (idx < script.size() && script[idx].first == Op::Keep) {
      ++idx;
      ++a_line;
      ++b_line;
    }
    if (idx == script.size()) break;

    // hunk starts `context` lines earlier
    std::size_t hunk_begin = idx;
    int lead = 0;
    while (hunk_begin > 0 && script[hunk_begin - 1].first == Op::Keep && lead < context) {
      --hunk_begin;
      ++lead;
    }
    // extend to the last difference within 2*context keeps
    std::size_t hunk_end = idx;
    std::size_t scan = idx;
    int keeps = 0;
    while (scan < script.size()) {
      if (script[scan].first == Op::Keep) {
        ++keeps;
        if (keeps > 2 * context) break;
      } else {
        keeps = 0;
        hunk_end = scan + 1;
      }
      ++scan;
    }
    std::size_t tail_end = hunk_end;
    int trail = 0;
    while (tail_end < script.size() && script[tail_end].first == Op::Keep && trail < context) {
      ++tail_end;
      ++trail;
    }

    int a_start = a_line - lead, b_start = b_line - lead;
    int a_count = 0, b_count = 0;
    for (std::size_t k = hunk_begin; k < tail_end; ++k) {
      if (script[k].first != Op::Add) ++a_count;
      if (script[k].first != Op::Del) ++b_count;
    }
    out << "@@ -" << a_start << "," << a_count << " +" << b_start << "," << b_count << " @@\n";
    for (std::size_t k = hunk_begin; k < tail_end; ++k) {
      switch (script[k].first) {
        case Op::Keep: out << ' '; break;
        case Op::Del: out << '-'; break;
        case Op::Add: out << '+'; break;
      }
      out << *script[k].second << "\n";
    }
    for (std::size_t k = idx; k < tail_end; ++k) {
      if (script[k].first != Op::Add) ++a_line;
      if (script[k].first != Op::Del) ++b_line;
    }
    idx = tail_end;
  }
  return out.str();
}

}  // namespace bloblint
