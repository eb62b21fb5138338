#include "concise/text.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

#include "concise/error.h"

namespace concise {
namespace {

bool IsPunct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }

bool IsSpace(unsigned char c) { return c < 0x80 && std::isspace(c) != 0; }

// Length of a UTF-8 encoded typographic quote or dash starting at s[i], or 0.
std::size_t Utf8PunctLen(std::string_view s, std::size_t i) {
  static constexpr std::string_view kMarks[] = {
      "‘", "’", "“", "”", "–", "—", "…"};
  for (std::string_view m : kMarks) {
    if (s.substr(i, m.size()) == m) return m.size();
  }
  return 0;
}

std::size_t PunctLenAt(std::string_view s, std::size_t i) {
  if (IsPunct(static_cast<unsigned char>(s[i]))) return 1;
  return Utf8PunctLen(s, i);
}

std::size_t PunctLenBefore(std::string_view s, std::size_t end) {
  if (end == 0) return 0;
  if (IsPunct(static_cast<unsigned char>(s[end - 1]))) return 1;
  for (std::size_t len = 2; len <= 3 && len <= end; ++len) {
    if (Utf8PunctLen(s, end - len) == len) return len;
  }
  return 0;
}

}  // namespace

TokenSeq TokenSeq::FromSurface(const std::vector<std::string>& surfaces) {
  std::vector<Token> tokens;
  tokens.reserve(surfaces.size());
  for (const auto& s : surfaces) tokens.push_back({s, normalize_token(s)});
  return TokenSeq(std::move(tokens));
}

std::vector<std::string> TokenSeq::words() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) {
    if (!t.norm.empty()) out.push_back(t.norm);
  }
  return out;
}

std::string TokenSeq::text() const {
  std::string out;
  for (const auto& t : tokens_) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

std::string normalize_token(std::string_view surface) {
  std::size_t begin = 0;
  std::size_t end = surface.size();
  while (begin < end) {
    const std::size_t n = PunctLenAt(surface, begin);
    if (n == 0) break;
    begin += n;
  }
  while (end > begin) {
    const std::size_t n = PunctLenBefore(surface, end);
    if (n == 0) break;
    end -= n;
  }
  std::string out(surface.substr(begin, end - begin));
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

TokenSeq tokenize(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsSpace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string_view chunk = text.substr(i, j - i);
    i = j;

    std::vector<std::string> trailing;
    while (!chunk.empty()) {
      const std::size_t n = PunctLenAt(chunk, 0);
      if (n == 0) break;
      parts.emplace_back(chunk.substr(0, n));
      chunk.remove_prefix(n);
    }
    while (!chunk.empty()) {
      const std::size_t n = PunctLenBefore(chunk, chunk.size());
      if (n == 0) break;
      trailing.emplace_back(chunk.substr(chunk.size() - n));
      chunk.remove_suffix(n);
    }
    if (!chunk.empty()) parts.emplace_back(chunk);
    parts.insert(parts.end(), trailing.rbegin(), trailing.rend());
  }
  return TokenSeq::FromSurface(parts);
}

EditScript lcs_align(const TokenSeq& a, const TokenSeq& b) {
  return lcs_align(a.words(), b.words());
}

EditScript lcs_align(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // suffix[i][j] = LCS length of a[i:], b[j:]
  std::vector<std::vector<std::size_t>> suffix(
      n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      suffix[i][j] = a[i] == b[j]
                         ? suffix[i + 1][j + 1] + 1
                         : std::max(suffix[i + 1][j], suffix[i][j + 1]);
    }
  }
  EditScript script;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j] &&
        suffix[i][j] == suffix[i + 1][j + 1] + 1) {
      script.ops.push_back({EditKind::kMatch, static_cast<int>(i),
                            static_cast<int>(j)});
      ++i;
      ++j;
    } else if (i < n && (j == m || suffix[i + 1][j] >= suffix[i][j + 1])) {
      script.ops.push_back({EditKind::kDelete, static_cast<int>(i), -1});
      ++script.cost;
      ++i;
    } else {
      script.ops.push_back({EditKind::kInsert, -1, static_cast<int>(j)});
      ++script.cost;
      ++j;
    }
  }
  return script;
}

std::size_t levenshtein(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

EditScript levenshtein_align(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1,
                                          std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                          d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  EditScript script;
  script.cost = d[n][m];
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        d[i][j] == d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)) {
      script.ops.push_back({a[i - 1] == b[j - 1] ? EditKind::kMatch
                                                 : EditKind::kSubstitute,
                            static_cast<int>(i - 1), static_cast<int>(j - 1)});
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      script.ops.push_back({EditKind::kDelete, static_cast<int>(i - 1), -1});
      --i;
    } else {
      script.ops.push_back({EditKind::kInsert, -1, static_cast<int>(j - 1)});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

double word_error_rate(const TokenSeq& hyp, const TokenSeq& ref) {
  const auto h = hyp.words();
  const auto r = ref.words();
  if (r.empty()) throw InputError("empty reference");
  return static_cast<double>(levenshtein(h, r)) / static_cast<double>(r.size());
}

TerResult translation_edit_rate(const TokenSeq& hyp, const TokenSeq& ref) {
  return translation_edit_rate(hyp.words(), ref.words());
}

namespace {

constexpr std::size_t kMaxShiftLength = 10;

bool OccursIn(const std::vector<std::string>& haystack,
              const std::vector<std::string>& seq, std::size_t start,
              std::size_t len) {
  if (len > haystack.size()) return false;
  for (std::size_t j = 0; j + len <= haystack.size(); ++j) {
    if (std::equal(seq.begin() + start, seq.begin() + start + len,
                   haystack.begin() + j)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TerResult translation_edit_rate(const std::vector<std::string>& hyp_in,
                                const std::vector<std::string>& ref) {
  if (ref.empty()) throw InputError("empty reference");
  std::vector<std::string> hyp = hyp_in;
  std::size_t distance = levenshtein(hyp, ref);
  std::size_t shifts = 0;

  while (distance > 0) {
    // Tokens already aligned as matches are not worth moving.
    const EditScript align = levenshtein_align(hyp, ref);
    std::vector<bool> matched(hyp.size(), false);
    for (const auto& op : align.ops) {
      if (op.kind == EditKind::kMatch) matched[op.source] = true;
    }

    struct Candidate {
      std::size_t gain, start, len, dest;
    };
    bool found = false;
    Candidate best{0, 0, 0, 0};
    std::vector<std::string> trial;
    trial.reserve(hyp.size());

    for (std::size_t start = 0; start < hyp.size(); ++start) {
      for (std::size_t len = 1;
           len <= kMaxShiftLength && start + len <= hyp.size(); ++len) {
        if (std::all_of(matched.begin() + start, matched.begin() + start + len,
                        [](bool b) { return b; })) {
          continue;
        }
        if (!OccursIn(ref, hyp, start, len)) break;  // longer blocks won't either
        // dest = insertion index into the hypothesis with the block removed.
        const std::size_t rest = hyp.size() - len;
        for (std::size_t dest = 0; dest <= rest; ++dest) {
          if (dest == start) continue;
          trial.clear();
          trial.insert(trial.end(), hyp.begin(), hyp.begin() + start);
          trial.insert(trial.end(), hyp.begin() + start + len, hyp.end());
          trial.insert(trial.begin() + dest, hyp.begin() + start,
                       hyp.begin() + start + len);
          const std::size_t d = levenshtein(trial, ref);
          if (d >= distance) continue;
          const Candidate c{distance - d, start, len, dest};
          if (!found || std::tie(best.gain) < std::tie(c.gain) ||
              (c.gain == best.gain &&
               std::tie(c.start, c.len, c.dest) <
                   std::tie(best.start, best.len, best.dest))) {
            best = c;
            found = true;
          }
        }
      }
    }
    if (!found) break;

    std::vector<std::string> block(hyp.begin() + best.start,
                                   hyp.begin() + best.start + best.len);
    hyp.erase(hyp.begin() + best.start, hyp.begin() + best.start + best.len);
    hyp.insert(hyp.begin() + best.dest, block.begin(), block.end());
    distance -= best.gain;
    ++shifts;
  }

  TerResult result;
  result.shifts = shifts;
  result.edits = shifts + distance;
  result.rate = static_cast<double>(result.edits) / static_cast<double>(ref.size());
  return result;
}

}  // namespace concise
