// Porter (1980) suffix-stripping stemmer, following the published rule set
// rather than the later reference-implementation departures.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "concise/text.h"

namespace concise {
namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string word) : w_(std::move(word)) {}

  std::string Run() {
    if (w_.size() <= 2) return w_;
    Step1a();
    Step1b();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5a();
    Step5b();
    return w_;
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Measure of w_[0, len): number of VC sequences.
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && IsConsonant(len - 1);
  }

  // cvc where the final c is not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 1) || IsConsonant(len - 2) || !IsConsonant(len - 3))
      return false;
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view s) const {
    return w_.size() >= s.size() &&
           std::string_view(w_).substr(w_.size() - s.size()) == s;
  }

  std::size_t StemLen(std::string_view suffix) const {
    return w_.size() - suffix.size();
  }

  void Replace(std::string_view suffix, std::string_view with) {
    w_.replace(StemLen(suffix), suffix.size(), with);
  }

  void Step1a() {
    if (EndsWith("sses")) {
      Replace("sses", "ss");
    } else if (EndsWith("ies")) {
      Replace("ies", "i");
    } else if (EndsWith("ss")) {
      // unchanged
    } else if (EndsWith("s")) {
      Replace("s", "");
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(StemLen("eed")) > 0) Replace("eed", "ee");
      return;
    }
    bool removed = false;
    if (EndsWith("ed") && HasVowel(StemLen("ed"))) {
      Replace("ed", "");
      removed = true;
    } else if (EndsWith("ing") && HasVowel(StemLen("ing"))) {
      Replace("ing", "");
      removed = true;
    }
    if (!removed) return;
    if (EndsWith("at")) {
      Replace("at", "ate");
    } else if (EndsWith("bl")) {
      Replace("bl", "ble");
    } else if (EndsWith("iz")) {
      Replace("iz", "ize");
    } else if (EndsDoubleConsonant(w_.size())) {
      const char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (Measure(w_.size()) == 1 && EndsCvc(w_.size())) {
      w_.push_back('e');
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(StemLen("y"))) w_.back() = 'i';
  }

  // Applies the longest matching rule of a step; returns after the first
  // suffix match whether or not its condition held.
  template <std::size_t N>
  void ApplyLongest(const std::array<std::pair<std::string_view,
                                               std::string_view>, N>& rules,
                    int min_measure) {
    const std::pair<std::string_view, std::string_view>* best = nullptr;
    for (const auto& rule : rules) {
      if (EndsWith(rule.first) &&
          (best == nullptr || rule.first.size() > best->first.size())) {
        best = &rule;
      }
    }
    if (best != nullptr && Measure(StemLen(best->first)) > min_measure) {
      Replace(best->first, best->second);
    }
  }

  void Step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>,
                                20>
        kRules = {{{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                   {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                   {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                   {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                   {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                   {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                   {"iviti", "ive"},   {"biliti", "ble"}}};
    ApplyLongest(kRules, 0);
  }

  void Step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>,
                                7>
        kRules = {{{"icate", "ic"}, {"ative", ""}, {"alize", "al"},
                   {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""},
                   {"ness", ""}}};
    ApplyLongest(kRules, 0);
  }

  void Step4() {
    static constexpr std::array<std::string_view, 19> kSuffixes = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible",
        "ant", "ement", "ment", "ent", "ion", "ou",   "ism",
        "ate", "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (std::string_view s : kSuffixes) {
      if (EndsWith(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t stem = StemLen(best);
    if (Measure(stem) <= 1) return;
    if (best == "ion" && !(stem > 0 && (w_[stem - 1] == 's' ||
                                        w_[stem - 1] == 't'))) {
      return;
    }
    w_.resize(stem);
  }

  void Step5a() {
    if (!EndsWith("e")) return;
    const std::size_t stem = StemLen("e");
    const int m = Measure(stem);
    if (m > 1 || (m == 1 && !EndsCvc(stem))) w_.pop_back();
  }

  void Step5b() {
    if (Measure(w_.size()) > 1 && EndsDoubleConsonant(w_.size()) &&
        w_.back() == 'l') {
      w_.pop_back();
    }
  }

  std::string w_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  for (char c : word) {
    if (c < 'a' || c > 'z') return std::string(word);
  }
  return Stemmer(std::string(word)).Run();
}

}  // namespace concise
