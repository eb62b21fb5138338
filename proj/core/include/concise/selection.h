#ifndef CONCISE_SELECTION_H_
#define CONCISE_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concise/categorize.h"

namespace concise {

// Source of uniform indices; injected so tests can pin the draws.
class IndexGenerator {
 public:
  virtual ~IndexGenerator() = default;
  // Uniform integer in [lo, hi); requires lo < hi.
  virtual std::size_t next_index(std::size_t lo, std::size_t hi) = 0;
};

// xorshift64* generator. Seed 0 is remapped to a fixed non-zero constant.
class XorShift64 : public IndexGenerator {
 public:
  explicit XorShift64(std::uint64_t seed);
  std::uint64_t next();
  std::size_t next_index(std::size_t lo, std::size_t hi) override;

 private:
  std::uint64_t state_;
};

// In-place Fisher-Yates shuffle driven by `gen`.
template <typename T>
void shuffle_with(std::vector<T>& v, IndexGenerator& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = gen.next_index(0, i);
    std::swap(v[i - 1], v[j]);
  }
}

struct CategoryPick {
  std::optional<std::string> upper;  // from ranks [0, k/2)
  std::optional<std::string> lower;  // from ranks [k/2, k)
};

struct EvalSelection {
  std::map<RevisionCategory, CategoryPick> picks;
  std::vector<std::string> warnings;

  std::size_t size() const;
};

// `ranked` holds row ids per category, sorted by aggregate score descending.
// One draw per non-empty bucket; empty categories are skipped with a warning.
EvalSelection select_eval_samples(
    const std::map<RevisionCategory, std::vector<std::string>>& ranked,
    IndexGenerator& gen);

}  // namespace concise

#endif  // CONCISE_SELECTION_H_
