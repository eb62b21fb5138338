#include "concise/selection.h"

#include <stdexcept>

namespace concise {

XorShift64::XorShift64(std::uint64_t seed)
    : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

std::uint64_t XorShift64::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::size_t XorShift64::next_index(std::size_t lo, std::size_t hi) {
  if (lo >= hi) throw std::invalid_argument("next_index: empty range");
  const std::uint64_t span = hi - lo;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % span);
}

std::size_t EvalSelection::size() const {
  std::size_t n = 0;
  for (const auto& [cat, p] : picks) n += (p.upper ? 1 : 0) + (p.lower ? 1 : 0);
  return n;
}

EvalSelection select_eval_samples(
    const std::map<RevisionCategory, std::vector<std::string>>& ranked,
    IndexGenerator& gen) {
  EvalSelection sel;
  for (const auto& [cat, ids] : ranked) {
    const std::string name(category_name(cat));
    const std::size_t k = ids.size();
    if (k == 0) {
      sel.warnings.push_back("category " + name + " is empty; skipped");
      continue;
    }
    const std::size_t half = k / 2;
    CategoryPick pick;
    if (half > 0) {
      pick.upper = ids[gen.next_index(0, half)];
    } else {
      sel.warnings.push_back("category " + name + " has one row; upper bucket empty");
    }
    pick.lower = ids[gen.next_index(half, k)];
    sel.picks.emplace(cat, std::move(pick));
  }
  return sel;
}

}  // namespace concise
