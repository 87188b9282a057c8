#include "cyclerecon/star_match.hpp"

namespace cyclerecon {

std::optional<SelectionFunction> leftmost_embedding(
    const OrientationString& pattern, const OrientationString& text) {
  SelectionFunction alpha;
  alpha.reserve(pattern.size());
  std::size_t i = 0;
  for (std::size_t j = 0; j < text.size() && i < pattern.size(); ++j) {
    if (symbol_matches(pattern[i], text[j])) {
      alpha.push_back(j + 1);
      ++i;
    }
  }
  if (i < pattern.size()) return std::nullopt;
  return alpha;
}

StreamCount greedy_stream_count(const OrientationString& root,
                                const OrientationString& text) {
  return greedy_stream_count_stream(
      root, 0, [&](std::size_t j) { return text[j]; }, text.size());
}

std::size_t max_power(const OrientationString& root,
                      const OrientationString& text) {
  return greedy_stream_count(root, text).power();
}

BestShiftPower max_power_over_shifts(const OrientationString& root,
                                     const OrientationString& text) {
  BestShiftPower best;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const StreamCount c = greedy_stream_count_stream(
        root, i, [&](std::size_t j) { return text[j]; }, text.size());
    if (i == 0 || c.power() > best.power) best = BestShiftPower{c.power(), i};
  }
  return best;
}

std::vector<std::size_t> gamma_set(const OrientationString& root,
                                   const OrientationString& text,
                                   std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("copies must be at least 1");
  const std::size_t s = root.size();
  const std::size_t threshold = copies * s + 1;
  std::vector<std::size_t> gamma;
  for (std::size_t i = 0; i < s; ++i) {
    const StreamCount c = greedy_stream_count_stream(
        root, i, [&](std::size_t j) { return text[j]; }, text.size());
    if (c.matched >= threshold) gamma.push_back(i);
  }
  return gamma;
}

}  // namespace cyclerecon
