#ifndef CYCLERECON_STAR_MATCH_HPP
#define CYCLERECON_STAR_MATCH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclerecon/orientation.hpp"

namespace cyclerecon {

// Strictly increasing 1-based positions in the text, one per pattern
// symbol. The witness of a wildcard-subsequence embedding.
using SelectionFunction = std::vector<std::size_t>;

// A pattern symbol matches a text symbol if it is '*' or equal to it.
// The relation is deliberately asymmetric: '*' in the text does not stand
// in for '+' or '-' in the pattern.
inline bool symbol_matches(Orient pattern, Orient text) {
  return pattern == Orient::Symmetric || pattern == text;
}

// The lexicographically least selection function embedding `pattern` into
// `text`, or nullopt if there is none. Single greedy left-to-right pass.
std::optional<SelectionFunction> leftmost_embedding(
    const OrientationString& pattern, const OrientationString& text);

inline bool embeds(const OrientationString& pattern,
                   const OrientationString& text) {
  return leftmost_embedding(pattern, text).has_value();
}

// Result of the streaming pass: how many symbols of the endlessly repeated
// root were matched greedily. The whole working state of the pass is this
// counter plus a cyclic pointer into the root.
struct StreamCount {
  std::size_t matched = 0;
  std::size_t root_length = 1;

  // Number of complete copies of the root covered by the greedy match.
  std::size_t power() const { return matched / root_length; }
};

// Generic form of the streaming pass. `symbol_at(j)` is called exactly once
// for each j in [0, length), in increasing order; tests and the benchmark
// instrument it. Allocates nothing.
template <class SymbolAt>
StreamCount greedy_stream_count_stream(const OrientationString& root,
                                       std::size_t root_offset,
                                       SymbolAt&& symbol_at,
                                       std::size_t length) {
  const std::size_t p = root.size();
  std::size_t d = 0;  // position in the (rotated) root we are looking for
  std::size_t c = 0;  // symbols matched so far
  for (std::size_t j = 0; j < length; ++j) {
    if (symbol_matches(root[(root_offset + d) % p], symbol_at(j))) {
      d = (d + 1) % p;
      ++c;
    }
  }
  return StreamCount{c, p};
}

// One pass over `text` matching the repetition root^inf greedily.
StreamCount greedy_stream_count(const OrientationString& root,
                                const OrientationString& text);

// Largest R such that root^R embeds in text; 0 if not even one copy does.
// Equals floor(matched / |root|) of the streaming pass.
std::size_t max_power(const OrientationString& root,
                      const OrientationString& text);

struct BestShiftPower {
  std::size_t power = 0;
  std::size_t shift = 0;  // smallest witnessing rotation of the root
};

// max_power over all rotations of the root.
BestShiftPower max_power_over_shifts(const OrientationString& root,
                                     const OrientationString& text);

// The set of rotations i in [0, |root|) for which the rotated root repeated
// `copies` times, followed by one more copy of its first symbol, embeds in
// `text`. Streaming criterion: the greedy pass on the rotated root matches
// at least copies*|root| + 1 symbols.
std::vector<std::size_t> gamma_set(const OrientationString& root,
                                   const OrientationString& text,
                                   std::size_t copies);

}  // namespace cyclerecon

#endif
