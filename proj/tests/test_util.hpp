#ifndef CYCLERECON_TESTS_TEST_UTIL_HPP
#define CYCLERECON_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cyclerecon/orientation.hpp"
#include "cyclerecon/star_match.hpp"

namespace cyclerecon::testing {

// Visits every orientation string of the given length, in a fixed order.
template <class F>
void for_each_string(std::size_t len, F&& fn) {
  std::vector<Orient> syms(len, Orient::Forward);
  for (;;) {
    fn(OrientationString(syms));
    std::size_t i = 0;
    while (i < len) {
      if (syms[i] == Orient::Symmetric) {
        syms[i] = Orient::Forward;
        ++i;
      } else {
        syms[i] = syms[i] == Orient::Forward ? Orient::Backward : Orient::Symmetric;
        break;
      }
    }
    if (i == len) break;
  }
}

// Every non-contractible target of the given length: all strings when the
// length is at least 4, only the directed triangles at length 3.
template <class F>
void for_each_noncontractible_target(std::size_t len, F&& fn) {
  if (len == 3) {
    fn(OrientationString::parse("+++"));
    fn(OrientationString::parse("---"));
    return;
  }
  for_each_string(len, fn);
}

// Subsequence-embedding check by dynamic programming over all selections;
// written independently of the greedy matcher on purpose.
inline bool embed_oracle(const OrientationString& pattern,
                         const OrientationString& text) {
  std::vector<char> reach(pattern.size() + 1, 0);
  reach[0] = 1;
  for (std::size_t j = 0; j < text.size(); ++j) {
    for (std::size_t i = pattern.size(); i >= 1; --i) {
      if (!reach[i] && reach[i - 1] && symbol_matches(pattern[i - 1], text[j]))
        reach[i] = 1;
    }
  }
  return reach[pattern.size()] != 0;
}

// Longest prefix of the infinite repetition of the rotated root that embeds
// in the text, again by the all-selections dynamic program.
inline std::size_t max_prefix_oracle(const OrientationString& root,
                                     std::size_t offset,
                                     const OrientationString& text) {
  const std::size_t limit = text.size();
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (std::size_t j = 0; j < text.size(); ++j) {
    for (std::size_t i = limit; i >= 1; --i) {
      if (!reach[i] && reach[i - 1] &&
          symbol_matches(root[(offset + i - 1) % root.size()], text[j]))
        reach[i] = 1;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i <= limit; ++i)
    if (reach[i]) best = i;
  return best;
}

// The monotone push-up computed in closed form instead of by simulating
// the lift moves: on the universal cover the filled profile is the running
// maximum of the lifted map over one period (taken on the appropriate side
// of each vertex, by the sign of the wind; a zero-wind map fills up to its
// global maximum). Serves as an independent route to cross-check
// monotone_pushup, and as the fast path in the big sweeps.
inline std::vector<int> pushup_by_profile(int n,
                                          const std::vector<int>& images) {
  const int m = static_cast<int>(images.size());
  std::vector<long> lift(static_cast<std::size_t>(2 * m + 1));
  lift[0] = images[0];
  for (int t = 0; t < 2 * m; ++t) {
    const int a = images[static_cast<std::size_t>(t % m)];
    const int b = images[static_cast<std::size_t>((t + 1) % m)];
    const int d = (b - a + n) % n;
    lift[static_cast<std::size_t>(t + 1)] =
        lift[static_cast<std::size_t>(t)] + (d == 1 ? 1 : d == 0 ? 0 : -1);
  }
  const long total = lift[static_cast<std::size_t>(m)] - lift[0];
  std::vector<int> out(static_cast<std::size_t>(m));
  auto reduce = [&](long v) {
    return static_cast<int>(((v % n) + n) % n);
  };
  if (total == 0) {
    long best = lift[0];
    for (int t = 1; t < m; ++t)
      best = std::max(best, lift[static_cast<std::size_t>(t)]);
    for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = reduce(best);
  } else if (total > 0) {
    for (int j = 0; j < m; ++j) {
      long best = lift[static_cast<std::size_t>(j + 1)];
      for (int k = j + 2; k <= j + m; ++k)
        best = std::max(best, lift[static_cast<std::size_t>(k)]);
      out[static_cast<std::size_t>(j)] = reduce(best);
    }
  } else {
    for (int j = 0; j < m; ++j) {
      long best = lift[static_cast<std::size_t>(j)];
      for (int k = j + 1; k < j + m; ++k)
        best = std::max(best, lift[static_cast<std::size_t>(k)]);
      out[static_cast<std::size_t>(j)] = reduce(best);
    }
  }
  return out;
}

// Literal search over all strictly increasing selections, exponential and
// only for tiny inputs; cross-validates the dynamic program itself.
inline bool subset_embed_oracle(const OrientationString& pattern,
                                const OrientationString& text) {
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> bool {
    if (i == pattern.size()) return true;
    if (j == text.size()) return false;
    if (symbol_matches(pattern[i], text[j]) && self(self, i + 1, j + 1))
      return true;
    return self(self, i, j + 1);
  };
  return rec(rec, 0, 0);
}

}  // namespace cyclerecon::testing

#endif
