#ifndef CYCLERECON_ORIENTATION_HPP
#define CYCLERECON_ORIENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclerecon {

// Per-edge orientation of a pointed cycle, read along the traversal
// direction: '+' forward arc, '-' backward arc, '*' both.
enum class Orient : std::uint8_t { Forward = 0, Backward = 1, Symmetric = 2 };

inline char to_char(Orient o) {
  switch (o) {
    case Orient::Forward: return '+';
    case Orient::Backward: return '-';
    default: return '*';
  }
}

// Swaps forward and backward, fixes symmetric.
inline Orient flipped(Orient o) {
  switch (o) {
    case Orient::Forward: return Orient::Backward;
    case Orient::Backward: return Orient::Forward;
    default: return Orient::Symmetric;
  }
}

Orient orient_from_char(char c);  // throws std::invalid_argument

// A word over {+,-,*}. The same value serves as a pointed cycle (symbol j,
// 0-based, is the edge from vertex j to vertex j+1 mod m, so the wrap edge
// is the last symbol) and as a plain linear word for the matching
// algorithms. Cycle semantics only kick in for the cycle-level operations,
// which require length >= 3; word-level operations accept any length >= 1.
//
// External rendering is exactly one character per symbol, no separators.
class OrientationString {
 public:
  explicit OrientationString(std::vector<Orient> symbols);

  // One symbol per input character; throws std::invalid_argument on an
  // empty string or any character outside {+,-,*} (message carries the
  // 1-based offending position).
  static OrientationString parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  Orient operator[](std::size_t i) const { return symbols_[i]; }
  Orient at_mod(std::size_t i) const { return symbols_[i % symbols_.size()]; }
  const std::vector<Orient>& symbols() const { return symbols_; }

  std::string str() const;

  bool is_directed() const;       // all '+' or all '-'
  bool is_all_symmetric() const;  // all '*'

  friend bool operator==(const OrientationString&, const OrientationString&) = default;

 private:
  std::vector<Orient> symbols_;
};

// Rotate left by i positions (the i-th shift of the pointed cycle); i is
// reduced modulo the length.
OrientationString shift(const OrientationString& s, std::size_t i);

// Traverse the cycle the other way around the same base point: reversed
// symbol order with '+' and '-' swapped.
OrientationString reverse(const OrientationString& s);

// s repeated k times (k >= 1), then the optional suffix.
OrientationString concat_power(const OrientationString& s, std::size_t k,
                               const OrientationString* suffix = nullptr);

// root repeated `multiplicity` times reproduces the original string; the
// root is the shortest prefix with that property.
struct RootFactorization {
  OrientationString root;
  std::size_t multiplicity = 1;

  std::size_t root_length() const { return root.size(); }
};

// Only divisor periods are tested, each by one linear comparison.
RootFactorization primitive_root(const OrientationString& s);

enum class TargetClass {
  Contractible,      // length 3 with a transitive triangle
  DirectedTriangle,  // "+++" or "---"
  LongCycle,         // length >= 4
};

// Requires length >= 3 (throws std::invalid_argument below that).
TargetClass classify_target(const OrientationString& d);

const char* to_string(TargetClass c);

}  // namespace cyclerecon

#endif
