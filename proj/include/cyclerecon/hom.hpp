#ifndef CYCLERECON_HOM_HPP
#define CYCLERECON_HOM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclerecon/orientation.hpp"
#include "cyclerecon/star_match.hpp"

namespace cyclerecon {

// A validated homomorphism between two reflexive cycles, stored as the
// sequence of target-vertex images (0-based, one per source vertex).
// Image sequences serialize as comma-separated decimal integers.
struct CycleHom {
  OrientationString source;
  OrientationString target;
  std::vector<int> images;
};

std::string images_to_string(std::span<const int> images);

// Thrown by validate_hom; `edge` is the 1-based index of the first source
// edge whose image is not an arc pattern of the target.
class EdgeViolation : public std::invalid_argument {
 public:
  EdgeViolation(std::size_t edge, const std::string& what)
      : std::invalid_argument(what), edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };
const char* to_string(Monotonicity m);

// Classification of one ordered pair of adjacent maps by per-vertex
// displacement: Up if every vertex that moves gains one, Down if every one
// drops one, Stationary if nothing moves, Mixed otherwise.
enum class MotionClass { Stationary, Up, Down, Mixed };
const char* to_string(MotionClass m);

enum class ArcPresence { None, Forward, Backward, Both };
const char* to_string(ArcPresence a);

struct Adjacency {
  ArcPresence arcs = ArcPresence::None;
  MotionClass motion = MotionClass::Stationary;
};

// Precomputed arc tables for one (source, target) pair of cycles. All
// per-edge legality and Hom-graph adjacency questions are answered here;
// the enumeration and sweep code works on raw image arrays through this
// to avoid re-deriving the tables per map.
class HomContext {
 public:
  HomContext(OrientationString source, OrientationString target);

  const OrientationString& source() const { return source_; }
  const OrientationString& target() const { return target_; }
  int m() const { return m_; }
  int n() const { return n_; }

  // Arc a -> b of the reflexive target cycle.
  bool target_arc(int a, int b) const {
    return (arc_rows_[static_cast<std::size_t>(a)] >> b) & 1u;
  }

  // May the source edge with orientation `sym` map onto the step a -> b?
  // Stationary steps are absorbed by the target loops; a step of +-1 needs
  // the target edge to carry every arc the source edge demands.
  bool step_ok(int a, int b, Orient sym) const {
    if (b == a) return true;
    if (b == next_[static_cast<std::size_t>(a)])
      return symbol_matches(target_[static_cast<std::size_t>(a)], sym);
    if (b == prev_[static_cast<std::size_t>(a)])
      return symbol_matches(target_[static_cast<std::size_t>(b)], flipped(sym));
    return false;
  }

  // 1-based index of the first offending source edge, nullopt when valid.
  // Expects images reduced to [0, n) and of length m.
  std::optional<std::size_t> first_violation(std::span<const int> images) const;

  int wind(std::span<const int> images) const;
  Monotonicity monotonicity(std::span<const int> images) const;

  // Full Hom-graph adjacency for the ordered pair (f, g): which arc
  // directions exist (every arc of the reflexive source checked, loops
  // included) and how g moves relative to f.
  Adjacency adjacency(std::span<const int> f, std::span<const int> g) const;

 private:
  OrientationString source_;
  OrientationString target_;
  int m_;
  int n_;
  std::vector<std::uint64_t> arc_rows_;  // arc_rows_[a] bit b: arc a -> b
  std::vector<int> next_, prev_;
};

// Checks lengths, reduces images mod n, checks every edge; throws
// std::invalid_argument on a length mismatch and EdgeViolation on the
// first bad edge. Both cycles must have length >= 3.
CycleHom validate_hom(const OrientationString& source,
                      const OrientationString& target,
                      std::vector<int> images);

// Signed number of times the map wraps the source around the target:
// (#increasing - #decreasing edges) / |target|.
int wind(const CycleHom& h);

Monotonicity monotonicity(const CycleHom& h);

// A subpath of the source over which the map's increase returns to zero
// while staying strictly negative in between. `start` is a vertex index in
// [0, m); `end` is start plus the edge count, so it can pass the base point
// (reduce mod m for the vertex).
struct Cutback {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  friend bool operator==(const Cutback&, const Cutback&) = default;
};

// All maximal cutbacks in base-point scan order. Empty exactly when the
// map is monotone or constant.
std::vector<Cutback> find_cutbacks(const CycleHom& h);

enum class PushUpOrder { FirstCutback, LastCutback };

struct PushUpResult {
  CycleHom hom;
  int class_index = 0;  // the result's image of the base vertex
};

// Repeatedly lifts cutbacks, deepest stationary run first, until none
// remain; every intermediate map is checked to be a homomorphism. The
// result is monotone or constant and does not depend on the scan order
// (the order knob exists so tests can assert that). Requires a
// non-contractible target.
PushUpResult monotone_pushup(const CycleHom& h,
                             PushUpOrder order = PushUpOrder::FirstCutback);

// Hom-graph adjacency for two validated maps over the same pair of cycles.
Adjacency adjacency(const CycleHom& h, const CycleHom& h2);

// The wind-w monotone map with base image `base` whose increasing edges
// are exactly the positions selected by alpha; alpha must witness the
// embedding of the w-fold target rotated by `base` into the source.
CycleHom selection_to_hom(const OrientationString& source,
                          const OrientationString& target, int base, int w,
                          const SelectionFunction& alpha);

struct SelectionEncoding {
  int base = 0;
  int w = 1;
  SelectionFunction alpha;
};

// Inverse of selection_to_hom; requires an increasing map.
SelectionEncoding hom_to_selection(const CycleHom& h);

}  // namespace cyclerecon

#endif
