#ifndef CYCLERECON_ENGINE_HPP
#define CYCLERECON_ENGINE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclerecon/hom.hpp"
#include "cyclerecon/hom_graph.hpp"
#include "cyclerecon/orientation.hpp"
#include "cyclerecon/star_match.hpp"

namespace cyclerecon {

enum class WindStatus { Empty, SingleCyclic, Blocks };
const char* to_string(WindStatus s);

// Which branch of the component characterization fired for a wind value.
enum class WindCase { ZeroWind, SingleBand, TightBlocks, Exceptional, OutOfRange };
const char* to_string(WindCase c);  // "1", "2", "3", "exceptional", "none"

struct WindReport {
  int w = 0;
  WindStatus status = WindStatus::Empty;
  WindCase branch = WindCase::OutOfRange;
  // Root rotations whose stretched copy plus one symbol still embeds; the
  // complement marks the walls between blocks. Meaningful for |w| >= 1.
  std::vector<std::size_t> gamma;
  // Three block counts are reported when status is Blocks. The first two
  // are the naive readings: the number of bad root rotations, and that
  // count spread over the whole target cycle. Both overcount when a block
  // holds no map at all (the rotated target may not embed anywhere for
  // some bases). The third drops the uninhabited blocks and is the count
  // the oracle is expected to confirm; verify_instance checks that and
  // flags which naive reading survives.
  std::size_t block_residues = 0;
  std::size_t block_positions = 0;
  std::size_t block_inhabited = 0;
};

struct ComponentReport {
  ComponentReport(OrientationString src, OrientationString tgt)
      : source(std::move(src)), target(std::move(tgt)), root(target) {}

  OrientationString source;
  OrientationString target;
  bool contractible = false;
  OrientationString root;
  std::size_t r = 1;  // multiplicity: target = root^r
  std::size_t s = 1;  // root length
  // Largest number of root copies embeddable over rotations, for the source
  // read forward (positive winds) and reversed (negative winds).
  std::size_t max_root_power = 0;
  std::size_t max_root_power_reversed = 0;
  int max_wind = 0;           // largest wind with maps: max_root_power / r
  int max_wind_reversed = 0;  // same for negative winds, by absolute value
  bool exceptional = false;   // all-symmetric target, directed source
  std::vector<WindReport> winds;  // w ascending, one beyond each extreme
};

// The component structure of every wind class, computed by the streaming
// matcher alone. Requires a non-contractible target unless `contractible`
// is acceptable to the caller (the report then carries no wind rows).
ComponentReport characterize(const OrientationString& source,
                             const OrientationString& target);

enum class DecisionReason {
  ContractibleTarget,
  WindMismatch,
  WindZero,
  FullGamma,
  SameBlock,
  DifferentBlock,
  Exceptional,
};
const char* to_string(DecisionReason r);

struct Decision {
  bool connected = false;
  DecisionReason reason = DecisionReason::DifferentBlock;
};

// Which coordinate locates a map among the blocks: the base image of its
// monotone push-up (default) or the raw base image. Both are implemented;
// the exhaustive sweep arbitrates which one matches the Hom graph.
enum class ClassMode { PushUp, Base };

// Streaming decision procedure with all the state shared between calls on
// one (source, target) pair precomputed once.
class DecisionContext {
 public:
  DecisionContext(OrientationString source, OrientationString target,
                  ClassMode mode = ClassMode::PushUp);

  const OrientationString& source() const { return source_; }
  const OrientationString& target() const { return target_; }
  ClassMode mode() const { return mode_; }
  bool exceptional() const { return exceptional_; }
  const RootFactorization& root() const { return root_; }

  Decision decide(const CycleHom& phi, const CycleHom& psi) const;

  // The two ingredients of decide(), exposed so batch sweeps can cache the
  // per-map data and still run the identical rule.
  int class_index(const CycleHom& h, int wind_of_h) const;
  Decision decide_core(int wind_phi, int wind_psi, int class_phi,
                       int class_psi) const;

  // Relabel a map onto the reversed source (same vertices read the other
  // way around the base point); negates the wind.
  CycleHom relabel_reversed(const CycleHom& h) const;

 private:
  const std::vector<char>& bad_residues(int wind_abs, bool reversed) const;
  bool arc_barrier_free(int from, int to, const std::vector<char>& bad) const;

  OrientationString source_;
  OrientationString target_;
  OrientationString reversed_source_;
  ClassMode mode_;
  TargetClass target_class_;
  RootFactorization root_;
  bool exceptional_ = false;
  mutable std::map<std::pair<int, bool>, std::vector<char>> bad_cache_;
};

// One-shot form.
Decision decide(const OrientationString& source, const OrientationString& target,
                const CycleHom& phi, const CycleHom& psi,
                ClassMode mode = ClassMode::PushUp);

// Cross-validation of the streaming engine against the explicit Hom graph
// on one instance: every ordered pair of maps, plus the per-wind component
// counts and cyclicity flags.
struct BlockAudit {
  int w = 0;
  std::size_t residue_count = 0;
  std::size_t position_count = 0;
  std::size_t oracle_count = 0;
  enum class OracleMatch { Residues, Positions, Both, Neither } match =
      OracleMatch::Neither;
};

struct VerifyReport {
  std::string source;
  std::string target;
  std::size_t hom_count = 0;
  std::size_t pair_count = 0;
  std::size_t mismatch_total = 0;
  std::vector<std::string> mismatches;  // itemized, capped
  std::vector<BlockAudit> block_audits;

  bool ok() const { return mismatch_total == 0; }
};

VerifyReport verify_instance(const OrientationString& source,
                             const OrientationString& target,
                             ClassMode mode = ClassMode::PushUp,
                             std::size_t cap = kDefaultEnumerationCap,
                             std::size_t max_itemized = 8);

}  // namespace cyclerecon

#endif
