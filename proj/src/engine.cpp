#include "cyclerecon/engine.hpp"

#include <algorithm>

namespace cyclerecon {

const char* to_string(WindStatus s) {
  switch (s) {
    case WindStatus::Empty: return "Empty";
    case WindStatus::SingleCyclic: return "SingleCyclic";
    default: return "Blocks";
  }
}

const char* to_string(WindCase c) {
  switch (c) {
    case WindCase::ZeroWind: return "1";
    case WindCase::SingleBand: return "2";
    case WindCase::TightBlocks: return "3";
    case WindCase::Exceptional: return "exceptional";
    default: return "none";
  }
}

const char* to_string(DecisionReason r) {
  switch (r) {
    case DecisionReason::ContractibleTarget: return "ContractibleTarget";
    case DecisionReason::WindMismatch: return "WindMismatch";
    case DecisionReason::WindZero: return "WindZero";
    case DecisionReason::FullGamma: return "FullGamma";
    case DecisionReason::SameBlock: return "SameBlock";
    case DecisionReason::DifferentBlock: return "DifferentBlock";
    default: return "Exceptional";
  }
}

ComponentReport characterize(const OrientationString& source,
                             const OrientationString& target) {
  ComponentReport rep(source, target);
  if (classify_target(target) == TargetClass::Contractible) {
    rep.contractible = true;  // every instance is connected; nothing to chart
    return rep;
  }
  const RootFactorization fac = primitive_root(target);
  rep.root = fac.root;
  rep.r = fac.multiplicity;
  rep.s = fac.root_length();
  const OrientationString reversed_source = reverse(source);
  rep.max_root_power = max_power_over_shifts(fac.root, source).power;
  rep.max_root_power_reversed =
      max_power_over_shifts(fac.root, reversed_source).power;
  rep.max_wind = static_cast<int>(rep.max_root_power / rep.r);
  rep.max_wind_reversed = static_cast<int>(rep.max_root_power_reversed / rep.r);
  rep.exceptional = target.is_all_symmetric() && source.is_directed();

  for (int w = -(rep.max_wind_reversed + 1); w <= rep.max_wind + 1; ++w) {
    WindReport wr;
    wr.w = w;
    if (w == 0) {
      wr.status = WindStatus::SingleCyclic;
      wr.branch = WindCase::ZeroWind;
      rep.winds.push_back(std::move(wr));
      continue;
    }
    const bool reversed = w < 0;
    const std::size_t copies = static_cast<std::size_t>(reversed ? -w : w) * rep.r;
    const std::size_t power =
        reversed ? rep.max_root_power_reversed : rep.max_root_power;
    if (copies > power) {
      wr.status = WindStatus::Empty;
      wr.branch = WindCase::OutOfRange;
      rep.winds.push_back(std::move(wr));
      continue;
    }
    const OrientationString& text = reversed ? reversed_source : source;
    wr.gamma = gamma_set(fac.root, text, copies);
    if (rep.exceptional) {
      wr.status = WindStatus::SingleCyclic;
      wr.branch = WindCase::Exceptional;
    } else if (wr.gamma.size() == rep.s) {
      wr.status = WindStatus::SingleCyclic;
      wr.branch = WindCase::SingleBand;
    } else {
      wr.status = WindStatus::Blocks;
      wr.branch = WindCase::TightBlocks;
      wr.block_residues = rep.s - wr.gamma.size();
      wr.block_positions = wr.block_residues * rep.r;

      // Count only the blocks that actually hold a map. A base class is
      // inhabited exactly when the target rotated to that base embeds,
      // i.e. when its rotation reaches `copies` full root copies; a block
      // is the stretch of classes between two consecutive walls.
      const std::size_t n = rep.s * rep.r;
      std::vector<char> good(rep.s, 0), inhabited(rep.s, 0);
      for (std::size_t i : wr.gamma) good[i] = 1;
      for (std::size_t i = 0; i < rep.s; ++i) {
        const StreamCount c = greedy_stream_count_stream(
            fac.root, i, [&](std::size_t j) { return text[j]; }, text.size());
        if (c.power() >= copies) inhabited[i] = 1;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (good[j % rep.s]) continue;  // walls sit at the bad positions
        // the block ending here: classes back to just after the previous wall
        bool found = inhabited[j % rep.s] != 0;
        for (std::size_t back = (j + n - 1) % n; !found && good[back % rep.s];
             back = (back + n - 1) % n)
          found = inhabited[back % rep.s] != 0;
        if (found) ++wr.block_inhabited;
      }
    }
    rep.winds.push_back(std::move(wr));
  }
  return rep;
}

DecisionContext::DecisionContext(OrientationString source,
                                 OrientationString target, ClassMode mode)
    : source_(std::move(source)),
      target_(std::move(target)),
      reversed_source_(reverse(source_)),
      mode_(mode),
      target_class_(classify_target(target_)),
      root_(primitive_root(target_)),
      exceptional_(target_.is_all_symmetric() && source_.is_directed()) {}

CycleHom DecisionContext::relabel_reversed(const CycleHom& h) const {
  const std::size_t m = h.images.size();
  std::vector<int> img(m);
  for (std::size_t j = 0; j < m; ++j) img[j] = h.images[(m - j) % m];
  return CycleHom{reversed_source_, target_, std::move(img)};
}

int DecisionContext::class_index(const CycleHom& h, int wind_of_h) const {
  if (mode_ == ClassMode::Base) return h.images[0];
  if (wind_of_h >= 0) return monotone_pushup(h).class_index;
  return monotone_pushup(relabel_reversed(h)).class_index;
}

const std::vector<char>& DecisionContext::bad_residues(int wind_abs,
                                                       bool reversed) const {
  const auto key = std::make_pair(wind_abs, reversed);
  auto it = bad_cache_.find(key);
  if (it != bad_cache_.end()) return it->second;
  const std::size_t copies = static_cast<std::size_t>(wind_abs) * root_.multiplicity;
  const std::vector<std::size_t> gamma = gamma_set(
      root_.root, reversed ? reversed_source_ : source_, copies);
  std::vector<char> bad(root_.root_length(), 1);
  for (std::size_t i : gamma) bad[i] = 0;
  return bad_cache_.emplace(key, std::move(bad)).first->second;
}

bool DecisionContext::arc_barrier_free(int from, int to,
                                       const std::vector<char>& bad) const {
  const int n = static_cast<int>(target_.size());
  const int s = static_cast<int>(bad.size());
  for (int j = from; j != to; j = (j + 1) % n) {
    if (bad[static_cast<std::size_t>(j % s)]) return false;
  }
  return true;
}

Decision DecisionContext::decide_core(int wind_phi, int wind_psi, int class_phi,
                                      int class_psi) const {
  if (target_class_ == TargetClass::Contractible)
    return Decision{true, DecisionReason::ContractibleTarget};
  if (wind_phi != wind_psi) return Decision{false, DecisionReason::WindMismatch};
  const int w = wind_phi;
  if (w == 0) return Decision{true, DecisionReason::WindZero};
  if (exceptional_) return Decision{true, DecisionReason::Exceptional};
  const std::vector<char>& bad = bad_residues(w < 0 ? -w : w, w < 0);
  if (std::none_of(bad.begin(), bad.end(), [](char b) { return b; }))
    return Decision{true, DecisionReason::FullGamma};
  if (arc_barrier_free(class_phi, class_psi, bad) ||
      arc_barrier_free(class_psi, class_phi, bad))
    return Decision{true, DecisionReason::SameBlock};
  return Decision{false, DecisionReason::DifferentBlock};
}

Decision DecisionContext::decide(const CycleHom& phi, const CycleHom& psi) const {
  if (phi.source != source_ || psi.source != source_ || phi.target != target_ ||
      psi.target != target_)
    throw std::invalid_argument("maps do not live over this instance");
  const int w_phi = wind(phi);
  const int w_psi = wind(psi);
  int cls_phi = 0, cls_psi = 0;
  if (target_class_ != TargetClass::Contractible && w_phi == w_psi && w_phi != 0 &&
      !exceptional_) {
    cls_phi = class_index(phi, w_phi);
    cls_psi = class_index(psi, w_psi);
  }
  return decide_core(w_phi, w_psi, cls_phi, cls_psi);
}

Decision decide(const OrientationString& source, const OrientationString& target,
                const CycleHom& phi, const CycleHom& psi, ClassMode mode) {
  return DecisionContext(source, target, mode).decide(phi, psi);
}

VerifyReport verify_instance(const OrientationString& source,
                             const OrientationString& target, ClassMode mode,
                             std::size_t cap, std::size_t max_itemized) {
  VerifyReport rep;
  rep.source = source.str();
  rep.target = target.str();
  auto note = [&](std::string msg) {
    ++rep.mismatch_total;
    if (rep.mismatches.size() < max_itemized)
      rep.mismatches.push_back(std::move(msg));
  };

  const HomGraph graph = build_hom_graph(source, target, cap);
  rep.hom_count = graph.size();
  const DecisionContext ctx(source, target, mode);
  const bool contractible = classify_target(target) == TargetClass::Contractible;

  // Oracle side, tallied per wind.
  struct WindTally {
    std::size_t components = 0;
    std::size_t cyclic = 0;
  };
  std::map<int, WindTally> tally;
  for (const auto& comp : graph.components) {
    if (!comp.single_wind) {
      if (!contractible)
        note("component mixes winds under a non-contractible target");
      continue;
    }
    auto& t = tally[comp.wind];
    ++t.components;
    if (comp.cyclic) ++t.cyclic;
  }

  if (contractible) {
    std::size_t total = graph.components.size();
    if (graph.size() > 0 && total != 1)
      note("contractible target but the Hom graph has " + std::to_string(total) +
           " components");
  } else {
    const ComponentReport chart = characterize(source, target);
    std::map<int, const WindReport*> by_wind;
    for (const auto& wr : chart.winds) by_wind[wr.w] = &wr;
    for (const auto& [w, t] : tally) {
      if (!by_wind.count(w)) {
        note("oracle found wind " + std::to_string(w) +
             " outside the charted range");
      }
    }
    for (const auto& wr : chart.winds) {
      const auto it = tally.find(wr.w);
      const std::size_t count = it == tally.end() ? 0 : it->second.components;
      const std::size_t cyclic = it == tally.end() ? 0 : it->second.cyclic;
      switch (wr.status) {
        case WindStatus::Empty:
          if (count != 0)
            note("wind " + std::to_string(wr.w) + ": charted Empty, oracle has " +
                 std::to_string(count) + " components");
          break;
        case WindStatus::SingleCyclic:
          if (count != 1 || cyclic != 1)
            note("wind " + std::to_string(wr.w) +
                 ": charted SingleCyclic, oracle has " + std::to_string(count) +
                 " components (" + std::to_string(cyclic) + " cyclic)");
          break;
        case WindStatus::Blocks: {
          if (cyclic != 0)
            note("wind " + std::to_string(wr.w) +
                 ": charted Blocks, oracle has cyclic components");
          if (count != wr.block_inhabited)
            note("wind " + std::to_string(wr.w) + ": charted " +
                 std::to_string(wr.block_inhabited) +
                 " inhabited blocks, oracle has " + std::to_string(count));
          BlockAudit audit;
          audit.w = wr.w;
          audit.residue_count = wr.block_residues;
          audit.position_count = wr.block_positions;
          audit.oracle_count = count;
          const bool res = count == wr.block_residues;
          const bool pos = count == wr.block_positions;
          audit.match = res && pos  ? BlockAudit::OracleMatch::Both
                        : res       ? BlockAudit::OracleMatch::Residues
                        : pos       ? BlockAudit::OracleMatch::Positions
                                    : BlockAudit::OracleMatch::Neither;
          rep.block_audits.push_back(audit);
          break;
        }
      }
    }
  }

  // Pairwise decisions against oracle connectivity. Per-map data is cached;
  // the rule applied is decide_core, exactly as in DecisionContext::decide.
  const std::size_t count = graph.size();
  std::vector<int> cls(count, 0);
  if (!contractible && !ctx.exceptional()) {
    for (std::size_t i = 0; i < count; ++i) {
      if (graph.winds[i] == 0) continue;
      const CycleHom h{source, target, graph.homs[i]};
      cls[i] = ctx.class_index(h, graph.winds[i]);
    }
  }
  rep.pair_count = count * count;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const Decision d =
          ctx.decide_core(graph.winds[i], graph.winds[j], cls[i], cls[j]);
      const bool oracle = graph.component[i] == graph.component[j];
      if (d.connected != oracle) {
        note("maps (" + images_to_string(graph.homs[i]) + ") and (" +
             images_to_string(graph.homs[j]) + "): engine says " +
             (d.connected ? "connected" : "not connected") + " [" +
             to_string(d.reason) + "], oracle says " +
             (oracle ? "connected" : "not connected"));
      }
    }
  }
  return rep;
}

}  // namespace cyclerecon
