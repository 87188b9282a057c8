#include "cyclerecon/hom.hpp"

#include <algorithm>
#include <numeric>

namespace cyclerecon {

std::string images_to_string(std::span<const int> images) {
  std::string out;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(images[j]);
  }
  return out;
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "Increasing";
    case Monotonicity::Decreasing: return "Decreasing";
    case Monotonicity::Constant: return "Constant";
    default: return "NonMonotone";
  }
}

const char* to_string(MotionClass m) {
  switch (m) {
    case MotionClass::Stationary: return "Stationary";
    case MotionClass::Up: return "Up";
    case MotionClass::Down: return "Down";
    default: return "Mixed";
  }
}

const char* to_string(ArcPresence a) {
  switch (a) {
    case ArcPresence::None: return "none";
    case ArcPresence::Forward: return "forward";
    case ArcPresence::Backward: return "backward";
    default: return "both";
  }
}

HomContext::HomContext(OrientationString source, OrientationString target)
    : source_(std::move(source)), target_(std::move(target)),
      m_(static_cast<int>(source_.size())), n_(static_cast<int>(target_.size())) {
  if (m_ < 3 || n_ < 3)
    throw std::invalid_argument("cycles have length at least 3");
  if (n_ > 63) throw std::invalid_argument("target cycle too long");
  arc_rows_.assign(static_cast<std::size_t>(n_), 0);
  next_.resize(static_cast<std::size_t>(n_));
  prev_.resize(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    next_[static_cast<std::size_t>(a)] = (a + 1) % n_;
    prev_[static_cast<std::size_t>(a)] = (a + n_ - 1) % n_;
    arc_rows_[static_cast<std::size_t>(a)] |= 1ull << a;  // loop
  }
  for (int a = 0; a < n_; ++a) {
    const Orient sym = target_[static_cast<std::size_t>(a)];
    const int b = (a + 1) % n_;
    if (sym != Orient::Backward) arc_rows_[static_cast<std::size_t>(a)] |= 1ull << b;
    if (sym != Orient::Forward) arc_rows_[static_cast<std::size_t>(b)] |= 1ull << a;
  }
}

std::optional<std::size_t> HomContext::first_violation(
    std::span<const int> images) const {
  for (int j = 0; j < m_; ++j) {
    const int a = images[static_cast<std::size_t>(j)];
    const int b = images[static_cast<std::size_t>((j + 1) % m_)];
    if (!step_ok(a, b, source_[static_cast<std::size_t>(j)]))
      return static_cast<std::size_t>(j + 1);
  }
  return std::nullopt;
}

int HomContext::wind(std::span<const int> images) const {
  int increase = 0;
  for (int j = 0; j < m_; ++j) {
    const int a = images[static_cast<std::size_t>(j)];
    const int b = images[static_cast<std::size_t>((j + 1) % m_)];
    const int d = (b - a + n_) % n_;
    if (d == 1)
      ++increase;
    else if (d == n_ - 1)
      --increase;
    else if (d != 0)
      throw std::logic_error("wind of an invalid homomorphism");
  }
  if (increase % n_ != 0)
    throw std::logic_error("increase not divisible by the target length");
  return increase / n_;
}

Monotonicity HomContext::monotonicity(std::span<const int> images) const {
  int inc = 0, dec = 0;
  for (int j = 0; j < m_; ++j) {
    const int a = images[static_cast<std::size_t>(j)];
    const int b = images[static_cast<std::size_t>((j + 1) % m_)];
    const int d = (b - a + n_) % n_;
    if (d == 1)
      ++inc;
    else if (d == n_ - 1)
      ++dec;
  }
  if (inc == 0 && dec == 0) return Monotonicity::Constant;
  if (dec == 0) return Monotonicity::Increasing;
  if (inc == 0) return Monotonicity::Decreasing;
  return Monotonicity::NonMonotone;
}

Adjacency HomContext::adjacency(std::span<const int> f,
                                std::span<const int> g) const {
  bool any_up = false, any_down = false;
  for (int j = 0; j < m_; ++j) {
    const int d = (g[static_cast<std::size_t>(j)] -
                   f[static_cast<std::size_t>(j)] + n_) % n_;
    if (d == 0) continue;
    if (d == 1)
      any_up = true;
    else if (d == n_ - 1)
      any_down = true;
    else
      return Adjacency{ArcPresence::None, MotionClass::Mixed};
  }
  MotionClass motion = MotionClass::Stationary;
  if (any_up && any_down)
    motion = MotionClass::Mixed;
  else if (any_up)
    motion = MotionClass::Up;
  else if (any_down)
    motion = MotionClass::Down;

  bool fwd = true, bwd = true;
  for (int j = 0; j < m_ && (fwd || bwd); ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    const std::size_t ku = static_cast<std::size_t>((j + 1) % m_);
    // loop at vertex j
    fwd = fwd && target_arc(f[ju], g[ju]);
    bwd = bwd && target_arc(g[ju], f[ju]);
    const Orient sym = source_[ju];
    if (sym != Orient::Backward) {  // arc c_j -> c_{j+1}
      fwd = fwd && target_arc(f[ju], g[ku]);
      bwd = bwd && target_arc(g[ju], f[ku]);
    }
    if (sym != Orient::Forward) {  // arc c_{j+1} -> c_j
      fwd = fwd && target_arc(f[ku], g[ju]);
      bwd = bwd && target_arc(g[ku], f[ju]);
    }
  }
  ArcPresence arcs = ArcPresence::None;
  if (fwd && bwd)
    arcs = ArcPresence::Both;
  else if (fwd)
    arcs = ArcPresence::Forward;
  else if (bwd)
    arcs = ArcPresence::Backward;
  return Adjacency{arcs, motion};
}

CycleHom validate_hom(const OrientationString& source,
                      const OrientationString& target,
                      std::vector<int> images) {
  HomContext ctx(source, target);
  if (images.size() != source.size())
    throw std::invalid_argument(
        "image sequence has length " + std::to_string(images.size()) +
        ", expected " + std::to_string(source.size()));
  const int n = ctx.n();
  for (int& v : images) v = ((v % n) + n) % n;
  if (auto bad = ctx.first_violation(images)) {
    const std::size_t j = *bad;
    const std::size_t u = j - 1, w = j % source.size();
    throw EdgeViolation(
        j, "edge " + std::to_string(j) + " ('" +
               std::string(1, to_char(source[u])) + "' from vertex " +
               std::to_string(u) + " to " + std::to_string(w) +
               ") maps onto " + std::to_string(images[u]) + " -> " +
               std::to_string(images[w]) +
               ", which is not an allowed arc pattern of the target");
  }
  return CycleHom{source, target, std::move(images)};
}

int wind(const CycleHom& h) {
  return HomContext(h.source, h.target).wind(h.images);
}

Monotonicity monotonicity(const CycleHom& h) {
  return HomContext(h.source, h.target).monotonicity(h.images);
}

namespace {

// Per-edge increase of the map: +1, 0 or -1 for each source edge.
std::vector<int> edge_steps(const OrientationString& source, int n,
                            std::span<const int> images) {
  const std::size_t m = source.size();
  std::vector<int> steps(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int d = (images[(j + 1) % m] - images[j] + n) % n;
    steps[j] = d == 1 ? 1 : d == 0 ? 0 : -1;
  }
  return steps;
}

std::vector<Cutback> cutbacks_of_steps(const std::vector<int>& steps) {
  const std::size_t m = steps.size();
  std::vector<Cutback> all;
  for (std::size_t a = 0; a < m; ++a) {
    if (steps[a] != -1) continue;  // a dip starts with a decreasing edge
    int rel = 0;
    for (std::size_t t = a; t < a + m; ++t) {
      rel += steps[t % m];
      if (rel == 0) {
        all.push_back(Cutback{a, t + 1});
        break;
      }
      if (rel > 0) break;  // unreachable with unit steps
    }
  }
  // Keep only cutbacks not nested inside another one (intervals on the
  // cyclic cover; equal starts cannot occur).
  std::vector<Cutback> maximal;
  for (const Cutback& cb : all) {
    bool nested = false;
    for (const Cutback& other : all) {
      if (other.start == cb.start) continue;
      // Representative of `other` on the cover starting at or before cb.
      const long delta =
          static_cast<long>((cb.start + m - other.start) % m);
      const long o_start = static_cast<long>(cb.start) - delta;
      if (static_cast<long>(cb.end) <=
          o_start + static_cast<long>(other.length())) {
        nested = true;
        break;
      }
    }
    if (!nested) maximal.push_back(cb);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Cutback& x, const Cutback& y) { return x.start < y.start; });
  return maximal;
}

}  // namespace

std::vector<Cutback> find_cutbacks(const CycleHom& h) {
  HomContext ctx(h.source, h.target);
  return cutbacks_of_steps(edge_steps(h.source, ctx.n(), h.images));
}

PushUpResult monotone_pushup(const CycleHom& h, PushUpOrder order) {
  if (classify_target(h.target) == TargetClass::Contractible)
    throw std::invalid_argument("push-up requires a non-contractible target");
  HomContext ctx(h.source, h.target);
  const std::size_t m = h.source.size();
  const int n = ctx.n();
  std::vector<int> img = h.images;

  std::size_t guard = 8 * m * m * static_cast<std::size_t>(n) + 64;
  for (;;) {
    auto cbs = cutbacks_of_steps(edge_steps(h.source, n, img));
    if (cbs.empty()) break;
    const Cutback cb =
        order == PushUpOrder::FirstCutback ? cbs.front() : cbs.back();

    // Flatten the dip: lift the deepest interior runs one level at a time,
    // each run lift being a single one-step up move.
    for (;;) {
      if (guard-- == 0)
        throw std::logic_error("push-up did not terminate");
      std::vector<int> depth(cb.length() + 1, 0);
      int lvl = 0, deepest = 0;
      for (std::size_t t = 1; t <= cb.length(); ++t) {
        const std::size_t edge = (cb.start + t - 1) % m;
        const int d = (img[(edge + 1) % m] - img[edge] + n) % n;
        lvl += d == 1 ? 1 : d == 0 ? 0 : -1;
        depth[t] = -lvl;
        deepest = std::max(deepest, depth[t]);
      }
      if (deepest == 0) break;
      std::size_t t = 1;
      while (t < cb.length()) {
        if (depth[t] != deepest) {
          ++t;
          continue;
        }
        std::size_t u = t;
        while (u < cb.length() && depth[u] == deepest) ++u;
        for (std::size_t v = t; v < u; ++v)
          img[(cb.start + v) % m] = (img[(cb.start + v) % m] + 1) % n;
        if (ctx.first_violation(img))
          throw std::logic_error("push-up produced a non-homomorphism");
        t = u;
      }
    }
  }
  return PushUpResult{CycleHom{h.source, h.target, img}, img[0]};
}

Adjacency adjacency(const CycleHom& h, const CycleHom& h2) {
  if (h.source != h2.source || h.target != h2.target)
    throw std::invalid_argument("maps live over different cycles");
  HomContext ctx(h.source, h.target);
  return ctx.adjacency(h.images, h2.images);
}

CycleHom selection_to_hom(const OrientationString& source,
                          const OrientationString& target, int base, int w,
                          const SelectionFunction& alpha) {
  const std::size_t m = source.size();
  const std::size_t n = target.size();
  if (w < 1) throw std::invalid_argument("wind must be at least 1");
  if (base < 0 || static_cast<std::size_t>(base) >= n)
    throw std::invalid_argument("base vertex out of range");
  const std::size_t want = static_cast<std::size_t>(w) * n;
  if (alpha.size() != want)
    throw std::invalid_argument("selection function has " +
                                std::to_string(alpha.size()) +
                                " entries, expected " + std::to_string(want));
  const OrientationString pattern =
      shift(concat_power(target, static_cast<std::size_t>(w)),
            static_cast<std::size_t>(base));
  std::size_t prev = 0;
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    if (alpha[t] < 1 || alpha[t] > m || alpha[t] <= prev)
      throw std::invalid_argument(
          "selection function is not strictly increasing within range");
    if (!symbol_matches(pattern[t], source[alpha[t] - 1]))
      throw std::invalid_argument(
          "selection function is not an embedding witness at entry " +
          std::to_string(t + 1));
    prev = alpha[t];
  }
  std::vector<int> img(m);
  img[0] = base;
  std::size_t selected = 0;
  for (std::size_t j = 1; j < m; ++j) {
    while (selected < alpha.size() && alpha[selected] <= j) ++selected;
    img[j] = static_cast<int>((static_cast<std::size_t>(base) + selected) % n);
  }
  HomContext ctx(source, target);
  if (ctx.first_violation(img))
    throw std::logic_error("witnessed selection produced a non-homomorphism");
  return CycleHom{source, target, std::move(img)};
}

SelectionEncoding hom_to_selection(const CycleHom& h) {
  if (monotonicity(h) != Monotonicity::Increasing)
    throw std::invalid_argument("selection encoding requires an increasing map");
  const std::size_t m = h.source.size();
  const int n = static_cast<int>(h.target.size());
  SelectionEncoding enc;
  enc.base = h.images[0];
  enc.w = wind(h);
  for (std::size_t j = 0; j < m; ++j) {
    const int d = (h.images[(j + 1) % m] - h.images[j] + n) % n;
    if (d == 1) enc.alpha.push_back(j + 1);
  }
  return enc;
}

}  // namespace cyclerecon
