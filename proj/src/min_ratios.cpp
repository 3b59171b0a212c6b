#include "foa/min_ratios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "foa/heuristics.hpp"

namespace foa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cameras of one call distributed over the nonempty buckets of one scale's
// discretization.  Member lists are ascending camera indices.
struct BucketedCams {
  std::vector<int> left_ids;  // bucket indices into the left BucketSet
  std::vector<std::vector<int>> left_members;
  std::vector<int> right_ids;
  std::vector<std::vector<int>> right_members;
  std::vector<int> out_of_region;
};

// Membership scans start at the bucket nearest M, so a camera on a shared
// boundary always lands in the nearer bucket, symmetrically on both sides.
int find_bucket_left(const BucketSet& set, double x) {
  for (int i = static_cast<int>(set.size()) - 1; i >= 0; --i) {
    if (x >= set[i].lo && x <= set[i].hi) return i;
  }
  return -1;
}

int find_bucket_right(const BucketSet& set, double x) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (x >= set[i].lo && x <= set[i].hi) return static_cast<int>(i);
  }
  return -1;
}

BucketedCams bucketize(const Instance& inst, const std::vector<int>& cams,
                       double M, const BucketSet& left, const BucketSet& right) {
  BucketedCams out;
  std::vector<std::vector<int>> lm(left.size()), rm(right.size());
  for (int c : cams) {
    const double x = inst.cameras[c];
    const int b =
        x < M ? find_bucket_left(left, x) : find_bucket_right(right, x);
    if (b < 0) {
      out.out_of_region.push_back(c);
    } else if (x < M) {
      lm[b].push_back(c);
    } else {
      rm[b].push_back(c);
    }
  }
  for (std::size_t b = 0; b < lm.size(); ++b) {
    if (!lm[b].empty()) {
      out.left_ids.push_back(static_cast<int>(b));
      out.left_members.push_back(std::move(lm[b]));
    }
  }
  for (std::size_t b = 0; b < rm.size(); ++b) {
    if (!rm[b].empty()) {
      out.right_ids.push_back(static_cast<int>(b));
      out.right_members.push_back(std::move(rm[b]));
    }
  }
  return out;
}

// Core class construction over nonempty-bucket positions.  cell_counts is
// row-major over (left position, right position); shorts are per position.
ClassSplit build_classes(const BucketedCams& bc,
                         const std::vector<int>& cell_counts,
                         const std::vector<int>& short_left,
                         const std::vector<int>& short_right) {
  const std::size_t rows = bc.left_members.size();
  const std::size_t cols = bc.right_members.size();
  std::vector<std::vector<int>> lm = bc.left_members;
  std::vector<std::vector<int>> rm = bc.right_members;

  ClassSplit split;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const int cnt = cell_counts[r * cols + c];
      for (int k = 0; k < cnt; ++k) {
        // k-th closest to M on each side: back of the left bucket, front
        // of the right bucket.
        const int lcam = lm[r].back();
        const int rcam = rm[c].front();
        lm[r].pop_back();
        rm[c].erase(rm[c].begin());
        split.pairs_mid.pairs.push_back({lcam, rcam});
        split.cams_mid.push_back(lcam);
        split.cams_mid.push_back(rcam);
      }
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    // Farthest from M on the left side is the front of the list.
    for (int k = 0; k < short_left[r]; ++k) {
      split.cams_short.push_back(lm[r].front());
      lm[r].erase(lm[r].begin());
    }
    for (int c : lm[r]) split.cams_long.push_back(c);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    for (int k = 0; k < short_right[c]; ++k) {
      split.cams_short.push_back(rm[c].back());
      rm[c].pop_back();
    }
    for (int cam : rm[c]) split.cams_long.push_back(cam);
  }
  for (int cam : bc.out_of_region) split.cams_long.push_back(cam);

  std::sort(split.cams_short.begin(), split.cams_short.end());
  std::sort(split.cams_mid.begin(), split.cams_mid.end());
  std::sort(split.cams_long.begin(), split.cams_long.end());
  split.pairs_mid.canonicalize();
  return split;
}

struct Ctx {
  const Instance& inst;
  double eps;
  int n_global;
  double M;
  RecursionTrace* trace;
  long long max_combos;
  long long combos = 0;
  long long costed = 0;
  int max_depth = 0;
  bool budget_hit = false;
};

CameraPairing solve_call(Ctx& ctx, const std::vector<int>& cams,
                         std::vector<int> targets, double lower, double upper,
                         int depth, int parent_trace, double parent_scale);

// Enumerates cell counts (row-major, bounded by per-bucket leftovers) and
// per-bucket short counts with equal totals on both sides; calls sink for
// every complete guess.  Guesses whose class sizes already violate the
// half-size recursion conditions (short targets > m/2 or long targets
// > m/2) are pruned here instead of being generated and rejected.
class GuessEnumerator {
 public:
  GuessEnumerator(Ctx& ctx, const BucketedCams& bc, int m_targets)
      : ctx_(ctx), bc_(bc), m_(m_targets) {
    for (const auto& m : bc.left_members) {
      row_rem_.push_back(static_cast<int>(m.size()));
    }
    for (const auto& m : bc.right_members) {
      col_rem_.push_back(static_cast<int>(m.size()));
    }
    cells_.assign(row_rem_.size() * col_rem_.size(), 0);
    short_left_.assign(row_rem_.size(), 0);
    short_right_.assign(col_rem_.size(), 0);
  }

  template <typename Sink>
  void run(Sink&& sink) {
    rec_cells(0, 0, sink);
  }

 private:
  template <typename Sink>
  void rec_cells(std::size_t pos, int cell_total, Sink&& sink) {
    if (ctx_.budget_hit) return;
    if (pos == cells_.size()) {
      // m_short in [need - cell_total, m/2] keeps both target classes
      // within half the call size.
      rec_short_left(0, 0, cell_total, sink);
      return;
    }
    const std::size_t cols = col_rem_.size();
    const std::size_t r = pos / cols;
    const std::size_t c = pos % cols;
    const int cap = std::min(row_rem_[r], col_rem_[c]);
    for (int v = 0; v <= cap && !ctx_.budget_hit; ++v) {
      cells_[pos] = v;
      row_rem_[r] -= v;
      col_rem_[c] -= v;
      rec_cells(pos + 1, cell_total + v, sink);
      row_rem_[r] += v;
      col_rem_[c] += v;
    }
  }

  template <typename Sink>
  void rec_short_left(std::size_t pos, int total, int cell_total,
                      Sink&& sink) {
    if (ctx_.budget_hit) return;
    if (total > m_ / 2) return;  // short targets would exceed m/2
    if (pos == short_left_.size()) {
      if (total + cell_total < m_ - m_ / 2) return;  // long targets > m/2
      rec_short_right(0, total, sink);
      return;
    }
    for (int v = 0; v <= row_rem_[pos] && !ctx_.budget_hit; ++v) {
      short_left_[pos] = v;
      rec_short_left(pos + 1, total + v, cell_total, sink);
    }
  }

  template <typename Sink>
  void rec_short_right(std::size_t pos, int needed, Sink&& sink) {
    if (ctx_.budget_hit) return;
    if (pos == short_right_.size()) {
      if (needed == 0) sink(cells_, short_left_, short_right_);
      return;
    }
    int tail_cap = 0;
    for (std::size_t p = pos + 1; p < short_right_.size(); ++p) {
      tail_cap += col_rem_[p];
    }
    const int hi = std::min(col_rem_[pos], needed);
    const int lo = std::max(0, needed - tail_cap);
    for (int v = lo; v <= hi && !ctx_.budget_hit; ++v) {
      short_right_[pos] = v;
      rec_short_right(pos + 1, needed - v, sink);
    }
  }

  Ctx& ctx_;
  const BucketedCams& bc_;
  int m_;
  std::vector<int> row_rem_, col_rem_;
  std::vector<int> cells_, short_left_, short_right_;
};

CameraPairing solve_call(Ctx& ctx, const std::vector<int>& cams,
                         std::vector<int> targets, double lower, double upper,
                         int depth, int parent_trace, double parent_scale) {
  ctx.max_depth = std::max(ctx.max_depth, depth);
  int trace_id = -1;
  if (ctx.trace) {
    trace_id = static_cast<int>(ctx.trace->calls.size());
    ctx.trace->calls.push_back(
        {trace_id, parent_trace, parent_scale, depth, lower, upper, {}});
    ctx.trace->max_depth = std::max(ctx.trace->max_depth, depth);
  }

  if (cams.empty()) return CameraPairing{};

  const int m = static_cast<int>(cams.size()) / 2;
  std::sort(targets.begin(), targets.end(), [&](int a, int b) {
    const double za = std::abs(ctx.inst.targets[a].y);
    const double zb = std::abs(ctx.inst.targets[b].y);
    if (za != zb) return za < zb;
    return a < b;
  });

  // Candidate scales: every cross-M baseline within the bounds.
  std::vector<double> scales;
  for (int i = 0; i < m; ++i) {
    for (int j = m; j < 2 * m; ++j) {
      const double b =
          ctx.inst.cameras[cams[j]] - ctx.inst.cameras[cams[i]];
      if (b >= lower && b <= upper) scales.push_back(b);
    }
  }
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());

  double best = kInf;
  CameraPairing best_pairing = CameraPairing::make_dummy();

  for (double scale : scales) {
    if (ctx.budget_hit) break;
    if (ctx.trace) ctx.trace->calls[trace_id].scales_tried.push_back(scale);
    const auto [left_buckets, right_buckets] =
        ratio_discretization(ctx.M, scale, ctx.n_global, ctx.eps);
    const BucketedCams bc =
        bucketize(ctx.inst, cams, ctx.M, left_buckets, right_buckets);

    GuessEnumerator guesses(ctx, bc, m);
    guesses.run([&](const std::vector<int>& cells,
                    const std::vector<int>& short_left,
                    const std::vector<int>& short_right) {
      ++ctx.combos;
      if (ctx.combos > ctx.max_combos) {
        ctx.budget_hit = true;
        return;
      }
      const ClassSplit split =
          build_classes(bc, cells, short_left, short_right);
      const int m_short = static_cast<int>(split.cams_short.size()) / 2;
      const int m_mid = split.pairs_mid.size();
      const int m_long = m - m_short - m_mid;
      if (2 * m_short > m || 2 * m_long > m) return;

      std::vector<int> y_short(targets.begin(), targets.begin() + m_short);
      std::vector<int> y_mid(targets.begin() + m_short,
                             targets.begin() + m_short + m_mid);
      std::vector<int> y_long(targets.begin() + m_short + m_mid,
                              targets.end());

      const CameraPairing p_short = solve_call(
          ctx, split.cams_short, std::move(y_short), lower,
          (1.0 + ctx.eps) * scale / (2.0 * ctx.n_global), depth + 1,
          trace_id, scale);
      if (p_short.dummy) return;
      const CameraPairing p_long = solve_call(
          ctx, split.cams_long, std::move(y_long),
          (1.0 - ctx.eps) * 2.0 * ctx.n_global * scale,
          upper * (1.0 + ctx.eps), depth + 1, trace_id, scale);
      if (p_long.dummy) return;

      CameraPairing full = split.pairs_mid;
      full.pairs.insert(full.pairs.end(), p_short.pairs.begin(),
                        p_short.pairs.end());
      full.pairs.insert(full.pairs.end(), p_long.pairs.begin(),
                        p_long.pairs.end());
      full.canonicalize();
      const double cost = ratio_cost(full, ctx.inst, targets);
      ++ctx.costed;
      if (cost < best || (cost == best && pairing_less(full, best_pairing))) {
        best = cost;
        best_pairing = std::move(full);
      }
    });
  }
  return best_pairing;
}

}  // namespace

ClassSplit assign_cameras_to_classes(const Instance& inst,
                                     const std::vector<int>& cams, double M,
                                     const BucketSet& left_buckets,
                                     const BucketSet& right_buckets,
                                     const RatioGuess& guess) {
  const BucketedCams bc = bucketize(inst, cams, M, left_buckets, right_buckets);
  auto position_of = [](const std::vector<int>& ids, int bucket) {
    const auto it = std::find(ids.begin(), ids.end(), bucket);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
  };

  const std::size_t rows = bc.left_members.size();
  const std::size_t cols = bc.right_members.size();
  std::vector<int> cells(rows * cols, 0);
  std::vector<int> short_left(rows, 0), short_right(cols, 0);

  for (const auto& [lb, rb, cnt] : guess.mid) {
    if (cnt == 0) continue;
    const int r = position_of(bc.left_ids, lb);
    const int c = position_of(bc.right_ids, rb);
    if (cnt < 0 || r < 0 || c < 0) {
      throw ConstraintViolated("mid count on an empty or unknown bucket");
    }
    cells[r * cols + c] += cnt;
  }
  for (const auto& [lb, cnt] : guess.short_left) {
    if (cnt == 0) continue;
    const int r = position_of(bc.left_ids, lb);
    if (cnt < 0 || r < 0) {
      throw ConstraintViolated("short count on an empty or unknown bucket");
    }
    short_left[r] += cnt;
  }
  for (const auto& [rb, cnt] : guess.short_right) {
    if (cnt == 0) continue;
    const int c = position_of(bc.right_ids, rb);
    if (cnt < 0 || c < 0) {
      throw ConstraintViolated("short count on an empty or unknown bucket");
    }
    short_right[c] += cnt;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    int used = short_left[r];
    for (std::size_t c = 0; c < cols; ++c) used += cells[r * cols + c];
    if (used > static_cast<int>(bc.left_members[r].size())) {
      throw ConstraintViolated("left bucket oversubscribed");
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    int used = short_right[c];
    for (std::size_t r = 0; r < rows; ++r) used += cells[r * cols + c];
    if (used > static_cast<int>(bc.right_members[c].size())) {
      throw ConstraintViolated("right bucket oversubscribed");
    }
  }
  if (std::accumulate(short_left.begin(), short_left.end(), 0) !=
      std::accumulate(short_right.begin(), short_right.end(), 0)) {
    throw ConstraintViolated("short counts are unbalanced across sides");
  }
  return build_classes(bc, cells, short_left, short_right);
}

CameraPairing min_ratio_pair(const RatioCall& call, const Instance& inst,
                             double eps_internal, RecursionTrace* trace,
                             RatioEnumLimits limits) {
  Ctx ctx{inst,    eps_internal,      inst.n(), inst.midpoint(),
          trace,   limits.max_combos};
  return solve_call(ctx, call.cameras, call.targets, call.lower, call.upper,
                    call.depth, -1, 0.0);
}

SolveReport solve_min_sum_ratios(const Instance& inst, double epsilon,
                                 RatioEnumLimits limits,
                                 RecursionTrace* trace) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw InvalidRange("solve_min_sum_ratios: epsilon must be in (0, 1)");
  }
  const Validation verdict = validate_for_ratios(inst);
  if (!verdict.ok) {
    std::string msg = "instance not valid for the ratio objective";
    for (const std::string& e : verdict.errors) msg += "; " + e;
    throw ValidationError(msg);
  }

  const auto start = std::chrono::steady_clock::now();
  const int n = inst.n();
  const double eps_internal = epsilon / 10.0;
  Ctx ctx{inst,  eps_internal,      n, inst.midpoint(),
          trace, limits.max_combos};

  std::vector<int> all_cams(2 * n), all_targets(n);
  std::iota(all_cams.begin(), all_cams.end(), 0);
  std::iota(all_targets.begin(), all_targets.end(), 0);
  const double innermost = inst.cameras[n] - inst.cameras[n - 1];
  const double outermost = inst.cameras[2 * n - 1] - inst.cameras[0];

  CameraPairing pairing = solve_call(ctx, all_cams, all_targets, innermost,
                                     outermost, 0, -1, 0.0);
  bool fell_back = false;
  if (pairing.dummy) {
    // Only reachable when the budget cuts the search short; fall back to a
    // feasible pairing so the report always decodes.
    pairing = shift_pairing(inst);
    fell_back = true;
  }

  SolveReport report;
  report.algorithm = "qptas";
  report.objective = Objective::SumRatios;
  report.epsilon = epsilon;
  report.assignment = assign_ratios(pairing, inst);
  report.value = report.assignment.value;
  report.certified = !ctx.budget_hit && !fell_back;
  report.counters.candidates = ctx.combos;
  report.counters.evaluated = ctx.costed;
  report.counters.recursion_depth = ctx.max_depth;
  report.counters.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

}  // namespace foa
