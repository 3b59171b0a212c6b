#include "foa/max_angles.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

namespace foa {

namespace {

int find_bucket(const std::vector<Bucket>& ladder, double x) {
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (x >= ladder[i].lo && x <= ladder[i].hi) return static_cast<int>(i);
  }
  return -1;
}

// Unpaired-camera state threaded through the enumeration stages.
struct Stage {
  std::vector<std::pair<int, int>> fixed;  // (left cam, right cam)
  std::vector<int> L, R;                   // ascending camera indices
};

class CandidateEnumerator {
 public:
  CandidateEnumerator(const Instance& inst, const AngleBuckets& buckets,
                      const std::function<bool(const CameraPairing&)>& emit)
      : inst_(inst), buckets_(buckets), emit_(emit) {
    const int n = inst.n();
    left_bucket_of_.assign(2 * n, -1);
    right_bucket_of_.assign(2 * n, -1);
    for (int c = 0; c < n; ++c) {
      int b = find_bucket(buckets_.left, inst.cameras[c]);
      // Rounding at the far end of the ladder must not orphan a camera.
      if (b < 0) b = static_cast<int>(buckets_.left.size()) - 1;
      left_bucket_of_[c] = b;
    }
    for (int c = n; c < 2 * n; ++c) {
      right_bucket_of_[c] = find_bucket(buckets_.right, inst.cameras[c]);
    }
  }

  long long run() {
    Stage s;
    const int n = inst_.n();
    for (int c = 0; c < n; ++c) s.L.push_back(c);
    for (int c = n; c < 2 * n; ++c) s.R.push_back(c);
    stage_left_counts(s);
    return emitted_;
  }

 private:
  using CountChoices = std::vector<std::pair<int, int>>;  // (bucket, count)

  std::vector<int> members(const std::vector<int>& cams, bool left_side,
                           int bucket) const {
    std::vector<int> out;
    for (int c : cams) {
      const auto& table = left_side ? left_bucket_of_ : right_bucket_of_;
      if (table[c] == bucket) out.push_back(c);
    }
    return out;
  }

  CountChoices nonempty_buckets(const std::vector<int>& cams, bool left_side,
                                int first_bucket) const {
    const auto& ladder = left_side ? buckets_.left : buckets_.right;
    std::vector<int> count(ladder.size(), 0);
    for (int c : cams) {
      const int b = left_side ? left_bucket_of_[c] : right_bucket_of_[c];
      if (b >= first_bucket) ++count[b];
    }
    CountChoices out;
    for (std::size_t b = first_bucket; b < ladder.size(); ++b) {
      if (count[b] > 0) out.emplace_back(static_cast<int>(b), count[b]);
    }
    return out;
  }

  static void erase_all(std::vector<int>& cams, const std::vector<int>& gone) {
    cams.erase(std::remove_if(cams.begin(), cams.end(),
                              [&](int c) {
                                return std::find(gone.begin(), gone.end(),
                                                 c) != gone.end();
                              }),
               cams.end());
  }

  // Enumerates one count per entry, 0..max, invoking sink at each leaf.
  template <typename Sink>
  void for_each_count_vector(const CountChoices& entries, Sink&& sink) {
    std::vector<int> chosen(entries.size(), 0);
    rec_counts(entries, 0, chosen, sink);
  }

  template <typename Sink>
  void rec_counts(const CountChoices& entries, std::size_t pos,
                  std::vector<int>& chosen, Sink&& sink) {
    if (stop_) return;
    if (pos == entries.size()) {
      sink(chosen);
      return;
    }
    for (int v = 0; v <= entries[pos].second && !stop_; ++v) {
      chosen[pos] = v;
      rec_counts(entries, pos + 1, chosen, sink);
    }
  }

  // Stage 1: per left bucket (sliver excluded), pair the chosen number of
  // its leftmost cameras with the leftmost cameras of R.
  void stage_left_counts(const Stage& s) {
    const CountChoices entries = nonempty_buckets(s.L, true, 1);
    for_each_count_vector(entries, [&](const std::vector<int>& chosen) {
      Stage t = s;
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const int cnt = chosen[e];
        if (cnt == 0) continue;
        std::vector<int> mem = members(t.L, true, entries[e].first);
        mem.resize(cnt);
        for (int k = 0; k < cnt; ++k) t.fixed.emplace_back(mem[k], t.R[k]);
        erase_all(t.L, mem);
        t.R.erase(t.R.begin(), t.R.begin() + cnt);
      }
      stage_right_counts(t);
    });
  }

  // Stage 2: mirror image, pairing rightmost in-bucket cameras with the
  // rightmost cameras of L.
  void stage_right_counts(const Stage& s) {
    const CountChoices entries = nonempty_buckets(s.R, false, 1);
    for_each_count_vector(entries, [&](const std::vector<int>& chosen) {
      Stage t = s;
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const int cnt = chosen[e];
        if (cnt == 0) continue;
        std::vector<int> mem = members(t.R, false, entries[e].first);
        mem.erase(mem.begin(), mem.end() - cnt);
        std::vector<int> partners(t.L.end() - cnt, t.L.end());
        for (int k = 0; k < cnt; ++k) t.fixed.emplace_back(partners[k], mem[k]);
        erase_all(t.R, mem);
        t.L.erase(t.L.end() - cnt, t.L.end());
      }
      stage_cross_counts(t);
    });
  }

  // Stage 3: counts per (left bucket, right bucket) cell, sliver buckets
  // included, bounded by what each bucket still holds.
  void stage_cross_counts(const Stage& s) {
    const CountChoices rows = nonempty_buckets(s.L, true, 0);
    const CountChoices cols = nonempty_buckets(s.R, false, 0);
    std::vector<int> row_rem, col_rem;
    for (const auto& r : rows) row_rem.push_back(r.second);
    for (const auto& c : cols) col_rem.push_back(c.second);
    std::vector<int> cell(rows.size() * cols.size(), 0);
    rec_cross(s, rows, cols, row_rem, col_rem, cell, 0);
  }

  void rec_cross(const Stage& s, const CountChoices& rows,
                 const CountChoices& cols, std::vector<int>& row_rem,
                 std::vector<int>& col_rem, std::vector<int>& cell,
                 std::size_t pos) {
    if (stop_) return;
    if (pos == cell.size()) {
      apply_cross(s, rows, cols, cell);
      return;
    }
    const std::size_t ri = pos / cols.size();
    const std::size_t ci = pos % cols.size();
    const int cap = std::min(row_rem[ri], col_rem[ci]);
    for (int v = 0; v <= cap && !stop_; ++v) {
      cell[pos] = v;
      row_rem[ri] -= v;
      col_rem[ci] -= v;
      rec_cross(s, rows, cols, row_rem, col_rem, cell, pos + 1);
      row_rem[ri] += v;
      col_rem[ci] += v;
    }
  }

  void apply_cross(const Stage& s, const CountChoices& rows,
                   const CountChoices& cols, const std::vector<int>& cell) {
    Stage t = s;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const int cnt = cell[ri * cols.size() + ci];
        if (cnt == 0) continue;
        std::vector<int> lm = members(t.L, true, rows[ri].first);
        std::vector<int> rm = members(t.R, false, cols[ci].first);
        lm.resize(cnt);
        rm.resize(cnt);
        for (int k = 0; k < cnt; ++k) t.fixed.emplace_back(lm[k], rm[k]);
        erase_all(t.L, lm);
        erase_all(t.R, rm);
      }
    }
    stage_tail(t);
  }

  // Stage 4: the split point runs over 0..|L|; pairing the leading block
  // leftmost-to-leftmost and the rest order-preservingly produces the same
  // pairing for every split, so the candidates here differ only in count.
  void stage_tail(const Stage& s) {
    CameraPairing pairing;
    pairing.pairs.reserve(s.fixed.size() + s.L.size());
    for (const auto& [l, r] : s.fixed) pairing.pairs.push_back({l, r});
    for (std::size_t k = 0; k < s.L.size(); ++k) {
      pairing.pairs.push_back({s.L[k], s.R[k]});
    }
    pairing.canonicalize();
    for (std::size_t split = 0; split <= s.L.size() && !stop_; ++split) {
      ++emitted_;
      if (!emit_(pairing)) stop_ = true;
    }
  }

  const Instance& inst_;
  const AngleBuckets& buckets_;
  const std::function<bool(const CameraPairing&)>& emit_;
  std::vector<int> left_bucket_of_, right_bucket_of_;
  long long emitted_ = 0;
  bool stop_ = false;
};

Instance mirror_instance(const Instance& in) {
  const double M = in.midpoint();
  const int cams = in.camera_count();
  Instance out;
  out.cameras.resize(cams);
  for (int i = 0; i < cams; ++i) {
    out.cameras[i] = 2.0 * M - in.cameras[cams - 1 - i];
  }
  out.targets.reserve(in.targets.size());
  for (const Point& t : in.targets) out.targets.push_back({2.0 * M - t.x, t.y});
  return out;
}

Assignment unmirror_assignment(const Assignment& mirrored,
                               const Instance& original) {
  const int cams = original.camera_count();
  std::vector<std::pair<CameraPair, int>> items;
  items.reserve(mirrored.pairing.pairs.size());
  for (int s = 0; s < mirrored.pairing.size(); ++s) {
    const CameraPair& p = mirrored.pairing.pairs[s];
    items.push_back(
        {{cams - 1 - p.right, cams - 1 - p.left}, mirrored.target_of_pair[s]});
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.first.left < b.first.left;
  });
  Assignment out;
  out.objective = mirrored.objective;
  for (const auto& [pair, target] : items) {
    out.pairing.pairs.push_back(pair);
    out.target_of_pair.push_back(target);
  }
  out.value = evaluate(out, original);
  return out;
}

}  // namespace

AngleBuckets build_angle_buckets(const Instance& inst, double eps_internal) {
  const double M = inst.midpoint();
  const double a = M - inst.cameras.front();
  const int n = inst.n();
  const double sliver = eps_internal * a / (100.0 * n * n);

  AngleBuckets out;
  out.M = M;
  out.eps_internal = eps_internal;

  out.left.push_back({M - sliver, M, Side::LeftOfM});
  const ConformingPartition lp =
      conforming_partition(M, sliver, a, eps_internal, Side::LeftOfM);
  for (auto it = lp.buckets.rbegin(); it != lp.buckets.rend(); ++it) {
    out.left.push_back(*it);  // store nearest-M first
  }

  out.right.push_back({M, M + sliver, Side::RightOfM});
  const ConformingPartition rp = conforming_partition(
      M, sliver, a / (eps_internal * eps_internal), eps_internal,
      Side::RightOfM);
  for (const Bucket& b : rp.buckets) out.right.push_back(b);
  return out;
}

long long enumerate_candidates(
    const Instance& inst, double eps_internal,
    const std::function<bool(const CameraPairing&)>& emit) {
  const AngleBuckets buckets = build_angle_buckets(inst, eps_internal);
  CandidateEnumerator e(inst, buckets, emit);
  return e.run();
}

SolveReport solve_max_sum_angles(const Instance& inst, double epsilon,
                                 EnumerationLimits limits) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw InvalidRange("solve_max_sum_angles: epsilon must be in (0, 1)");
  }
  const Validation verdict = validate_for_angles(inst);
  if (!verdict.ok) {
    std::string msg = "instance not valid for the angle objective";
    for (const std::string& e : verdict.errors) msg += "; " + e;
    throw ValidationError(msg);
  }

  const auto start = std::chrono::steady_clock::now();
  const double M = inst.midpoint();
  const bool mirrored =
      (M - inst.cameras.front()) > (inst.cameras.back() - M);
  const Instance work = mirrored ? mirror_instance(inst) : inst;
  const double eps_internal = epsilon / 4.0;
  const int n = inst.n();

  SolveCounters counters;
  bool budget_hit = false;
  std::set<std::vector<int>> seen;
  double best = -std::numeric_limits<double>::infinity();
  CameraPairing best_pairing = CameraPairing::make_dummy();

  enumerate_candidates(work, eps_internal, [&](const CameraPairing& cand) {
    ++counters.candidates;
    if (counters.candidates > limits.max_candidates) {
      budget_hit = true;
      return false;
    }
    std::vector<int> key(n, -1);
    for (const CameraPair& p : cand.pairs) key[p.left] = p.right;
    if (!seen.insert(std::move(key)).second) return true;
    ++counters.evaluated;
    const double value = angle_sum_value(cand, work);
    if (value > best || (value == best && pairing_less(cand, best_pairing))) {
      best = value;
      best_pairing = cand;
    }
    return true;
  });

  Assignment assignment = assign_angles(best_pairing, work);
  if (mirrored) assignment = unmirror_assignment(assignment, inst);

  SolveReport report;
  report.algorithm = "qptas";
  report.objective = Objective::SumAngles;
  report.epsilon = epsilon;
  report.assignment = assignment;
  report.value = assignment.value;
  report.certified = !budget_hit;
  report.counters = counters;
  report.counters.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

}  // namespace foa
