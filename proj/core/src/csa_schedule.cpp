// SPDX-License-Identifier: Apache-2.0
#include "tauplus/csa_schedule.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "tauplus/reverse.hpp"

namespace tauplus {

double LevelPlan::fa_equivalent() const {
  int half = 0;
  for (std::size_t c = 0; c < fa.size(); ++c) half += 2 * fa[c] + ha[c];
  return half / 2.0;
}

int ReductionPlan::total_spills() const {
  int n = 0;
  for (const auto& l : levels) n += l.spills;
  return n;
}

int ReductionPlan::max_depth(std::size_t level) const {
  const auto& d = level == 0 ? initial_profile : levels.at(level - 1).depth_after;
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int column_after(int depth, int fa, int ha, int carries_in) { return depth - 2 * fa - ha + carries_in; }

std::vector<int> apply_level(const std::vector<int>& depth, const std::vector<int>& fa,
                             const std::vector<int>& ha, unsigned fold_column) {
  const std::size_t w = depth.size();
  if (fa.size() != w || ha.size() != w || fold_column >= w)
    throw std::invalid_argument("level shape does not match the profile");
  std::vector<int> out(w);
  for (std::size_t c = 0; c < w; ++c) {
    if (fa[c] < 0 || ha[c] < 0 || 3 * fa[c] + 2 * ha[c] > depth[c])
      throw std::invalid_argument("column " + std::to_string(c) + " has too few bits for its adders");
    out[c] = column_after(depth[c], fa[c], ha[c], c ? fa[c - 1] + ha[c - 1] : 0);
  }
  const int spills = fa[w - 1] + ha[w - 1];
  out[0] += spills;
  out[fold_column] += spills;
  return out;
}

namespace {

// Adder allocations are costed in half-FA units: FA = 2, HA = 1.
struct Allocation {
  std::vector<int> fa, ha;
  int cost = 0;
};

struct Ring {
  int width;
  int fold;
};

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

// Single level, row-wise: every column ends at or below its target. Among feasible
// allocations the one leaving the fewest bits wins, then the cheapest.
std::optional<Allocation> allocate_level(const std::vector<int>& d, const std::vector<int>& target,
                                         const Ring& ring) {
  struct Node {
    int volume = -1, cost = 0, prev = 0, f = 0, h = 0;
  };
  const int w = ring.width;
  const int top = w - 1;
  const int kmax = max_of(d) / 2 + 2;
  std::optional<Allocation> best;
  std::pair<int, int> best_key;

  for (int s = 0; s <= d[top] / 2; ++s) {
    std::vector<std::vector<Node>> dp(w + 1, std::vector<Node>(kmax + 1));
    dp[0][0].volume = 0;
    for (int c = 0; c < w; ++c) {
      const int extra = (c == 0 ? s : 0) + (c == ring.fold ? s : 0);
      for (int k = 0; k <= kmax; ++k) {
        const Node& cur = dp[c][k];
        if (cur.volume < 0) continue;
        for (int f = 0; 3 * f <= d[c]; ++f)
          for (int h = 0; h <= 1 && 3 * f + 2 * h <= d[c]; ++h) {
            if (c == top && f + h != s) continue;
            const int out = column_after(d[c], f, h, k) + extra;
            if (out > target[c]) continue;
            Node& nx = dp[c + 1][f + h];
            const int vol = cur.volume + out, cost = cur.cost + 2 * f + h;
            if (nx.volume < 0 || std::pair(vol, cost) < std::pair(nx.volume, nx.cost)) nx = {vol, cost, k, f, h};
          }
      }
    }
    int bk = -1;
    for (int k = 0; k <= kmax; ++k) {
      const Node& n = dp[w][k];
      if (n.volume >= 0 && (bk < 0 || std::pair(n.volume, n.cost) < std::pair(dp[w][bk].volume, dp[w][bk].cost)))
        bk = k;
    }
    if (bk < 0) continue;
    const std::pair key(dp[w][bk].volume, dp[w][bk].cost);
    if (best && !(key < best_key)) continue;
    Allocation a{std::vector<int>(w), std::vector<int>(w), key.second};
    for (int c = w, k = bk; c >= 1; --c) {
      const Node& n = dp[c][k];
      a.fa[c - 1] = n.f;
      a.ha[c - 1] = n.h;
      k = n.prev;
    }
    best = std::move(a);
    best_key = key;
  }
  return best;
}

// The last levels, planned jointly column by column. State between columns is the
// carry count each level passes upward; spills per level are fixed up front.
std::optional<std::vector<Allocation>> allocate_tail(const std::vector<int>& d, const std::vector<int>& bounds,
                                                     const Ring& ring) {
  const int levels = static_cast<int>(bounds.size());
  const int w = ring.width;
  const int top = w - 1;
  constexpr int kCarryBits = 4, kChoiceBits = 5;

  std::vector<int> spill_max(levels);
  for (int l = 0; l < levels; ++l) spill_max[l] = (l == 0 ? max_of(d) : bounds[l - 1]) / 2;

  struct Node {
    int cost;
    std::uint32_t prev;
    std::uint64_t choice;
  };
  std::optional<std::vector<Allocation>> best;
  int best_cost = 0;

  std::vector<int> spills(levels, 0);
  std::function<void(int)> each_spill_vector = [&](int l) {
    if (l < levels) {
      for (spills[l] = 0; spills[l] <= spill_max[l]; ++spills[l]) each_spill_vector(l + 1);
      return;
    }
    std::vector<std::unordered_map<std::uint32_t, Node>> layer(w + 1);
    layer[0][0] = {0, 0, 0};
    for (int c = 0; c < w; ++c) {
      const bool folds = c == 0 || c == ring.fold;
      for (const auto& [state, node] : layer[c]) {
        std::function<void(int, int, std::uint32_t, std::uint64_t, int)> walk =
            [&](int lv, int depth, std::uint32_t out_state, std::uint64_t choice, int cost) {
              if (lv == levels) {
                auto [it, fresh] = layer[c + 1].try_emplace(out_state, Node{cost, state, choice});
                if (!fresh && cost < it->second.cost) it->second = {cost, state, choice};
                return;
              }
              const int carry_in = static_cast<int>((state >> (kCarryBits * lv)) & 0xf);
              for (int f = 0; 3 * f <= depth; ++f)
                for (int h = 0; h <= 1 && 3 * f + 2 * h <= depth; ++h) {
                  if (c == top && f + h != spills[lv]) continue;
                  const int out = column_after(depth, f, h, carry_in) + (folds ? spills[lv] : 0);
                  if (out > bounds[lv]) continue;
                  walk(lv + 1, out, out_state | static_cast<std::uint32_t>(f + h) << (kCarryBits * lv),
                       choice | static_cast<std::uint64_t>(f << 1 | h) << (kChoiceBits * lv), cost + 2 * f + h);
                }
            };
        walk(0, d[c], 0, 0, node.cost);
      }
      if (layer[c + 1].empty()) return;
    }
    const std::pair<const std::uint32_t, Node>* end = nullptr;
    for (const auto& entry : layer[w])
      if (!end || entry.second.cost < end->second.cost) end = &entry;
    if (best && end->second.cost >= best_cost) return;

    std::vector<Allocation> alloc(levels, Allocation{std::vector<int>(w), std::vector<int>(w), 0});
    std::uint32_t state = end->first;
    for (int c = w; c >= 1; --c) {
      const Node& n = layer[c].at(state);
      for (int lv = 0; lv < levels; ++lv) {
        const int bitsv = static_cast<int>((n.choice >> (kChoiceBits * lv)) & 0x1f);
        alloc[lv].fa[c - 1] = bitsv >> 1;
        alloc[lv].ha[c - 1] = bitsv & 1;
        alloc[lv].cost += 2 * (bitsv >> 1) + (bitsv & 1);
      }
      state = n.prev;
    }
    best = std::move(alloc);
    best_cost = end->second.cost;
  };
  each_spill_vector(0);
  return best;
}

// Strictly decreasing sequences of the given length, all below `below`, ending at 2.
std::vector<std::vector<int>> tail_bounds(int below, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int hi) {
    const int remaining = length - static_cast<int>(cur.size());
    if (remaining == 1) {
      if (hi > 2) {
        cur.push_back(2);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int b = hi - 1; b >= 2 + remaining - 1; --b) {
      cur.push_back(b);
      rec(b);
      cur.pop_back();
    }
  };
  rec(below);
  return out;
}

constexpr int kTailLevels = 3;

}  // namespace

ReductionPlan plan_reduction(const BitMatrix& matrix) {
  if (matrix.q < kStructuralMinQ)
    throw std::invalid_argument("reduction planning requires q >= 9, got " + std::to_string(matrix.q));
  const Ring ring{static_cast<int>(matrix.width), static_cast<int>(2 * matrix.q - 2)};
  const std::vector<int> initial = column_profile(matrix);

  std::optional<std::vector<Allocation>> best;
  int best_cost = 0;
  std::vector<int> furthest = initial;

  auto consider = [&](std::vector<Allocation> seq) {
    int cost = 0;
    std::vector<int> d = initial;
    for (const auto& a : seq) {
      const std::vector<int> next = apply_level(d, a.fa, a.ha, ring.fold);
      if (max_of(d) > 2 && max_of(next) >= max_of(d)) return;
      d = next;
      cost += a.cost;
    }
    if (max_of(d) > 2) return;
    if (!best || cost < best_cost) {
      best = std::move(seq);
      best_cost = cost;
    }
  };

  std::vector<Allocation> head;
  std::function<void(const std::vector<int>&)> search = [&](const std::vector<int>& d) {
    const int m = max_of(d);
    if (m <= 2) {
      consider(head);
      return;
    }
    const int left = kMaxReductionLevels - static_cast<int>(head.size());
    if (left <= kTailLevels) {
      for (int len = 1; len <= left; ++len)
        for (const auto& bounds : tail_bounds(m, len))
          if (auto tail = allocate_tail(d, bounds, ring)) {
            std::vector<Allocation> seq = head;
            seq.insert(seq.end(), tail->begin(), tail->end());
            consider(std::move(seq));
          }
      return;
    }
    for (int t = std::max(2, 2 * m / 3 - 1); t < m; ++t) {
      auto a = allocate_level(d, std::vector<int>(d.size(), t), ring);
      if (!a) continue;
      const std::vector<int> next = apply_level(d, a->fa, a->ha, ring.fold);
      if (max_of(next) < max_of(furthest)) furthest = next;
      head.push_back(std::move(*a));
      search(next);
      head.pop_back();
    }
  };
  search(initial);

  if (!best) {
    std::ostringstream msg;
    msg << "no reduction to depth 2 within " << kMaxReductionLevels << " levels; best profile reached (column 0 first):";
    for (int v : furthest) msg << ' ' << v;
    throw planning_error(msg.str(), furthest);
  }

  ReductionPlan plan;
  plan.q = matrix.q;
  plan.width = matrix.width;
  plan.fold_column = ring.fold;
  plan.pair_modulus = matrix.pair_modulus;
  plan.initial_profile = initial;
  std::vector<int> d = initial;
  for (auto& a : *best) {
    LevelPlan lp;
    lp.depth_before = d;
    lp.depth_after = apply_level(d, a.fa, a.ha, ring.fold);
    lp.spills = a.fa.back() + a.ha.back();
    lp.fa = std::move(a.fa);
    lp.ha = std::move(a.ha);
    d = lp.depth_after;
    plan.levels.push_back(std::move(lp));
  }
  plan.final_profile = d;
  plan.folded_constant =
      mod(matrix.folded_constant - Int(plan.total_spills()) * pow2(plan.fold_column), plan.pair_modulus);
  return plan;
}

RowPair simulate_plan(const ReductionPlan& plan, const BitMatrix& matrix, const ResidueVector& rv) {
  if (plan.q != matrix.q || plan.width != matrix.width || plan.initial_profile != column_profile(matrix))
    throw std::invalid_argument("plan was not built from this matrix");
  if (rv.q != matrix.q) throw std::invalid_argument("residue vector q does not match the matrix");
  const std::size_t w = plan.width;

  std::vector<std::vector<bool>> col(w);
  for (const auto& r : matrix.rows)
    for (std::size_t c = 0; c < w; ++c)
      if (r[c].occupied()) col[c].push_back(cell_value(r[c], rv));

  for (const LevelPlan& lv : plan.levels) {
    std::vector<std::vector<bool>> next(w);
    std::vector<std::vector<bool>> carries(w);  // produced by column c
    for (std::size_t c = 0; c < w; ++c) {
      const auto& in = col[c];
      if (in.size() != static_cast<std::size_t>(lv.depth_before[c]))
        throw std::logic_error("column depth diverged from the plan");
      std::size_t i = 0;
      for (int k = 0; k < lv.fa[c]; ++k, i += 3) {
        const bool a = in[i], b = in[i + 1], d = in[i + 2];
        next[c].push_back(a ^ b ^ d);
        carries[c].push_back((a && b) || (a && d) || (b && d));
      }
      for (int k = 0; k < lv.ha[c]; ++k, i += 2) {
        next[c].push_back(in[i] != in[i + 1]);
        carries[c].push_back(in[i] && in[i + 1]);
      }
      for (; i < in.size(); ++i) next[c].push_back(in[i]);
    }
    for (std::size_t c = 1; c < w; ++c) next[c].insert(next[c].end(), carries[c - 1].begin(), carries[c - 1].end());
    for (bool spill : carries[w - 1]) {
      next[0].push_back(spill);
      next[plan.fold_column].push_back(!spill);
    }
    col = std::move(next);
  }

  RowPair rows{0, 0};
  for (std::size_t c = 0; c < w; ++c) {
    if (col[c].size() > 2) throw std::logic_error("plan leaves more than two bits in a column");
    if (col[c].size() > 0 && col[c][0]) mpz_setbit(rows.sum_row.get_mpz_t(), c);
    if (col[c].size() > 1 && col[c][1]) mpz_setbit(rows.carry_row.get_mpz_t(), c);
  }
  return rows;
}

Int plan_value(const ReductionPlan& plan, const RowPair& rows) {
  return mod(rows.sum_row + rows.carry_row + plan.folded_constant, plan.pair_modulus);
}

std::vector<double> reference_level_formulas(unsigned q) {
  const double x = q;
  return {5 * x + 8, 3 * x + 12, 3 * x, 2 * x, x + 3, x / 2 + 4, 5};
}

FaReport fa_count_report(const ReductionPlan& plan) {
  FaReport r;
  for (const auto& l : plan.levels) {
    r.level_totals.push_back(l.fa_equivalent());
    r.grand_total += l.fa_equivalent();
  }
  r.reference_levels = reference_level_formulas(plan.q);
  for (double v : r.reference_levels) r.reference_level_sum += v;
  r.reference_grand_total = 13.5 * plan.q + 32;
  return r;
}

std::string plan_csv(const ReductionPlan& plan) {
  std::ostringstream out;
  out << "level,column,depth_before,fa,ha,depth_after,spills\n";
  for (std::size_t l = 0; l < plan.levels.size(); ++l) {
    const LevelPlan& lv = plan.levels[l];
    for (unsigned c = 0; c < plan.width; ++c)
      out << l + 1 << ',' << c << ',' << lv.depth_before[c] << ',' << lv.fa[c] << ',' << lv.ha[c] << ','
          << lv.depth_after[c] << ',' << (c + 1 == plan.width ? lv.spills : 0) << '\n';
  }
  return out.str();
}

}  // namespace tauplus
