// Roman domination via the subset formulation: pick S (label 2), pay 1 for
// every vertex outside S with no S-neighbor, minimize 2|S| + payments.
//
// Branch on the unresolved vertex v with the fewest free options in N[v]:
// put one option into S (earlier options excluded in later siblings), or
// pay for v with all of N[v] excluded from S.

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "hopdom/domination.hpp"

namespace hopdom {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class RomanSearch {
 public:
  explicit RomanSearch(const Graph& g) : n_(g.order()), closed_(n_, Bits(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v].set(v);
      for (Vertex w : g.neighbors(v)) closed_[v].set(w);
    }
  }

  // Returns (weight, S, paid) of an optimum with weight < bound, if any.
  bool run(int bound) {
    best_ = bound;
    found_ = false;
    Bits in_s(n_), excluded(n_), covered(n_), paid(n_);
    dfs(in_s, excluded, covered, paid, 0);
    return found_;
  }

  int best() const { return best_; }

  RomanLabeling labeling() const {
    std::vector<std::uint8_t> labels(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      if (best_s_[v]) labels[v] = 2;
      else if (best_paid_[v]) labels[v] = 1;
    }
    return RomanLabeling(std::move(labels));
  }

 private:
  int lower_bound(const Bits& active, const Bits& free) const {
    const int u = static_cast<int>(active.count());
    if (u == 0) return 0;
    // Disjoint option sets: each such vertex costs at least 1 on its own.
    Bits used(n_);
    int packing = 0;
    for (auto v = active.find_first(); v != Bits::npos; v = active.find_next(v)) {
      Bits opts = closed_[v] & free;
      if (opts.intersects(used)) continue;
      used |= opts;
      ++packing;
    }
    int max_gain = 0;
    for (auto c = free.find_first(); c != Bits::npos; c = free.find_next(c))
      max_gain = std::max(max_gain, static_cast<int>((closed_[c] & active).count()));
    int counting = u;
    if (max_gain > 2) {
      const int full = u / max_gain;
      const int rest = u % max_gain;
      counting = std::min({u, 2 * full + rest, 2 * (full + (rest > 0 ? 1 : 0))});
    }
    return std::max(packing, counting);
  }

  void dfs(Bits& in_s, Bits& excluded, Bits& covered, Bits& paid, int cost) {
    if (cost >= best_) return;
    Bits free = ~(in_s | excluded);
    Bits active = ~(covered | paid);

    // Vertices without any free option must be paid for.
    int forced = 0;
    Bits forced_bits(n_);
    for (auto v = active.find_first(); v != Bits::npos; v = active.find_next(v))
      if (!closed_[v].intersects(free)) {
        forced_bits.set(v);
        ++forced;
      }
    if (forced > 0) {
      Bits next_paid = paid | forced_bits;
      dfs(in_s, excluded, covered, next_paid, cost + forced);
      return;
    }
    if (active.none()) {
      best_ = cost;
      best_s_ = in_s;
      best_paid_ = paid;
      found_ = true;
      return;
    }
    if (cost + lower_bound(active, free) >= best_) return;

    Vertex pick = -1;
    std::size_t pick_opts = 0;
    for (auto v = active.find_first(); v != Bits::npos; v = active.find_next(v)) {
      std::size_t k = (closed_[v] & free).count();
      if (pick == -1 || k < pick_opts) {
        pick = static_cast<Vertex>(v);
        pick_opts = k;
      }
    }
    Bits opts = closed_[pick] & free;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (auto c = opts.find_first(); c != Bits::npos; c = opts.find_next(c))
      order.emplace_back((closed_[c] & active).count(), static_cast<Vertex>(c));
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    Bits local_excluded = excluded;
    for (const auto& [gain, c] : order) {
      Bits next_s = in_s;
      next_s.set(c);
      Bits next_cov = covered | closed_[c];
      dfs(next_s, local_excluded, next_cov, paid, cost + 2);
      local_excluded.set(c);
    }
    Bits next_paid = paid;
    next_paid.set(pick);
    dfs(in_s, local_excluded, covered, next_paid, cost + 1);
  }

  int n_;
  std::vector<Bits> closed_;
  int best_ = 0;
  bool found_ = false;
  Bits best_s_;
  Bits best_paid_;
};

}  // namespace

SolveOutcome solve_roman_subsets(const Graph& g, std::optional<int> budget) {
  const int n = g.order();
  // All-ones labeling is always feasible, so the optimum is at most n.
  const int cap = budget ? std::min(*budget, n) : n;
  if (cap < 0) return BudgetExceeded{*budget};
  RomanSearch search(g);
  if (search.run(cap + 1)) return Optimal{Solution::from_labeling(search.labeling())};
  return BudgetExceeded{*budget};
}

}  // namespace hopdom
