// Exact minimum set cover by iterative deepening.
//
// Root reductions drop dominated candidates (cover contained in another's)
// and dominated elements (coverer set contains another element's). Each
// node branches on the uncovered element with the fewest available coverers;
// siblings exclude earlier choices. Nodes are cut by a disjoint-coverer
// packing bound and a max-gain counting bound.

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <numeric>

#include "hopdom/domination.hpp"

namespace hopdom {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class CoverSearch {
 public:
  CoverSearch(std::vector<Bits> cover, std::vector<int> candidate_ids, int elements)
      : cover_(std::move(cover)), ids_(std::move(candidate_ids)), num_elements_(elements) {
    const int c = static_cast<int>(cover_.size());
    coverers_.assign(num_elements_, Bits(c));
    for (int k = 0; k < c; ++k)
      for (auto e = cover_[k].find_first(); e != Bits::npos; e = cover_[k].find_next(e))
        coverers_[e].set(k);
  }

  int root_lower_bound() const {
    return packing_bound(Bits(num_elements_), Bits(cover_.size()), num_elements_ + 1);
  }

  // Returns chosen original candidate ids if a cover of size <= depth exists.
  std::optional<std::vector<int>> search(int depth) {
    chosen_.clear();
    Bits covered(num_elements_);
    Bits excluded(cover_.size());
    if (!dfs(covered, excluded, depth)) return std::nullopt;
    std::vector<int> out;
    for (int k : chosen_) out.push_back(ids_[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Counts uncovered elements whose available coverer sets are pairwise
  // disjoint; each needs its own candidate. Stops early above `limit`.
  int packing_bound(const Bits& covered, const Bits& excluded, int limit) const {
    Bits used(cover_.size());
    int count = 0;
    for (int e : element_order_or_identity()) {
      if (covered[e]) continue;
      Bits avail = coverers_[e] - excluded;
      if (avail.intersects(used)) continue;
      used |= avail;
      if (++count > limit) break;
    }
    return count;
  }

  const std::vector<int>& element_order_or_identity() const {
    if (element_order_.empty()) {
      element_order_.resize(num_elements_);
      std::iota(element_order_.begin(), element_order_.end(), 0);
      std::stable_sort(element_order_.begin(), element_order_.end(), [&](int a, int b) {
        return coverers_[a].count() < coverers_[b].count();
      });
    }
    return element_order_;
  }

  bool dfs(const Bits& covered, Bits excluded, int depth) {
    int pick = -1;
    std::size_t pick_avail = 0;
    std::size_t uncovered = 0;
    for (int e = 0; e < num_elements_; ++e) {
      if (covered[e]) continue;
      ++uncovered;
      std::size_t avail = (coverers_[e] - excluded).count();
      if (avail == 0) return false;
      if (pick == -1 || avail < pick_avail) {
        pick = e;
        pick_avail = avail;
      }
    }
    if (pick == -1) return true;
    if (depth == 0) return false;

    Bits uncovered_bits = ~covered;
    std::vector<std::pair<std::size_t, int>> options;  // (gain, candidate)
    std::size_t max_gain = 0;
    for (std::size_t k = 0; k < cover_.size(); ++k) {
      if (excluded[k]) continue;
      std::size_t gain = (cover_[k] & uncovered_bits).count();
      max_gain = std::max(max_gain, gain);
      if (coverers_[pick][k]) options.emplace_back(gain, static_cast<int>(k));
    }
    if (uncovered > max_gain * static_cast<std::size_t>(depth)) return false;
    if (packing_bound(covered, excluded, depth) > depth) return false;

    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, k] : options) {
      chosen_.push_back(k);
      if (dfs(covered | cover_[k], excluded, depth - 1)) return true;
      chosen_.pop_back();
      excluded.set(k);
    }
    return false;
  }

  std::vector<Bits> cover_;
  std::vector<int> ids_;
  int num_elements_;
  std::vector<Bits> coverers_;
  mutable std::vector<int> element_order_;
  std::vector<int> chosen_;
};

}  // namespace

SolveOutcome min_set_cover(int universe_size, const std::vector<std::vector<int>>& candidates,
                           std::optional<int> budget) {
  if (universe_size < 0) throw std::invalid_argument("min_set_cover: negative universe size");
  const int c = static_cast<int>(candidates.size());
  std::vector<Bits> cover(c, Bits(universe_size));
  for (int k = 0; k < c; ++k)
    for (int e : candidates[k]) {
      if (e < 0 || e >= universe_size) throw std::invalid_argument("min_set_cover: element out of range");
      cover[k].set(e);
    }

  Bits any(universe_size);
  for (const auto& s : cover) any |= s;
  if (!any.all()) return Infeasible{};
  if (universe_size == 0) {
    if (budget && *budget < 0) return BudgetExceeded{*budget};
    return Optimal{Solution::from_set({})};
  }

  // Root reductions, repeated to a fixed point.
  std::vector<int> cand(c);
  std::iota(cand.begin(), cand.end(), 0);
  std::vector<int> elems(universe_size);
  std::iota(elems.begin(), elems.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> keep;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool dominated = false;
      const Bits& ca = cover[cand[a]];
      for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
        if (a == b) continue;
        const Bits& cb = cover[cand[b]];
        if (ca.is_subset_of(cb) && (ca != cb || b < a)) dominated = true;
      }
      if (dominated || ca.none()) changed = true;
      else keep.push_back(cand[a]);
    }
    cand.swap(keep);

    std::vector<Bits> who(elems.size(), Bits(cand.size()));
    for (std::size_t k = 0; k < cand.size(); ++k)
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (cover[cand[k]][elems[i]]) who[i].set(k);
    std::vector<int> kept_elems;
    for (std::size_t f = 0; f < elems.size(); ++f) {
      bool implied = false;
      for (std::size_t e = 0; e < elems.size() && !implied; ++e) {
        if (e == f) continue;
        if (who[e].is_subset_of(who[f]) && (who[e] != who[f] || e < f)) implied = true;
      }
      if (implied) changed = true;
      else kept_elems.push_back(elems[f]);
    }
    elems.swap(kept_elems);
  }

  const int m = static_cast<int>(elems.size());
  std::vector<Bits> reduced(cand.size(), Bits(m));
  for (std::size_t k = 0; k < cand.size(); ++k)
    for (int i = 0; i < m; ++i)
      if (cover[cand[k]][elems[i]]) reduced[k].set(i);

  CoverSearch search(std::move(reduced), cand, m);
  const int limit = budget ? std::min(*budget, c) : c;
  for (int depth = std::max(1, search.root_lower_bound()); depth <= limit; ++depth) {
    if (auto found = search.search(depth)) return Optimal{Solution::from_set(std::move(*found))};
  }
  return BudgetExceeded{budget.value_or(limit)};
}

}  // namespace hopdom
