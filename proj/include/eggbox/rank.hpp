#ifndef EGGBOX_RANK_HPP_
#define EGGBOX_RANK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/green.hpp"
#include "eggbox/identities.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

/// How the lower bound of a certificate was established.
///  - exhaustive: search proved no smaller generating set exists;
///  - left_zero_projection: covering bound -- every ≤_J-maximal J-class M
///    forces max(#R-classes(M), #L-classes(M)) generators (for a left group
///    this is the projection onto its left-zero band);
///  - ideal_decomposition: rank(S) = relrank(S:T) + rank(T) for a
///    subsemigroup T with S∖T an ideal, certified piecewise.
enum class LowerBoundKind {
  exhaustive,
  left_zero_projection,
  ideal_decomposition,
  quotient
};

inline const char* to_string(LowerBoundKind k) {
  switch (k) {
    case LowerBoundKind::exhaustive: return "exhaustive";
    case LowerBoundKind::left_zero_projection: return "left-zero-projection";
    case LowerBoundKind::ideal_decomposition: return "ideal-decomposition";
    default: return "quotient";
  }
}

struct RankCertificate {
  std::size_t value = 0;
  IndexSet witness;  // |witness| = value and ⟨base ∪ witness⟩ = target
  std::size_t lower_bound = 0;
  LowerBoundKind lower_bound_kind = LowerBoundKind::exhaustive;
  bool budget_exhausted = false;
  std::uint64_t steps_used = 0;

  bool exact() const { return lower_bound == value; }
};

struct RankOptions {
  /// Budget in subset-extension steps; closure products during an extension
  /// are counted towards it so that the budget also bounds runtime.
  std::uint64_t budget = 100'000'000;
  /// Restrict generators to idempotents (idrank / relidrank).
  bool idempotents_only = false;
  /// An externally certified lower bound folded into the search floor.
  /// Typical source: a surmorphism carries generating sets onto generating
  /// sets, so the (relative) rank of a homomorphic image over the image of
  /// the base bounds the (relative) rank upstairs.
  std::size_t extra_lower_bound = 0;
};

template <IndexedSemigroup Sg>
bool is_subsemigroup(const Sg& s, const IndexSet& t) {
  for (auto i : t)
    for (auto j : t)
      if (!set_contains(t, s.product(i, j))) return false;
  return true;
}

/// S∖T is a (two-sided) ideal of S.
template <IndexedSemigroup Sg>
bool complement_is_ideal(const Sg& s, const IndexSet& t) {
  DynBitset in_t(s.size());
  for (auto i : t) in_t.set(i);
  for (elem_index x = 0; x < s.size(); ++x)
    for (elem_index d = 0; d < s.size(); ++d) {
      if (in_t.test(d)) continue;
      if (in_t.test(s.product(x, d)) || in_t.test(s.product(d, x)))
        return false;
    }
  return true;
}

/// Σ over ≤_J-maximal J-classes M of max(#R-classes(M), #L-classes(M)).
/// Any generating set meets every R-class and every L-class of each maximal
/// M: a product equal to x ∈ M has all factors ≥_J x, hence inside M, and by
/// stability x is R-related to the first factor and L-related to the last.
template <IndexedSemigroup Sg>
std::size_t maximal_class_lower_bound(const Sg& s, const GreenStructure& g) {
  (void)s;
  std::size_t bound = 0;
  for (std::size_t c = 0; c < g.j.num_classes(); ++c) {
    elem_index rep = g.j.classes[c][0];
    bool maximal = true;
    for (std::size_t d = 0; d < g.j.num_classes() && maximal; ++d)
      if (d != c && g.leqJ(rep, g.j.classes[d][0])) maximal = false;
    if (!maximal) continue;
    IndexSet rids, lids;
    for (auto x : g.j.classes[c]) {
      rids.push_back(g.r.class_of[x]);
      lids.push_back(g.l.class_of[x]);
    }
    sort_unique(rids);
    sort_unique(lids);
    bound += std::max(rids.size(), lids.size());
  }
  return bound;
}

/// Lower bound for relrank(S : T), T a subsemigroup with S∖T an ideal.
/// Each ≤_J-maximal J-class D of S∖T needs a generator inside D; when T
/// stabilizes R-classes of D under left multiplication (td ∈ D ⟹ td R d)
/// the generators inside D must meet every R-class of D, dually for L.
template <IndexedSemigroup Sg>
std::size_t relative_rank_lower_bound(const Sg& s, const GreenStructure& g,
                                      const IndexSet& t) {
  invariant(is_subsemigroup(s, t), "relative bound: T is not a subsemigroup");
  invariant(complement_is_ideal(s, t), "relative bound: S∖T is not an ideal");
  DynBitset in_t(s.size());
  for (auto i : t) in_t.set(i);

  std::size_t bound = 0;
  for (std::size_t c = 0; c < g.j.num_classes(); ++c) {
    elem_index rep = g.j.classes[c][0];
    if (in_t.test(rep)) continue;  // ideal is a union of J-classes
    bool maximal = true;
    for (std::size_t d = 0; d < g.j.num_classes() && maximal; ++d) {
      elem_index rep_d = g.j.classes[d][0];
      if (d != c && !in_t.test(rep_d) && g.leqJ(rep, rep_d)) maximal = false;
    }
    if (!maximal) continue;

    const IndexSet& cls = g.j.classes[c];
    DynBitset in_d(s.size());
    for (auto x : cls) in_d.set(x);
    bool rcond = true, lcond = true;
    for (auto tt : t)
      for (auto dd : cls) {
        elem_index td = s.product(tt, dd);
        if (in_d.test(td) && !g.r.same(td, dd)) rcond = false;
        elem_index dt = s.product(dd, tt);
        if (in_d.test(dt) && !g.l.same(dt, dd)) lcond = false;
        if (!rcond && !lcond) break;
      }
    std::size_t contribution = 1;
    if (rcond) {
      IndexSet rids;
      for (auto x : cls) rids.push_back(g.r.class_of[x]);
      sort_unique(rids);
      contribution = std::max(contribution, rids.size());
    }
    if (lcond) {
      IndexSet lids;
      for (auto x : cls) lids.push_back(g.l.class_of[x]);
      sort_unique(lids);
      contribution = std::max(contribution, lids.size());
    }
    bound += contribution;
  }
  return bound;
}

namespace detail {

/// A covering constraint harvested from a ≤_J-maximal J-class M of
/// S ∖ ⟨base⟩.  Writing T = ⟨base⟩ and U for the chosen generators, a
/// factorisation over T ∪ U of any x ∈ M keeps every factor ≥_J x, and
/// every class strictly above M lies inside T, so U must meet M.  When left
/// multiplication by T preserves R-classes inside M (td ∈ M ⟹ td R d),
/// stability pins x to the R-class of the first U-factor, so U must meet
/// every R-class of M; dually on the right for L.  With an empty base both
/// conditions hold vacuously and the constraint is the covering bound of
/// maximal_class_lower_bound.
struct CoverageClass {
  bool cover_r = false, cover_l = false;
  IndexSet rids, lids;  // distinct ambient R-/L-class ids inside the class

  std::size_t contribution(std::size_t covered_r, std::size_t covered_l,
                           std::size_t chosen) const {
    std::size_t c = chosen == 0 ? 1 : 0;
    if (cover_r) c = std::max(c, rids.size() - covered_r);
    if (cover_l) c = std::max(c, lids.size() - covered_l);
    return c;
  }
};

template <IndexedSemigroup Sg>
std::vector<CoverageClass> coverage_classes(const Sg& s,
                                            const GreenStructure& g,
                                            const IndexSet& base_closure,
                                            std::vector<int>& tracked_of) {
  DynBitset in_t(s.size());
  for (auto i : base_closure) in_t.set(i);
  tracked_of.assign(g.j.num_classes(), -1);
  std::vector<CoverageClass> out;
  for (std::size_t c = 0; c < g.j.num_classes(); ++c) {
    const IndexSet& cls = g.j.classes[c];
    bool meets_base = false;
    for (auto x : cls)
      if (in_t.test(x)) meets_base = true;
    if (meets_base) continue;
    bool tracked = true;
    for (std::size_t d = 0; d < g.j.num_classes() && tracked; ++d) {
      if (d == c || !g.leqJ(cls[0], g.j.classes[d][0])) continue;
      for (auto y : g.j.classes[d])
        if (!in_t.test(y)) {
          tracked = false;
          break;
        }
    }
    if (!tracked) continue;

    CoverageClass cov;
    DynBitset in_d(s.size());
    for (auto x : cls) in_d.set(x);
    cov.cover_r = cov.cover_l = true;
    for (auto tt : base_closure) {
      for (auto dd : cls) {
        elem_index td = s.product(tt, dd);
        if (in_d.test(td) && !g.r.same(td, dd)) cov.cover_r = false;
        elem_index dt = s.product(dd, tt);
        if (in_d.test(dt) && !g.l.same(dt, dd)) cov.cover_l = false;
        if (!cov.cover_r && !cov.cover_l) break;
      }
      if (!cov.cover_r && !cov.cover_l) break;
    }
    for (auto x : cls) {
      cov.rids.push_back(g.r.class_of[x]);
      cov.lids.push_back(g.l.class_of[x]);
    }
    sort_unique(cov.rids);
    sort_unique(cov.lids);
    tracked_of[c] = static_cast<int>(out.size());
    out.push_back(std::move(cov));
  }
  return out;
}

/// Depth-first search over candidate subsets in index order with an
/// incrementally maintained closure.  Soundness of the redundancy prune
/// (skip x already inside the closure) comes from iterative deepening: at
/// the first feasible size every solution is irredundant.  The covering
/// constraints prune branches whose chosen set can no longer meet every
/// required R-/L-class of the tracked maximal classes.
template <IndexedSemigroup Sg>
class RankSearch {
 public:
  RankSearch(const Sg& s, const GreenStructure& g, IndexSet base_closure,
             IndexSet candidates, std::uint64_t budget)
      : s_(s),
        candidates_(std::move(candidates)),
        budget_(budget),
        in_(s.size()),
        class_of_(g.j.class_of),
        rclass_of_(g.r.class_of),
        lclass_of_(g.l.class_of),
        rcover_(g.r.num_classes(), 0),
        lcover_(g.l.num_classes(), 0) {
    cov_ = coverage_classes(s, g, base_closure, tracked_of_);
    covr_seen_.assign(cov_.size(), 0);
    covl_seen_.assign(cov_.size(), 0);
    chosen_in_.assign(cov_.size(), 0);
    for (const auto& cv : cov_) needed_ += cv.contribution(0, 0, 0);
    init_needed_ = needed_;
    for (auto x : base_closure) extend(x);
    base_size_ = list_.size();
  }

  /// True iff some k-subset of the candidates, together with the base,
  /// generates everything.  On success `chosen()` holds the subset.
  bool run(unsigned k) {
    chosen_.clear();
    if (exhausted_) return false;
    if (list_.size() == s_.size()) return k == 0;
    return dfs(0, k);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t steps() const { return steps_; }
  const IndexSet& chosen() const { return chosen_; }
  /// Σ of the initial covering contributions: a sound lower bound.
  std::size_t initial_needed() const { return init_needed_; }

  /// Greedy upper-bound witness: repeatedly add the least candidate outside
  /// the closure.
  IndexSet greedy() {
    rollback(base_size_);
    chosen_.clear();
    IndexSet out;
    for (auto x : candidates_)
      if (!in_.test(x)) {
        out.push_back(x);
        extend(x);
        if (list_.size() == s_.size()) break;
      }
    invariant(list_.size() == s_.size(),
              "greedy witness failed to generate the target");
    rollback(base_size_);
    return out;
  }

 private:
  bool dfs(std::size_t start, unsigned remaining) {
    if (remaining == 0) return list_.size() == s_.size();
    if (needed_ > remaining) return false;
    for (std::size_t idx = start; idx + remaining <= candidates_.size();
         ++idx) {
      elem_index x = candidates_[idx];
      if (in_.test(x)) continue;
      // when every remaining pick must discharge a covering obligation,
      // skip candidates that discharge none
      if (needed_ == remaining && !lowers_needed(x)) continue;
      if (++steps_ > budget_) {
        exhausted_ = true;
        return false;
      }
      std::size_t mark = list_.size();
      extend(x);
      choose(x);
      if (dfs(idx + 1, remaining - 1)) return true;
      unchoose(x);
      rollback(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t cls_contribution(int t) const {
    return cov_[t].contribution(covr_seen_[t], covl_seen_[t], chosen_in_[t]);
  }

  bool lowers_needed(elem_index x) const {
    int t = tracked_of_[class_of_[x]];
    if (t < 0) return false;
    std::size_t after = cov_[t].contribution(
        covr_seen_[t] + (rcover_[rclass_of_[x]] == 0 ? 1 : 0),
        covl_seen_[t] + (lcover_[lclass_of_[x]] == 0 ? 1 : 0),
        chosen_in_[t] + 1);
    return after < cls_contribution(t);
  }

  void choose(elem_index x) {
    chosen_.push_back(x);
    int t = tracked_of_[class_of_[x]];
    if (t < 0) return;
    needed_ -= cls_contribution(t);
    if (rcover_[rclass_of_[x]]++ == 0) ++covr_seen_[t];
    if (lcover_[lclass_of_[x]]++ == 0) ++covl_seen_[t];
    ++chosen_in_[t];
    needed_ += cls_contribution(t);
  }

  void unchoose(elem_index x) {
    chosen_.pop_back();
    int t = tracked_of_[class_of_[x]];
    if (t < 0) return;
    needed_ -= cls_contribution(t);
    if (--rcover_[rclass_of_[x]] == 0) --covr_seen_[t];
    if (--lcover_[lclass_of_[x]] == 0) --covl_seen_[t];
    --chosen_in_[t];
    needed_ += cls_contribution(t);
  }

  void extend(elem_index x) {
    if (in_.test(x)) return;
    add(x);
    // the outer bound re-reads list_.size() on purpose: the loop processes
    // elements discovered while it runs
    for (std::size_t i = list_.size() - 1; i < list_.size(); ++i) {
      elem_index z = list_[i];
      for (std::size_t j = 0; j < list_.size(); ++j) {
        steps_ += 2;
        elem_index p = s_.product(z, list_[j]);
        if (!in_.test(p)) add(p);
        p = s_.product(list_[j], z);
        if (!in_.test(p)) add(p);
      }
    }
  }

  void add(elem_index x) {
    in_.set(x);
    list_.push_back(x);
  }

  void rollback(std::size_t mark) {
    while (list_.size() > mark) {
      in_.reset(list_.back());
      list_.pop_back();
    }
  }

  const Sg& s_;
  IndexSet candidates_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  DynBitset in_;
  std::vector<elem_index> list_;
  std::size_t base_size_ = 0;
  IndexSet chosen_;
  std::vector<elem_index> class_of_, rclass_of_, lclass_of_;
  std::vector<CoverageClass> cov_;
  std::vector<int> tracked_of_;
  std::vector<unsigned> rcover_, lcover_;
  std::vector<std::size_t> covr_seen_, covl_seen_, chosen_in_;
  std::size_t needed_ = 0, init_needed_ = 0;
};

template <IndexedSemigroup Sg>
RankCertificate run_rank_search(const Sg& s, const GreenStructure& g,
                                const IndexSet& base, RankOptions opts,
                                std::size_t structural_lb) {
  IndexSet base_closure = base.empty() ? IndexSet{} : closure_within(s, base);
  IndexSet candidates;
  for (elem_index x = 0; x < s.size(); ++x) {
    if (set_contains(base_closure, x)) continue;
    if (opts.idempotents_only && s.product(x, x) != x) continue;
    candidates.push_back(x);
  }
  RankSearch<Sg> search(s, g, base_closure, candidates, opts.budget);

  RankCertificate cert;
  IndexSet greedy = search.greedy();
  cert.steps_used = search.steps();
  std::size_t floor_struct = std::max(structural_lb, search.initial_needed());
  std::size_t floor_k = std::max(
      {base.empty() && s.size() > 0 ? std::size_t{1} : std::size_t{0},
       floor_struct, opts.extra_lower_bound});
  auto floor_kind = [&] {
    return opts.extra_lower_bound > floor_struct
               ? LowerBoundKind::quotient
               : LowerBoundKind::left_zero_projection;
  };
  for (std::size_t k = floor_k; k < greedy.size(); ++k) {
    if (search.run(static_cast<unsigned>(k))) {
      cert.value = k;
      cert.witness = search.chosen();
      sort_unique(cert.witness);
      cert.lower_bound = k;
      cert.lower_bound_kind = k == floor_k && floor_k > 0
                                  ? floor_kind()
                                  : LowerBoundKind::exhaustive;
      cert.steps_used = search.steps();
      return cert;
    }
    if (search.exhausted()) {
      cert.value = greedy.size();
      cert.witness = greedy;
      // levels floor_k .. k-1 were exhausted
      cert.lower_bound = std::max({floor_struct, opts.extra_lower_bound, k});
      cert.lower_bound_kind = cert.lower_bound == k && k > floor_k
                                  ? LowerBoundKind::exhaustive
                                  : floor_kind();
      cert.budget_exhausted = true;
      cert.steps_used = search.steps();
      return cert;
    }
  }
  cert.value = greedy.size();
  cert.witness = greedy;
  cert.lower_bound = cert.value;  // every smaller size was excluded
  cert.lower_bound_kind = greedy.size() > floor_k ? LowerBoundKind::exhaustive
                                                  : floor_kind();
  cert.steps_used = search.steps();
  return cert;
}

}  // namespace detail

/// rank(S): smallest generating set, by iterative-deepening exhaustive
/// search.  With opts.idempotents_only this is idrank(S) (requires S to be
/// idempotent generated).
template <IndexedSemigroup Sg>
RankCertificate rank_exact(const Sg& s, const GreenStructure& g,
                           RankOptions opts = {}) {
  require(s.size() > 0, "rank of the empty semigroup");
  if (opts.idempotents_only)
    require(closure_within(s, idempotents(s)).size() == s.size(),
            "idrank of a semigroup that is not idempotent generated");
  return detail::run_rank_search(s, g, IndexSet{}, opts,
                                 maximal_class_lower_bound(s, g));
}

template <IndexedSemigroup Sg>
RankCertificate rank_exact(const Sg& s, RankOptions opts = {}) {
  return rank_exact(s, green(s), opts);
}

/// relrank(S : base) = min |U| with ⟨base ∪ U⟩ = S (relidrank with
/// opts.idempotents_only).
template <IndexedSemigroup Sg>
RankCertificate relative_rank(const Sg& s, const GreenStructure& g,
                              const IndexSet& base, RankOptions opts = {}) {
  return detail::run_rank_search(s, g, base, opts, 0);
}

template <IndexedSemigroup Sg>
RankCertificate relative_rank(const Sg& s, const IndexSet& base,
                              RankOptions opts = {}) {
  return relative_rank(s, green(s), base, opts);
}

/// Rank of a left (or right) group via its E x G structure: the value is
/// max(degree, rank(G)) with a constructed witness, verified by closure.
template <IndexedSemigroup Sg>
RankCertificate one_sided_group_rank(const Sg& s, RankOptions opts = {}) {
  GroupBandProfile prof = left_right_group_profile(s);
  require(prof.is_left_group || prof.is_right_group,
          "one_sided_group_rank: not a one-sided group");
  SubSemigroup<Sg> grp(s, prof.group);
  RankCertificate gcert = rank_exact(grp, opts);

  RankCertificate cert;
  cert.value = std::max(prof.degree, gcert.value);
  for (std::size_t i = 0; i < cert.value; ++i) {
    elem_index e = prof.band[std::min(i, prof.degree - 1)];
    elem_index x =
        grp.parent_index(gcert.witness[std::min(i, gcert.witness.size() - 1)]);
    cert.witness.push_back(prof.is_left_group ? s.product(e, x)
                                              : s.product(x, e));
  }
  sort_unique(cert.witness);
  invariant(cert.witness.size() == cert.value,
            "one-sided group witness collided");
  invariant(closure_within(s, cert.witness).size() == s.size(),
            "one-sided group witness does not generate");
  cert.lower_bound = std::max(prof.degree, gcert.lower_bound);
  cert.lower_bound_kind = gcert.value > prof.degree
                              ? gcert.lower_bound_kind
                              : LowerBoundKind::left_zero_projection;
  cert.budget_exhausted = gcert.budget_exhausted;
  cert.steps_used = gcert.steps_used;
  return cert;
}

/// rank(S) = relrank(S : T) + rank(T) for a subsemigroup T whose complement
/// is an ideal; both conditions are re-checked here.  `top_cert` certifies
/// rank(T) with its witness given in S-local indices.
template <IndexedSemigroup Sg>
RankCertificate ideal_decomposition_rank(const Sg& s, const GreenStructure& g,
                                         const IndexSet& top,
                                         const RankCertificate& top_cert,
                                         RankOptions opts = {}) {
  invariant(is_subsemigroup(s, top), "decomposition: T not a subsemigroup");
  invariant(complement_is_ideal(s, top), "decomposition: S∖T not an ideal");
  RankCertificate rel = relative_rank(s, g, top, opts);

  RankCertificate cert;
  cert.value = rel.value + top_cert.value;
  cert.witness = set_union(rel.witness, top_cert.witness);
  invariant(cert.witness.size() == cert.value,
            "decomposition witness parts are not disjoint");
  invariant(closure_within(s, cert.witness).size() == s.size(),
            "decomposition witness does not generate");
  std::size_t rel_lb = rel.budget_exhausted
                           ? std::max(rel.lower_bound,
                                      relative_rank_lower_bound(s, g, top))
                           : rel.value;
  cert.lower_bound = rel_lb + top_cert.lower_bound;
  cert.lower_bound_kind = LowerBoundKind::ideal_decomposition;
  cert.budget_exhausted = rel.budget_exhausted || top_cert.budget_exhausted;
  cert.steps_used = rel.steps_used + top_cert.steps_used;
  return cert;
}

}  // namespace eggbox

#endif  // EGGBOX_RANK_HPP_
