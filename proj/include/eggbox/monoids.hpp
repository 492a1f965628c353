#ifndef EGGBOX_MONOIDS_HPP_
#define EGGBOX_MONOIDS_HPP_

#include <cstdint>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/combinatorics.hpp"
#include "eggbox/element.hpp"
#include "eggbox/rank.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

enum class MonoidKind {
  full_transformation,     // T_n
  partial_transformation,  // PT_n
  symmetric_inverse,       // I_n
  symmetric_group,         // S_n
};

inline const char* to_string(MonoidKind k) {
  switch (k) {
    case MonoidKind::full_transformation: return "full_transformation";
    case MonoidKind::partial_transformation: return "partial_transformation";
    case MonoidKind::symmetric_inverse: return "symmetric_inverse";
    default: return "symmetric_group";
  }
}

/// T_n by full enumeration, indexed in canonical (image-tuple) order.
inline Semigroup<Transformation> build_full_transformation_monoid(
    unsigned n, SemigroupCaps caps = {}) {
  require(n >= 1, "degree must be at least 1");
  std::uint64_t count = ipow(n, n);
  if (count > caps.element_cap)
    throw CapExceededError("T_n exceeds the element cap");
  std::vector<Transformation> elems;
  elems.reserve(count);
  std::vector<std::uint8_t> img(n, 0);
  while (true) {
    elems.push_back(Transformation(img));
    std::size_t pos = n;
    while (pos > 0 && img[pos - 1] == n - 1) img[--pos] = 0;
    if (pos == 0) break;
    ++img[pos - 1];
  }
  return Semigroup<Transformation>::from_elements(std::move(elems), caps,
                                                  false);
}

inline Semigroup<Transformation> build_symmetric_group(unsigned n,
                                                       SemigroupCaps caps = {}) {
  require(n >= 1, "degree must be at least 1");
  if (factorial(n) > caps.element_cap)
    throw CapExceededError("S_n exceeds the element cap");
  std::vector<Transformation> elems;
  std::vector<std::uint8_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  do {
    elems.push_back(Transformation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return Semigroup<Transformation>::from_elements(std::move(elems), caps,
                                                  false);
}

/// PT_n: all partial maps, indexed in canonical (domain-then-image) order.
inline Semigroup<PartialMap> build_partial_transformation_monoid(
    unsigned n, SemigroupCaps caps = {}) {
  require(n >= 1, "degree must be at least 1");
  std::uint64_t count = ipow(n + 1, n);
  if (count > caps.element_cap)
    throw CapExceededError("PT_n exceeds the element cap");
  std::vector<PartialMap> elems;
  elems.reserve(count);
  std::vector<std::uint8_t> img(n, kUndef);  // value n encodes kUndef below
  std::vector<unsigned> digits(n, 0);
  while (true) {
    for (unsigned i = 0; i < n; ++i)
      img[i] = digits[i] == n ? kUndef : static_cast<std::uint8_t>(digits[i]);
    elems.push_back(PartialMap(img));
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == n) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  std::sort(elems.begin(), elems.end());
  return Semigroup<PartialMap>::from_elements(std::move(elems), caps, false);
}

/// I_n: injective partial maps.
inline Semigroup<PartialMap> build_symmetric_inverse_monoid(
    unsigned n, SemigroupCaps caps = {}) {
  require(n >= 1, "degree must be at least 1");
  if (ipow(n + 1, n) > caps.element_cap * 8)
    throw CapExceededError("I_n enumeration exceeds the element cap");
  std::vector<PartialMap> elems;
  std::vector<unsigned> digits(n, 0);
  while (true) {
    std::vector<std::uint8_t> img(n);
    for (unsigned i = 0; i < n; ++i)
      img[i] = digits[i] == n ? kUndef : static_cast<std::uint8_t>(digits[i]);
    PartialMap f{img};
    if (f.injective()) elems.push_back(std::move(f));
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == n) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  if (elems.size() > caps.element_cap)
    throw CapExceededError("I_n exceeds the element cap");
  std::sort(elems.begin(), elems.end());
  return Semigroup<PartialMap>::from_elements(std::move(elems), caps, false);
}

/// The idempotent with image A and kernel alpha, for A a cross-section of
/// alpha: each point goes to the unique A-representative of its block.
inline Transformation idempotent_from(const std::vector<unsigned>& a,
                                      const KernelPartition& alpha) {
  require(alpha.cross_section(a), "A is not a cross-section of alpha");
  std::vector<std::uint8_t> rep(alpha.num_blocks(), 0);
  for (auto x : a) rep[alpha.block_of(x)] = static_cast<std::uint8_t>(x);
  std::vector<std::uint8_t> img(alpha.degree());
  for (unsigned x = 0; x < alpha.degree(); ++x) img[x] = rep[alpha.block_of(x)];
  return Transformation(std::move(img));
}

// ---- formula-level Green's relations on PT_n / T_n / I_n (uniform
// ---- clauses; kernels carry their domains, so one implementation covers
// ---- all three monoids).

inline bool formula_leq_l(const PartialMap& f, const PartialMap& g) {
  auto fi = f.image(), gi = g.image();
  return std::includes(gi.begin(), gi.end(), fi.begin(), fi.end());
}

inline bool formula_leq_r(const PartialMap& f, const PartialMap& g) {
  auto fd = f.domain(), gd = g.domain();
  if (!std::includes(gd.begin(), gd.end(), fd.begin(), fd.end())) return false;
  for (auto x : fd)
    for (auto y : fd)
      if (g[x] == g[y] && f[x] != f[y]) return false;
  return true;
}

inline bool formula_leq_j(const PartialMap& f, const PartialMap& g) {
  return f.rank() <= g.rank();
}

inline bool formula_l(const PartialMap& f, const PartialMap& g) {
  return f.image() == g.image();
}
inline bool formula_r(const PartialMap& f, const PartialMap& g) {
  return f.kernel_blocks() == g.kernel_blocks();
}
inline bool formula_h(const PartialMap& f, const PartialMap& g) {
  return formula_l(f, g) && formula_r(f, g);
}
inline bool formula_d(const PartialMap& f, const PartialMap& g) {
  return f.rank() == g.rank();
}

inline bool formula_leq_l(const Transformation& f, const Transformation& g) {
  return formula_leq_l(PartialMap::from_total(f), PartialMap::from_total(g));
}
inline bool formula_leq_r(const Transformation& f, const Transformation& g) {
  return formula_leq_r(PartialMap::from_total(f), PartialMap::from_total(g));
}
inline bool formula_leq_j(const Transformation& f, const Transformation& g) {
  return f.rank() <= g.rank();
}
inline bool formula_l(const Transformation& f, const Transformation& g) {
  return f.image() == g.image();
}
inline bool formula_r(const Transformation& f, const Transformation& g) {
  return KernelPartition::of(f) == KernelPartition::of(g);
}
inline bool formula_h(const Transformation& f, const Transformation& g) {
  return formula_l(f, g) && formula_r(f, g);
}
inline bool formula_d(const Transformation& f, const Transformation& g) {
  return f.rank() == g.rank();
}

/// Per-rank D-class shape of the classical monoids: number of R-classes,
/// L-classes, common H-class size.
struct DClassExpectation {
  unsigned mu = 0;
  std::uint64_t num_r = 0, num_l = 0, h_size = 0, class_size = 0;
};

inline std::vector<DClassExpectation> expected_dclass_profile(MonoidKind kind,
                                                              unsigned n) {
  std::vector<DClassExpectation> out;
  unsigned lo = kind == MonoidKind::full_transformation ? 1u : 0u;
  if (kind == MonoidKind::symmetric_group) lo = n;
  for (unsigned mu = lo; mu <= n; ++mu) {
    DClassExpectation e;
    e.mu = mu;
    switch (kind) {
      case MonoidKind::full_transformation:
        e.num_r = stirling2(n, mu);
        e.num_l = binomial(n, mu);
        break;
      case MonoidKind::partial_transformation:
        e.num_r = stirling2(n + 1, mu + 1);
        e.num_l = binomial(n, mu);
        break;
      case MonoidKind::symmetric_inverse:
        e.num_r = binomial(n, mu);
        e.num_l = binomial(n, mu);
        break;
      case MonoidKind::symmetric_group:
        e.num_r = 1;
        e.num_l = 1;
        break;
    }
    e.h_size = factorial(mu);
    e.class_size = e.num_r * e.num_l * e.h_size;
    out.push_back(e);
  }
  return out;
}

/// The rank-(n-1) idempotents e_{i->j} (x stays put except i -> j) for the
/// edge set: the cycle 0->1->...->n-1->0 plus i->j for the remaining pairs
/// i < j.  The orientation contains a Hamiltonian cycle, so these generate
/// the singular part of T_n together with enough products; the closure is
/// verified by the caller.
inline std::vector<Transformation> singular_idempotent_witness(unsigned n) {
  std::vector<Transformation> out;
  auto edge = [&](unsigned i, unsigned j) {
    auto t = Transformation::identity(n);
    auto img = t.images();
    img[i] = static_cast<std::uint8_t>(j);
    out.push_back(Transformation(img));
  };
  for (unsigned i = 0; i < n; ++i) edge(i, (i + 1) % n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (j != i + 1 && !(i == 0 && j == n - 1)) edge(i, j);
  return out;
}

/// Report on 𝔼(T_n) = {id} ∪ (T_n ∖ S_n): membership formula, size, and
/// rank = idrank certificates for the classical values (3 when n = 2,
/// C(n,2) + 1 otherwise).
struct IgTxReport {
  IndexSet ig;  // indices into T_n
  bool membership_matches_formula = false;
  std::uint64_t expected_rank = 0;
  RankCertificate rank_cert;
  RankCertificate idrank_cert;
};

inline IgTxReport ig_TX_check(const Semigroup<Transformation>& tn,
                              RankOptions opts = {}) {
  const unsigned n = static_cast<unsigned>(tn.element(0).degree());
  IgTxReport rep;
  rep.ig = idempotent_generated(tn);
  IndexSet formula_set;
  for (elem_index i = 0; i < tn.size(); ++i) {
    const Transformation& f = tn.element(i);
    if (!f.is_permutation() || f == Transformation::identity(n))
      formula_set.push_back(i);
  }
  rep.membership_matches_formula = rep.ig == formula_set;
  rep.expected_rank = n == 2 ? 3 : binomial(n, 2) + 1;

  SubSemigroup<Semigroup<Transformation>> ig(tn, rep.ig);
  GreenStructure g = green(ig);
  if (ig.size() <= 64) {
    rep.rank_cert = rank_exact(ig, g, opts);
    RankOptions id_opts = opts;
    id_opts.idempotents_only = true;
    rep.idrank_cert = rank_exact(ig, g, id_opts);
  } else {
    // construct the classical witness: identity + one idempotent per
    // 2-subset, oriented to contain a Hamiltonian cycle
    IndexSet witness;
    witness.push_back(ig.local_index(*tn.index_of(Transformation::identity(n))));
    for (const auto& e : singular_idempotent_witness(n)) {
      auto idx = tn.index_of(e);
      invariant(idx.has_value(), "witness element missing from T_n");
      witness.push_back(ig.local_index(*idx));
    }
    sort_unique(witness);
    invariant(closure_within(ig, witness).size() == ig.size(),
              "singular idempotent witness does not generate 𝔼(T_n)");
    IndexSet top = {ig.local_index(
        *tn.index_of(Transformation::identity(n)))};
    std::size_t rel_lb = relative_rank_lower_bound(ig, g, top);
    RankCertificate cert;
    cert.value = witness.size();
    cert.witness = witness;
    cert.lower_bound = 1 + rel_lb;
    cert.lower_bound_kind = LowerBoundKind::ideal_decomposition;
    rep.rank_cert = cert;
    rep.idrank_cert = cert;  // the witness consists of idempotents
  }
  return rep;
}

}  // namespace eggbox

#endif  // EGGBOX_MONOIDS_HPP_
