#ifndef EGGBOX_FAMILIES_HPP_
#define EGGBOX_FAMILIES_HPP_

/// Closed-form structure theory for three classical families of principal
/// one-sided ideals:
///
///   T_X a = {f in T_X : im(f) ⊆ A}    written T_{X,A}   (a idempotent, im a = A)
///   a T_X = {f in T_X : ker(f) ⊇ α}   written T_{X,α}   (α = ker a)
///   I_X a = {f in I_X : im(f) ⊆ A}    written I_{X,A}   (a = id_A)
///
/// Every closed form below (sizes, idempotent counts, one-sided identity
/// counts, ranks, inflation parameters) is checked against an independent
/// enumeration oracle at the point of use, and every per-element description
/// of a Green's relation is checked all-pairs against the actual relation of
/// the subsemigroup.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eggbox/combinatorics.hpp"
#include "eggbox/element.hpp"
#include "eggbox/green.hpp"
#include "eggbox/ideal.hpp"
#include "eggbox/identities.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/rank.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

enum class FamilyKind { txa, txalpha, ixa };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::txa:     return "T(X)a";
    case FamilyKind::txalpha: return "aT(X)";
    case FamilyKind::ixa:     return "I(X)a";
  }
  return "?";
}

/// One concrete family instance.  `a_set` is A (sorted, 0-indexed); for the
/// kernel-constrained family `a_set` is the chosen transversal of `alpha`.
/// `a` is the idempotent generator (meaningful for the transformation kinds;
/// the partial-bijection driver constructs id_A itself).
struct FamilySpec {
  FamilyKind kind = FamilyKind::txa;
  unsigned n = 0;
  std::vector<unsigned> a_set;
  KernelPartition alpha;
  Transformation a;
  std::string fixture;  // display label, 1-indexed
};

namespace detail {

inline std::string set_literal(const std::vector<unsigned>& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i] + 1);
  }
  return out + "}";
}

inline std::string partition_literal(const KernelPartition& alpha) {
  std::string out = "{";
  for (std::size_t b = 0; b < alpha.num_blocks(); ++b) {
    if (b) out += ",";
    out += set_literal(alpha.blocks()[b]);
  }
  return out + "}";
}

}  // namespace detail

inline FamilySpec family_spec_from_set(FamilyKind kind, unsigned n,
                                       std::vector<unsigned> a_set) {
  require(kind != FamilyKind::txalpha,
          "the kernel-constrained family is specified by a partition");
  require(n >= 1, "degree must be positive");
  std::sort(a_set.begin(), a_set.end());
  a_set.erase(std::unique(a_set.begin(), a_set.end()), a_set.end());
  for (auto x : a_set) require(x < n, "A contains a point outside X");
  require(kind == FamilyKind::ixa || !a_set.empty(),
          "A must be non-empty for total transformations");

  FamilySpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.a_set = a_set;
  if (!a_set.empty()) {
    // canonical idempotent with image A: fix A pointwise, send X ∖ A to the
    // least element of A
    std::vector<std::vector<unsigned>> blocks;
    for (auto x : a_set) blocks.push_back({x});
    for (unsigned x = 0; x < n; ++x)
      if (!std::binary_search(a_set.begin(), a_set.end(), x))
        blocks[0].push_back(x);
    spec.alpha = KernelPartition(n, std::move(blocks));
    spec.a = idempotent_from(a_set, spec.alpha);
  } else {
    spec.alpha = KernelPartition::trivial(n);
    spec.a = Transformation::identity(n);  // unused by the I(X)a driver
  }
  spec.fixture = std::string(to_string(kind)) + " n=" + std::to_string(n) +
                 " A=" + detail::set_literal(a_set);
  return spec;
}

inline FamilySpec family_spec_from_alpha(
    unsigned n, std::vector<std::vector<unsigned>> blocks,
    std::optional<std::vector<unsigned>> transversal = std::nullopt) {
  require(n >= 1, "degree must be positive");
  KernelPartition alpha(n, std::move(blocks));
  std::vector<unsigned> tv =
      transversal ? std::move(*transversal) : alpha.least_transversal();
  std::sort(tv.begin(), tv.end());
  require(alpha.cross_section(tv), "transversal is not a cross-section");

  FamilySpec spec;
  spec.kind = FamilyKind::txalpha;
  spec.n = n;
  spec.a_set = tv;
  spec.alpha = alpha;
  spec.a = idempotent_from(spec.a_set, alpha);
  spec.fixture = std::string(to_string(spec.kind)) + " n=" + std::to_string(n) +
                 " ker=" + detail::partition_literal(alpha);
  return spec;
}

// ---- membership predicates

inline bool in_txa(const Transformation& f, const std::vector<unsigned>& a) {
  for (std::size_t x = 0; x < f.degree(); ++x)
    if (!std::binary_search(a.begin(), a.end(), f[x])) return false;
  return true;
}

inline bool in_txalpha(const Transformation& f, const KernelPartition& alpha) {
  for (const auto& b : alpha.blocks())
    for (auto x : b)
      if (f[x] != f[b[0]]) return false;
  return true;
}

inline bool in_ixa(const PartialMap& f, const std::vector<unsigned>& a) {
  for (std::size_t x = 0; x < f.degree(); ++x)
    if (f.defined(x) && !std::binary_search(a.begin(), a.end(), f[x]))
      return false;
  return true;
}

// ---- formula scoreboard

/// A closed form together with the value obtained by brute enumeration.
/// Construction through check_formula asserts agreement.
struct FormulaReport {
  std::string quantity;
  std::string fixture;
  std::uint64_t formula = 0;
  std::uint64_t oracle = 0;
  bool ok = false;
};

inline FormulaReport check_formula(const std::string& quantity,
                                   const std::string& fixture,
                                   std::uint64_t formula,
                                   std::uint64_t oracle) {
  FormulaReport rep{quantity, fixture, formula, oracle, formula == oracle};
  invariant(rep.ok, "closed form for " + quantity + " fails at " + fixture +
                        ": formula gives " + std::to_string(formula) +
                        ", enumeration gives " + std::to_string(oracle));
  return rep;
}

// ---- closed forms

inline std::uint64_t size_txa(unsigned n, unsigned asz) {
  return ipow(asz, n);
}

inline std::uint64_t size_txalpha(unsigned n, const KernelPartition& alpha) {
  return ipow(n, static_cast<unsigned>(alpha.num_blocks()));
}

inline std::uint64_t size_ixa(unsigned n, unsigned asz) {
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= asz; ++j)
    total += binomial(n, j) * binomial(asz, j) * factorial(j);
  return total;
}

inline std::uint64_t size_p_txa(unsigned n, unsigned asz) {
  std::uint64_t total = 0;
  for (unsigned mu = 1; mu <= asz; ++mu)
    total += factorial(mu) * ipow(mu, n - asz) * stirling2(asz, mu) *
             binomial(asz, mu);
  return total;
}

namespace detail {

inline std::vector<std::uint64_t> block_sizes(const KernelPartition& alpha) {
  std::vector<std::uint64_t> sizes;
  for (const auto& b : alpha.blocks()) sizes.push_back(b.size());
  return sizes;
}

inline std::uint64_t block_product(const KernelPartition& alpha) {
  std::uint64_t pi = 1;
  for (const auto& b : alpha.blocks()) pi *= b.size();
  return pi;
}

}  // namespace detail

inline std::uint64_t size_q_txalpha(const KernelPartition& alpha) {
  const unsigned k = static_cast<unsigned>(alpha.num_blocks());
  auto e = elementary_symmetric(detail::block_sizes(alpha));
  std::uint64_t total = 0;
  for (unsigned mu = 1; mu <= k; ++mu)
    total += factorial(mu) * stirling2(k, mu) * e[mu];
  return total;
}

inline std::uint64_t size_p_ixa(unsigned asz) {
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= asz; ++j)
    total += binomial(asz, j) * binomial(asz, j) * factorial(j);
  return total;
}

inline std::uint64_t count_e_txa(unsigned n, unsigned asz) {
  std::uint64_t total = 0;
  for (unsigned mu = 1; mu <= asz; ++mu)
    total += ipow(mu, n - mu) * binomial(asz, mu);
  return total;
}

inline std::uint64_t count_e_txalpha(const KernelPartition& alpha) {
  const unsigned k = static_cast<unsigned>(alpha.num_blocks());
  auto e = elementary_symmetric(detail::block_sizes(alpha));
  std::uint64_t total = 0;
  for (unsigned mu = 1; mu <= k; ++mu) total += ipow(mu, k - mu) * e[mu];
  return total;
}

inline std::uint64_t count_e_ixa(unsigned asz) {
  return std::uint64_t{1} << asz;
}

inline std::uint64_t count_ri_txa(unsigned n, unsigned asz) {
  return ipow(asz, n - asz);
}

inline std::uint64_t count_li_txalpha(const KernelPartition& alpha) {
  return detail::block_product(alpha);
}

inline std::uint64_t rank_p_txa(unsigned n, unsigned asz) {
  if (asz == 1) return 1;
  if (asz == n && n >= 3) return 3;
  return 1 + ipow(asz, n - asz);
}

inline std::uint64_t rank_q_txalpha(unsigned n, const KernelPartition& alpha) {
  const unsigned k = static_cast<unsigned>(alpha.num_blocks());
  if (k == 1) return n;           // universal kernel: right-zero band
  if (k == n && n >= 3) return 3; // trivial kernel: the whole monoid
  return 1 + detail::block_product(alpha);
}

inline std::uint64_t rank_e_txa(unsigned n, unsigned asz) {
  if (asz == 1) return 1;
  if (asz == 2) return 2 + ipow(2, n - 2);
  return binomial(asz, 2) + ipow(asz, n - asz);
}

inline std::uint64_t rank_e_txalpha(unsigned n, const KernelPartition& alpha) {
  const unsigned k = static_cast<unsigned>(alpha.num_blocks());
  if (k == 1) return n;
  if (k == 2) return 2 + detail::block_product(alpha);
  return binomial(k, 2) + detail::block_product(alpha);
}

inline std::uint64_t rank_e_ixa(unsigned asz) { return 1 + asz; }

inline std::uint64_t rank_p_ixa(unsigned asz) {
  // rank of the symmetric inverse monoid on asz points
  if (asz == 0) return 1;
  if (asz <= 2) return 2;
  return 3;
}

// ---- per-element traits for clause checks

namespace detail {

/// Canonical per-element data for the transformation families; the ids are
/// dense labels so that equality of images / kernels is an integer compare.
struct TxTraits {
  int im_id = -1;
  int ker_id = -1;
  unsigned rank = 0;
  bool saturated = false;         // A saturates ker(f)
  bool fixes_a = false;           // xf = x for all x in A
  unsigned af_size = 0;           // |Af|
  bool separated = false;         // α separates im(f)
  std::size_t alpha_pullback = 0; // number of classes of the pullback of α
};

inline std::vector<TxTraits> tx_traits(const Semigroup<Transformation>& tx,
                                       const IndexSet& family,
                                       const std::vector<unsigned>& a_set,
                                       const KernelPartition& alpha) {
  std::map<std::vector<unsigned>, int> im_ids;
  std::map<std::vector<std::uint8_t>, int> ker_ids;
  std::vector<TxTraits> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Transformation& f = tx.element(family[i]);
    TxTraits& t = out[i];
    std::vector<unsigned> im = f.image();
    t.rank = static_cast<unsigned>(im.size());
    t.im_id = static_cast<int>(
        im_ids.emplace(std::move(im), static_cast<int>(im_ids.size()))
            .first->second);
    // kernel key: first-occurrence relabelling of the value pattern
    std::vector<std::uint8_t> key(f.degree());
    std::vector<int> seen(f.degree(), -1);
    int next = 0;
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (seen[f[x]] < 0) seen[f[x]] = next++;
      key[x] = static_cast<std::uint8_t>(seen[f[x]]);
    }
    t.ker_id = static_cast<int>(
        ker_ids.emplace(std::move(key), static_cast<int>(ker_ids.size()))
            .first->second);
    t.saturated = KernelPartition::of(f).saturated_by(a_set);
    t.fixes_a = true;
    std::vector<bool> hit(f.degree(), false);
    for (auto x : a_set) {
      if (f[x] != x) t.fixes_a = false;
      if (!hit[f[x]]) {
        hit[f[x]] = true;
        ++t.af_size;
      }
    }
    t.separated = alpha.separates(f.image());
    t.alpha_pullback = alpha.pullback_num_classes(f);
  }
  return out;
}

/// Canonical per-element data for the partial-bijection family.
struct IxTraits {
  int dom_id = -1;
  int im_id = -1;
  unsigned rank = 0;
  bool dom_in_a = false;    // dom(f) ⊆ A
  unsigned adom_size = 0;   // |A ∩ dom(f)|
};

inline std::vector<IxTraits> ix_traits(const Semigroup<PartialMap>& ix,
                                       const IndexSet& family,
                                       const std::vector<unsigned>& a_set) {
  std::map<std::vector<unsigned>, int> dom_ids, im_ids;
  std::vector<IxTraits> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const PartialMap& f = ix.element(family[i]);
    IxTraits& t = out[i];
    std::vector<unsigned> dom = f.domain();
    std::vector<unsigned> im = f.image();
    t.rank = static_cast<unsigned>(im.size());
    t.dom_in_a = true;
    for (auto x : dom) {
      if (std::binary_search(a_set.begin(), a_set.end(), x))
        ++t.adom_size;
      else
        t.dom_in_a = false;
    }
    t.dom_id = static_cast<int>(
        dom_ids.emplace(std::move(dom), static_cast<int>(dom_ids.size()))
            .first->second);
    t.im_id = static_cast<int>(
        im_ids.emplace(std::move(im), static_cast<int>(im_ids.size()))
            .first->second);
  }
  return out;
}

/// Reference copy of the full transformation monoid on A, with its
/// idempotent-generated subsemigroup, used as the codomain of ξ, Φ and Ψ.
struct TAReference {
  Semigroup<Transformation> ta;
  IndexSet ig;
};

inline TAReference ta_reference(unsigned asz) {
  TAReference ref{build_full_transformation_monoid(asz), {}};
  ref.ig = idempotent_generated(ref.ta);
  return ref;
}

/// The local monoid a·S·a of a transformation monoid maps isomorphically
/// onto T_A by restriction to A.  Returns the local monoid (ambient indices,
/// sorted) after verifying the bijection and all-pairs multiplicativity.
inline IndexSet check_xi(const Semigroup<Transformation>& tx, elem_index a,
                         const std::vector<unsigned>& a_set,
                         const TAReference& ref, const std::string& fixture) {
  IndexSet asa;
  for (elem_index x = 0; x < tx.size(); ++x)
    asa.push_back(tx.product(tx.product(a, x), a));
  sort_unique(asa);
  invariant(asa.size() == ref.ta.size(),
            "local monoid has the wrong size at " + fixture);

  SubSemigroup asa_sub(tx, asa);
  std::vector<elem_index> xi(asa.size());
  std::vector<bool> hit(ref.ta.size(), false);
  for (std::size_t i = 0; i < asa.size(); ++i) {
    auto t = ref.ta.index_of(tx.element(asa[i]).restrict_to(a_set));
    invariant(t.has_value(), "restriction leaves T_A at " + fixture);
    invariant(!hit[*t], "restriction is not injective at " + fixture);
    hit[*t] = true;
    xi[i] = *t;
  }
  for (elem_index i = 0; i < asa_sub.size(); ++i)
    for (elem_index j = 0; j < asa_sub.size(); ++j)
      invariant(xi[asa_sub.product(i, j)] == ref.ta.product(xi[i], xi[j]),
                "restriction is not multiplicative at " + fixture);
  return asa;
}

/// Verifies that `map_to_ta` (local index -> T_A index) is a surjective
/// homomorphism from the subsemigroup on `members`.
template <typename Sub>
void check_surmorphism_onto_ta(const Sub& sub,
                               const std::vector<elem_index>& map_to_ta,
                               const TAReference& ref, const char* name,
                               const std::string& fixture) {
  IndexSet image(map_to_ta.begin(), map_to_ta.end());
  sort_unique(image);
  invariant(image.size() == ref.ta.size(),
            std::string(name) + " is not surjective at " + fixture);
  for (elem_index i = 0; i < sub.size(); ++i)
    for (elem_index j = 0; j < sub.size(); ++j)
      invariant(map_to_ta[sub.product(i, j)] ==
                    ref.ta.product(map_to_ta[i], map_to_ta[j]),
                std::string(name) + " is not a homomorphism at " + fixture);
}

}  // namespace detail

// ---- check options and reports

struct FamilyCheckOptions {
  /// all-pairs verification of the Green's-relation descriptions on the
  /// whole family (costs a Green computation of the full family)
  bool family_green = true;
  /// all-pairs verification of the K-class descriptions on the regular part
  bool reg_green = true;
  /// full one-sided-ideal analysis with rank certificates
  bool deep = true;
  RankOptions rank{};
};

struct TxaFamilyReport {
  FamilySpec spec;
  IndexSet family;     // ambient indices of S·a
  IndexSet p;          // Reg(S·a)
  IndexSet e_family;   // E(S·a)
  IndexSet ig_family;  // subsemigroup generated by E(S·a)
  IndexSet ri;         // right identities
  std::vector<FormulaReport> formulas;
  bool clauses_checked = false;
  bool deep = false;
  LeftIdealAnalysis analysis;  // populated when deep
};

struct TxalphaFamilyReport {
  FamilySpec spec;
  IndexSet family;  // ambient indices of a·S
  IndexSet q;       // Reg(a·S)
  IndexSet e_family;
  IndexSet ig_family;
  IndexSet li;      // left identities
  std::vector<FormulaReport> formulas;
  bool clauses_checked = false;
  bool deep = false;
  RightIdealAnalysis analysis;  // populated when deep
};

struct IxaFamilyReport {
  FamilySpec spec;
  IndexSet family;
  IndexSet p;
  IndexSet e_family;   // = the idempotent-generated subsemigroup here
  std::vector<FormulaReport> formulas;
  bool clauses_checked = false;
  bool deep = false;
  LeftIdealAnalysis analysis;
};

// ---- driver: T_X a

inline TxaFamilyReport check_txa_family(const Semigroup<Transformation>& tx,
                                        const GreenStructure& g,
                                        const FamilySpec& spec,
                                        const FamilyCheckOptions& opts = {}) {
  require(spec.kind == FamilyKind::txa, "spec is not an image-restriction family");
  const unsigned n = spec.n;
  const unsigned asz = static_cast<unsigned>(spec.a_set.size());
  TxaFamilyReport rep;
  rep.spec = spec;

  auto a_opt = tx.index_of(spec.a);
  require(a_opt.has_value(), "generator not found in the ambient monoid");
  const elem_index a = *a_opt;

  // the principal left ideal is exactly the image-restriction family
  rep.family = left_ideal(tx, a);
  {
    IndexSet pred;
    for (elem_index x = 0; x < tx.size(); ++x)
      if (in_txa(tx.element(x), spec.a_set)) pred.push_back(x);
    invariant(pred == rep.family,
              "image-restriction description differs from the principal "
              "ideal at " + spec.fixture);
  }
  rep.formulas.push_back(check_formula("|Sa|", spec.fixture,
                                       size_txa(n, asz), rep.family.size()));

  SubSemigroup family_sub(tx, rep.family);

  // the regular part three ways: saturation description, L-relation
  // description, and the definition
  IndexSet p_green;
  for (auto x : rep.family) {
    const Transformation& f = tx.element(x);
    bool saturated = KernelPartition::of(f).saturated_by(spec.a_set);
    if (saturated) rep.p.push_back(x);
    if (g.l.same(x, tx.product(a, x))) p_green.push_back(x);
  }
  invariant(p_green == rep.p,
            "saturation description of the regular part differs from the "
            "L-description at " + spec.fixture);
  invariant(family_sub.to_parent(regular_elements(family_sub)) == rep.p,
            "regular elements differ from the saturation description at " +
                spec.fixture);
  rep.formulas.push_back(check_formula("|Reg(Sa)|", spec.fixture,
                                       size_p_txa(n, asz), rep.p.size()));

  // the J-description of P': |Af| = rank(f)
  {
    IndexSet pp_pred, pp_green;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      std::vector<bool> hit(n, false);
      unsigned af = 0;
      for (auto y : spec.a_set)
        if (!hit[f[y]]) {
          hit[f[y]] = true;
          ++af;
        }
      if (af == f.rank()) pp_pred.push_back(x);
      if (g.j.same(x, tx.product(a, x))) pp_green.push_back(x);
    }
    invariant(pp_pred == pp_green,
              "|Af| description of P' differs from the J-description at " +
                  spec.fixture);
  }

  // idempotents and the subsemigroup they generate
  rep.e_family = family_sub.to_parent(idempotents(family_sub));
  rep.formulas.push_back(check_formula(
      "|E(Sa)|", spec.fixture, count_e_txa(n, asz), rep.e_family.size()));
  rep.ig_family = family_sub.to_parent(idempotent_generated(family_sub));

  // one-sided identities
  {
    IdentityElements ids = identity_elements(family_sub);
    rep.ri = family_sub.to_parent(ids.right);
    IndexSet pred;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      bool fixes = true;
      for (auto y : spec.a_set)
        if (f[y] != y) fixes = false;
      if (fixes) pred.push_back(x);
    }
    invariant(rep.ri == pred,
              "right identities differ from the pointwise description at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula(
        "|RI(Sa)|", spec.fixture, count_ri_txa(n, asz), rep.ri.size()));
  }

  // reference copy of T_A; restriction is an isomorphism on the local monoid
  detail::TAReference ref = detail::ta_reference(asz);
  IndexSet asa = detail::check_xi(tx, a, spec.a_set, ref, spec.fixture);

  // membership in the idempotent-generated subsemigroup, two more ways:
  // the union form over the whole family, and the surmorphism-preimage form
  // over the regular part (products of idempotents are regular here, so the
  // preimage form quantifies over Reg(Sa))
  {
    IndexSet union_form, preimage_form;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      if (f.rank() < asz || set_contains(rep.ri, x)) union_form.push_back(x);
    }
    for (auto x : rep.p) {
      auto t = ref.ta.index_of(tx.element(x).restrict_to(spec.a_set));
      invariant(t.has_value(), "restriction leaves T_A at " + spec.fixture);
      if (set_contains(ref.ig, *t)) preimage_form.push_back(x);
    }
    invariant(union_form == rep.ig_family,
              "union description of the idempotent-generated subsemigroup "
              "fails at " + spec.fixture);
    invariant(preimage_form == rep.ig_family,
              "preimage description of the idempotent-generated subsemigroup "
              "fails at " + spec.fixture);
  }

  // Φ: Reg(Sa) → T_A, f ↦ f|_A = (af)|_A is a surjective homomorphism
  SubSemigroup p_sub(tx, rep.p);
  {
    std::vector<elem_index> Phi(rep.p.size());
    for (std::size_t i = 0; i < rep.p.size(); ++i) {
      const Transformation& f = tx.element(rep.p[i]);
      Transformation r = f.restrict_to(spec.a_set);
      invariant(tx.element(tx.product(a, rep.p[i])).restrict_to(spec.a_set) ==
                    r,
                "(af)|_A differs from f|_A on the regular part at " +
                    spec.fixture);
      Phi[i] = *ref.ta.index_of(r);
    }
    detail::check_surmorphism_onto_ta(p_sub, Phi, ref, "Phi", spec.fixture);
  }

  // all-pairs Green's-relation descriptions
  if (opts.family_green || opts.reg_green) {
    auto traits = detail::tx_traits(tx, rep.family, spec.a_set, spec.alpha);
    if (opts.family_green) {
      GreenStructure gf = green(family_sub);
      const std::size_t m = rep.family.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto& s = traits[i];
          const auto& t = traits[j];
          const bool eq = i == j;
          bool l = eq || (s.im_id == t.im_id && s.saturated && t.saturated);
          bool r = s.ker_id == t.ker_id;
          bool h = eq || (s.im_id == t.im_id && s.ker_id == t.ker_id &&
                          s.saturated);
          bool d = s.ker_id == t.ker_id ||
                   (s.rank == t.rank && s.saturated && t.saturated);
          bool j5 = s.ker_id == t.ker_id ||
                    (s.af_size == s.rank && s.rank == t.rank &&
                     t.af_size == t.rank);
          invariant(gf.l.same(i, j) == l,
                    "L description fails at " + spec.fixture);
          invariant(gf.r.same(i, j) == r,
                    "R description fails at " + spec.fixture);
          invariant(gf.h.same(i, j) == h,
                    "H description fails at " + spec.fixture);
          invariant(gf.d.same(i, j) == d,
                    "D description fails at " + spec.fixture);
          invariant(gf.j.same(i, j) == j5,
                    "J description fails at " + spec.fixture);
        }
    }

    // the regular part: K-classes by image / kernel / rank, J-chain by rank
    if (opts.reg_green) {
      GreenStructure gp = green(p_sub);
      for (std::size_t i = 0; i < rep.p.size(); ++i) {
        const auto& s = traits[family_sub.local_index(rep.p[i])];
        for (std::size_t j = 0; j < rep.p.size(); ++j) {
          const auto& t = traits[family_sub.local_index(rep.p[j])];
          invariant(gp.l.same(i, j) == (s.im_id == t.im_id),
                    "regular-part L fails at " + spec.fixture);
          invariant(gp.r.same(i, j) == (s.ker_id == t.ker_id),
                    "regular-part R fails at " + spec.fixture);
          invariant(gp.h.same(i, j) ==
                        (s.im_id == t.im_id && s.ker_id == t.ker_id),
                    "regular-part H fails at " + spec.fixture);
          invariant(gp.d.same(i, j) == (s.rank == t.rank),
                    "regular-part D fails at " + spec.fixture);
          invariant(gp.leqJ(i, j) == (s.rank <= t.rank),
                    "regular-part J-chain fails at " + spec.fixture);
        }
      }
    }
    rep.clauses_checked = opts.family_green && opts.reg_green;
  }

  // deep analysis: inflation parameters and rank certificates
  if (opts.deep) {
    rep.analysis = analyze_left_ideal(tx, g, a, opts.rank);
    const LeftIdealAnalysis& an = rep.analysis;
    invariant(an.deep && !an.substituted,
              "analysis did not reach the deep layer at " + spec.fixture);
    invariant(an.sa == rep.family && an.asa == asa && an.ps.p == rep.p,
              "analysis sets disagree with the driver at " + spec.fixture);
    rep.deep = true;

    rep.formulas.push_back(check_formula("rho", spec.fixture,
                                         count_ri_txa(n, asz), an.hats.rho));
    for (std::size_t i = 0; i < rep.p.size(); ++i) {
      unsigned mu = tx.element(rep.p[i]).rank();
      invariant(an.hats.rhat_r[an.hats.rhat.class_of[i]] ==
                    ipow(mu, n - asz),
                "inflation parameter r differs from rank^|X∖A| at " +
                    spec.fixture);
    }
    invariant(an.ranks.ri_dominated,
              "Sa is not right-identity dominated at " + spec.fixture);
    invariant(an.mi.common == rep.ri,
              "mid identities differ from right identities at " + spec.fixture);
    invariant(an.ranks.uw_left_group_ok,
              "top left-group decomposition fails at " + spec.fixture);

    invariant(an.ranks.bound_p_applicable && an.ranks.equality_p,
              "rank(P) does not meet its structural bound at " + spec.fixture);
    invariant(an.ranks.cert_p.exact(),
              "rank(P) certificate is not exact at " + spec.fixture);
    rep.formulas.push_back(check_formula("rank(Reg)", spec.fixture,
                                         rank_p_txa(n, asz),
                                         an.ranks.cert_p.value));
    invariant(an.ranks.cert_e.exact() && an.ranks.cert_e_idrank.exact(),
              "idempotent-generated rank certificates are not exact at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula("rank(IG)", spec.fixture,
                                         rank_e_txa(n, asz),
                                         an.ranks.cert_e.value));
    rep.formulas.push_back(check_formula("idrank(IG)", spec.fixture,
                                         rank_e_txa(n, asz),
                                         an.ranks.cert_e_idrank.value));

    // independent exhaustive confirmation on small fixtures
    if (rep.p.size() <= 60) {
      RankCertificate brute = rank_exact(p_sub, opts.rank);
      invariant(brute.exact() && brute.value == rank_p_txa(n, asz),
                "exhaustive rank(Reg) disagrees with the closed form at " +
                    spec.fixture);
    }
  }
  return rep;
}

// ---- driver: a T_X

/// `op` must be tx.opposite() (shared element indices) and `g_op` its
/// Green's structure; they are consulted only when opts.deep is set.
inline TxalphaFamilyReport check_txalpha_family(
    const Semigroup<Transformation>& tx, const GreenStructure& g,
    const Semigroup<Transformation>& op, const GreenStructure& g_op,
    const FamilySpec& spec, const FamilyCheckOptions& opts = {}) {
  require(spec.kind == FamilyKind::txalpha,
          "spec is not a kernel-constrained family");
  const unsigned n = spec.n;
  const unsigned k = static_cast<unsigned>(spec.alpha.num_blocks());
  TxalphaFamilyReport rep;
  rep.spec = spec;

  auto a_opt = tx.index_of(spec.a);
  require(a_opt.has_value(), "generator not found in the ambient monoid");
  const elem_index a = *a_opt;

  rep.family = right_ideal(tx, a);
  {
    IndexSet pred;
    for (elem_index x = 0; x < tx.size(); ++x)
      if (in_txalpha(tx.element(x), spec.alpha)) pred.push_back(x);
    invariant(pred == rep.family,
              "kernel-constraint description differs from the principal "
              "ideal at " + spec.fixture);
  }
  rep.formulas.push_back(check_formula(
      "|aS|", spec.fixture, size_txalpha(n, spec.alpha), rep.family.size()));

  SubSemigroup family_sub(tx, rep.family);

  // the regular part three ways: separation description, R-description,
  // and the definition
  IndexSet q_green;
  for (auto x : rep.family) {
    const Transformation& f = tx.element(x);
    if (spec.alpha.separates(f.image())) rep.q.push_back(x);
    if (g.r.same(x, tx.product(x, a))) q_green.push_back(x);
  }
  invariant(q_green == rep.q,
            "separation description of the regular part differs from the "
            "R-description at " + spec.fixture);
  invariant(family_sub.to_parent(regular_elements(family_sub)) == rep.q,
            "regular elements differ from the separation description at " +
                spec.fixture);
  rep.formulas.push_back(check_formula(
      "|Reg(aS)|", spec.fixture, size_q_txalpha(spec.alpha), rep.q.size()));

  // Q': pullback-class description against the ambient J-description
  {
    IndexSet qp_pred, qp_green;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      if (spec.alpha.pullback_num_classes(f) == f.rank()) qp_pred.push_back(x);
      if (g.j.same(x, tx.product(x, a))) qp_green.push_back(x);
    }
    invariant(qp_pred == qp_green,
              "pullback description of Q' differs from the J-description "
              "at " + spec.fixture);
  }

  rep.e_family = family_sub.to_parent(idempotents(family_sub));
  rep.formulas.push_back(check_formula("|E(aS)|", spec.fixture,
                                       count_e_txalpha(spec.alpha),
                                       rep.e_family.size()));
  rep.ig_family = family_sub.to_parent(idempotent_generated(family_sub));

  // one-sided identities
  {
    IdentityElements ids = identity_elements(family_sub);
    rep.li = family_sub.to_parent(ids.left);
    IndexSet pred;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      bool in_block = true;
      for (unsigned y = 0; y < n; ++y)
        if (!spec.alpha.same(f[y], y)) in_block = false;
      if (in_block) pred.push_back(x);
    }
    invariant(rep.li == pred,
              "left identities differ from the blockwise description at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula("|LI(aS)|", spec.fixture,
                                         count_li_txalpha(spec.alpha),
                                         rep.li.size()));
  }

  detail::TAReference ref = detail::ta_reference(k);
  detail::check_xi(tx, a, spec.a_set, ref, spec.fixture);

  // idempotent-generated membership: union form over the family,
  // preimage form over the regular part
  {
    IndexSet union_form, preimage_form;
    for (auto x : rep.family) {
      const Transformation& f = tx.element(x);
      if (f.rank() < k || set_contains(rep.li, x)) union_form.push_back(x);
    }
    for (auto x : rep.q) {
      Transformation fa = tx.element(tx.product(x, a));
      auto t = ref.ta.index_of(fa.restrict_to(spec.a_set));
      invariant(t.has_value(), "restriction leaves T_A at " + spec.fixture);
      if (set_contains(ref.ig, *t)) preimage_form.push_back(x);
    }
    invariant(union_form == rep.ig_family,
              "union description of the idempotent-generated subsemigroup "
              "fails at " + spec.fixture);
    invariant(preimage_form == rep.ig_family,
              "preimage description of the idempotent-generated subsemigroup "
              "fails at " + spec.fixture);
  }

  // Ψ: Reg(aS) → T_A, f ↦ (fa)|_A is a surjective homomorphism
  SubSemigroup q_sub(tx, rep.q);
  {
    std::vector<elem_index> Psi(rep.q.size());
    for (std::size_t i = 0; i < rep.q.size(); ++i) {
      Transformation fa = tx.element(tx.product(rep.q[i], a));
      Psi[i] = *ref.ta.index_of(fa.restrict_to(spec.a_set));
    }
    detail::check_surmorphism_onto_ta(q_sub, Psi, ref, "Psi", spec.fixture);
  }

  if (opts.family_green || opts.reg_green) {
    auto traits = detail::tx_traits(tx, rep.family, spec.a_set, spec.alpha);
    if (opts.family_green) {
      GreenStructure gf = green(family_sub);
      const std::size_t m = rep.family.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto& s = traits[i];
          const auto& t = traits[j];
          const bool eq = i == j;
          bool l = s.im_id == t.im_id;
          bool r = eq || (s.ker_id == t.ker_id && s.separated && t.separated);
          bool h = eq || (s.ker_id == t.ker_id && s.im_id == t.im_id &&
                          s.separated);
          bool d = s.im_id == t.im_id ||
                   (s.rank == t.rank && s.separated && t.separated);
          bool j5 = s.im_id == t.im_id ||
                    (s.alpha_pullback == s.rank && s.rank == t.rank &&
                     t.alpha_pullback == t.rank);
          invariant(gf.l.same(i, j) == l,
                    "L description fails at " + spec.fixture);
          invariant(gf.r.same(i, j) == r,
                    "R description fails at " + spec.fixture);
          invariant(gf.h.same(i, j) == h,
                    "H description fails at " + spec.fixture);
          invariant(gf.d.same(i, j) == d,
                    "D description fails at " + spec.fixture);
          invariant(gf.j.same(i, j) == j5,
                    "J description fails at " + spec.fixture);
        }
    }

    if (opts.reg_green) {
      GreenStructure gq = green(q_sub);
      for (std::size_t i = 0; i < rep.q.size(); ++i) {
        const auto& s = traits[family_sub.local_index(rep.q[i])];
        for (std::size_t j = 0; j < rep.q.size(); ++j) {
          const auto& t = traits[family_sub.local_index(rep.q[j])];
          invariant(gq.l.same(i, j) == (s.im_id == t.im_id),
                    "regular-part L fails at " + spec.fixture);
          invariant(gq.r.same(i, j) == (s.ker_id == t.ker_id),
                    "regular-part R fails at " + spec.fixture);
          invariant(gq.h.same(i, j) ==
                        (s.im_id == t.im_id && s.ker_id == t.ker_id),
                    "regular-part H fails at " + spec.fixture);
          invariant(gq.d.same(i, j) == (s.rank == t.rank),
                    "regular-part D fails at " + spec.fixture);
          invariant(gq.leqJ(i, j) == (s.rank <= t.rank),
                    "regular-part J-chain fails at " + spec.fixture);
        }
      }
    }
    rep.clauses_checked = opts.family_green && opts.reg_green;
  }

  if (opts.deep) {
    rep.analysis = analyze_right_ideal(tx, g, op, g_op, a, opts.rank);
    const RightIdealAnalysis& an = rep.analysis;
    invariant(an.mirror.deep && !an.mirror.substituted,
              "analysis did not reach the deep layer at " + spec.fixture);
    invariant(an.as_set == rep.family && an.q() == rep.q,
              "analysis sets disagree with the driver at " + spec.fixture);
    rep.deep = true;

    rep.formulas.push_back(check_formula("lambda", spec.fixture,
                                         count_li_txalpha(spec.alpha),
                                         an.lambda()));
    for (std::size_t i = 0; i < rep.q.size(); ++i) {
      const Transformation& f = tx.element(rep.q[i]);
      std::vector<unsigned> im = f.image();
      std::uint64_t l_expect = 1;
      for (const auto& b : spec.alpha.blocks()) {
        bool meets = false;
        for (auto y : im)
          if (spec.alpha.block_of(y) == spec.alpha.block_of(b[0])) meets = true;
        if (meets) l_expect *= b.size();
      }
      invariant(an.mirror.hats.rhat_r[an.mirror.hats.rhat.class_of[i]] ==
                    l_expect,
                "inflation parameter l differs from the block product at " +
                    spec.fixture);
    }
    invariant(an.li_dominated(),
              "aS is not left-identity dominated at " + spec.fixture);
    invariant(an.mirror.mi.common == rep.li,
              "mid identities differ from left identities at " + spec.fixture);
    invariant(an.mirror.ranks.uw_left_group_ok,
              "top one-sided-group decomposition fails at " + spec.fixture);

    invariant(an.mirror.ranks.bound_p_applicable && an.mirror.ranks.equality_p,
              "rank(Q) does not meet its structural bound at " + spec.fixture);
    invariant(an.mirror.ranks.cert_p.exact(),
              "rank(Q) certificate is not exact at " + spec.fixture);
    rep.formulas.push_back(check_formula("rank(Reg)", spec.fixture,
                                         rank_q_txalpha(n, spec.alpha),
                                         an.mirror.ranks.cert_p.value));
    invariant(an.mirror.ranks.cert_e.exact() &&
                  an.mirror.ranks.cert_e_idrank.exact(),
              "idempotent-generated rank certificates are not exact at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula("rank(IG)", spec.fixture,
                                         rank_e_txalpha(n, spec.alpha),
                                         an.mirror.ranks.cert_e.value));
    rep.formulas.push_back(check_formula("idrank(IG)", spec.fixture,
                                         rank_e_txalpha(n, spec.alpha),
                                         an.mirror.ranks.cert_e_idrank.value));

    // a generating set is orientation-independent, so the exhaustive search
    // can run in the original orientation
    if (rep.q.size() <= 60) {
      RankCertificate brute = rank_exact(q_sub, opts.rank);
      invariant(brute.exact() && brute.value == rank_q_txalpha(n, spec.alpha),
                "exhaustive rank(Reg) disagrees with the closed form at " +
                    spec.fixture);
    }
  }
  return rep;
}

inline TxalphaFamilyReport check_txalpha_family(
    const Semigroup<Transformation>& tx, const GreenStructure& g,
    const FamilySpec& spec, const FamilyCheckOptions& opts = {}) {
  Semigroup<Transformation> op = tx.opposite();
  GreenStructure g_op;
  if (opts.deep) g_op = green(op);
  return check_txalpha_family(tx, g, op, g_op, spec, opts);
}

// ---- driver: I_X a

inline IxaFamilyReport check_ixa_family(const Semigroup<PartialMap>& ix,
                                        const GreenStructure& g,
                                        const FamilySpec& spec,
                                        const FamilyCheckOptions& opts = {}) {
  require(spec.kind == FamilyKind::ixa, "spec is not a partial-bijection family");
  const unsigned n = spec.n;
  const unsigned asz = static_cast<unsigned>(spec.a_set.size());
  IxaFamilyReport rep;
  rep.spec = spec;

  PartialMap pa = PartialMap::partial_identity(n, spec.a_set);
  auto a_opt = ix.index_of(pa);
  require(a_opt.has_value(), "generator not found in the ambient monoid");
  const elem_index a = *a_opt;

  rep.family = left_ideal(ix, a);
  {
    IndexSet pred;
    for (elem_index x = 0; x < ix.size(); ++x)
      if (in_ixa(ix.element(x), spec.a_set)) pred.push_back(x);
    invariant(pred == rep.family,
              "image-restriction description differs from the principal "
              "ideal at " + spec.fixture);
  }
  rep.formulas.push_back(check_formula("|Sa|", spec.fixture,
                                       size_ixa(n, asz), rep.family.size()));

  // inversion is an anti-isomorphism onto the mirror family
  {
    IndexSet inverted;
    for (auto x : rep.family) {
      auto y = ix.index_of(ix.element(x).inverse());
      invariant(y.has_value(), "inverse escapes the monoid");
      inverted.push_back(*y);
    }
    sort_unique(inverted);
    invariant(inverted == right_ideal(ix, a),
              "inversion does not carry the family onto the mirror family "
              "at " + spec.fixture);
  }

  SubSemigroup family_sub(ix, rep.family);

  // the regular part: dom/im description, L-description, definition
  IndexSet p_green;
  for (auto x : rep.family) {
    const PartialMap& f = ix.element(x);
    bool dom_in_a = true;
    for (auto y : f.domain())
      if (!std::binary_search(spec.a_set.begin(), spec.a_set.end(), y))
        dom_in_a = false;
    if (dom_in_a) rep.p.push_back(x);
    if (g.l.same(x, ix.product(a, x))) p_green.push_back(x);
  }
  invariant(p_green == rep.p,
            "dom/im description of the regular part differs from the "
            "L-description at " + spec.fixture);
  invariant(family_sub.to_parent(regular_elements(family_sub)) == rep.p,
            "regular elements differ from the dom/im description at " +
                spec.fixture);
  rep.formulas.push_back(check_formula("|Reg(Sa)|", spec.fixture,
                                       size_p_ixa(asz), rep.p.size()));

  // P': |A ∩ dom| = rank against the ambient J-description
  {
    IndexSet pp_pred, pp_green;
    for (auto x : rep.family) {
      const PartialMap& f = ix.element(x);
      unsigned adom = 0;
      for (auto y : f.domain())
        if (std::binary_search(spec.a_set.begin(), spec.a_set.end(), y))
          ++adom;
      if (adom == f.rank()) pp_pred.push_back(x);
      if (g.j.same(x, ix.product(a, x))) pp_green.push_back(x);
    }
    invariant(pp_pred == pp_green,
              "|A ∩ dom| description of P' differs from the J-description "
              "at " + spec.fixture);
  }

  // idempotents: exactly the partial identities on subsets of A, and they
  // already form the idempotent-generated subsemigroup (a semilattice
  // isomorphic to the power set of A under intersection)
  rep.e_family = family_sub.to_parent(idempotents(family_sub));
  {
    IndexSet pred;
    for (const auto& b : [&] {
           std::vector<std::vector<unsigned>> subs;
           subs.push_back({});
           for (auto& s : nonempty_subsets(asz)) {
             std::vector<unsigned> mapped;
             for (auto i : s) mapped.push_back(spec.a_set[i]);
             subs.push_back(std::move(mapped));
           }
           return subs;
         }()) {
      auto y = ix.index_of(PartialMap::partial_identity(n, b));
      invariant(y.has_value(), "partial identity missing from the monoid");
      pred.push_back(*y);
    }
    sort_unique(pred);
    invariant(rep.e_family == pred,
              "idempotents differ from the partial identities on subsets of "
              "A at " + spec.fixture);
    invariant(family_sub.to_parent(idempotent_generated(family_sub)) ==
                  rep.e_family,
              "the idempotents do not form a closed semilattice at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula("|E(Sa)|", spec.fixture,
                                         count_e_ixa(asz),
                                         rep.e_family.size()));
    SubSemigroup e_sub(ix, rep.e_family);
    invariant(is_semilattice(e_sub),
              "idempotents do not commute at " + spec.fixture);
    // intersection law: id_B · id_C = id_{B ∩ C}
    for (auto x : rep.e_family)
      for (auto y : rep.e_family) {
        std::vector<unsigned> bx = ix.element(x).domain();
        std::vector<unsigned> by = ix.element(y).domain();
        std::vector<unsigned> meet;
        for (auto v : bx)
          if (std::binary_search(by.begin(), by.end(), v)) meet.push_back(v);
        invariant(ix.product(x, y) ==
                      *ix.index_of(PartialMap::partial_identity(n, meet)),
                  "semilattice product is not intersection at " +
                      spec.fixture);
      }
  }

  // the regular part is a copy of the symmetric inverse monoid on A
  SubSemigroup p_sub(ix, rep.p);
  if (asz > 0) {
    Semigroup<PartialMap> ia = build_symmetric_inverse_monoid(asz);
    invariant(rep.p.size() == ia.size(),
              "regular part has the wrong size at " + spec.fixture);
    std::vector<unsigned> pos(n, 0);
    for (std::size_t i = 0; i < spec.a_set.size(); ++i)
      pos[spec.a_set[i]] = static_cast<unsigned>(i);
    std::vector<elem_index> iso(rep.p.size());
    std::vector<bool> hit(ia.size(), false);
    for (std::size_t i = 0; i < rep.p.size(); ++i) {
      const PartialMap& f = ix.element(rep.p[i]);
      std::vector<std::uint8_t> img(asz, kUndef);
      for (auto y : f.domain())
        img[pos[y]] = static_cast<std::uint8_t>(pos[f[y]]);
      auto t = ia.index_of(PartialMap(std::move(img)));
      invariant(t.has_value() && !hit[*t],
                "relabelling is not a bijection at " + spec.fixture);
      hit[*t] = true;
      iso[i] = *t;
    }
    for (elem_index i = 0; i < p_sub.size(); ++i)
      for (elem_index j = 0; j < p_sub.size(); ++j)
        invariant(iso[p_sub.product(i, j)] == ia.product(iso[i], iso[j]),
                  "relabelling is not multiplicative at " + spec.fixture);
  }

  if (opts.family_green || opts.reg_green) {
    auto traits = detail::ix_traits(ix, rep.family, spec.a_set);
    if (opts.family_green) {
      GreenStructure gf = green(family_sub);
      const std::size_t m = rep.family.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto& s = traits[i];
          const auto& t = traits[j];
          const bool eq = i == j;
          bool l = eq || (s.im_id == t.im_id && s.dom_in_a && t.dom_in_a);
          bool r = s.dom_id == t.dom_id;
          bool h = eq || (s.im_id == t.im_id && s.dom_id == t.dom_id &&
                          s.dom_in_a);
          bool d = s.dom_id == t.dom_id ||
                   (s.rank == t.rank && s.dom_in_a && t.dom_in_a);
          bool j5 = s.dom_id == t.dom_id ||
                    (s.adom_size == s.rank && s.rank == t.rank &&
                     t.adom_size == t.rank);
          invariant(gf.l.same(i, j) == l,
                    "L description fails at " + spec.fixture);
          invariant(gf.r.same(i, j) == r,
                    "R description fails at " + spec.fixture);
          invariant(gf.h.same(i, j) == h,
                    "H description fails at " + spec.fixture);
          invariant(gf.d.same(i, j) == d,
                    "D description fails at " + spec.fixture);
          invariant(gf.j.same(i, j) == j5,
                    "J description fails at " + spec.fixture);
        }
    }

    if (opts.reg_green) {
      GreenStructure gp = green(p_sub);
      for (std::size_t i = 0; i < rep.p.size(); ++i) {
        const auto& s = traits[family_sub.local_index(rep.p[i])];
        for (std::size_t j = 0; j < rep.p.size(); ++j) {
          const auto& t = traits[family_sub.local_index(rep.p[j])];
          invariant(gp.l.same(i, j) == (s.im_id == t.im_id),
                    "regular-part L fails at " + spec.fixture);
          invariant(gp.r.same(i, j) == (s.dom_id == t.dom_id),
                    "regular-part R fails at " + spec.fixture);
          invariant(gp.h.same(i, j) ==
                        (s.im_id == t.im_id && s.dom_id == t.dom_id),
                    "regular-part H fails at " + spec.fixture);
          invariant(gp.d.same(i, j) == (s.rank == t.rank),
                    "regular-part D fails at " + spec.fixture);
          invariant(gp.leqJ(i, j) == (s.rank <= t.rank),
                    "regular-part J-chain fails at " + spec.fixture);
        }
      }
    }
    rep.clauses_checked = opts.family_green && opts.reg_green;
  }

  if (opts.deep) {
    rep.analysis = analyze_left_ideal(ix, g, a, opts.rank);
    const LeftIdealAnalysis& an = rep.analysis;
    invariant(an.deep && !an.substituted,
              "analysis did not reach the deep layer at " + spec.fixture);
    invariant(an.sa == rep.family && an.ps.p == rep.p,
              "analysis sets disagree with the driver at " + spec.fixture);
    invariant(an.uniquely_sandwich_regular,
              "generator is not uniquely sandwich-regular at " + spec.fixture);
    invariant(an.inverse.applicable && an.inverse.ok,
              "inverse-monoid profile fails at " + spec.fixture);
    invariant(an.asa == rep.p,
              "regular part differs from the local monoid at " + spec.fixture);
    rep.deep = true;

    invariant(an.hats.rho == 1,
              "inflation is non-trivial in the inverse case at " +
                  spec.fixture);
    invariant(an.mi.common == IndexSet{a},
              "mid identities are not exactly the generator at " +
                  spec.fixture);

    invariant(an.ranks.cert_p.exact(),
              "rank(Reg) certificate is not exact at " + spec.fixture);
    rep.formulas.push_back(check_formula("rank(Reg)", spec.fixture,
                                         rank_p_ixa(asz),
                                         an.ranks.cert_p.value));
    invariant(an.ranks.cert_e.exact() && an.ranks.cert_e_idrank.exact(),
              "semilattice rank certificates are not exact at " +
                  spec.fixture);
    rep.formulas.push_back(check_formula("rank(E)", spec.fixture,
                                         rank_e_ixa(asz),
                                         an.ranks.cert_e.value));
    rep.formulas.push_back(check_formula("idrank(E)", spec.fixture,
                                         rank_e_ixa(asz),
                                         an.ranks.cert_e_idrank.value));

    if (rep.p.size() <= 60) {
      RankCertificate brute = rank_exact(p_sub, opts.rank);
      invariant(brute.exact() && brute.value == rank_p_ixa(asz),
                "exhaustive rank(Reg) disagrees with the closed form at " +
                    spec.fixture);
    }
  }
  return rep;
}

// ---- fixture enumerators

inline std::vector<FamilySpec> all_subset_specs(FamilyKind kind, unsigned n) {
  std::vector<FamilySpec> out;
  if (kind == FamilyKind::ixa) out.push_back(family_spec_from_set(kind, n, {}));
  for (auto& a : nonempty_subsets(n))
    out.push_back(family_spec_from_set(kind, n, a));
  return out;
}

inline std::vector<FamilySpec> all_partition_specs(unsigned n) {
  std::vector<FamilySpec> out;
  for (auto& blocks : set_partitions(n))
    out.push_back(family_spec_from_alpha(n, blocks));
  return out;
}

}  // namespace eggbox

#endif  // EGGBOX_FAMILIES_HPP_
