#ifndef EGGBOX_IDEAL_HPP_
#define EGGBOX_IDEAL_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/green.hpp"
#include "eggbox/identities.hpp"
#include "eggbox/rank.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

/// Sa = {xa : x in S}, ascending.  Need not contain a itself.
template <IndexedSemigroup Sg>
IndexSet left_ideal(const Sg& s, elem_index a) {
  IndexSet out;
  out.reserve(s.size());
  for (elem_index x = 0; x < s.size(); ++x) out.push_back(s.product(x, a));
  sort_unique(out);
  return out;
}

/// aS = {ax : x in S}, ascending.
template <IndexedSemigroup Sg>
IndexSet right_ideal(const Sg& s, elem_index a) {
  IndexSet out;
  out.reserve(s.size());
  for (elem_index x = 0; x < s.size(); ++x) out.push_back(s.product(a, x));
  sort_unique(out);
  return out;
}

/// The four P-sets attached to Sa (ambient indices, ascending):
///   P    = {x in Sa : x L ax}
///   P'   = {x in Sa : x J ax}
///   P''  = {x in S  : x in xSa}      (lands inside Sa)
///   P''' = {x in S  : x in S^1xSa}   (lands inside Sa)
struct PSets {
  IndexSet p, p_prime, p_dprime, p_tprime;
};

template <IndexedSemigroup Sg>
PSets p_sets(const Sg& s, const GreenStructure& g, elem_index a) {
  IndexSet sa = left_ideal(s, a);
  PSets out;
  for (auto x : sa) {
    elem_index ax = s.product(a, x);
    if (g.l.same(x, ax)) out.p.push_back(x);
    if (g.j.same(x, ax)) out.p_prime.push_back(x);
  }
  // P'' and P''' range over all of S by definition; membership of the result
  // in Sa is then a checked consequence, not an assumption.
  for (elem_index x = 0; x < s.size(); ++x) {
    bool dp = false, tp = false;
    for (auto w : sa) {
      elem_index xw = s.product(x, w);
      if (xw == x) dp = true;
      if (g.leqL(x, xw)) tp = true;
      if (dp && tp) break;
    }
    if (dp) out.p_dprime.push_back(x);
    if (tp) out.p_tprime.push_back(x);
  }

  invariant(is_subset(out.p, out.p_prime), "P is not contained in P'");
  invariant(is_subset(out.p_dprime, out.p_tprime),
            "P'' is not contained in P'''");
  invariant(is_subset(out.p_tprime, sa), "P''' is not contained in Sa");
  if (is_regular_element(s, a))
    invariant(out.p_dprime == sa && out.p_tprime == sa,
              "P'' = P''' = Sa fails for a regular generator");

  // P is a right ideal of Sa
  DynBitset in_p(s.size());
  for (auto x : out.p) in_p.set(x);
  for (auto x : out.p)
    for (auto y : sa)
      invariant(in_p.test(s.product(x, y)), "P is not a right ideal of Sa");

  // membership propagates along R below P and along L below P''
  DynBitset in_sa(s.size()), in_p2(s.size());
  for (auto x : sa) in_sa.set(x);
  for (auto x : out.p_dprime) in_p2.set(x);
  for (auto x : out.p)
    for (auto y : g.r.classes[g.r.class_of[x]])
      invariant(!in_sa.test(y) || in_p.test(y),
                "R-class of a P-element leaks outside P within Sa");
  for (auto x : out.p_dprime)
    for (auto y : g.l.classes[g.l.class_of[x]])
      invariant(!in_sa.test(y) || in_p2.test(y),
                "L-class of a P''-element leaks outside P'' within Sa");
  return out;
}

// ---- Green's relations inside Sa: direct computation vs the case-split
// ---- structure formulas.

struct GreenMismatch {
  elem_index x = 0;  // least violating element, ambient index
  const char* relation = "";
  IndexSet direct_class, formula_class;  // ambient indices
};

struct IdealGreenReport {
  bool ok = true;
  bool corollary_checked = false;  // simplified regular-a forms also verified
  std::optional<GreenMismatch> mismatch;
};

/// Checks, for every x in Sa, that the five Green's classes of x computed
/// directly in the semigroup Sa coincide with the case-split formulas over
/// the ambient classes and the P-sets; when a is regular the simplified
/// forms (R^a = R ∩ Sa, J^a via P' alone) are checked as well.
template <IndexedSemigroup Sg>
IdealGreenReport verify_green_in_ideal(const Sg& s, const GreenStructure& g,
                                       elem_index a) {
  IndexSet sa = left_ideal(s, a);
  PSets ps = p_sets(s, g, a);
  SubSemigroup<Sg> sub(s, sa);
  GreenStructure ga = green(sub);

  auto amb_class = [&](const Partition& part, elem_index x) -> const IndexSet& {
    return part.classes[part.class_of[x]];
  };
  auto formula_l = [&](elem_index x) -> IndexSet {
    if (!set_contains(ps.p, x)) return {x};
    return set_intersection(amb_class(g.l, x), ps.p);
  };
  auto formula_r = [&](elem_index x) -> IndexSet {
    if (!set_contains(ps.p_dprime, x)) return {x};
    return set_intersection(amb_class(g.r, x), ps.p_dprime);
  };
  auto formula_h = [&](elem_index x) -> IndexSet {
    if (!set_contains(ps.p, x) || !set_contains(ps.p_dprime, x)) return {x};
    return amb_class(g.h, x);
  };
  auto formula_d = [&](elem_index x) -> IndexSet {
    if (set_contains(ps.p, x) && set_contains(ps.p_dprime, x))
      return set_intersection(set_intersection(amb_class(g.d, x), ps.p),
                              ps.p_dprime);
    if (!set_contains(ps.p, x)) return formula_r(x);
    return formula_l(x);
  };
  auto formula_j = [&](elem_index x) -> IndexSet {
    if (set_contains(ps.p_prime, x) && set_contains(ps.p_tprime, x))
      return set_intersection(set_intersection(amb_class(g.j, x), ps.p_prime),
                              ps.p_tprime);
    return formula_d(x);
  };

  IdealGreenReport rep;
  const bool a_regular = is_regular_element(s, a);
  for (elem_index i = 0; i < sub.size() && rep.ok; ++i) {
    elem_index x = sub.parent_index(i);
    const std::array<const char*, 5> names = {"L", "R", "H", "D", "J"};
    const std::array<const Partition*, 5> direct = {&ga.l, &ga.r, &ga.h, &ga.d,
                                                    &ga.j};
    for (std::size_t k = 0; k < 5 && rep.ok; ++k) {
      IndexSet want;
      switch (k) {
        case 0: want = formula_l(x); break;
        case 1: want = formula_r(x); break;
        case 2: want = formula_h(x); break;
        case 3: want = formula_d(x); break;
        default: want = formula_j(x); break;
      }
      IndexSet got = sub.to_parent(amb_class(*direct[k], i));
      if (got != want) {
        rep.ok = false;
        rep.mismatch = GreenMismatch{x, names[k], std::move(got),
                                     std::move(want)};
      }
    }
    if (rep.ok && a_regular) {
      IndexSet want_r = set_intersection(amb_class(g.r, x), sa);
      IndexSet got_r = sub.to_parent(amb_class(ga.r, i));
      if (got_r != want_r) {
        rep.ok = false;
        rep.mismatch =
            GreenMismatch{x, "R (regular form)", std::move(got_r),
                          std::move(want_r)};
        break;
      }
      IndexSet want_j = set_contains(ps.p_prime, x)
                            ? set_intersection(amb_class(g.j, x), ps.p_prime)
                            : formula_r(x);
      IndexSet got_j = sub.to_parent(amb_class(ga.j, i));
      if (got_j != want_j) {
        rep.ok = false;
        rep.mismatch =
            GreenMismatch{x, "J (regular form)", std::move(got_j),
                          std::move(want_j)};
      }
    }
  }
  rep.corollary_checked = a_regular && rep.ok;
  return rep;
}

// ---- sandwich-regularity profile

struct SandwichProfile {
  bool a_idempotent = false;
  bool a_regular = false;
  bool sandwich_regular = false;           // aSa ⊆ Reg(S)
  bool uniquely_sandwich_regular = false;  // a and each axa uniquely regular
  IndexSet asa;     // {axa}, ascending
  IndexSet reg_sa;  // elements regular within the semigroup Sa
  /// e = ba with Sa = Se, offered when a is regular but not idempotent.
  std::optional<elem_index> substitute;
};

template <IndexedSemigroup Sg>
SandwichProfile sandwich_profile(const Sg& s, const GreenStructure& g,
                                 elem_index a) {
  SandwichProfile out;
  IndexSet sa = left_ideal(s, a);
  PSets ps = p_sets(s, g, a);
  out.a_idempotent = s.product(a, a) == a;
  out.a_regular = is_regular_element(s, a);

  for (elem_index x = 0; x < s.size(); ++x)
    out.asa.push_back(s.product(s.product(a, x), a));
  sort_unique(out.asa);

  out.sandwich_regular = true;
  for (auto x : out.asa)
    if (!is_regular_element(s, x)) {
      out.sandwich_regular = false;
      break;
    }
  out.uniquely_sandwich_regular =
      out.a_regular && inverses_of(s, a).size() == 1;
  for (auto x : out.asa) {
    if (!out.uniquely_sandwich_regular) break;
    if (inverses_of(s, x).size() != 1) out.uniquely_sandwich_regular = false;
  }

  SubSemigroup<Sg> sub(s, sa);
  for (elem_index i = 0; i < sub.size(); ++i)
    if (is_regular_element(sub, i)) out.reg_sa.push_back(sub.parent_index(i));

  // Reg(Sa) = Reg(S) ∩ P, for arbitrary a
  IndexSet reg_s_in_p;
  for (auto x : ps.p)
    if (is_regular_element(s, x)) reg_s_in_p.push_back(x);
  invariant(out.reg_sa == reg_s_in_p, "Reg(Sa) differs from Reg(S) ∩ P");

  if (out.a_idempotent) {
    // four-way equivalence battery
    bool b_subsets = true;
    for (auto x : ps.p)
      if (!is_regular_element(s, x)) {
        b_subsets = false;
        break;
      }
    SubSemigroup<Sg> asa_sub(s, out.asa);
    bool b_reg = out.reg_sa == ps.p;
    bool b_monoid = is_regular_semigroup(asa_sub);
    invariant(out.sandwich_regular == b_subsets &&
                  b_subsets == b_reg && b_reg == b_monoid,
              "the sandwich-regularity equivalence battery disagrees");

    // aSa = aP ⊆ P = Pa
    IndexSet ap, pa;
    for (auto x : ps.p) {
      ap.push_back(s.product(a, x));
      pa.push_back(s.product(x, a));
    }
    sort_unique(ap);
    sort_unique(pa);
    invariant(ap == out.asa, "aP differs from aSa");
    invariant(is_subset(out.asa, ps.p), "aSa is not contained in P");
    invariant(pa == ps.p, "Pa differs from P");
  }

  if (!out.a_idempotent && out.a_regular) {
    IndexSet va = inverses_of(s, a);
    elem_index e = s.product(va[0], a);
    invariant(s.product(e, e) == e, "substitute ba is not idempotent");
    invariant(left_ideal(s, e) == sa, "substitute does not preserve Sa");
    out.substitute = e;
  }
  return out;
}

// ---- the surmorphism φ : P → aSa, x ↦ ax

struct PhiMap {
  elem_index a = 0;
  IndexSet p, asa;                // ambient, ascending
  std::vector<elem_index> image;  // image[i] = a·p[i]

  elem_index apply(elem_index x) const {
    auto it = std::lower_bound(p.begin(), p.end(), x);
    invariant(it != p.end() && *it == x, "phi applied outside P");
    return image[static_cast<std::size_t>(it - p.begin())];
  }
  /// {x in P : phi(x) in target}
  IndexSet preimage(const IndexSet& target) const {
    IndexSet out;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (set_contains(target, image[i])) out.push_back(p[i]);
    return out;
  }
};

namespace detail {

/// Builds φ and verifies: totality into aSa, surjectivity, multiplicativity,
/// and the idempotent / idempotent-generated pullback identities.
template <IndexedSemigroup Sg>
PhiMap build_phi(const Sg& s, elem_index a, const IndexSet& p,
                 const IndexSet& asa, const SubSemigroup<Sg>& sa_sub,
                 const SubSemigroup<Sg>& asa_sub) {
  PhiMap phi;
  phi.a = a;
  phi.p = p;
  phi.asa = asa;
  phi.image.reserve(p.size());
  for (auto x : p) {
    elem_index ax = s.product(a, x);
    invariant(set_contains(asa, ax), "phi leaves aSa");
    phi.image.push_back(ax);
  }
  IndexSet image_set = phi.image;
  sort_unique(image_set);
  invariant(image_set == asa, "phi is not surjective onto aSa");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      elem_index xy = s.product(p[i], p[j]);
      invariant(phi.apply(xy) == s.product(phi.image[i], phi.image[j]),
                "phi is not multiplicative");
    }

  IndexSet e_sa = set_intersection(idempotents(s), sa_sub.members());
  IndexSet e_asa = set_intersection(idempotents(s), asa);
  invariant(is_subset(e_sa, p), "an idempotent of Sa escapes P");
  invariant(e_sa == phi.preimage(e_asa),
            "E(Sa) differs from the phi-preimage of E(aSa)");

  IndexSet ig_sa = sa_sub.to_parent(idempotent_generated(sa_sub));
  IndexSet ig_asa = asa_sub.to_parent(idempotent_generated(asa_sub));
  invariant(ig_sa == phi.preimage(ig_asa),
            "the idempotent-generated part of Sa differs from the "
            "phi-preimage of that of aSa");
  return phi;
}

}  // namespace detail

/// Everything the deeper structure theory consumes, computed once per
/// sandwich-regular idempotent a.
template <IndexedSemigroup Sg>
struct IdealContext {
  const Sg& s;
  const GreenStructure& g;  // Green's structure of the ambient semigroup
  elem_index a;
  IndexSet sa, asa;
  PSets ps;
  SubSemigroup<Sg> sa_sub, p_sub, asa_sub;
  GreenStructure green_sa, green_p, green_asa;
  PhiMap phi;
};

template <IndexedSemigroup Sg>
IdealContext<Sg> make_ideal_context(const Sg& s, const GreenStructure& g,
                                    elem_index a) {
  require(s.product(a, a) == a,
          "the structure theory requires an idempotent generator");
  IndexSet sa = left_ideal(s, a);
  PSets ps = p_sets(s, g, a);
  IndexSet asa;
  for (elem_index x = 0; x < s.size(); ++x)
    asa.push_back(s.product(s.product(a, x), a));
  sort_unique(asa);
  for (auto x : asa)
    require(is_regular_element(s, x),
            "the structure theory requires a sandwich-regular generator");

  SubSemigroup<Sg> sa_sub(s, sa);
  SubSemigroup<Sg> p_sub(s, ps.p);
  SubSemigroup<Sg> asa_sub(s, asa);
  GreenStructure green_sa = green(sa_sub);
  GreenStructure green_p = green(p_sub);
  GreenStructure green_asa = green(asa_sub);
  PhiMap phi = detail::build_phi(s, a, ps.p, asa, sa_sub, asa_sub);
  return IdealContext<Sg>{s,
                          g,
                          a,
                          std::move(sa),
                          std::move(asa),
                          std::move(ps),
                          std::move(sa_sub),
                          std::move(p_sub),
                          std::move(asa_sub),
                          std::move(green_sa),
                          std::move(green_p),
                          std::move(green_asa),
                          std::move(phi)};
}

template <IndexedSemigroup Sg>
PhiMap phi_map(const Sg& s, const GreenStructure& g, elem_index a) {
  return make_ideal_context(s, g, a).phi;
}

// ---- hat relations and the inflation picture

struct HatReport {
  Partition lhat, rhat, hhat, dhat, jhat;  // on local indices of P
  std::size_t rho = 0;                     // |R̂_a / R^a|
  IndexSet hhat_class_of_a;                // ambient members of Ĥ_a
  std::vector<std::size_t> rhat_r;         // per R̂-class: # of R^a-classes
  std::vector<bool> hhat_over_group;       // per Ĥ-class
  std::size_t num_group_hhat = 0;
};

template <IndexedSemigroup Sg>
HatReport hat_relations(const IdealContext<Sg>& c) {
  const Sg& s = c.s;
  const std::size_t np = c.p_sub.size();
  HatReport out;

  std::vector<elem_index> phi_local(np);
  for (elem_index i = 0; i < np; ++i)
    phi_local[i] = c.asa_sub.local_index(c.phi.image[i]);

  auto pull = [&](const Partition& asa_part) {
    std::vector<elem_index> labels(np);
    for (elem_index i = 0; i < np; ++i)
      labels[i] = asa_part.class_of[phi_local[i]];
    return Partition::from_labels(labels);
  };
  out.lhat = pull(c.green_asa.l);
  out.rhat = pull(c.green_asa.r);
  out.hhat = pull(c.green_asa.h);
  out.dhat = pull(c.green_asa.d);
  out.jhat = pull(c.green_asa.j);

  // K-classes of the regular subsemigroups P and aSa restrict from the
  // ambient semigroup
  auto check_restriction = [&](const SubSemigroup<Sg>& sub,
                               const GreenStructure& gs, const Partition& amb,
                               const Partition& local, const char* what) {
    for (const auto& cls : local.classes) {
      elem_index rep = sub.parent_index(cls[0]);
      IndexSet want =
          set_intersection(amb.classes[amb.class_of[rep]], sub.members());
      invariant(sub.to_parent(cls) == want, what);
      (void)gs;
    }
  };
  check_restriction(c.p_sub, c.green_p, c.g.l, c.green_p.l,
                    "L-classes of P are not restrictions of ambient ones");
  check_restriction(c.p_sub, c.green_p, c.g.r, c.green_p.r,
                    "R-classes of P are not restrictions of ambient ones");
  check_restriction(c.p_sub, c.green_p, c.g.d, c.green_p.d,
                    "D-classes of P are not restrictions of ambient ones");
  check_restriction(c.asa_sub, c.green_asa, c.g.l, c.green_asa.l,
                    "L-classes of aSa are not restrictions of ambient ones");
  check_restriction(c.asa_sub, c.green_asa, c.g.r, c.green_asa.r,
                    "R-classes of aSa are not restrictions of ambient ones");
  check_restriction(c.asa_sub, c.green_asa, c.g.d, c.green_asa.d,
                    "D-classes of aSa are not restrictions of ambient ones");
  check_restriction(c.asa_sub, c.green_asa, c.g.j, c.green_asa.j,
                    "J-classes of aSa are not restrictions of ambient ones");
  // H-classes of P and aSa are full ambient H-classes
  for (const auto& cls : c.green_p.h.classes) {
    elem_index rep = c.p_sub.parent_index(cls[0]);
    invariant(c.p_sub.to_parent(cls) == c.g.h.classes[c.g.h.class_of[rep]],
              "an H-class of P is not a full ambient H-class");
  }
  for (const auto& cls : c.green_asa.h.classes) {
    elem_index rep = c.asa_sub.parent_index(cls[0]);
    invariant(c.asa_sub.to_parent(cls) == c.g.h.classes[c.g.h.class_of[rep]],
              "an H-class of aSa is not a full ambient H-class");
  }

  // containment chain of the hat relations
  invariant(same_partition(out.lhat, c.green_p.l), "L-hat differs from L");
  invariant(refines(c.green_p.r, out.rhat), "R does not refine R-hat");
  invariant(refines(out.rhat, c.green_p.d), "R-hat does not refine D");
  invariant(refines(c.green_p.h, out.hhat), "H does not refine H-hat");
  invariant(refines(out.hhat, c.green_p.d), "H-hat does not refine D");
  invariant(same_partition(out.dhat, c.green_p.d), "D-hat differs from D");
  invariant(same_partition(out.jhat, c.green_p.j),
            "J-hat differs from the J-relation of P");
  invariant(refines(c.green_p.d, out.jhat), "D does not refine J-hat");
  invariant(same_partition(c.green_p.j, c.green_p.d),
            "J differs from D in P although they agree in the ambient "
            "semigroup");

  // the preorder transfer: x ≤_L y in P iff ax ≤_L ay in aSa; same for ≤_J
  for (elem_index i = 0; i < np; ++i)
    for (elem_index j = 0; j < np; ++j) {
      invariant(c.green_p.leqL(i, j) ==
                    c.green_asa.leqL(phi_local[i], phi_local[j]),
                "the L-preorder does not transfer through phi");
      invariant(c.green_p.leqJ(i, j) ==
                    c.green_asa.leqJ(phi_local[i], phi_local[j]),
                "the J-preorder does not transfer through phi");
    }

  // the inflation correspondence: class counts per D-class agree
  invariant(out.dhat.num_classes() == c.green_asa.d.num_classes(),
            "D-classes of P and aSa are not in bijection");
  for (const auto& dcls : out.dhat.classes) {
    elem_index im = c.green_asa.d.class_of[phi_local[dcls[0]]];
    IndexSet rh, lh, hh, ar, al, ah;
    for (auto x : dcls) {
      rh.push_back(out.rhat.class_of[x]);
      lh.push_back(c.green_p.l.class_of[x]);
      hh.push_back(out.hhat.class_of[x]);
    }
    for (auto y : c.green_asa.d.classes[im]) {
      ar.push_back(c.green_asa.r.class_of[y]);
      al.push_back(c.green_asa.l.class_of[y]);
      ah.push_back(c.green_asa.h.class_of[y]);
    }
    sort_unique(rh);
    sort_unique(lh);
    sort_unique(hh);
    sort_unique(ar);
    sort_unique(al);
    sort_unique(ah);
    invariant(rh.size() == ar.size() && lh.size() == al.size() &&
                  hh.size() == ah.size(),
              "hat-class counts do not match the aSa class counts");
  }

  // r per R̂-class
  out.rhat_r.assign(out.rhat.num_classes(), 0);
  for (std::size_t cc = 0; cc < out.rhat.num_classes(); ++cc) {
    IndexSet rids;
    for (auto x : out.rhat.classes[cc])
      rids.push_back(c.green_p.r.class_of[x]);
    sort_unique(rids);
    out.rhat_r[cc] = rids.size();
  }
  elem_index a_local = c.p_sub.local_index(c.a);
  out.rho = out.rhat_r[out.rhat.class_of[a_local]];
  out.hhat_class_of_a =
      c.p_sub.to_parent(out.hhat.classes[out.hhat.class_of[a_local]]);

  // per Ĥ-class structure
  IndexSet e_asa_local = idempotents(c.asa_sub);
  out.hhat_over_group.assign(out.hhat.num_classes(), false);
  for (std::size_t hc = 0; hc < out.hhat.num_classes(); ++hc) {
    const IndexSet& members = out.hhat.classes[hc];
    elem_index im_h = c.green_asa.h.class_of[phi_local[members[0]]];
    bool over_group = false;
    for (auto e : e_asa_local)
      if (c.green_asa.h.class_of[e] == im_h) {
        over_group = true;
        break;
      }
    out.hhat_over_group[hc] = over_group;

    // phi restricted to each H-class is a bijection onto the image H-class
    IndexSet h_seen;
    for (auto x : members) h_seen.push_back(c.green_p.h.class_of[x]);
    sort_unique(h_seen);
    for (auto hid : h_seen) {
      const IndexSet& hcls = c.green_p.h.classes[hid];
      IndexSet image;
      for (auto x : hcls) image.push_back(c.phi.image[x]);
      sort_unique(image);
      invariant(image.size() == hcls.size(),
                "phi is not injective on an H-class");
      IndexSet target = c.asa_sub.to_parent(
          c.green_asa.h.classes[c.green_asa.h.class_of[phi_local[hcls[0]]]]);
      invariant(image == target,
                "phi does not map an H-class onto the aSa H-class");
    }

    if (over_group) {
      ++out.num_group_hhat;
      std::size_t r = out.rhat_r[out.rhat.class_of[members[0]]];
      SubSemigroup<Sg> cls_sub(c.s, c.p_sub.to_parent(members));
      GroupBandProfile prof = left_right_group_profile(cls_sub);
      invariant(prof.is_left_group,
                "an H-hat class over a group is not a left group");
      invariant(prof.degree == r,
                "left-group degree differs from the R-class count");
      invariant(prof.group.size() ==
                    c.green_p.h.classes[c.green_p.h.class_of[members[0]]]
                        .size(),
                "left-group fibre differs from the H-class size");
    }
  }
  (void)s;
  return out;
}

// ---- the ten characterisations of the mid-identities of P

struct MidIdentityReport {
  IndexSet common;  // ambient indices
  std::array<IndexSet, 10> sets;
  static constexpr std::array<const char*, 10> names = {
      "MI(Sa)",      "RI(Sa)",     "MI(P)",    "RI(P)",      "V_P(a)",
      "V(a) in P",   "V(a) in Sa", "V(a)a",    "E(Hhat_a)",  "a phi^-1"};
};

template <IndexedSemigroup Sg>
MidIdentityReport mid_identity_suite(const IdealContext<Sg>& c,
                                     const HatReport& hats) {
  const Sg& s = c.s;
  MidIdentityReport rep;

  IdentityElements ids_sa = identity_elements(c.sa_sub);
  IdentityElements ids_p = identity_elements(c.p_sub);
  rep.sets[0] = c.sa_sub.to_parent(ids_sa.mid);
  rep.sets[1] = c.sa_sub.to_parent(ids_sa.right);
  rep.sets[2] = c.p_sub.to_parent(ids_p.mid);
  rep.sets[3] = c.p_sub.to_parent(ids_p.right);
  for (auto y : c.ps.p)
    if (s.product(s.product(c.a, y), c.a) == c.a &&
        s.product(s.product(y, c.a), y) == y)
      rep.sets[4].push_back(y);
  IndexSet va = inverses_of(s, c.a);
  rep.sets[5] = set_intersection(va, c.ps.p);
  rep.sets[6] = set_intersection(va, c.sa);
  for (auto v : va) rep.sets[7].push_back(s.product(v, c.a));
  sort_unique(rep.sets[7]);
  for (auto x : hats.hhat_class_of_a)
    if (s.product(x, x) == x) rep.sets[8].push_back(x);
  for (std::size_t i = 0; i < c.ps.p.size(); ++i)
    if (c.phi.image[i] == c.a) rep.sets[9].push_back(c.ps.p[i]);

  for (std::size_t i = 1; i < rep.sets.size(); ++i)
    invariant(rep.sets[i] == rep.sets[0],
              std::string("mid-identity suite: ") + rep.names[i] +
                  " differs from " + rep.names[0]);
  rep.common = rep.sets[0];
  return rep;
}

// ---- rank and idempotent rank bounds

struct RankBoundsReport {
  std::size_t rho = 0;
  bool ri_dominated = false;

  RankCertificate rank_ha;         // rank of the group of units of aSa
  RankCertificate relrank_asa_ha;  // relrank(aSa : H_a)
  /// the structural bound rank(P) ≥ relrank(aSa:H_a) + max(rho, rank(H_a))
  /// needs aSa ∖ H_a to be an ideal, and its ingredients to be exact
  bool bound_p_applicable = false;
  std::size_t bound_p = 0;
  RankCertificate cert_t;  // rank of the left group Ĥ_a
  RankCertificate cert_p;  // rank of P via the ideal decomposition
  bool equality_p = false;

  RankCertificate rank_e_asa, idrank_e_asa;
  bool bound_e_applicable = false, bound_e_idrank_applicable = false;
  std::size_t bound_e = 0, bound_e_idrank = 0;
  RankCertificate cert_e, cert_e_idrank;
  bool equality_e = false, equality_e_idrank = false;

  bool uw_left_group_ok = false;
  bool singular_esa_applicable = false, singular_esa_ok = false;
};

template <IndexedSemigroup Sg>
RankBoundsReport rank_bounds(const IdealContext<Sg>& c, const HatReport& hats,
                             const MidIdentityReport& mi,
                             RankOptions opts = {}) {
  const Sg& s = c.s;
  RankBoundsReport out;
  out.rho = hats.rho;

  IndexSet ha_parent = c.g.h.classes[c.g.h.class_of[c.a]];
  SubSemigroup<Sg> ha_sub(s, ha_parent);
  out.rank_ha = rank_exact(ha_sub, opts);
  IndexSet ha_in_asa = c.asa_sub.to_local(ha_parent);
  out.relrank_asa_ha =
      relative_rank(c.asa_sub, c.green_asa, ha_in_asa, opts);
  out.bound_p_applicable = complement_is_ideal(c.asa_sub, ha_in_asa) &&
                           out.relrank_asa_ha.exact() && out.rank_ha.exact();
  if (out.bound_p_applicable)
    out.bound_p =
        out.relrank_asa_ha.value + std::max(out.rho, out.rank_ha.value);

  // T = Ĥ_a is a left group of degree rho over H_a
  SubSemigroup<Sg> that_sub(s, hats.hhat_class_of_a);
  GroupBandProfile tprof = left_right_group_profile(that_sub);
  out.uw_left_group_ok = tprof.is_left_group && tprof.degree == out.rho &&
                         tprof.group.size() == ha_parent.size();
  invariant(out.uw_left_group_ok,
            "H-hat_a is not a left group of degree rho over H_a");
  out.cert_t = one_sided_group_rank(that_sub, opts);

  IndexSet that_in_p = c.p_sub.to_local(hats.hhat_class_of_a);
  invariant(complement_is_ideal(c.p_sub, that_in_p),
            "P minus H-hat_a is not an ideal of P");
  // phi carries generating sets of P over Ĥ_a onto generating sets of aSa
  // over H_a, so the downstairs relative rank is a floor upstairs
  RankOptions popts = opts;
  popts.extra_lower_bound = out.relrank_asa_ha.lower_bound;
  out.cert_p =
      ideal_decomposition_rank(c.p_sub, c.green_p, that_in_p, out.cert_t,
                               popts);

  DominationProfile dom = domination(c.p_sub, c.green_p);
  out.ri_dominated = dom.ri_dominated;
  if (out.bound_p_applicable && out.cert_p.exact()) {
    invariant(out.cert_p.value >= out.bound_p,
              "certified rank of P undercuts the structural bound");
    out.equality_p = out.cert_p.value == out.bound_p;
    if (out.ri_dominated)
      invariant(out.equality_p,
                "RI-dominated P misses the structural rank value");
  }

  // idempotent-generated side
  IndexSet ig_sa = c.sa_sub.to_parent(idempotent_generated(c.sa_sub));
  IndexSet ig_asa = c.asa_sub.to_parent(idempotent_generated(c.asa_sub));
  SubSemigroup<Sg> esa_sub(s, ig_sa);
  SubSemigroup<Sg> easa_sub(s, ig_asa);
  GreenStructure green_esa = green(esa_sub);
  GreenStructure green_easa =
      ig_sa == ig_asa ? green_esa : green(easa_sub);
  // rank/idrank of the idempotent-generated part of aSa, decomposed over
  // its group of units {a} (the only unit that is a product of idempotents)
  RankCertificate unit_cert;
  unit_cert.value = 1;
  unit_cert.witness = easa_sub.to_local(IndexSet{c.a});
  unit_cert.lower_bound = 1;
  RankOptions idopts = opts;
  idopts.idempotents_only = true;
  out.rank_e_asa = ideal_decomposition_rank(easa_sub, green_easa,
                                            unit_cert.witness, unit_cert,
                                            opts);
  out.idrank_e_asa = ideal_decomposition_rank(easa_sub, green_easa,
                                              unit_cert.witness, unit_cert,
                                              idopts);
  out.bound_e_applicable = out.rank_e_asa.exact();
  out.bound_e_idrank_applicable = out.idrank_e_asa.exact();
  if (out.bound_e_applicable)
    out.bound_e = out.rank_e_asa.value + out.rho - 1;
  if (out.bound_e_idrank_applicable)
    out.bound_e_idrank = out.idrank_e_asa.value + out.rho - 1;

  SubSemigroup<Sg> te_sub(s, mi.common);
  RankCertificate cert_te = one_sided_group_rank(te_sub, opts);
  invariant(cert_te.value == out.rho,
            "the left-zero band a*phi^-1 does not have rank rho");
  IndexSet te_in_esa = esa_sub.to_local(mi.common);
  invariant(complement_is_ideal(esa_sub, te_in_esa),
            "the idempotent-generated part minus a*phi^-1 is not an ideal");
  // quotient floors through phi: generating sets of the idempotent-generated
  // part of Sa over a*phi^-1 map onto generating sets downstairs over {a}
  RankOptions eopts = opts;
  eopts.extra_lower_bound = out.rank_e_asa.lower_bound - 1;
  RankOptions eidopts = idopts;
  eidopts.extra_lower_bound = out.idrank_e_asa.lower_bound - 1;
  out.cert_e = ideal_decomposition_rank(esa_sub, green_esa, te_in_esa,
                                        cert_te, eopts);
  out.cert_e_idrank = ideal_decomposition_rank(esa_sub, green_esa, te_in_esa,
                                               cert_te, eidopts);
  if (out.bound_e_applicable && out.cert_e.exact()) {
    invariant(out.cert_e.value >= out.bound_e,
              "certified rank of the idempotent-generated part undercuts "
              "the bound");
    out.equality_e = out.cert_e.value == out.bound_e;
    if (out.ri_dominated)
      invariant(out.equality_e,
                "RI-dominated fixture misses the idempotent-generated rank "
                "value");
  }
  if (out.bound_e_idrank_applicable && out.cert_e_idrank.exact()) {
    invariant(out.cert_e_idrank.value >= out.bound_e_idrank,
              "certified idrank undercuts the bound");
    out.equality_e_idrank = out.cert_e_idrank.value == out.bound_e_idrank;
    if (out.ri_dominated)
      invariant(out.equality_e_idrank,
                "RI-dominated fixture misses the idrank value");
  }

  // when the idempotent-generated part of aSa is {a} plus the non-units,
  // the idempotent-generated part of Sa is E(Ĥ_a) plus P minus Ĥ_a
  IndexSet singular_formula = set_difference(c.asa, ha_parent);
  singular_formula.push_back(c.a);
  sort_unique(singular_formula);
  out.singular_esa_applicable = ig_asa == singular_formula;
  if (out.singular_esa_applicable) {
    IndexSet expected =
        set_union(mi.common, set_difference(c.ps.p, hats.hhat_class_of_a));
    out.singular_esa_ok = ig_sa == expected;
    invariant(out.singular_esa_ok,
              "the idempotent-generated part of Sa differs from "
              "E(Hhat_a) plus P minus Hhat_a");
  }
  return out;
}

// ---- the uniquely sandwich-regular (inverse) specialisation

struct InverseCaseReport {
  bool applicable = false;  // uniquely sandwich-regular idempotent
  bool ok = false;          // P = aSa, inverse, all inverses unique in P
};

template <IndexedSemigroup Sg>
InverseCaseReport inverse_case_check(const IdealContext<Sg>& c,
                                     const SandwichProfile& prof) {
  InverseCaseReport rep;
  if (!prof.uniquely_sandwich_regular) return rep;
  rep.applicable = true;
  invariant(c.ps.p == c.asa,
            "P differs from aSa for a uniquely sandwich-regular generator");
  invariant(is_inverse_semigroup(c.p_sub), "P is not an inverse monoid");
  for (elem_index i = 0; i < c.p_sub.size(); ++i)
    invariant(inverses_of(c.p_sub, i).size() == 1,
              "an element of P has more than one inverse within P");
  rep.ok = true;
  return rep;
}

// ---- umbrella analyses

struct LeftIdealAnalysis {
  elem_index a_input = 0;
  elem_index a = 0;  // analysis element (idempotent substitute when used)
  bool substituted = false;
  bool a_idempotent = false, a_regular = false;
  bool sandwich_regular = false, uniquely_sandwich_regular = false;
  /// recorded observation only; the two can differ in general semigroups
  bool p_equals_p_prime = false;
  IndexSet sa, asa, reg_sa;
  PSets ps;  // for the input element
  IdealGreenReport green_report;

  bool deep = false;  // the layers below are populated
  PSets ps_deep;      // for the analysis idempotent
  HatReport hats;
  MidIdentityReport mi;
  RankBoundsReport ranks;
  InverseCaseReport inverse;
};

template <IndexedSemigroup Sg>
LeftIdealAnalysis analyze_left_ideal(const Sg& s, const GreenStructure& g,
                                     elem_index a, RankOptions opts = {}) {
  require(a < s.size(), "generator index out of range");
  LeftIdealAnalysis out;
  out.a_input = a;
  out.sa = left_ideal(s, a);
  out.ps = p_sets(s, g, a);
  out.p_equals_p_prime = out.ps.p == out.ps.p_prime;
  out.green_report = verify_green_in_ideal(s, g, a);

  SandwichProfile prof = sandwich_profile(s, g, a);
  out.a_idempotent = prof.a_idempotent;
  out.a_regular = prof.a_regular;
  out.asa = prof.asa;
  out.reg_sa = prof.reg_sa;
  out.sandwich_regular = prof.sandwich_regular;
  out.uniquely_sandwich_regular = prof.uniquely_sandwich_regular;

  elem_index e = prof.substitute.value_or(a);
  out.a = e;
  out.substituted = e != a;
  SandwichProfile prof_e =
      out.substituted ? sandwich_profile(s, g, e) : std::move(prof);
  out.deep = prof_e.a_idempotent && prof_e.sandwich_regular;
  if (out.deep) {
    IdealContext<Sg> ctx = make_ideal_context(s, g, e);
    out.ps_deep = ctx.ps;
    out.hats = hat_relations(ctx);
    out.mi = mid_identity_suite(ctx, out.hats);
    out.ranks = rank_bounds(ctx, out.hats, out.mi, opts);
    out.inverse = inverse_case_check(ctx, prof_e);
  }
  return out;
}

template <IndexedSemigroup Sg>
LeftIdealAnalysis analyze_left_ideal(const Sg& s, elem_index a,
                                     RankOptions opts = {}) {
  return analyze_left_ideal(s, green(s), a, opts);
}

/// The right-ideal analysis is the left-ideal analysis of the opposite
/// semigroup; indices are shared, so the mirrored sets read directly as
/// subsets of the original semigroup.
struct RightIdealAnalysis {
  LeftIdealAnalysis mirror;
  IndexSet as_set;  // aS in the original semigroup
  bool q_direct_check_ok = false;

  const IndexSet& q() const { return mirror.ps.p; }
  const IndexSet& q_prime() const { return mirror.ps.p_prime; }
  const IndexSet& q_dprime() const { return mirror.ps.p_dprime; }
  const IndexSet& q_tprime() const { return mirror.ps.p_tprime; }
  std::size_t lambda() const { return mirror.hats.rho; }
  bool li_dominated() const { return mirror.ranks.ri_dominated; }
};

template <typename E>
RightIdealAnalysis analyze_right_ideal(const Semigroup<E>& s,
                                       const GreenStructure& g,
                                       const Semigroup<E>& op,
                                       const GreenStructure& g_op,
                                       elem_index a, RankOptions opts = {}) {
  RightIdealAnalysis out;
  out.mirror = analyze_left_ideal(op, g_op, a, opts);
  out.as_set = right_ideal(s, a);
  invariant(out.as_set == out.mirror.sa,
            "aS differs from the opposite-side Sa");
  IndexSet q;
  for (auto x : out.as_set)
    if (g.r.same(x, s.product(x, a))) q.push_back(x);
  out.q_direct_check_ok = q == out.mirror.ps.p;
  invariant(out.q_direct_check_ok,
            "direct computation of Q disagrees with the opposite reduction");
  return out;
}

template <typename E>
RightIdealAnalysis analyze_right_ideal(const Semigroup<E>& s, elem_index a,
                                       RankOptions opts = {}) {
  Semigroup<E> op = s.opposite();
  return analyze_right_ideal(s, green(s), op, green(op), a, opts);
}

}  // namespace eggbox

#endif  // EGGBOX_IDEAL_HPP_
