#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "eggbox/green.hpp"
#include "eggbox/ideal.hpp"
#include "eggbox/identities.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/regularity.hpp"

using namespace eggbox;

namespace {

elem_index local_in(const IndexSet& members, elem_index parent) {
  auto it = std::lower_bound(members.begin(), members.end(), parent);
  REQUIRE(it != members.end());
  REQUIRE(*it == parent);
  return static_cast<elem_index>(it - members.begin());
}

}  // namespace

TEST_CASE("green structure formulas hold in every principal left ideal") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g3 = green(t3);
  for (elem_index a = 0; a < t3.size(); ++a) {
    IdealGreenReport rep = verify_green_in_ideal(t3, g3, a);
    REQUIRE(rep.ok);
    REQUIRE(rep.corollary_checked);  // every element of T_3 is regular
    REQUIRE(!rep.mismatch.has_value());
  }

  auto i3 = build_symmetric_inverse_monoid(3);
  GreenStructure gi = green(i3);
  for (elem_index a = 0; a < i3.size(); ++a)
    REQUIRE(verify_green_in_ideal(i3, gi, a).ok);

  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned r = 1; r <= 3; ++r) {
      auto s = monogenic(m, r);
      GreenStructure g = green(s);
      for (elem_index a = 0; a < s.size(); ++a)
        REQUIRE(verify_green_in_ideal(s, g, a).ok);
    }

  // two-element null semigroup: both generators, one of them non-regular
  auto null2 = Semigroup<std::uint32_t>::from_table(2, {0, 0, 0, 0});
  GreenStructure gn = green(null2);
  REQUIRE(verify_green_in_ideal(null2, gn, 0).ok);
  REQUIRE(verify_green_in_ideal(null2, gn, 1).ok);
}

TEST_CASE("non regular generator shrinks the double primed sets") {
  // a^4 = a^3: Sa = {a^2, a^3} while P'' = P''' = {a^3}
  auto s = monogenic(3, 1);
  GreenStructure g = green(s);
  REQUIRE(left_ideal(s, 0) == IndexSet{1, 2});
  PSets ps = p_sets(s, g, 0);
  REQUIRE(ps.p_dprime == IndexSet{2});
  REQUIRE(ps.p_tprime == IndexSet{2});
  REQUIRE(ps.p == IndexSet{2});
  REQUIRE(ps.p_prime == IndexSet{2});

  LeftIdealAnalysis an = analyze_left_ideal(s, g, 0);
  REQUIRE(!an.a_regular);
  REQUIRE(!an.a_idempotent);
  REQUIRE(!an.deep);
  REQUIRE(an.green_report.ok);
  REQUIRE(!an.green_report.corollary_checked);
}

TEST_CASE("deep analysis of an image restriction fixture") {
  auto t4 = build_full_transformation_monoid(4);
  GreenStructure g = green(t4);
  elem_index a = *t4.index_of(parse_transformation("[1,2,3,3]"));

  LeftIdealAnalysis an = analyze_left_ideal(t4, g, a);
  REQUIRE(an.a_idempotent);
  REQUIRE(an.a_regular);
  REQUIRE(!an.substituted);
  REQUIRE(an.sandwich_regular);
  REQUIRE(!an.uniquely_sandwich_regular);
  REQUIRE(an.p_equals_p_prime);
  REQUIRE(an.green_report.ok);
  REQUIRE(an.green_report.corollary_checked);

  // S a = {f : im f within {1,2,3}}, P = Reg(Sa), aSa iso to T_3
  REQUIRE(an.sa.size() == 81);
  REQUIRE(an.ps.p.size() == 57);
  REQUIRE(an.asa.size() == 27);
  REQUIRE(an.reg_sa == an.ps.p);
  REQUIRE(an.ps.p_dprime == an.sa);
  REQUIRE(an.ps.p_tprime == an.sa);

  REQUIRE(an.deep);
  REQUIRE(an.ps_deep.p == an.ps.p);

  // inflation data: rho = 3^1, the class of a is a left group of degree 3
  // over H_a (iso to S_3), and the top R-hat class splits into 3 R-classes
  REQUIRE(an.hats.rho == 3);
  REQUIRE(an.hats.hhat_class_of_a.size() == 18);
  elem_index a_local = local_in(an.ps_deep.p, a);
  REQUIRE(an.hats.rhat_r[an.hats.rhat.class_of[a_local]] == 3);
  // H-hat classes biject with the H-classes of aSa (13 for T_3, 10 groups)
  REQUIRE(an.hats.hhat.num_classes() == 13);
  REQUIRE(an.hats.num_group_hhat == 10);

  // the ten mid-identity characterisations agree and have size rho
  REQUIRE(an.mi.common.size() == 3);
  for (const auto& set : an.mi.sets) REQUIRE(set == an.mi.common);

  // rank machinery: rank(P) = 1 + 3, rank of the idempotent generated part
  // = C(3,2) + 3, both certified exactly and matching the bounds
  REQUIRE(an.ranks.ri_dominated);
  REQUIRE(an.ranks.uw_left_group_ok);
  REQUIRE(an.ranks.rank_ha.value == 2);
  REQUIRE(an.ranks.relrank_asa_ha.value == 1);
  REQUIRE(an.ranks.bound_p_applicable);
  REQUIRE(an.ranks.bound_p == 4);
  REQUIRE(an.ranks.cert_t.value == 3);
  REQUIRE(an.ranks.cert_p.exact());
  REQUIRE(an.ranks.cert_p.value == 4);
  REQUIRE(an.ranks.equality_p);
  REQUIRE(an.ranks.rank_e_asa.value == 4);
  REQUIRE(an.ranks.idrank_e_asa.value == 4);
  REQUIRE(an.ranks.bound_e == 6);
  REQUIRE(an.ranks.cert_e.exact());
  REQUIRE(an.ranks.cert_e.value == 6);
  REQUIRE(an.ranks.equality_e);
  REQUIRE(an.ranks.cert_e_idrank.value == 6);
  REQUIRE(an.ranks.equality_e_idrank);
  REQUIRE(!an.inverse.applicable);

  // MI-domination and RI-domination coincide on P (it has right identities)
  SubSemigroup<Semigroup<Transformation>> p_sub(t4, an.ps.p);
  DominationProfile dom = domination(p_sub, green(p_sub));
  REQUIRE(dom.ri_dominated == an.ranks.ri_dominated);
  REQUIRE(dom.mi_dominated == dom.ri_dominated);
}

TEST_CASE("right ideal analysis mirrors through the opposite semigroup") {
  auto t3 = build_full_transformation_monoid(3);
  elem_index a = *t3.index_of(parse_transformation("[1,2,2]"));
  RightIdealAnalysis an = analyze_right_ideal(t3, a);

  // aS = maps constant on the blocks of ker a = {{1},{2,3}}
  REQUIRE(an.as_set.size() == 9);
  REQUIRE(an.q_direct_check_ok);
  REQUIRE(an.q().size() == 7);
  REQUIRE(an.mirror.deep);
  REQUIRE(an.mirror.green_report.ok);
  REQUIRE(an.lambda() == 2);
  REQUIRE(an.li_dominated());
  REQUIRE(an.mirror.ranks.cert_p.exact());
  REQUIRE(an.mirror.ranks.cert_p.value == 3);

  // Q really is the set of regular elements of aS, computed directly
  SubSemigroup<Semigroup<Transformation>> as_sub(t3, an.as_set);
  IndexSet reg = as_sub.to_parent(regular_elements(as_sub));
  REQUIRE(an.q() == reg);

  // MI-domination and LI-domination coincide on Q (it has left identities)
  SubSemigroup<Semigroup<Transformation>> q_sub(t3, an.q());
  DominationProfile dom = domination(q_sub, green(q_sub));
  REQUIRE(dom.li_dominated == an.li_dominated());
  REQUIRE(dom.mi_dominated == dom.li_dominated);
  REQUIRE(!dom.ri_dominated);
}

TEST_CASE("uniquely sandwich regular generators give inverse monoids") {
  auto i3 = build_symmetric_inverse_monoid(3);
  GreenStructure g = green(i3);
  elem_index a = *i3.index_of(PartialMap::partial_identity(3, {0, 1}));

  LeftIdealAnalysis an = analyze_left_ideal(i3, g, a);
  REQUIRE(an.a_idempotent);
  REQUIRE(an.sandwich_regular);
  REQUIRE(an.uniquely_sandwich_regular);
  REQUIRE(an.deep);
  REQUIRE(an.inverse.applicable);
  REQUIRE(an.inverse.ok);

  // P = aSa restricts to the symmetric inverse monoid on {1,2}
  REQUIRE(an.sa.size() == 13);
  REQUIRE(an.ps.p.size() == 7);
  REQUIRE(an.ps.p == an.asa);
  REQUIRE(an.hats.rho == 1);
  REQUIRE(an.mi.common == IndexSet{a});
  REQUIRE(an.ranks.cert_p.exact());
  REQUIRE(an.ranks.cert_p.value == 2);
  // the idempotents form a semilattice of size 2^2 with rank 1 + |A|
  REQUIRE(an.ranks.cert_e.exact());
  REQUIRE(an.ranks.cert_e.value == 3);
  REQUIRE(an.ranks.cert_e_idrank.value == 3);
}

TEST_CASE("degenerate deep analysis on a zero semigroup") {
  auto null2 = Semigroup<std::uint32_t>::from_table(2, {0, 0, 0, 0});
  GreenStructure g = green(null2);
  LeftIdealAnalysis an = analyze_left_ideal(null2, g, 0);
  REQUIRE(an.a_idempotent);
  REQUIRE(an.deep);
  REQUIRE(an.sa == IndexSet{0});
  REQUIRE(an.ps.p == IndexSet{0});
  REQUIRE(an.hats.rho == 1);
  REQUIRE(an.ranks.cert_p.value == 1);
  REQUIRE(an.ranks.cert_e.value == 1);
  REQUIRE(an.inverse.applicable);
  REQUIRE(an.inverse.ok);
}
