#include <catch2/catch_amalgamated.hpp>

#include "eggbox/identities.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/regularity.hpp"

using namespace eggbox;

TEST_CASE("idempotents of the classical monoids") {
  // E(T_n) counts: sum over mu of C(n,mu) mu^(n-mu) -> 1, 3, 10, 41
  std::vector<std::size_t> counts = {1, 3, 10, 41};
  for (unsigned n = 1; n <= 4; ++n) {
    auto tn = build_full_transformation_monoid(n);
    IndexSet e = idempotents(tn);
    REQUIRE(e.size() == counts[n - 1]);
    for (auto x : e) REQUIRE(tn.element(x).is_idempotent());
  }
  // E(I_n) = partial identities = 2^n
  auto i3 = build_symmetric_inverse_monoid(3);
  IndexSet e3 = idempotents(i3);
  REQUIRE(e3.size() == 8);
  for (auto x : e3) {
    const PartialMap& f = i3.element(x);
    REQUIRE(f == PartialMap::partial_identity(3, f.domain()));
  }
}

TEST_CASE("regular elements and inverses") {
  auto t3 = build_full_transformation_monoid(3);
  REQUIRE(regular_elements(t3).size() == 27);  // T_n is regular
  REQUIRE(is_regular_semigroup(t3));
  REQUIRE(!is_inverse_semigroup(t3));

  // the identity's only inverse is itself; a rank-2 idempotent has more
  elem_index id = *t3.index_of(Transformation::identity(3));
  REQUIRE(inverses_of(t3, id) == IndexSet{id});
  elem_index e = *t3.index_of(parse_transformation("[1,1,3]"));
  IndexSet vs = inverses_of(t3, e);
  REQUIRE(vs.size() > 1);
  for (auto v : vs) {
    REQUIRE(t3.product(t3.product(e, v), e) == e);
    REQUIRE(t3.product(t3.product(v, e), v) == v);
  }

  auto mono = monogenic(3, 1);
  REQUIRE(regular_elements(mono) == IndexSet{2});
  REQUIRE(!is_regular_semigroup(mono));
}

TEST_CASE("inverse monoid detection") {
  auto i2 = build_symmetric_inverse_monoid(2);
  REQUIRE(is_inverse_semigroup(i2));
  REQUIRE(idempotents_commute(i2));
  for (elem_index x = 0; x < i2.size(); ++x)
    REQUIRE(inverses_of(i2, x).size() == 1);

  // the idempotents of an inverse monoid form a semilattice
  SubSemigroup es(i2, idempotents(i2));
  REQUIRE(is_semilattice(es));
}

TEST_CASE("idempotent generated subsemigroup of T_3") {
  auto t3 = build_full_transformation_monoid(3);
  IndexSet ig = idempotent_generated(t3);
  // classical: identity plus all non-permutations = 27 - 6 + 1 = 22
  REQUIRE(ig.size() == 22);
  for (auto x : ig) {
    const Transformation& f = t3.element(x);
    REQUIRE((f == Transformation::identity(3) || !f.is_permutation()));
  }
}

TEST_CASE("local monoid at an idempotent") {
  auto t3 = build_full_transformation_monoid(3);
  elem_index e = *t3.index_of(parse_transformation("[1,2,2]"));
  IndexSet loc = local_monoid(t3, e);
  // eT_3e restricted to {1,2} acts like T_2: 4 elements
  REQUIRE(loc.size() == 4);
  for (auto x : loc) {
    REQUIRE(t3.product(e, x) == x);
    REQUIRE(t3.product(x, e) == x);
  }
}

TEST_CASE("one sided identities and domination") {
  auto t2 = build_full_transformation_monoid(2);
  IdentityElements ids = identity_elements(t2);
  elem_index id = *t2.index_of(Transformation::identity(2));
  REQUIRE(ids.right == IndexSet{id});
  REQUIRE(ids.left == IndexSet{id});
  REQUIRE(ids.mid == IndexSet{id});

  GreenStructure g = green(t2);
  DominationProfile dom = domination(t2, g);
  REQUIRE(dom.mi_dominated);
  REQUIRE(dom.ri_dominated);
  REQUIRE(dom.li_dominated);

  // a right-zero band (xy = y): every element is a left identity and a
  // mid-identity, none is a right identity, and it is LI- but not
  // RI-dominated
  std::vector<elem_index> table = {0, 1, 0, 1};
  auto lz = Semigroup<std::uint32_t>::from_table(2, table);
  IdentityElements lids = identity_elements(lz);
  REQUIRE(lids.right.empty());
  REQUIRE(lids.left == IndexSet{0, 1});
  REQUIRE(lids.mid == IndexSet{0, 1});
  DominationProfile ldom = domination(lz, green(lz));
  REQUIRE(ldom.li_dominated);
  REQUIRE(!ldom.ri_dominated);
  REQUIRE(ldom.ri_counterexample.has_value());
}

TEST_CASE("left and right group profiles") {
  // left-zero band x group: direct check on lz x Z_2 as a 4-element table
  // (e,g)(f,h) = (e, g+h): elements 0=(0,0),1=(0,1),2=(1,0),3=(1,1)
  std::vector<elem_index> table = {
      0, 1, 0, 1,
      1, 0, 1, 0,
      2, 3, 2, 3,
      3, 2, 3, 2};
  auto s = Semigroup<std::uint32_t>::from_table(4, table);
  GroupBandProfile prof = left_right_group_profile(s);
  REQUIRE(prof.is_left_group);
  REQUIRE(!prof.is_right_group);
  REQUIRE(prof.degree == 2);
  REQUIRE(prof.group.size() == 2);

  auto c3 = monogenic(1, 3);
  GroupBandProfile gprof = left_right_group_profile(c3);
  REQUIRE(gprof.is_group);
  REQUIRE(gprof.is_left_group);
  REQUIRE(gprof.is_right_group);
  REQUIRE(gprof.degree == 1);
}

TEST_CASE("mid identity local monoid surmorphism") {
  auto t2 = build_full_transformation_monoid(2);
  elem_index id = *t2.index_of(Transformation::identity(2));
  REQUIRE(mi_maps_onto_local_monoid(t2, id));
  REQUIRE(union_of_local_monoids_is_all(t2, {id}));
}
