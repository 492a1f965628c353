#include <catch2/catch_amalgamated.hpp>

#include "eggbox/green.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/rank.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/semigroup.hpp"

using namespace eggbox;

namespace {

IndexSet permutation_indices(const Semigroup<Transformation>& s) {
  IndexSet out;
  for (elem_index i = 0; i < s.size(); ++i)
    if (s.element(i).is_permutation()) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("exact ranks of small monoids") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  RankCertificate cert = rank_exact(t3, g);
  REQUIRE(cert.value == 3);
  REQUIRE(cert.exact());
  REQUIRE(!cert.budget_exhausted);
  // two generators never suffice: to generate the group of units both would
  // have to be permutations, leaving the singular part unreachable
  REQUIRE(cert.lower_bound_kind == LowerBoundKind::exhaustive);
  REQUIRE(cert.witness.size() == 3);
  REQUIRE(closure_within(t3, cert.witness).size() == t3.size());

  auto s3 = build_symmetric_group(3);
  RankCertificate scert = rank_exact(s3);
  REQUIRE(scert.value == 2);
  REQUIRE(scert.exact());

  auto mono = monogenic(3, 1);
  RankCertificate mcert = rank_exact(mono);
  REQUIRE(mcert.value == 1);
  REQUIRE(mcert.exact());
  // found at the covering floor, so the bound is the covering bound
  REQUIRE(mcert.lower_bound_kind == LowerBoundKind::left_zero_projection);
  REQUIRE(mcert.witness == IndexSet{0});
}

TEST_CASE("covering lower bound counts maximal class rows and columns") {
  // left group (left-zero band of size 2) x Z_2: one J-class with two
  // R-classes and one L-class, so the covering bound is the degree 2
  std::vector<elem_index> table = {
      0, 1, 0, 1,
      1, 0, 1, 0,
      2, 3, 2, 3,
      3, 2, 3, 2};
  auto s = Semigroup<std::uint32_t>::from_table(4, table);
  GreenStructure g = green(s);
  REQUIRE(maximal_class_lower_bound(s, g) == 2);

  RankCertificate cert = one_sided_group_rank(s);
  REQUIRE(cert.value == 2);
  REQUIRE(cert.exact());
  REQUIRE(cert.lower_bound_kind == LowerBoundKind::left_zero_projection);
  REQUIRE(cert.witness.size() == 2);
  REQUIRE(closure_within(s, cert.witness).size() == s.size());

  // a plain group is a degenerate one-sided group of degree 1
  auto c3 = monogenic(1, 3);
  RankCertificate gcert = one_sided_group_rank(c3);
  REQUIRE(gcert.value == 1);
  REQUIRE(gcert.exact());
}

TEST_CASE("relative rank over the group of units") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  IndexSet units = permutation_indices(t3);
  REQUIRE(units.size() == 6);
  REQUIRE(is_subsemigroup(t3, units));
  REQUIRE(complement_is_ideal(t3, units));

  RankCertificate rel = relative_rank(t3, g, units);
  REQUIRE(rel.value == 1);
  REQUIRE(rel.exact());
  REQUIRE(rel.witness.size() == 1);
  REQUIRE(!t3.element(rel.witness[0]).is_permutation());

  // glue the parts back together: rank(T_3) = relrank(T_3 : S_3) + rank(S_3)
  SubSemigroup<Semigroup<Transformation>> s3(t3, units);
  RankCertificate gcert = rank_exact(s3);
  RankCertificate top;
  top.value = gcert.value;
  top.witness = s3.to_parent(gcert.witness);
  top.lower_bound = gcert.lower_bound;
  top.lower_bound_kind = gcert.lower_bound_kind;
  RankCertificate whole = ideal_decomposition_rank(t3, g, units, top);
  REQUIRE(whole.value == 3);
  REQUIRE(whole.exact());
  REQUIRE(whole.lower_bound_kind == LowerBoundKind::ideal_decomposition);
  REQUIRE(whole.witness.size() == 3);
}

TEST_CASE("idempotent rank of the idempotent generated part") {
  auto t3 = build_full_transformation_monoid(3);
  IndexSet ig = idempotent_generated(t3);
  REQUIRE(ig.size() == 22);
  SubSemigroup<Semigroup<Transformation>> esub(t3, ig);
  GreenStructure ge = green(esub);

  RankCertificate rcert = rank_exact(esub, ge);
  REQUIRE(rcert.value == 4);
  REQUIRE(rcert.exact());

  RankOptions idopts;
  idopts.idempotents_only = true;
  RankCertificate icert = rank_exact(esub, ge, idopts);
  REQUIRE(icert.value == 4);
  REQUIRE(icert.exact());
  for (auto w : icert.witness)
    REQUIRE(esub.product(w, w) == w);

  // relative idempotent rank over the trivial group of units
  elem_index id_local =
      esub.local_index(*t3.index_of(Transformation::identity(3)));
  RankCertificate relid = relative_rank(esub, ge, IndexSet{id_local}, idopts);
  REQUIRE(relid.value == 3);
  REQUIRE(relid.exact());
  // found right at the covering floor: the top singular class has 3 kernels
  REQUIRE(relid.lower_bound_kind == LowerBoundKind::left_zero_projection);

  // idrank is only defined for idempotent generated semigroups
  REQUIRE_THROWS_AS(rank_exact(t3, idopts), InputError);
}

TEST_CASE("externally certified floors and budget exhaustion") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);

  // an external floor of 3 makes the search succeed on its first level and
  // the certificate records the quotient provenance
  RankOptions qopts;
  qopts.extra_lower_bound = 3;
  RankCertificate qcert = rank_exact(t3, g, qopts);
  REQUIRE(qcert.value == 3);
  REQUIRE(qcert.exact());
  REQUIRE(qcert.lower_bound_kind == LowerBoundKind::quotient);

  // a tiny budget cannot finish: the certificate degrades to the greedy
  // witness with an honest lower bound and the exhaustion flag set
  RankOptions small;
  small.budget = 50;
  RankCertificate bcert = rank_exact(t3, g, small);
  REQUIRE(bcert.budget_exhausted);
  REQUIRE(!bcert.exact());
  REQUIRE(bcert.value >= 3);
  REQUIRE(bcert.lower_bound >= 1);
  REQUIRE(bcert.lower_bound < bcert.value);
  REQUIRE(closure_within(t3, bcert.witness).size() == t3.size());
}
