#include <catch2/catch_amalgamated.hpp>

#include "eggbox/families.hpp"
#include "eggbox/green.hpp"
#include "eggbox/monoids.hpp"

using namespace eggbox;

TEST_CASE("image restriction families at degree 3") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  auto specs = all_subset_specs(FamilyKind::txa, 3);
  REQUIRE(specs.size() == 7);

  for (const auto& spec : specs) {
    const unsigned asz = static_cast<unsigned>(spec.a_set.size());
    TxaFamilyReport rep = check_txa_family(t3, g, spec);
    REQUIRE(rep.clauses_checked);
    REQUIRE(rep.deep);
    REQUIRE(!rep.formulas.empty());
    for (const auto& f : rep.formulas) {
      INFO(f.quantity << " at " << f.fixture);
      REQUIRE(f.ok);
    }
    REQUIRE(rep.family.size() == size_txa(3, asz));
    REQUIRE(rep.p.size() == size_p_txa(3, asz));
    REQUIRE(rep.e_family.size() == count_e_txa(3, asz));
    REQUIRE(rep.ri.size() == count_ri_txa(3, asz));
    REQUIRE(rep.analysis.ranks.cert_p.value == rank_p_txa(3, asz));
    REQUIRE(rep.analysis.ranks.cert_e.value == rank_e_txa(3, asz));
    REQUIRE(rep.analysis.ranks.cert_e_idrank.value == rank_e_txa(3, asz));
  }

  FamilySpec two = family_spec_from_set(FamilyKind::txa, 3, {0, 1});
  TxaFamilyReport rep = check_txa_family(t3, g, two);
  REQUIRE(rep.family.size() == 8);
  REQUIRE(rep.p.size() == 6);
  REQUIRE(rep.ri.size() == 2);
  REQUIRE(rep.analysis.ranks.cert_p.value == 3);
}

TEST_CASE("kernel restriction families at degree 3") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  auto op = t3.opposite();
  GreenStructure g_op = green(op);
  auto specs = all_partition_specs(3);
  REQUIRE(specs.size() == 5);  // Bell number B_3

  for (const auto& spec : specs) {
    TxalphaFamilyReport rep = check_txalpha_family(t3, g, op, g_op, spec);
    REQUIRE(rep.clauses_checked);
    REQUIRE(rep.deep);
    for (const auto& f : rep.formulas) {
      INFO(f.quantity << " at " << f.fixture);
      REQUIRE(f.ok);
    }
    REQUIRE(rep.family.size() == size_txalpha(3, spec.alpha));
    REQUIRE(rep.q.size() == size_q_txalpha(spec.alpha));
    REQUIRE(rep.e_family.size() == count_e_txalpha(spec.alpha));
    REQUIRE(rep.li.size() == count_li_txalpha(spec.alpha));
    REQUIRE(rep.analysis.lambda() == count_li_txalpha(spec.alpha));
    REQUIRE(rep.analysis.mirror.ranks.cert_p.value ==
            rank_q_txalpha(3, spec.alpha));
    REQUIRE(rep.analysis.mirror.ranks.cert_e.value ==
            rank_e_txalpha(3, spec.alpha));
  }
}

TEST_CASE("transversal choice does not affect the kernel family") {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  FamilySpec one = family_spec_from_alpha(3, {{0, 1}, {2}});
  FamilySpec two =
      family_spec_from_alpha(3, {{0, 1}, {2}}, std::vector<unsigned>{1, 2});
  REQUIRE(!(one.a == two.a));

  TxalphaFamilyReport rep_one = check_txalpha_family(t3, g, one);
  TxalphaFamilyReport rep_two = check_txalpha_family(t3, g, two);
  REQUIRE(rep_one.family == rep_two.family);
  REQUIRE(rep_one.q == rep_two.q);
  REQUIRE(rep_one.e_family == rep_two.e_family);
  REQUIRE(rep_one.li == rep_two.li);
  REQUIRE(rep_one.analysis.lambda() == rep_two.analysis.lambda());
}

TEST_CASE("injective families at degree 3") {
  auto i3 = build_symmetric_inverse_monoid(3);
  GreenStructure g = green(i3);
  auto specs = all_subset_specs(FamilyKind::ixa, 3);
  REQUIRE(specs.size() == 8);  // includes the empty set

  for (const auto& spec : specs) {
    const unsigned asz = static_cast<unsigned>(spec.a_set.size());
    IxaFamilyReport rep = check_ixa_family(i3, g, spec);
    REQUIRE(rep.clauses_checked);
    REQUIRE(rep.deep);
    for (const auto& f : rep.formulas) {
      INFO(f.quantity << " at " << f.fixture);
      REQUIRE(f.ok);
    }
    REQUIRE(rep.family.size() == size_ixa(3, asz));
    REQUIRE(rep.p.size() == size_p_ixa(asz));
    REQUIRE(rep.e_family.size() == count_e_ixa(asz));
    REQUIRE(rep.analysis.inverse.applicable);
    REQUIRE(rep.analysis.inverse.ok);
    REQUIRE(rep.analysis.ranks.cert_p.value == rank_p_ixa(asz));
    REQUIRE(rep.analysis.ranks.cert_e.value == rank_e_ixa(asz));
  }

  FamilySpec full = family_spec_from_set(FamilyKind::ixa, 3, {0, 1, 2});
  IxaFamilyReport rep = check_ixa_family(i3, g, full);
  REQUIRE(rep.p.size() == 34);  // the whole of I_3 is regular
}
