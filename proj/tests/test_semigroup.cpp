#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "eggbox/monoids.hpp"
#include "eggbox/semigroup.hpp"

using namespace eggbox;

TEST_CASE("from_elements builds T_2") {
  auto t2 = build_full_transformation_monoid(2);
  REQUIRE(t2.size() == 4);
  REQUIRE(t2.is_monoid());
  REQUIRE(t2.element(*t2.identity()) == Transformation::identity(2));
  // product via the composition convention: [2,1]*[1,1] = constant 1
  elem_index swap = *t2.index_of(parse_transformation("[2,1]"));
  elem_index c1 = *t2.index_of(parse_transformation("[1,1]"));
  REQUIRE(t2.product(swap, c1) == c1);
  REQUIRE(t2.element(t2.product(c1, swap)) == parse_transformation("[2,2]"));
}

TEST_CASE("closure from generators reproduces T_3") {
  // classical generating triple: a 3-cycle, a transposition, a rank-2 map
  std::vector<Transformation> gens = {parse_transformation("[2,3,1]"),
                                      parse_transformation("[2,1,3]"),
                                      parse_transformation("[1,1,3]")};
  auto s = closure(gens);
  REQUIRE(s.size() == 27);
  REQUIRE(s.generators().size() == 3);
  auto t3 = build_full_transformation_monoid(3);
  for (elem_index i = 0; i < s.size(); ++i)
    REQUIRE(t3.index_of(s.element(i)).has_value());
}

TEST_CASE("closure respects the element cap") {
  SemigroupCaps caps;
  caps.element_cap = 10;
  std::vector<Transformation> gens = {parse_transformation("[2,3,1]"),
                                      parse_transformation("[2,1,3]"),
                                      parse_transformation("[1,1,3]")};
  REQUIRE_THROWS_AS(closure(gens, caps), CapExceededError);
}

TEST_CASE("opposite reverses products but keeps indices") {
  auto t2 = build_full_transformation_monoid(2);
  auto op = t2.opposite();
  REQUIRE(op.size() == t2.size());
  for (elem_index i = 0; i < t2.size(); ++i) {
    REQUIRE(op.element(i) == t2.element(i));
    for (elem_index j = 0; j < t2.size(); ++j)
      REQUIRE(op.product(i, j) == t2.product(j, i));
  }
  REQUIRE(op.opposite().product(0, 1) == t2.product(0, 1));
}

TEST_CASE("monogenic index and period") {
  auto s = monogenic(3, 2);  // a, a^2, a^3, a^4 with a^5 = a^3
  REQUIRE(s.size() == 4);
  elem_index a = 0;
  elem_index a4 = s.product(s.product(s.product(a, a), a), a);
  REQUIRE(a4 == 3);
  REQUIRE(s.product(a4, a) == 2);  // a^5 = a^3
  REQUIRE(!s.is_monoid());

  auto c3 = monogenic(1, 3);  // cyclic group of order 3
  REQUIRE(c3.size() == 3);
  REQUIRE(c3.is_monoid());
  REQUIRE(*c3.identity() == 2);  // a^3
}

TEST_CASE("from_table rejects non-associative tables") {
  // 0*0=1, everything else 0: (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1
  std::vector<elem_index> table = {1, 0, 0, 0};
  REQUIRE_THROWS_AS(Semigroup<std::uint32_t>::from_table(2, table),
                    InvariantError);
  std::vector<elem_index> left_zero = {0, 0, 1, 1};
  auto s = Semigroup<std::uint32_t>::from_table(2, left_zero);
  REQUIRE(s.size() == 2);
  REQUIRE(is_associative(s));
}

TEST_CASE("cayley csv round trip") {
  std::stringstream in("n=3\n0,1,2\n1,2,0\n2,0,1\n");  // Z_3
  auto s = load_cayley_csv(in);
  REQUIRE(s.size() == 3);
  REQUIRE(s.is_monoid());
  REQUIRE(s.product(1, 2) == 0);

  std::stringstream bad_header("3\n0,1,2\n");
  REQUIRE_THROWS_AS(load_cayley_csv(bad_header), InputError);
  std::stringstream bad_row("n=2\n0,1\n0\n");
  REQUIRE_THROWS_AS(load_cayley_csv(bad_row), InputError);
  std::stringstream bad_cell("n=2\n0,1\n1,x\n");
  REQUIRE_THROWS_AS(load_cayley_csv(bad_cell), InputError);
  std::stringstream not_assoc("n=2\n1,0\n0,0\n");
  REQUIRE_THROWS_AS(load_cayley_csv(not_assoc), InvariantError);
}

TEST_CASE("sub-semigroup reindexing") {
  auto t2 = build_full_transformation_monoid(2);
  // constants form a closed subset (a right-zero band)
  IndexSet constants = {*t2.index_of(parse_transformation("[1,1]")),
                        *t2.index_of(parse_transformation("[2,2]"))};
  sort_unique(constants);
  SubSemigroup sub(t2, constants);
  REQUIRE(sub.size() == 2);
  REQUIRE(sub.product(0, 1) == 1);
  REQUIRE(sub.product(1, 0) == 0);
  REQUIRE(sub.parent_index(sub.local_index(constants[1])) == constants[1]);
  REQUIRE(sub.to_parent(sub.to_local(constants)) == constants);

  IndexSet not_closed = {*t2.index_of(parse_transformation("[2,1]"))};
  REQUIRE_THROWS_AS(SubSemigroup(t2, not_closed), InvariantError);
}

TEST_CASE("closure_within") {
  auto t3 = build_full_transformation_monoid(3);
  elem_index cyc = *t3.index_of(parse_transformation("[2,3,1]"));
  IndexSet grp = closure_within(t3, {cyc});
  REQUIRE(grp.size() == 3);
  IndexSet all = closure_within(
      t3, {cyc, *t3.index_of(parse_transformation("[2,1,3]")),
           *t3.index_of(parse_transformation("[1,1,3]"))});
  REQUIRE(all.size() == 27);
}
