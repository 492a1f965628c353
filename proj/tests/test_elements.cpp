#include <catch2/catch_amalgamated.hpp>

#include "eggbox/element.hpp"

using namespace eggbox;

TEST_CASE("transformation basics") {
  Transformation f = parse_transformation("[2,3,1]");
  REQUIRE(f.degree() == 3);
  REQUIRE(f[0] == 1);
  REQUIRE(f[1] == 2);
  REQUIRE(f[2] == 0);
  REQUIRE(to_literal(f) == "[2,3,1]");
  REQUIRE(f.is_permutation());
  REQUIRE(f.rank() == 3);
  REQUIRE(!f.is_idempotent());

  Transformation g = parse_transformation("[1,1,2]");
  REQUIRE(g.rank() == 2);
  REQUIRE(g.image() == std::vector<unsigned>{0, 1});
  REQUIRE(!g.is_permutation());
  REQUIRE(!g.is_idempotent());
  REQUIRE(parse_transformation("[1,1,3]").is_idempotent());
}

TEST_CASE("composition acts left to right") {
  // x(fg) = (xf)g
  Transformation f = parse_transformation("[2,2,3]");
  Transformation g = parse_transformation("[3,1,1]");
  Transformation fg = compose(f, g);
  for (unsigned x = 0; x < 3; ++x) REQUIRE(fg[x] == g[f[x]]);
  REQUIRE(to_literal(fg) == "[1,1,1]");
  REQUIRE(compose(f, Transformation::identity(3)) == f);
  REQUIRE(compose(Transformation::identity(3), f) == f);
}

TEST_CASE("transformation literal errors") {
  REQUIRE_THROWS_AS(parse_transformation("[0,1]"), InputError);
  REQUIRE_THROWS_AS(parse_transformation("[1,-,2]"), InputError);
  REQUIRE_THROWS_AS(parse_transformation("1,2"), InputError);
  REQUIRE_THROWS_AS(parse_transformation("[3,1]"), InputError);  // 3 > degree
}

TEST_CASE("partial map basics") {
  PartialMap f = parse_partial_map("[2,-,1]");
  REQUIRE(f.degree() == 3);
  REQUIRE(f.defined(0));
  REQUIRE(!f.defined(1));
  REQUIRE(f.domain() == std::vector<unsigned>{0, 2});
  REQUIRE(f.image() == std::vector<unsigned>{0, 1});
  REQUIRE(f.rank() == 2);
  REQUIRE(f.injective());
  REQUIRE(to_literal(f) == "[2,-,1]");

  PartialMap finv = f.inverse();
  REQUIRE(to_literal(finv) == "[3,1,-]");
  PartialMap idd = PartialMap::partial_identity(3, {0, 2});
  REQUIRE(compose(f, finv) == idd);

  REQUIRE(!parse_partial_map("[1,1,-]").injective());
  REQUIRE(PartialMap::empty_map(3).rank() == 0);
  REQUIRE(PartialMap::identity(3).total());
}

TEST_CASE("partial composition drops undefined points") {
  PartialMap f = parse_partial_map("[2,3,-]");
  PartialMap g = parse_partial_map("[-,1,2]");
  // x -> xf -> (xf)g; 0 -> 1 -> 0; 1 -> 2 -> 1; 2 undefined
  REQUIRE(to_literal(compose(f, g)) == "[1,2,-]");
}

TEST_CASE("kernel partition") {
  Transformation f = parse_transformation("[2,2,1,2]");
  KernelPartition ker = KernelPartition::of(f);
  REQUIRE(ker.num_blocks() == 2);
  REQUIRE(ker.same(0, 1));
  REQUIRE(ker.same(0, 3));
  REQUIRE(!ker.same(0, 2));
  REQUIRE(ker.blocks()[0] == std::vector<unsigned>{0, 1, 3});
  REQUIRE(ker.least_transversal() == std::vector<unsigned>{0, 2});

  KernelPartition alpha(4, {{0, 1}, {2, 3}});
  REQUIRE(ker.contains(KernelPartition::trivial(4)));
  REQUIRE(KernelPartition::universal(4).contains(alpha));
  REQUIRE(!alpha.contains(ker));

  REQUIRE(alpha.cross_section({0, 2}));
  REQUIRE(alpha.cross_section({1, 3}));
  REQUIRE(!alpha.cross_section({0, 1}));
  REQUIRE(alpha.saturated_by({1, 2, 3}));
  REQUIRE(!alpha.separates({1, 2, 3}));

  // the image of f = [2,2,1,2] is {1,2}, inside the first alpha block;
  // [2,3,1,2] has image {1,2,3} and meets both blocks
  REQUIRE(alpha.pullback_num_classes(f) == 1);
  REQUIRE(alpha.pullback_num_classes(parse_transformation("[2,3,1,2]")) == 2);
  REQUIRE(alpha.pullback_num_classes(Transformation::constant(4, 0)) == 1);
}

TEST_CASE("restriction to an invariant subset") {
  Transformation f = parse_transformation("[2,1,2,1]");
  Transformation r = f.restrict_to({0, 1});
  REQUIRE(to_literal(r) == "[2,1]");
  REQUIRE_THROWS_AS(parse_transformation("[3,1,2]").restrict_to({0, 1}),
                    InputError);
}
