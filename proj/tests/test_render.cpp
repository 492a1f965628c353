#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "eggbox/green.hpp"
#include "eggbox/ideal.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/render.hpp"

using namespace eggbox;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& pat) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(pat); at != std::string::npos;
       at = hay.find(pat, at + pat.size()))
    ++n;
  return n;
}

RenderModel t3_model() {
  auto t3 = build_full_transformation_monoid(3);
  GreenStructure g = green(t3);
  return make_render_model(t3, eggbox_of(t3, g), "T_3");
}

}  // namespace

TEST_CASE("text egg box of T_3") {
  RenderModel m = t3_model();
  std::string text = render_text(m);

  REQUIRE(text.find("# T_3\n") == 0);
  REQUIRE(text.find("# order 27, 3 D-classes") != std::string::npos);
  REQUIRE(text.find("D3: 1 x 1 grid of H-classes of size 6 (regular)") !=
          std::string::npos);
  REQUIRE(text.find("D2: 3 x 3 grid of H-classes of size 2 (regular)") !=
          std::string::npos);
  REQUIRE(text.find("D1: 1 x 3 grid of H-classes of size 1 (regular)") !=
          std::string::npos);
  REQUIRE(text.find("# J-order covers: D3 > D2; D2 > D1;") !=
          std::string::npos);

  // group cells are starred: the units, 6 of the 9 rank-2 cells, and all
  // three rank-1 cells
  REQUIRE(count_occurrences(text, "*6") == 1);
  REQUIRE(count_occurrences(text, "*2") == 6);
  REQUIRE(count_occurrences(text, "*1") == 3);
  // no banding was requested, so no heavy separators appear
  REQUIRE(text.find('=') == std::string::npos);
  REQUIRE(count_occurrences(text, " # ") == 0);
}

TEST_CASE("renders are deterministic across rebuilds") {
  RenderModel one = t3_model();
  RenderModel two = t3_model();
  REQUIRE(render_text(one) == render_text(two));
  REQUIRE(render_dot(one) == render_dot(two));
}

TEST_CASE("dot egg box of T_3") {
  RenderModel m = t3_model();
  std::string dot = render_dot(m);

  REQUIRE(dot.rfind("digraph eggbox {", 0) == 0);
  REQUIRE(dot.find("label=\"T_3\"") != std::string::npos);
  REQUIRE(count_occurrences(dot, "subgraph cluster_") == 3);
  REQUIRE(count_occurrences(dot, "<TABLE") == 3);
  // 1 + 6 + 3 shaded group cells
  REQUIRE(count_occurrences(dot, "BGCOLOR=\"grey85\"") == 10);
  // two J-order cover edges drawn between clusters
  REQUIRE(count_occurrences(dot, "ltail=cluster_") == 2);
  REQUIRE(dot.find("d0 -> d1") != std::string::npos);
  REQUIRE(dot.find("d1 -> d2") != std::string::npos);
}

TEST_CASE("element listing in small grids") {
  auto t2 = build_full_transformation_monoid(2);
  GreenStructure g = green(t2);
  RenderModel m = make_render_model(t2, eggbox_of(t2, g), "T_2",
                                    /*show_elements=*/true);
  std::string text = render_text(m);
  REQUIRE(text.find("[1,2]") != std::string::npos);
  REQUIRE(text.find("*[1,1]") != std::string::npos);
  REQUIRE(text.find("*[2,2]") != std::string::npos);
}

TEST_CASE("row banding follows the inflation structure") {
  auto t4 = build_full_transformation_monoid(4);
  GreenStructure g = green(t4);
  elem_index a = *t4.index_of(parse_transformation("[1,2,3,3]"));
  auto ctx = make_ideal_context(t4, g, a);
  HatReport hats = hat_relations(ctx);

  RenderModel m = make_render_model(ctx.p_sub, eggbox_of(ctx.p_sub, ctx.green_p),
                                    "Reg(Sa)");
  group_rows(m, ctx.green_p, hats.rhat);

  // rank-2 level: 3 R-hat bands of mu^{|X minus A|} = 2 rows each
  std::size_t d2 = m.box.dclasses.size();
  for (std::size_t c = 0; c < m.box.dclasses.size(); ++c)
    if (m.names[c] == "D2") d2 = c;
  REQUIRE(d2 < m.box.dclasses.size());
  REQUIRE(m.box.dclasses[d2].row_rclasses.size() == 6);
  REQUIRE(m.box.dclasses[d2].col_lclasses.size() == 3);
  REQUIRE(m.row_breaks[d2] == std::vector<std::size_t>{2, 4});

  // the top level is a single band: one 3 x 1 grid over the group H_a
  std::size_t d3 = m.box.dclasses.size();
  for (std::size_t c = 0; c < m.box.dclasses.size(); ++c)
    if (m.names[c] == "D3") d3 = c;
  REQUIRE(d3 < m.box.dclasses.size());
  REQUIRE(m.box.dclasses[d3].row_rclasses.size() == 3);
  REQUIRE(m.row_breaks[d3].empty());

  std::string text = render_text(m);
  REQUIRE(text.find('=') != std::string::npos);
}

TEST_CASE("column banding on the dual side") {
  auto t4 = build_full_transformation_monoid(4);
  GreenStructure g = green(t4);
  auto op = t4.opposite();
  GreenStructure g_op = green(op);
  elem_index a = *t4.index_of(parse_transformation("[1,2,3,3]"));

  auto ctx = make_ideal_context(op, g_op, a);
  HatReport hats = hat_relations(ctx);

  // display in the original orientation; local indices agree because the
  // opposite semigroup shares them
  SubSemigroup<Semigroup<Transformation>> q_sub(t4, ctx.ps.p);
  GreenStructure gq = green(q_sub);
  RenderModel m = make_render_model(q_sub, eggbox_of(q_sub, gq), "Reg(aS)");
  group_cols(m, gq, hats.rhat);

  // ker a = {{1},{2},{3,4}}: the rank-2 level has 5 L-classes split into
  // 3 L-hat bands (of uneven widths 1, 2, 2)
  std::size_t d2 = m.box.dclasses.size();
  for (std::size_t c = 0; c < m.box.dclasses.size(); ++c)
    if (m.names[c] == "D2") d2 = c;
  REQUIRE(d2 < m.box.dclasses.size());
  REQUIRE(m.box.dclasses[d2].col_lclasses.size() == 5);
  REQUIRE(m.col_breaks[d2].size() == 2);

  std::string text = render_text(m);
  REQUIRE(count_occurrences(text, " # ") > 0);
}
