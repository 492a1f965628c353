#ifndef EGGBOX_CLI_HPP_
#define EGGBOX_CLI_HPP_

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "eggbox/combinatorics.hpp"
#include "eggbox/families.hpp"
#include "eggbox/green.hpp"
#include "eggbox/ideal.hpp"
#include "eggbox/monoids.hpp"
#include "eggbox/regularity.hpp"
#include "eggbox/render.hpp"
#include "eggbox/report.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {
namespace cli {

/// Green's-relation computations allocate O(n^2) bit matrices; past this
/// size the command reports a cap instead of thrashing.
inline constexpr std::size_t kGreenCap = 20'000;

struct LoadedSpec {
  std::string name;
  std::variant<Semigroup<Transformation>, Semigroup<PartialMap>,
               Semigroup<std::uint32_t>>
      sem;
};

namespace detail {

inline std::uint64_t capped_pow(std::uint64_t base, unsigned exp,
                                std::uint64_t cap) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

inline void check_size_cap(std::uint64_t predicted, const std::string& what,
                           std::uint64_t cap) {
  if (predicted > cap)
    throw CapExceededError(what + " has more than " + std::to_string(cap) +
                           " elements");
}

inline Json parse_spec_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open spec file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("spec parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(col) + ": " + e.what());
  }
}

inline unsigned spec_uint(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_unsigned(),
          std::string("spec needs an unsigned \"") + key + "\" field");
  return j[key].get<unsigned>();
}

}  // namespace detail

inline LoadedSpec load_spec(const std::string& path, SemigroupCaps caps = {}) {
  Json j = detail::parse_spec_json(path);
  require(j.is_object(), "spec file must hold a JSON object");
  require(j.contains("kind") && j["kind"].is_string(),
          "spec needs a string \"kind\" field");
  const std::string kind = j["kind"].get<std::string>();
  const std::uint64_t cap = caps.element_cap;

  LoadedSpec out;
  if (kind == "full_transformation") {
    unsigned n = detail::spec_uint(j, "n");
    require(n >= 1, "full_transformation needs n >= 1");
    detail::check_size_cap(detail::capped_pow(n, n, cap), "T_n", cap);
    out.name = "T_" + std::to_string(n);
    out.sem = build_full_transformation_monoid(n, caps);
  } else if (kind == "partial_transformation") {
    unsigned n = detail::spec_uint(j, "n");
    require(n >= 1, "partial_transformation needs n >= 1");
    detail::check_size_cap(detail::capped_pow(n + 1, n, cap), "PT_n", cap);
    out.name = "PT_" + std::to_string(n);
    out.sem = build_partial_transformation_monoid(n, caps);
  } else if (kind == "symmetric_inverse") {
    unsigned n = detail::spec_uint(j, "n");
    require(n >= 1, "symmetric_inverse needs n >= 1");
    detail::check_size_cap(n > 12 ? cap + 1 : size_ixa(n, n), "I_n", cap);
    out.name = "I_" + std::to_string(n);
    out.sem = build_symmetric_inverse_monoid(n, caps);
  } else if (kind == "symmetric_group") {
    unsigned n = detail::spec_uint(j, "n");
    require(n >= 1, "symmetric_group needs n >= 1");
    detail::check_size_cap(n > 12 ? cap + 1 : factorial(n), "S_n", cap);
    out.name = "S_" + std::to_string(n);
    out.sem = build_symmetric_group(n, caps);
  } else if (kind == "monogenic") {
    unsigned m = detail::spec_uint(j, "index");
    unsigned r = detail::spec_uint(j, "period");
    require(m >= 1 && r >= 1, "monogenic needs index >= 1 and period >= 1");
    detail::check_size_cap(std::uint64_t(m) + r - 1, "monogenic semigroup",
                           cap);
    out.name = "monogenic(" + std::to_string(m) + "," + std::to_string(r) +
               ")";
    out.sem = monogenic(m, r);
  } else if (kind == "cayley_csv") {
    require(j.contains("path") && j["path"].is_string(),
            "cayley_csv needs a string \"path\" field");
    std::filesystem::path table_path = j["path"].get<std::string>();
    if (table_path.is_relative())
      table_path = std::filesystem::path(path).parent_path() / table_path;
    std::ifstream table(table_path);
    require(table.good(),
            "cannot open cayley table: " + table_path.string());
    out.name = "cayley:" + table_path.filename().string();
    try {
      out.sem = load_cayley_csv(table);
    } catch (const InvariantError& e) {
      throw InputError(table_path.filename().string() + ": " + e.what());
    }
  } else {
    throw InputError("unknown spec kind: " + kind);
  }
  return out;
}

namespace detail {

template <class E>
elem_index element_index_from_literal(const Semigroup<E>& s,
                                      const std::string& lit,
                                      const std::string& name) {
  std::optional<elem_index> idx;
  if constexpr (std::is_same_v<E, Transformation>) {
    idx = s.index_of(parse_transformation(lit));
  } else if constexpr (std::is_same_v<E, PartialMap>) {
    idx = s.index_of(parse_partial_map(lit));
  } else {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(lit, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require(pos == lit.size() && v >= 1,
            "for an abstract semigroup, --a takes a 1-based element index");
    if (v <= s.size()) idx = static_cast<elem_index>(v - 1);
  }
  require(idx.has_value(), "--a " + lit + " is not an element of " + name);
  return *idx;
}

template <class S>
void check_green_cap(const S& s, const std::string& name) {
  if (s.size() > kGreenCap)
    throw CapExceededError(name + " has " + std::to_string(s.size()) +
                           " elements; Green's-relation analysis is capped "
                           "at " +
                           std::to_string(kGreenCap));
}

}  // namespace detail

// ---- build

inline int cmd_build(const std::string& spec_path, std::ostream& out) {
  LoadedSpec ls = load_spec(spec_path);
  std::visit(
      [&](const auto& s) {
        detail::check_green_cap(s, ls.name);
        GreenStructure g = green(s);
        out << "semigroup " << ls.name << "\n";
        out << "|S| = " << s.size() << "\n";
        out << "|E(S)| = " << idempotents(s).size() << "\n";
        out << "|Reg(S)| = " << regular_elements(s).size() << "\n";
        out << "D-classes: " << g.d.num_classes() << "\n";
      },
      ls.sem);
  return 0;
}

// ---- analyze

inline int cmd_analyze(const std::string& spec_path, bool right,
                       const std::string& a_literal, std::uint64_t budget,
                       std::ostream& out) {
  require(!a_literal.empty(), "analyze needs --a");
  LoadedSpec ls = load_spec(spec_path);
  return std::visit(
      [&](const auto& s) -> int {
        detail::check_green_cap(s, ls.name);
        elem_index a =
            detail::element_index_from_literal(s, a_literal, ls.name);
        RankOptions ropts;
        ropts.budget = budget;
        GreenStructure g = green(s);
        std::vector<std::string> labels = eggbox::detail::element_labels(s);
        std::string fixture = ls.name + " a=" + labels[a];
        AnalysisReport rep;
        if (right) {
          auto op = s.opposite();
          GreenStructure g_op = green(op);
          rep = make_analysis_report(
              fixture, analyze_right_ideal(s, g, op, g_op, a, ropts), labels);
        } else {
          rep = make_analysis_report(
              fixture, analyze_left_ideal(s, g, a, ropts), /*right=*/false,
              labels);
        }
        out << rep.to_string();
        return rep.ok ? 0 : 1;
      },
      ls.sem);
}

// ---- verify

namespace detail {

struct StageResult {
  std::string name;
  std::size_t fixtures = 0;
  bool pass = true;
  std::string message;
};

struct VerifyState {
  std::vector<StageResult> stages;
  std::map<std::string, std::size_t> formula_tally;

  void add_formulas(const std::vector<FormulaReport>& fs) {
    for (const auto& f : fs) ++formula_tally[f.quantity];
  }
  bool all_pass() const {
    for (const auto& s : stages)
      if (!s.pass) return false;
    return true;
  }
};

template <class Body>
void run_stage(VerifyState& vs, const std::string& name, Body&& body) {
  StageResult r;
  r.name = name;
  try {
    body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.message = e.what();
  }
  vs.stages.push_back(std::move(r));
}

/// Compare the egg-box of a classical monoid against its closed-form
/// D-class table (one class per rank, known grid shape).
template <class E>
void check_dclass_profile(const Semigroup<E>& s, const GreenStructure& g,
                          MonoidKind kind, unsigned n,
                          const std::string& name) {
  EggBox box = eggbox_of(s, g);
  std::vector<DClassExpectation> want = expected_dclass_profile(kind, n);
  invariant(box.dclasses.size() == want.size(),
            "D-class count differs from the rank levels in " + name);
  for (const auto& dc : box.dclasses) {
    unsigned mu = s.element(dc.members[0]).rank();
    const DClassExpectation* e = nullptr;
    for (const auto& w : want)
      if (w.mu == mu) e = &w;
    invariant(e != nullptr, "unexpected rank level in " + name);
    invariant(dc.row_rclasses.size() == e->num_r &&
                  dc.col_lclasses.size() == e->num_l &&
                  dc.cell_size == e->h_size &&
                  dc.members.size() == e->class_size,
              "D-class grid shape differs from the closed form in " + name +
                  " at rank " + std::to_string(mu));
    invariant(dc.regular, "non-regular D-class in " + name);
  }
}

}  // namespace detail

inline int run_verify(bool paper, unsigned max_n, RankOptions ropts,
                      std::ostream& out) {
  require(max_n >= 1, "--max-n must be at least 1");
  if (max_n > 5)
    throw CapExceededError("the verify suites are calibrated for n <= 5");
  out << "suite: " << (paper ? "paper" : "quick") << ", max_n = " << max_n
      << "\n\n";

  detail::VerifyState vs;
  const unsigned n_green = std::min<unsigned>(max_n, paper ? 4u : 3u);
  const unsigned n_family = std::min<unsigned>(max_n, 5u);

  std::vector<Semigroup<Transformation>> tn(n_family + 1);
  std::vector<GreenStructure> gt(n_family + 1);
  for (unsigned n = 1; n <= n_family; ++n) {
    tn[n] = build_full_transformation_monoid(n);
    gt[n] = green(tn[n]);
  }

  detail::run_stage(
      vs, "structure formulas in Sa (all idempotents of T_n)",
      [&](detail::StageResult& r) {
        std::string breakdown;
        for (unsigned n = 1; n <= n_green; ++n) {
          std::size_t count = 0;
          for (elem_index e : idempotents(tn[n])) {
            IdealGreenReport rep = verify_green_in_ideal(tn[n], gt[n], e);
            invariant(rep.ok && rep.corollary_checked,
                      "structure formulas fail at T_" + std::to_string(n) +
                          " a=" + to_literal(tn[n].element(e)) +
                          (rep.mismatch
                               ? std::string(" (") + rep.mismatch->relation +
                                     ")"
                               : ""));
            ++count;
          }
          r.fixtures += count;
          breakdown += (n > 1 ? ", " : "") + std::string("T_") +
                       std::to_string(n) + ": " + std::to_string(count);
        }
        r.message = breakdown;
      });

  detail::run_stage(
      vs, "dual structure formulas in aS (opposite reduction)",
      [&](detail::StageResult& r) {
        for (unsigned n = 1; n <= n_green; ++n) {
          Semigroup<Transformation> op = tn[n].opposite();
          GreenStructure g_op = green(op);
          for (elem_index e : idempotents(op)) {
            IdealGreenReport rep = verify_green_in_ideal(op, g_op, e);
            invariant(rep.ok && rep.corollary_checked,
                      "dual structure formulas fail at T_" +
                          std::to_string(n) + " a=" +
                          to_literal(op.element(e)));
            ++r.fixtures;
          }
        }
      });

  detail::run_stage(
      vs, "non-regular branches (monogenic semigroups)",
      [&](detail::StageResult& r) {
        for (unsigned m = 1; m <= 3; ++m)
          for (unsigned p = 1; p <= 3; ++p) {
            Semigroup<std::uint32_t> s = monogenic(m, p);
            GreenStructure g = green(s);
            for (elem_index a = 0; a < s.size(); ++a) {
              IdealGreenReport rep = verify_green_in_ideal(s, g, a);
              invariant(rep.ok, "structure formulas fail at monogenic(" +
                                    std::to_string(m) + "," +
                                    std::to_string(p) + ") a=a^" +
                                    std::to_string(a + 1));
              ++r.fixtures;
            }
          }
        // the worked non-regular example: index 3, period 1, a itself
        Semigroup<std::uint32_t> s = monogenic(3, 1);
        GreenStructure g = green(s);
        PSets ps = p_sets(s, g, 0);
        invariant(left_ideal(s, 0) == IndexSet({1, 2}),
                  "Sa differs from {a^2, a^3} in monogenic(3,1)");
        invariant(ps.p_dprime == IndexSet({2}) && ps.p_tprime == IndexSet({2}),
                  "P'' = P''' = {a^3} fails in monogenic(3,1)");
        invariant(ps.p == IndexSet({2}) && ps.p_prime == IndexSet({2}),
                  "P = P' = {a^3} fails in monogenic(3,1)");
      });

  // the deep layer (inflation, mid-identities, rank certificates) runs on
  // every fixture up to degree 4; degree-5 fixtures get the counting
  // formulas and the regular-part Green checks
  auto family_opts = [&](unsigned n) {
    FamilyCheckOptions fo;
    fo.rank = ropts;
    fo.family_green = n <= 4;
    fo.reg_green = true;
    fo.deep = (paper && n <= 4) || n <= 3;
    return fo;
  };

  detail::run_stage(
      vs, "image-restriction families S = T(X), Sa",
      [&](detail::StageResult& r) {
        for (unsigned n = 1; n <= n_family; ++n) {
          FamilyCheckOptions fo = family_opts(n);
          for (const FamilySpec& spec :
               all_subset_specs(FamilyKind::txa, n)) {
            TxaFamilyReport rep = check_txa_family(tn[n], gt[n], spec, fo);
            vs.add_formulas(rep.formulas);
            ++r.fixtures;
          }
        }
      });

  detail::run_stage(
      vs, "kernel-restriction families S = T(X), aS",
      [&](detail::StageResult& r) {
        for (unsigned n = 1; n <= n_family; ++n) {
          FamilyCheckOptions fo = family_opts(n);
          Semigroup<Transformation> op;
          GreenStructure g_op;
          if (fo.deep) {
            op = tn[n].opposite();
            g_op = green(op);
          }
          for (const FamilySpec& spec : all_partition_specs(n)) {
            TxalphaFamilyReport rep =
                check_txalpha_family(tn[n], gt[n], op, g_op, spec, fo);
            vs.add_formulas(rep.formulas);
            ++r.fixtures;
          }
        }
        // the defining idempotent is one transversal among many: the family
        // and all derived sets must not depend on the choice
        if (n_family >= 3) {
          FamilySpec one = family_spec_from_alpha(3, {{0, 1}, {2}});
          FamilySpec two = family_spec_from_alpha(
              3, {{0, 1}, {2}}, std::vector<unsigned>{1, 2});
          invariant(one.a != two.a, "transversal variation is trivial");
          FamilyCheckOptions fo = family_opts(3);
          Semigroup<Transformation> op = tn[3].opposite();
          GreenStructure g_op = green(op);
          TxalphaFamilyReport rep_one =
              check_txalpha_family(tn[3], gt[3], op, g_op, one, fo);
          TxalphaFamilyReport rep_two =
              check_txalpha_family(tn[3], gt[3], op, g_op, two, fo);
          invariant(rep_one.family == rep_two.family &&
                        rep_one.q == rep_two.q &&
                        rep_one.e_family == rep_two.e_family &&
                        rep_one.li == rep_two.li,
                    "family sets depend on the transversal choice");
          ++r.fixtures;
        }
      });

  detail::run_stage(
      vs, "injective families S = I(X), Sa",
      [&](detail::StageResult& r) {
        for (unsigned n = 1; n <= n_family; ++n) {
          Semigroup<PartialMap> ix = build_symmetric_inverse_monoid(n);
          GreenStructure g = green(ix);
          FamilyCheckOptions fo = family_opts(n);
          for (const FamilySpec& spec :
               all_subset_specs(FamilyKind::ixa, n)) {
            IxaFamilyReport rep = check_ixa_family(ix, g, spec, fo);
            vs.add_formulas(rep.formulas);
            ++r.fixtures;
          }
        }
      });

  detail::run_stage(
      vs, "classical monoid D-class combinatorics",
      [&](detail::StageResult& r) {
        for (unsigned n = 1; n <= n_family; ++n) {
          detail::check_dclass_profile(tn[n], gt[n],
                                       MonoidKind::full_transformation, n,
                                       "T_" + std::to_string(n));
          ++r.fixtures;
        }
        for (unsigned n = 1; n <= std::min<unsigned>(max_n, 4u); ++n) {
          Semigroup<PartialMap> pt = build_partial_transformation_monoid(n);
          detail::check_dclass_profile(pt, green(pt),
                                       MonoidKind::partial_transformation, n,
                                       "PT_" + std::to_string(n));
          ++r.fixtures;
        }
        for (unsigned n = 1; n <= n_family; ++n) {
          Semigroup<PartialMap> ix = build_symmetric_inverse_monoid(n);
          detail::check_dclass_profile(ix, green(ix),
                                       MonoidKind::symmetric_inverse, n,
                                       "I_" + std::to_string(n));
          ++r.fixtures;
        }
      });

  detail::run_stage(
      vs, "idempotent-generated part of T_n: membership and rank",
      [&](detail::StageResult& r) {
        for (unsigned n = 2; n <= n_family; ++n) {
          IgTxReport rep = ig_TX_check(tn[n], ropts);
          invariant(rep.membership_matches_formula,
                    "IG membership formula fails in T_" + std::to_string(n));
          invariant(rep.rank_cert.exact() &&
                        rep.rank_cert.value == rep.expected_rank &&
                        rep.idrank_cert.exact() &&
                        rep.idrank_cert.value == rep.expected_rank,
                    "IG rank certificate misses the closed form in T_" +
                        std::to_string(n));
          ++r.fixtures;
        }
      });

  for (const auto& s : vs.stages) {
    out << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << ": "
        << s.fixtures << " fixtures";
    if (!s.message.empty()) out << " (" << s.message << ")";
    out << "\n";
  }
  if (!vs.formula_tally.empty()) {
    out << "\nclosed-form cross-checks (formula vs enumeration):\n";
    for (const auto& [quantity, count] : vs.formula_tally)
      out << "  " << quantity << ": " << count << " fixtures\n";
  }
  std::size_t total = 0;
  for (const auto& s : vs.stages) total += s.fixtures;
  out << "\nRESULT: " << (vs.all_pass() ? "PASS" : "FAIL") << " ("
      << vs.stages.size() << " stages, " << total << " fixtures)\n";
  if (!vs.all_pass()) {
    for (const auto& s : vs.stages)
      if (!s.pass) out << "  failed: " << s.name << ": " << s.message << "\n";
    return 1;
  }
  return 0;
}

// ---- render

inline int cmd_render(const std::string& spec_path, const std::string& target,
                      const std::string& format, const std::string& a_literal,
                      std::ostream& out) {
  LoadedSpec ls = load_spec(spec_path);
  const bool dot = format == "dot";
  std::visit(
      [&](const auto& s) {
        detail::check_green_cap(s, ls.name);
        auto emit = [&](const RenderModel& m) {
          out << (dot ? render_dot(m) : render_text(m));
        };
        if (target == "S") {
          GreenStructure g = green(s);
          RenderModel m = make_render_model(s, eggbox_of(s, g), ls.name,
                                            s.size() <= 40);
          emit(m);
          return;
        }
        require(!a_literal.empty(), "render target " + target +
                                        " needs --a");
        elem_index a =
            detail::element_index_from_literal(s, a_literal, ls.name);
        std::string lit = eggbox::detail::element_labels(s)[a];
        GreenStructure g = green(s);
        if (target == "Sa" || target == "aS") {
          const bool left = target == "Sa";
          IndexSet members = left ? left_ideal(s, a) : right_ideal(s, a);
          SubSemigroup sub(s, members);
          GreenStructure gs = green(sub);
          std::string title = ls.name + ": " + (left ? "Sa" : "aS") +
                              " for a=" + lit;
          RenderModel m = make_render_model(sub, eggbox_of(sub, gs), title,
                                            sub.size() <= 40);
          emit(m);
          return;
        }
        if (target == "RegSa") {
          auto ctx = make_ideal_context(s, g, a);
          HatReport hats = hat_relations(ctx);
          std::string title = ls.name + ": Reg(Sa) for a=" + lit;
          RenderModel m =
              make_render_model(ctx.p_sub, eggbox_of(ctx.p_sub, ctx.green_p),
                                title, ctx.p_sub.size() <= 40);
          group_rows(m, ctx.green_p, hats.rhat);
          emit(m);
          return;
        }
        require(target == "RegaS", "unknown render target: " + target);
        auto op = s.opposite();
        GreenStructure g_op = green(op);
        auto ctx = make_ideal_context(op, g_op, a);
        HatReport hats = hat_relations(ctx);
        // display in the original orientation: Q's L-classes are the
        // R-classes of the opposite analysis, with identical local indices
        SubSemigroup q_sub(s, ctx.ps.p);
        GreenStructure gq = green(q_sub);
        std::string title = ls.name + ": Reg(aS) for a=" + lit;
        RenderModel m = make_render_model(q_sub, eggbox_of(q_sub, gq), title,
                                          q_sub.size() <= 40);
        group_cols(m, gq, hats.rhat);
        emit(m);
      },
      ls.sem);
  return 0;
}

// ---- entry point

inline int cli_main(int argc, char** argv) {
  CLI::App app{
      "egg-box: structure of principal one-sided ideals of finite "
      "semigroups"};
  app.require_subcommand(1);

  std::string spec_path, a_literal, out_path;
  std::string side = "left", suite = "paper", format = "text", target = "S";
  unsigned max_n = 4;
  std::uint64_t rank_budget = RankOptions{}.budget;

  CLI::App* build = app.add_subcommand(
      "build", "load a spec file and print a structural summary");
  build->add_option("--spec", spec_path, "path to a JSON spec file")
      ->required();
  build->add_option("--out", out_path, "write to this file instead of stdout");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "one-sided ideal analysis of Sa or aS");
  analyze->add_option("--spec", spec_path, "path to a JSON spec file")
      ->required();
  analyze->add_option("--side", side, "which ideal of a to analyse")
      ->check(CLI::IsMember({"left", "right"}));
  analyze
      ->add_option("--a", a_literal,
                   "element literal like [1,2,2] or [2,-,1]; a 1-based "
                   "element index for abstract semigroups")
      ->required();
  analyze->add_option("--rank-budget", rank_budget,
                      "step budget for rank searches");
  analyze->add_option("--out", out_path,
                      "write to this file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the structural cross-check suites");
  verify->add_option("--suite", suite, "paper (full) or quick (smoke)")
      ->check(CLI::IsMember({"paper", "quick"}));
  verify->add_option("--max-n", max_n, "largest degree to test (<= 5)");
  verify->add_option("--rank-budget", rank_budget,
                     "step budget for rank searches");
  verify->add_option("--out", out_path,
                     "write to this file instead of stdout");

  CLI::App* render = app.add_subcommand(
      "render", "emit an egg-box diagram");
  render->add_option("--spec", spec_path, "path to a JSON spec file")
      ->required();
  render->add_option("--target", target, "which semigroup to draw")
      ->check(CLI::IsMember({"S", "Sa", "aS", "RegSa", "RegaS"}));
  render->add_option("--format", format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));
  render->add_option("--a", a_literal,
                     "element literal; required for ideal targets");
  render->add_option("--out", out_path,
                     "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      require(file.good(), "cannot open output file: " + out_path);
      out = &file;
    }
    if (build->parsed()) return cmd_build(spec_path, *out);
    if (analyze->parsed())
      return cmd_analyze(spec_path, side == "right", a_literal, rank_budget,
                         *out);
    if (verify->parsed()) {
      RankOptions ropts;
      ropts.budget = rank_budget;
      return run_verify(suite == "paper", max_n, ropts, *out);
    }
    return cmd_render(spec_path, target, format, a_literal, *out);
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace eggbox

#endif  // EGGBOX_CLI_HPP_
