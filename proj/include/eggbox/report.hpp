#ifndef EGGBOX_REPORT_HPP_
#define EGGBOX_REPORT_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/families.hpp"
#include "eggbox/ideal.hpp"
#include "eggbox/rank.hpp"

namespace eggbox {

/// nlohmann's default object type keeps keys in std::map order, so every
/// document built here serializes with sorted keys and is byte-stable.
using Json = nlohmann::json;

namespace detail {

inline Json element_set_json(const IndexSet& xs,
                             const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (auto x : xs) {
    if (labels.empty())
      arr.push_back(x);
    else
      arr.push_back(labels[x]);
  }
  return arr;
}

}  // namespace detail

inline Json to_json(const RankCertificate& c,
                    const std::vector<std::string>& labels = {}) {
  Json j;
  j["value"] = c.value;
  j["lower_bound"] = c.lower_bound;
  j["lower_bound_kind"] = to_string(c.lower_bound_kind);
  j["exact"] = c.exact();
  j["budget_exhausted"] = c.budget_exhausted;
  j["witness"] = detail::element_set_json(c.witness, labels);
  return j;
}

inline Json to_json(const FormulaReport& f) {
  Json j;
  j["quantity"] = f.quantity;
  j["fixture"] = f.fixture;
  j["formula"] = f.formula;
  j["oracle"] = f.oracle;
  j["ok"] = f.ok;
  return j;
}

/// One analysis document.  `ok` mirrors the only soft verdict (the Green
/// formula cross-check); every other violation throws before a report
/// exists.
struct AnalysisReport {
  std::string fixture;
  std::string side;
  bool ok = true;
  Json data;

  std::string to_string() const { return data.dump(2) + "\n"; }
};

/// Serializes a left- or right-ideal analysis.  `labels` (indexed by ambient
/// element) turns index sets into element literals; leave empty to emit
/// indices.  Pass the mirrored names via `right = true` so a right-ideal
/// report reads in its own vocabulary (aS, Q, lambda).
inline AnalysisReport make_analysis_report(
    const std::string& fixture, const LeftIdealAnalysis& an, bool right,
    const std::vector<std::string>& labels = {},
    const std::vector<FormulaReport>& formulas = {}) {
  const char* ideal = right ? "aS" : "Sa";
  const char* reg = right ? "Reg(aS)" : "Reg(Sa)";
  const char* p0 = right ? "Q" : "P";
  const char* p1 = right ? "Q'" : "P'";
  const char* p2 = right ? "Q''" : "P''";
  const char* p3 = right ? "Q'''" : "P'''";

  AnalysisReport rep;
  rep.fixture = fixture;
  rep.side = right ? "right" : "left";
  rep.ok = an.green_report.ok;

  Json j;
  j["fixture"] = fixture;
  j["side"] = rep.side;
  j["a"] = labels.empty() ? Json(an.a_input) : Json(labels[an.a_input]);
  j["a_idempotent"] = an.a_idempotent;
  j["a_regular"] = an.a_regular;
  j["substituted"] = an.substituted;
  if (an.substituted)
    j["analysis_idempotent"] =
        labels.empty() ? Json(an.a) : Json(labels[an.a]);
  j["sandwich_regular"] = an.sandwich_regular;
  j["uniquely_sandwich_regular"] = an.uniquely_sandwich_regular;
  j["p_equals_p_prime"] = an.p_equals_p_prime;

  Json sizes;
  sizes[ideal] = an.sa.size();
  sizes["aSa"] = an.asa.size();
  sizes[reg] = an.reg_sa.size();
  sizes[p0] = an.ps.p.size();
  sizes[p1] = an.ps.p_prime.size();
  sizes[p2] = an.ps.p_dprime.size();
  sizes[p3] = an.ps.p_tprime.size();
  j["sizes"] = std::move(sizes);

  j["green_formulas_ok"] = an.green_report.ok;
  j["green_regular_forms_checked"] = an.green_report.corollary_checked;
  Json cex = Json::array();
  if (an.green_report.mismatch) {
    const GreenMismatch& m = *an.green_report.mismatch;
    Json c;
    c["element"] = labels.empty() ? Json(m.x) : Json(labels[m.x]);
    c["relation"] = m.relation;
    c["direct_class"] = detail::element_set_json(m.direct_class, labels);
    c["formula_class"] = detail::element_set_json(m.formula_class, labels);
    cex.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cex);

  j["deep"] = an.deep;
  if (an.deep) {
    Json inf;
    inf[right ? "lambda" : "rho"] = an.hats.rho;
    inf["r_per_hat_class"] = an.hats.rhat_r;
    inf["hat_classes_over_groups"] = an.hats.num_group_hhat;
    inf["hat_classes"] = an.hats.hhat_over_group.size();
    j["inflation"] = std::move(inf);

    j["mid_identities"] =
        detail::element_set_json(an.mi.common, labels);
    j[right ? "li_dominated" : "ri_dominated"] = an.ranks.ri_dominated;

    Json rk;
    rk["rank(H_a)"] = to_json(an.ranks.rank_ha, labels);
    rk["relrank(aSa:H_a)"] = to_json(an.ranks.relrank_asa_ha, labels);
    rk["bound_applicable"] = an.ranks.bound_p_applicable;
    if (an.ranks.bound_p_applicable) rk["bound"] = an.ranks.bound_p;
    rk[std::string("rank(Hhat_a)")] = to_json(an.ranks.cert_t, labels);
    rk[std::string("rank(") + reg + ")"] = to_json(an.ranks.cert_p, labels);
    rk["bound_attained"] = an.ranks.equality_p;
    rk["left_group_structure_ok"] = an.ranks.uw_left_group_ok;
    j["ranks"] = std::move(rk);

    Json ig;
    ig["rank(IG(aSa))"] = to_json(an.ranks.rank_e_asa, labels);
    ig["idrank(IG(aSa))"] = to_json(an.ranks.idrank_e_asa, labels);
    ig["bound_applicable"] = an.ranks.bound_e_applicable;
    if (an.ranks.bound_e_applicable) ig["bound"] = an.ranks.bound_e;
    ig["idrank_bound_applicable"] = an.ranks.bound_e_idrank_applicable;
    if (an.ranks.bound_e_idrank_applicable)
      ig["idrank_bound"] = an.ranks.bound_e_idrank;
    ig[std::string("rank(IG(") + ideal + "))"] =
        to_json(an.ranks.cert_e, labels);
    ig[std::string("idrank(IG(") + ideal + "))"] =
        to_json(an.ranks.cert_e_idrank, labels);
    ig["bound_attained"] = an.ranks.equality_e;
    ig["idrank_bound_attained"] = an.ranks.equality_e_idrank;
    ig["singular_formula_applicable"] = an.ranks.singular_esa_applicable;
    if (an.ranks.singular_esa_applicable)
      ig["singular_formula_ok"] = an.ranks.singular_esa_ok;
    j["idempotent_generated"] = std::move(ig);

    Json inv;
    inv["applicable"] = an.inverse.applicable;
    if (an.inverse.applicable) inv["ok"] = an.inverse.ok;
    j["inverse_case"] = std::move(inv);
  }

  Json fm = Json::array();
  for (const auto& f : formulas) fm.push_back(to_json(f));
  j["formulas"] = std::move(fm);

  rep.data = std::move(j);
  return rep;
}

inline AnalysisReport make_analysis_report(
    const std::string& fixture, const RightIdealAnalysis& an,
    const std::vector<std::string>& labels = {},
    const std::vector<FormulaReport>& formulas = {}) {
  AnalysisReport rep = make_analysis_report(fixture, an.mirror, /*right=*/true,
                                            labels, formulas);
  rep.data["q_direct_check_ok"] = an.q_direct_check_ok;
  return rep;
}

}  // namespace eggbox

#endif  // EGGBOX_REPORT_HPP_
