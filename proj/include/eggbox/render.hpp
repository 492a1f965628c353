#ifndef EGGBOX_RENDER_HPP_
#define EGGBOX_RENDER_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/element.hpp"
#include "eggbox/green.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

/// Everything a diagram emitter needs, precomputed.  The emitters below are
/// pure functions of this struct: they never touch the semigroup again, so
/// rendered class counts are the computed ones by construction.
struct RenderModel {
  std::string title;
  EggBox box;
  /// one label per local element index of the rendered (sub)semigroup
  std::vector<std::string> labels;
  /// one display name per D-class, indexed like box.dclasses
  std::vector<std::string> names;
  /// display order of D-class indices, top of the J-order first
  std::vector<elem_index> order;
  /// per D-class: grid row/column positions that start a new hat-class; a
  /// heavy separator is drawn immediately above / to the left of them
  std::vector<std::vector<std::size_t>> row_breaks, col_breaks;
  /// list the elements of each H-cell instead of just its size
  bool show_elements = false;
};

namespace detail {

/// Top of the J-order first: ascending size of the up-set, ties broken by
/// the least member index.
inline std::vector<elem_index> display_order(const EggBox& box) {
  const std::size_t nd = box.dclasses.size();
  std::vector<elem_index> order(nd);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> above(nd, 0);
  for (std::size_t c = 0; c < nd; ++c)
    for (std::size_t d = 0; d < nd; ++d) above[c] += box.leq[c][d] ? 1 : 0;
  std::sort(order.begin(), order.end(), [&](elem_index a, elem_index b) {
    if (above[a] != above[b]) return above[a] < above[b];
    return box.dclasses[a].members[0] < box.dclasses[b].members[0];
  });
  return order;
}

template <class E>
std::string element_label(const E& e, elem_index i) {
  if constexpr (requires { to_literal(e); }) {
    return to_literal(e);
  } else {
    (void)e;
    return "x" + std::to_string(i + 1);
  }
}

template <class E>
std::vector<std::string> element_labels(const Semigroup<E>& s) {
  std::vector<std::string> out(s.size());
  for (elem_index i = 0; i < s.size(); ++i)
    out[i] = element_label(s.element(i), i);
  return out;
}

template <class Sg>
std::vector<std::string> element_labels(const SubSemigroup<Sg>& s) {
  std::vector<std::string> out(s.size());
  for (elem_index i = 0; i < s.size(); ++i)
    out[i] = element_label(s.parent().element(s.parent_index(i)), i);
  return out;
}

template <class E>
const E& value_of(const Semigroup<E>& s, elem_index i) {
  return s.element(i);
}

template <class Sg>
auto& value_of(const SubSemigroup<Sg>& s, elem_index i) {
  return s.parent().element(s.parent_index(i));
}

/// "D<rank>" when the elements carry a rank (maps), with a deterministic
/// ".<k>" suffix when several D-classes share one rank level; "D<position>"
/// (1-based, top first) otherwise.
template <class S>
std::vector<std::string> dclass_names(const S& s, const EggBox& box,
                                      const std::vector<elem_index>& order) {
  std::vector<std::string> names(box.dclasses.size());
  if constexpr (requires { value_of(s, elem_index(0)).rank(); }) {
    std::vector<unsigned> rank_of(box.dclasses.size());
    std::vector<std::size_t> copies(box.dclasses.size(), 0);
    for (std::size_t c = 0; c < box.dclasses.size(); ++c) {
      rank_of[c] = value_of(s, box.dclasses[c].members[0]).rank();
      for (auto x : box.dclasses[c].members)
        invariant(value_of(s, x).rank() == rank_of[c],
                  "a D-class mixes elements of different rank");
    }
    std::vector<std::size_t> seen(
        1 + *std::max_element(rank_of.begin(), rank_of.end()), 0);
    for (auto c : order) ++seen[rank_of[c]];
    std::vector<std::size_t> used(seen.size(), 0);
    for (auto c : order) {
      names[c] = "D" + std::to_string(rank_of[c]);
      if (seen[rank_of[c]] > 1)
        names[c] += "." + std::to_string(++used[rank_of[c]]);
    }
  } else {
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      names[order[pos]] = "D" + std::to_string(pos + 1);
  }
  return names;
}

inline std::string html_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Reorder one axis of every D-class grid so that the classes of `coarse`
/// (a coarsening of the axis relation, on local element indices) occupy
/// contiguous bands, and record the band boundaries.
inline void group_axis(RenderModel& m, const Partition& fine,
                       const Partition& coarse, bool rows) {
  std::vector<std::vector<std::size_t>>& all_breaks =
      rows ? m.row_breaks : m.col_breaks;
  all_breaks.assign(m.box.dclasses.size(), {});
  for (std::size_t c = 0; c < m.box.dclasses.size(); ++c) {
    EggBoxDClass& dc = m.box.dclasses[c];
    std::vector<elem_index>& axis = rows ? dc.row_rclasses : dc.col_lclasses;
    const std::size_t k = axis.size();
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    auto band = [&](std::size_t i) {
      return coarse.class_of[fine.classes[axis[i]][0]];
    };
    std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
      elem_index ba = coarse.classes[band(a)][0], bb = coarse.classes[band(b)][0];
      if (ba != bb) return ba < bb;
      return fine.classes[axis[a]][0] < fine.classes[axis[b]][0];
    });
    std::vector<elem_index> new_axis(k);
    for (std::size_t i = 0; i < k; ++i) new_axis[i] = axis[pos[i]];
    std::vector<std::vector<EggBoxCell>> new_cells = dc.cells;
    if (rows) {
      for (std::size_t i = 0; i < k; ++i) new_cells[i] = dc.cells[pos[i]];
    } else {
      for (std::size_t i = 0; i < new_cells.size(); ++i)
        for (std::size_t j = 0; j < k; ++j)
          new_cells[i][j] = dc.cells[i][pos[j]];
    }
    axis = std::move(new_axis);
    dc.cells = std::move(new_cells);
    std::vector<std::size_t>& breaks = all_breaks[c];
    for (std::size_t i = 1; i < k; ++i)
      if (band(i) != band(i - 1)) breaks.push_back(i);
  }
}

}  // namespace detail

/// Build the model for a semigroup or sub-semigroup view with an already
/// computed egg-box.
template <class S>
RenderModel make_render_model(const S& s, EggBox box, std::string title,
                              bool show_elements = false) {
  RenderModel m;
  m.title = std::move(title);
  m.box = std::move(box);
  m.labels = detail::element_labels(s);
  m.order = detail::display_order(m.box);
  m.names = detail::dclass_names(s, m.box, m.order);
  m.row_breaks.assign(m.box.dclasses.size(), {});
  m.col_breaks.assign(m.box.dclasses.size(), {});
  m.show_elements = show_elements;
  return m;
}

/// Inflation view of Reg(Sa): band the rows of each grid by the given
/// coarsening of R (the hat relation pulled back through the surmorphism).
/// `g` must be the Green structure the egg-box was built from.
inline void group_rows(RenderModel& m, const GreenStructure& g,
                       const Partition& rhat) {
  detail::group_axis(m, g.r, rhat, /*rows=*/true);
}

/// Dual view for Reg(aS): band the columns by the coarsening of L.
inline void group_cols(RenderModel& m, const GreenStructure& g,
                       const Partition& lhat) {
  detail::group_axis(m, g.l, lhat, /*rows=*/false);
}

/// ASCII egg-box: one bordered grid per D-class, top of the J-order first.
/// Group H-classes are starred; heavy separators ('=' rows, '#' columns)
/// mark hat-class boundaries when the model carries them.
inline std::string render_text(const RenderModel& m) {
  std::string out = "# " + m.title + "\n";
  std::size_t total = 0;
  for (const auto& dc : m.box.dclasses) total += dc.members.size();
  out += "# order " + std::to_string(total) + ", " +
         std::to_string(m.box.dclasses.size()) + " D-class" +
         (m.box.dclasses.size() == 1 ? "" : "es") + "\n";

  for (auto c : m.order) {
    const EggBoxDClass& dc = m.box.dclasses[c];
    const std::size_t nr = dc.row_rclasses.size();
    const std::size_t nc = dc.col_lclasses.size();
    out += "\n" + m.names[c] + ": " + std::to_string(nr) + " x " +
           std::to_string(nc) + " grid of H-classes of size " +
           std::to_string(dc.cell_size) +
           (dc.regular ? " (regular)" : " (non-regular)") + "\n";

    std::vector<std::vector<std::string>> text(
        nr, std::vector<std::string>(nc));
    std::size_t width = 1;
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        const EggBoxCell& cell = dc.cells[i][j];
        std::string t = cell.is_group ? "*" : "";
        if (m.show_elements) {
          for (std::size_t x = 0; x < cell.members.size(); ++x) {
            if (x) t += " ";
            t += m.labels[cell.members[x]];
          }
        } else {
          t += std::to_string(cell.members.size());
        }
        width = std::max(width, t.size());
        text[i][j] = std::move(t);
      }

    auto heavy_col = [&](std::size_t j) {
      const auto& b = m.col_breaks[c];
      return std::find(b.begin(), b.end(), j) != b.end();
    };
    auto heavy_row = [&](std::size_t i) {
      const auto& b = m.row_breaks[c];
      return std::find(b.begin(), b.end(), i) != b.end();
    };
    auto rule = [&](bool heavy) {
      std::string line = "+";
      for (std::size_t j = 0; j < nc; ++j) {
        line += std::string(width + 2, heavy ? '=' : '-');
        line += "+";
      }
      return line + "\n";
    };
    out += rule(false);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i > 0) out += rule(heavy_row(i));
      std::string line = "|";
      for (std::size_t j = 0; j < nc; ++j) {
        if (j > 0) line.back() = heavy_col(j) ? '#' : '|';
        const std::string& t = text[i][j];
        line += " " + t + std::string(width - t.size(), ' ') + " |";
      }
      out += line + "\n";
    }
    out += rule(false);
  }

  if (!m.box.hasse.empty()) {
    std::vector<std::size_t> pos(m.box.dclasses.size());
    for (std::size_t p = 0; p < m.order.size(); ++p) pos[m.order[p]] = p;
    auto edges = m.box.hasse;
    std::sort(edges.begin(), edges.end(),
              [&](const auto& a, const auto& b) {
                if (pos[a.first] != pos[b.first])
                  return pos[a.first] < pos[b.first];
                return pos[a.second] < pos[b.second];
              });
    out += "\n# J-order covers:";
    for (const auto& [upper, lower] : edges)
      out += " " + m.names[upper] + " > " + m.names[lower] + ";";
    out += "\n";
  }
  return out;
}

/// Graphviz output: one cluster per D-class holding an HTML-like table node
/// (rows = R-classes, columns = L-classes, group cells shaded), J-order
/// cover edges between clusters, and solid black bands at hat-class
/// boundaries when the model carries them.
inline std::string render_dot(const RenderModel& m) {
  std::string out = "digraph eggbox {\n";
  out += "  graph [compound=true, rankdir=TB, labelloc=\"t\", label=" +
         detail::quote(m.title) + "];\n";
  out += "  node [shape=plaintext];\n";
  std::vector<std::size_t> pos(m.box.dclasses.size());
  for (std::size_t p = 0; p < m.order.size(); ++p) pos[m.order[p]] = p;

  for (std::size_t p = 0; p < m.order.size(); ++p) {
    const elem_index c = m.order[p];
    const EggBoxDClass& dc = m.box.dclasses[c];
    const std::size_t nr = dc.row_rclasses.size();
    const std::size_t nc = dc.col_lclasses.size();
    auto heavy_col = [&](std::size_t j) {
      const auto& b = m.col_breaks[c];
      return std::find(b.begin(), b.end(), j) != b.end();
    };
    std::size_t ncols = nc;
    for (std::size_t j = 1; j < nc; ++j)
      if (heavy_col(j)) ++ncols;

    out += "  subgraph cluster_" + std::to_string(p) + " {\n";
    out += "    label=" + detail::quote(m.names[c]) + ";\n";
    out += "    d" + std::to_string(p) +
           " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\" "
           "CELLPADDING=\"4\">";
    for (std::size_t i = 0; i < nr; ++i) {
      const auto& rb = m.row_breaks[c];
      if (i > 0 && std::find(rb.begin(), rb.end(), i) != rb.end())
        out += "<TR><TD COLSPAN=\"" + std::to_string(ncols) +
               "\" BGCOLOR=\"black\" CELLPADDING=\"1\"></TD></TR>";
      out += "<TR>";
      for (std::size_t j = 0; j < nc; ++j) {
        if (j > 0 && heavy_col(j))
          out += "<TD BGCOLOR=\"black\" CELLPADDING=\"1\"></TD>";
        const EggBoxCell& cell = dc.cells[i][j];
        out += cell.is_group ? "<TD BGCOLOR=\"grey85\">" : "<TD>";
        if (m.show_elements) {
          for (std::size_t x = 0; x < cell.members.size(); ++x) {
            if (x) out += "<BR/>";
            out += detail::html_escape(m.labels[cell.members[x]]);
          }
        } else {
          out += std::to_string(cell.members.size());
        }
        out += "</TD>";
      }
      out += "</TR>";
    }
    out += "</TABLE>>];\n  }\n";
  }

  auto edges = m.box.hasse;
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    if (pos[a.first] != pos[b.first]) return pos[a.first] < pos[b.first];
    return pos[a.second] < pos[b.second];
  });
  for (const auto& [upper, lower] : edges)
    out += "  d" + std::to_string(pos[upper]) + " -> d" +
           std::to_string(pos[lower]) + " [ltail=cluster_" +
           std::to_string(pos[upper]) + ", lhead=cluster_" +
           std::to_string(pos[lower]) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace eggbox

#endif  // EGGBOX_RENDER_HPP_
