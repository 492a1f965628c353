#ifndef EGGBOX_GREEN_HPP_
#define EGGBOX_GREEN_HPP_

#include <utility>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

/// Green's preorders and equivalences of a finite semigroup.  S^1 is virtual:
/// x ≤_L y iff x = y or x ∈ Sy, and ≤_J is the single relational composition
/// ≤_L ∘ ≤_R (x = uyv factors through w = yv).  D is computed twice -- as the
/// join of L and R and as the composition L∘R (= R∘L) -- and the two results
/// are asserted equal, as is D = J (finite case).
struct GreenStructure {
  BitMatrix leq_l, leq_r, leq_j;
  Partition l, r, h, d, j;

  bool leqL(elem_index x, elem_index y) const { return leq_l.get(x, y); }
  bool leqR(elem_index x, elem_index y) const { return leq_r.get(x, y); }
  bool leqJ(elem_index x, elem_index y) const { return leq_j.get(x, y); }
};

namespace detail {

inline Partition partition_from_preorder(const BitMatrix& leq) {
  const std::size_t n = leq.size();
  std::vector<elem_index> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      if (leq.get(x, y) && leq.get(y, x)) {
        labels[x] = static_cast<elem_index>(y);  // least equivalent element
        break;
      }
    }
  }
  return Partition::from_labels(labels);
}

/// Composition of two equivalences given as partitions: out[x][y] = 1 iff
/// ∃w: x p w and w q y.  Rows are shared inside p-classes.
inline BitMatrix compose_equivalences(const Partition& p, const Partition& q) {
  const std::size_t n = p.size();
  BitMatrix qmat(n);
  for (auto& cls : q.classes)
    for (auto x : cls)
      for (auto y : cls) qmat.set(x, y);
  BitMatrix out(n);
  for (auto& cls : p.classes) {
    elem_index head = cls[0];
    for (auto w : cls) out.or_row_from(qmat, w, head);
    for (auto x : cls)
      if (x != head) out.or_row_into(head, x);
  }
  return out;
}

}  // namespace detail

template <IndexedSemigroup Sg>
GreenStructure green(const Sg& s) {
  const std::size_t n = s.size();
  GreenStructure g;
  g.leq_l = BitMatrix(n);
  g.leq_r = BitMatrix(n);
  g.leq_j = BitMatrix(n);

  for (elem_index y = 0; y < n; ++y) {
    g.leq_l.set(y, y);
    g.leq_r.set(y, y);
    for (elem_index z = 0; z < n; ++z) {
      g.leq_l.set(s.product(z, y), y);
      g.leq_r.set(s.product(y, z), y);
    }
  }
  for (elem_index x = 0; x < n; ++x)
    for (elem_index w = 0; w < n; ++w)
      if (g.leq_l.get(x, w)) g.leq_j.or_row_from(g.leq_r, w, x);

  g.l = detail::partition_from_preorder(g.leq_l);
  g.r = detail::partition_from_preorder(g.leq_r);
  g.j = detail::partition_from_preorder(g.leq_j);

  {  // H = L ∧ R
    std::vector<elem_index> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      elem_index lab = static_cast<elem_index>(x);
      for (std::size_t y = 0; y < x; ++y)
        if (g.l.same(static_cast<elem_index>(x), static_cast<elem_index>(y)) &&
            g.r.same(static_cast<elem_index>(x), static_cast<elem_index>(y))) {
          lab = static_cast<elem_index>(y);
          break;
        }
      labels[x] = lab;
    }
    g.h = Partition::from_labels(labels);
  }

  {  // D as join of L and R ...
    DisjointSets dsu(n);
    for (auto& cls : g.l.classes)
      for (std::size_t i = 1; i < cls.size(); ++i) dsu.unite(cls[0], cls[i]);
    for (auto& cls : g.r.classes)
      for (std::size_t i = 1; i < cls.size(); ++i) dsu.unite(cls[0], cls[i]);
    g.d = dsu.to_partition();
    // ... cross-checked against both compositions ...
    BitMatrix lr = detail::compose_equivalences(g.l, g.r);
    BitMatrix rl = detail::compose_equivalences(g.r, g.l);
    invariant(lr == rl, "L∘R != R∘L");
    for (elem_index x = 0; x < n; ++x)
      for (elem_index y = 0; y < n; ++y)
        invariant(lr.get(x, y) == g.d.same(x, y), "D != L∘R");
    // ... and D = J on finite semigroups.
    invariant(g.d == g.j, "D != J on a finite semigroup");
  }
  return g;
}

/// One H-class cell of an egg-box grid.
struct EggBoxCell {
  IndexSet members;
  bool is_group = false;
};

/// One D-class: rows are R-classes, columns are L-classes, both ordered by
/// least element.
struct EggBoxDClass {
  IndexSet members;
  std::vector<elem_index> row_rclasses;
  std::vector<elem_index> col_lclasses;
  std::vector<std::vector<EggBoxCell>> cells;
  std::size_t cell_size = 0;
  bool regular = false;
};

struct EggBox {
  std::vector<EggBoxDClass> dclasses;
  /// (upper, lower) cover pairs of the J-order on D-classes, both sides
  /// indices into `dclasses`.
  std::vector<std::pair<elem_index, elem_index>> hasse;
  /// leq[c1][c2] = 1 iff class c1 ≤_J c2.
  std::vector<std::vector<char>> leq;
};

template <IndexedSemigroup Sg>
EggBox eggbox_of(const Sg& s, const GreenStructure& g) {
  EggBox box;
  const std::size_t nd = g.d.num_classes();
  box.dclasses.resize(nd);
  for (std::size_t c = 0; c < nd; ++c) {
    EggBoxDClass& dc = box.dclasses[c];
    dc.members = g.d.classes[c];
    for (auto x : dc.members) {
      if (dc.row_rclasses.empty() || dc.row_rclasses.back() != g.r.class_of[x])
        dc.row_rclasses.push_back(g.r.class_of[x]);
      dc.col_lclasses.push_back(g.l.class_of[x]);
    }
    sort_unique(dc.row_rclasses);
    sort_unique(dc.col_lclasses);
    // reorder by least element of each class
    auto by_least = [&](const Partition& p, std::vector<elem_index>& ids) {
      std::sort(ids.begin(), ids.end(), [&](elem_index a, elem_index b) {
        return p.classes[a][0] < p.classes[b][0];
      });
    };
    by_least(g.r, dc.row_rclasses);
    by_least(g.l, dc.col_lclasses);

    dc.cells.assign(dc.row_rclasses.size(),
                    std::vector<EggBoxCell>(dc.col_lclasses.size()));
    std::vector<elem_index> rpos(g.r.num_classes(), UNDEFINED_INDEX);
    std::vector<elem_index> lpos(g.l.num_classes(), UNDEFINED_INDEX);
    for (std::size_t i = 0; i < dc.row_rclasses.size(); ++i)
      rpos[dc.row_rclasses[i]] = static_cast<elem_index>(i);
    for (std::size_t i = 0; i < dc.col_lclasses.size(); ++i)
      lpos[dc.col_lclasses[i]] = static_cast<elem_index>(i);
    for (auto x : dc.members)
      dc.cells[rpos[g.r.class_of[x]]][lpos[g.l.class_of[x]]].members.push_back(
          x);

    bool has_idempotent = false;
    for (auto& row : dc.cells)
      for (auto& cell : row) {
        invariant(!cell.members.empty(), "egg-box grid has an empty H-cell");
        if (dc.cell_size == 0) dc.cell_size = cell.members.size();
        invariant(cell.members.size() == dc.cell_size,
                  "H-classes of one D-class differ in size");
        for (auto x : cell.members)
          if (s.product(x, x) == x) {
            cell.is_group = true;
            break;
          }
        has_idempotent |= cell.is_group;
      }
    dc.regular = has_idempotent;
    if (dc.regular) {
      // a D-class with an idempotent consists of regular elements
      for (auto x : dc.members) {
        bool reg = false;
        for (elem_index w = 0; w < s.size() && !reg; ++w)
          reg = s.product(s.product(x, w), x) == x;
        invariant(reg, "irregular element in a regular D-class");
      }
    }
  }

  box.leq.assign(nd, std::vector<char>(nd, 0));
  for (std::size_t c1 = 0; c1 < nd; ++c1)
    for (std::size_t c2 = 0; c2 < nd; ++c2)
      box.leq[c1][c2] =
          g.leq_j.get(g.d.classes[c1][0], g.d.classes[c2][0]) ? 1 : 0;
  for (elem_index upper = 0; upper < nd; ++upper)
    for (elem_index lower = 0; lower < nd; ++lower) {
      if (upper == lower || !box.leq[lower][upper]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < nd && covered; ++mid)
        if (mid != upper && mid != lower && box.leq[lower][mid] &&
            box.leq[mid][upper])
          covered = false;
      if (covered) box.hasse.emplace_back(upper, lower);
    }
  return box;
}

}  // namespace eggbox

#endif  // EGGBOX_GREEN_HPP_
