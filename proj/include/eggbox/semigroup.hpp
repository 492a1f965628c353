#ifndef EGGBOX_SEMIGROUP_HPP_
#define EGGBOX_SEMIGROUP_HPP_

#include <concepts>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/element.hpp"

namespace eggbox {

/// Anything with indexed elements and an index-level product.  All structural
/// algorithms (Green's relations, rank search, ideal analysis) work against
/// this concept, so they run unchanged on full semigroups and on
/// sub-semigroup views.
template <class S>
concept IndexedSemigroup = requires(const S& s, elem_index i) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.product(i, i) } -> std::convertible_to<elem_index>;
};

template <class E>
concept Composable = requires(const E& a, const E& b) {
  { compose(a, b) } -> std::convertible_to<E>;
};

struct SemigroupCaps {
  std::size_t element_cap = 1'000'000;  // closure enumeration cap
  std::size_t table_cap = 10'000;       // materialize n*n table below this
};

/// Finite semigroup with an indexed, duplicate-free element list.  Products
/// are served from a materialized table when the size is below the table
/// cap, otherwise by composing payloads and looking the result up.  The
/// `transposed` flag implements the opposite semigroup without copying.
template <class E>
class Semigroup {
 public:
  Semigroup() = default;

  /// `elems` must be duplicate-free and closed under composition.
  static Semigroup from_elements(std::vector<E> elems,
                                 SemigroupCaps caps = {},
                                 bool verify_closed = true) {
    Semigroup s;
    s.elems_ = std::move(elems);
    s.build_index();
    if (s.size() < caps.table_cap) {
      s.materialize_table();  // also proves closedness
    } else if (verify_closed) {
      s.verify_closed_lazily();
    }
    s.detect_identity();
    return s;
  }

  /// Abstract semigroup from an explicit table; payload i is just i.
  static Semigroup from_table(std::size_t n, std::vector<elem_index> table)
    requires std::same_as<E, std::uint32_t>
  {
    require(table.size() == n * n, "product table has wrong shape");
    for (auto v : table) require(v < n, "product table index out of range");
    Semigroup s;
    s.elems_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      s.elems_[i] = static_cast<std::uint32_t>(i);
    s.table_ = std::move(table);
    s.build_index();
    invariant(is_associative(s), "product table is not associative");
    s.detect_identity();
    return s;
  }

  std::size_t size() const { return elems_.size(); }

  elem_index product(elem_index i, elem_index j) const {
    if (transposed_) std::swap(i, j);
    return raw(i, j);
  }

  const E& element(elem_index i) const { return elems_[i]; }

  std::optional<elem_index> index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_table() const { return !table_.empty(); }
  bool transposed() const { return transposed_; }

  /// Two-sided identity, if one exists.
  std::optional<elem_index> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }

  const IndexSet& generators() const { return gens_; }

  /// The same elements with the reversed product.  Indices are unchanged, so
  /// index sets computed on either side line up.
  Semigroup opposite() const {
    Semigroup s = *this;
    s.transposed_ = !s.transposed_;
    return s;
  }

  template <class F>
  friend Semigroup<F> closure(std::vector<F> gens, SemigroupCaps caps);

 private:
  elem_index raw(elem_index i, elem_index j) const {
    if (!table_.empty()) return table_[std::size_t(i) * size() + j];
    if constexpr (Composable<E>) {
      auto it = index_.find(compose(elems_[i], elems_[j]));
      invariant(it != index_.end(), "element set is not closed under product");
      return it->second;
    } else {
      throw InvariantError("abstract semigroup without a product table");
    }
  }

  void build_index() {
    index_.clear();
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      auto [it, fresh] = index_.emplace(elems_[i], static_cast<elem_index>(i));
      (void)it;
      invariant(fresh, "duplicate element in semigroup");
    }
  }

  void materialize_table() {
    if constexpr (Composable<E>) {
      const std::size_t n = size();
      table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          auto it = index_.find(compose(elems_[i], elems_[j]));
          invariant(it != index_.end(),
                    "element set is not closed under product");
          table_[i * n + j] = it->second;
        }
    }
  }

  void verify_closed_lazily() {
    if constexpr (Composable<E>) {
      const std::size_t n = size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          invariant(index_.count(compose(elems_[i], elems_[j])) > 0,
                    "element set is not closed under product");
    }
  }

  void detect_identity() {
    identity_.reset();
    const std::size_t n = size();
    for (elem_index e = 0; e < n; ++e) {
      if (raw(e, e) != e) continue;
      bool ok = true;
      for (elem_index x = 0; x < n && ok; ++x)
        ok = raw(e, x) == x && raw(x, e) == x;
      if (ok) {
        identity_ = e;
        return;
      }
    }
  }

  std::vector<E> elems_;
  std::vector<elem_index> table_;
  std::unordered_map<E, elem_index, ElemHash> index_;
  IndexSet gens_;
  std::optional<elem_index> identity_;
  bool transposed_ = false;
};

/// All products of the generators (right-multiplication closure), indexed by
/// discovery order after the generators are put into canonical (payload)
/// order.  Throws CapExceededError past caps.element_cap.
template <class E>
Semigroup<E> closure(std::vector<E> gens, SemigroupCaps caps = {}) {
  require(!gens.empty(), "closure needs at least one generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Semigroup<E> s;
  s.elems_ = gens;
  s.build_index();
  const std::size_t num_gens = gens.size();
  for (std::size_t i = 0; i < s.elems_.size(); ++i) {
    for (std::size_t g = 0; g < num_gens; ++g) {
      E prod = compose(s.elems_[i], s.elems_[g]);
      if (s.index_.count(prod)) continue;
      if (s.elems_.size() >= caps.element_cap)
        throw CapExceededError("closure exceeded the element cap");
      s.index_.emplace(prod, static_cast<elem_index>(s.elems_.size()));
      s.elems_.push_back(std::move(prod));
    }
  }
  for (elem_index g = 0; g < num_gens; ++g) s.gens_.push_back(g);
  if (s.size() < caps.table_cap) s.materialize_table();
  s.detect_identity();
  return s;
}

/// Monogenic semigroup of index m and period r: elements a, a^2, ...,
/// a^{m+r-1} with a^{m+r} = a^m.  Element k (0-based) is a^{k+1}.
inline Semigroup<std::uint32_t> monogenic(unsigned m, unsigned r) {
  require(m >= 1 && r >= 1, "monogenic(m, r) needs m, r >= 1");
  const std::size_t n = m + r - 1;
  auto reduce = [&](std::size_t exponent) -> elem_index {
    if (exponent > n) exponent = m + (exponent - m) % r;
    return static_cast<elem_index>(exponent - 1);
  };
  std::vector<elem_index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = reduce((i + 1) + (j + 1));
  return Semigroup<std::uint32_t>::from_table(n, std::move(table));
}

/// View of a closed subset of a parent semigroup, reindexed 0..k-1 in
/// ascending order of parent index.
template <IndexedSemigroup Sg>
class SubSemigroup {
 public:
  SubSemigroup(const Sg& parent, IndexSet members)
      : parent_(&parent),
        members_(std::move(members)),
        local_(parent.size(), UNDEFINED_INDEX) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      invariant(i == 0 || members_[i - 1] < members_[i],
                "sub-semigroup member list must be ascending");
      local_[members_[i]] = static_cast<elem_index>(i);
    }
    for (elem_index i = 0; i < members_.size(); ++i)
      for (elem_index j = 0; j < members_.size(); ++j)
        invariant(local_[parent_->product(members_[i], members_[j])] !=
                      UNDEFINED_INDEX,
                  "subset is not closed under product");
  }

  std::size_t size() const { return members_.size(); }
  elem_index product(elem_index i, elem_index j) const {
    return local_[parent_->product(members_[i], members_[j])];
  }

  const Sg& parent() const { return *parent_; }
  elem_index parent_index(elem_index i) const { return members_[i]; }
  const IndexSet& members() const { return members_; }
  elem_index local_index(elem_index parent_idx) const {
    invariant(local_[parent_idx] != UNDEFINED_INDEX,
              "element is not in the sub-semigroup");
    return local_[parent_idx];
  }
  bool contains_parent_index(elem_index parent_idx) const {
    return parent_idx < local_.size() &&
           local_[parent_idx] != UNDEFINED_INDEX;
  }

  /// Parent indices of a local index set.
  IndexSet to_parent(const IndexSet& local) const {
    IndexSet out;
    out.reserve(local.size());
    for (auto i : local) out.push_back(members_[i]);
    return out;  // ascending because members_ is
  }
  IndexSet to_local(const IndexSet& parent) const {
    IndexSet out;
    out.reserve(parent.size());
    for (auto i : parent) out.push_back(local_index(i));
    return out;
  }

 private:
  const Sg* parent_;
  IndexSet members_;
  std::vector<elem_index> local_;
};

/// ⟨seed⟩ inside an existing semigroup, as an ascending index set.
template <IndexedSemigroup Sg>
IndexSet closure_within(const Sg& s, const IndexSet& seed) {
  DynBitset in(s.size());
  std::vector<elem_index> order;
  for (auto x : seed)
    if (!in.test(x)) {
      in.set(x);
      order.push_back(x);
    }
  IndexSet gens = order;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto g : gens) {
      elem_index p = s.product(order[i], g);
      if (!in.test(p)) {
        in.set(p);
        order.push_back(p);
      }
    }
  sort_unique(order);
  return order;
}

/// Associativity check: exhaustive when n^3 <= budget, otherwise that many
/// deterministically sampled triples.
template <IndexedSemigroup Sg>
bool is_associative(const Sg& s, std::uint64_t budget = 1'000'000'000) {
  const std::uint64_t n = s.size();
  if (n == 0) return true;
  if (n * n * n <= budget) {
    for (elem_index i = 0; i < n; ++i)
      for (elem_index j = 0; j < n; ++j)
        for (elem_index k = 0; k < n; ++k)
          if (s.product(s.product(i, j), k) != s.product(i, s.product(j, k)))
            return false;
    return true;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (std::uint64_t t = 0; t < budget; ++t) {
    elem_index i = static_cast<elem_index>(next() % n);
    elem_index j = static_cast<elem_index>(next() % n);
    elem_index k = static_cast<elem_index>(next() % n);
    if (s.product(s.product(i, j), k) != s.product(i, s.product(j, k)))
      return false;
  }
  return true;
}

// ---- Cayley-table CSV: first line "n=<size>", then n rows of n
// ---- comma-separated 0-based indices.

inline Semigroup<std::uint32_t> load_cayley_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)),
          "cayley csv: missing header line");
  require(line.rfind("n=", 0) == 0, "cayley csv: header must be n=<size>");
  std::size_t n = 0;
  try {
    n = std::stoul(line.substr(2));
  } catch (const std::exception&) {
    throw InputError("cayley csv: bad size in header");
  }
  require(n >= 1, "cayley csv: size must be positive");
  std::vector<elem_index> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    require(static_cast<bool>(std::getline(in, line)),
            "cayley csv: missing table row");
    std::stringstream row(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(cell, &pos);
        require(pos == cell.size(), "cayley csv: bad cell");
        require(v < n, "cayley csv: index out of range");
        table.push_back(static_cast<elem_index>(v));
      } catch (const InputError&) {
        throw;
      } catch (const std::exception&) {
        throw InputError("cayley csv: bad cell");
      }
      ++c;
    }
    require(c == n, "cayley csv: wrong row length");
  }
  return Semigroup<std::uint32_t>::from_table(n, std::move(table));
}

template <IndexedSemigroup Sg>
void save_cayley_csv(const Sg& s, std::ostream& out) {
  out << "n=" << s.size() << "\n";
  for (elem_index i = 0; i < s.size(); ++i) {
    for (elem_index j = 0; j < s.size(); ++j) {
      if (j) out << ",";
      out << s.product(i, j);
    }
    out << "\n";
  }
}

}  // namespace eggbox

#endif  // EGGBOX_SEMIGROUP_HPP_
