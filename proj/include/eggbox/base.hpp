#ifndef EGGBOX_BASE_HPP_
#define EGGBOX_BASE_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eggbox {

/// Index of an element inside an indexed semigroup.
using elem_index = std::uint32_t;
inline constexpr elem_index UNDEFINED_INDEX = static_cast<elem_index>(-1);

/// Errors map onto CLI exit codes: InputError -> 2, CapExceededError -> 3,
/// InvariantError (an internal cross-check failed) -> 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : Error {
  using Error::Error;
};
struct CapExceededError : Error {
  using Error::Error;
};
struct InvariantError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void invariant(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

/// An ascending, duplicate-free vector of element indices.  Every reported
/// set in the library uses this form, so equality of results is equality of
/// vectors.
using IndexSet = std::vector<elem_index>;

inline void sort_unique(IndexSet& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool set_contains(const IndexSet& s, elem_index x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Packed boolean n x n matrix; rows are 64-bit word runs so that relational
/// composition can be done with row-wise ORs.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), w_((n + 63) / 64), bits_(n_ * w_, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * w_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * w_ + j / 64] |= std::uint64_t(1) << (j % 64);
  }

  /// dst |= src, as rows.
  void or_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = &bits_[src * w_];
    std::uint64_t* d = &bits_[dst * w_];
    for (std::size_t k = 0; k < w_; ++k) d[k] |= s[k];
  }
  void or_row_from(const BitMatrix& other, std::size_t src, std::size_t dst) {
    const std::uint64_t* s = &other.bits_[src * w_];
    std::uint64_t* d = &bits_[dst * w_];
    for (std::size_t k = 0; k < w_; ++k) d[k] |= s[k];
  }

  bool operator==(const BitMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t w_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Growable bitset over element indices; used by closures and rank search.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  void reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
  }
  std::size_t capacity() const { return n_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const DynBitset&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Partition of {0..n-1}.  Classes are numbered canonically: class k is the
/// class whose least member is the k-th smallest among least members, and
/// each class lists its members ascending.  Two partitions over the same set
/// are equal iff the structs compare equal.
struct Partition {
  std::vector<elem_index> class_of;
  std::vector<IndexSet> classes;

  std::size_t size() const { return class_of.size(); }
  std::size_t num_classes() const { return classes.size(); }
  bool same(elem_index i, elem_index j) const {
    return class_of[i] == class_of[j];
  }

  bool operator==(const Partition&) const = default;

  /// Renumbers arbitrary labels into canonical class ids (first occurrence
  /// while scanning 0..n-1 == least member).
  static Partition from_labels(const std::vector<elem_index>& labels) {
    Partition p;
    p.class_of.assign(labels.size(), UNDEFINED_INDEX);
    std::vector<elem_index> remap(labels.size(), UNDEFINED_INDEX);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      elem_index lab = labels[i];
      if (remap[lab] == UNDEFINED_INDEX) {
        remap[lab] = static_cast<elem_index>(p.classes.size());
        p.classes.emplace_back();
      }
      p.class_of[i] = remap[lab];
      p.classes[remap[lab]].push_back(static_cast<elem_index>(i));
    }
    return p;
  }
};

/// True when two partitions of the same ground set have identical blocks,
/// regardless of how the class ids were assigned.
inline bool same_partition(const Partition& x, const Partition& y) {
  if (x.size() != y.size()) return false;
  return Partition::from_labels(x.class_of) ==
         Partition::from_labels(y.class_of);
}

/// True when every block of `fine` lies inside a single block of `coarse`.
inline bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) return false;
  for (const auto& cls : fine.classes)
    for (auto x : cls)
      if (coarse.class_of[x] != coarse.class_of[cls[0]]) return false;
  return true;
}

/// Union-find over {0..n-1}.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<elem_index>(i);
  }
  elem_index find(elem_index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(elem_index a, elem_index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  Partition to_partition() {
    std::vector<elem_index> labels(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i)
      labels[i] = find(static_cast<elem_index>(i));
    return Partition::from_labels(labels);
  }

 private:
  std::vector<elem_index> parent_;
};

}  // namespace eggbox

#endif  // EGGBOX_BASE_HPP_
