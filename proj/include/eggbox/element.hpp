#ifndef EGGBOX_ELEMENT_HPP_
#define EGGBOX_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eggbox/base.hpp"

namespace eggbox {

// Maps act on the right of points (xf), so compose(f, g) is "f then g":
// x(fg) = (xf)g.  Degrees are tiny (enumeration is exponential in n), so
// points are bytes.
inline constexpr std::uint8_t kUndef = 0xFF;

/// Total map {0..n-1} -> {0..n-1}; ordered lexicographically by image tuple.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint8_t> img) : img_(std::move(img)) {
    for (auto v : img_)
      require(v < img_.size(), "transformation image point out of range");
  }

  static Transformation identity(std::size_t n) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    return Transformation(std::move(img));
  }
  static Transformation constant(std::size_t n, unsigned value) {
    return Transformation(
        std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(value)));
  }

  std::size_t degree() const { return img_.size(); }
  unsigned operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  std::vector<unsigned> image() const {
    std::vector<unsigned> im(img_.begin(), img_.end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
  unsigned rank() const { return static_cast<unsigned>(image().size()); }

  bool is_permutation() const { return rank() == degree(); }
  bool is_idempotent() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[img_[x]] != img_[x]) return false;
    return true;
  }

  /// Restriction to a sorted subset A with im(f|_A) ⊆ A, relabelled through
  /// positions in A; the result is a map of degree |A|.
  Transformation restrict_to(const std::vector<unsigned>& a) const {
    std::vector<std::uint8_t> pos(degree(), kUndef);
    for (std::size_t i = 0; i < a.size(); ++i)
      pos[a[i]] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> img(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      require(pos[img_[a[i]]] != kUndef, "restrict_to: image leaves A");
      img[i] = pos[img_[a[i]]];
    }
    return Transformation(std::move(img));
  }

  friend Transformation compose(const Transformation& f,
                                const Transformation& g) {
    std::vector<std::uint8_t> img(f.img_.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.img_[f.img_[x]];
    return Transformation(std::move(img));
  }

  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<std::uint8_t> img_;
};

/// Partial map {0..n-1} -> {0..n-1}, kUndef marking undefined points.
/// Canonical order is by domain tuple, then by image tuple on the domain.
class PartialMap {
 public:
  PartialMap() = default;
  explicit PartialMap(std::vector<std::uint8_t> img) : img_(std::move(img)) {
    for (auto v : img_)
      require(v == kUndef || v < img_.size(),
              "partial map image point out of range");
  }

  static PartialMap identity(std::size_t n) {
    return from_total(Transformation::identity(n));
  }
  static PartialMap empty_map(std::size_t n) {
    return PartialMap(std::vector<std::uint8_t>(n, kUndef));
  }
  static PartialMap partial_identity(std::size_t n,
                                     const std::vector<unsigned>& a) {
    std::vector<std::uint8_t> img(n, kUndef);
    for (auto x : a) img[x] = static_cast<std::uint8_t>(x);
    return PartialMap(std::move(img));
  }
  static PartialMap from_total(const Transformation& t) {
    return PartialMap(t.images());
  }

  std::size_t degree() const { return img_.size(); }
  bool defined(std::size_t x) const { return img_[x] != kUndef; }
  unsigned operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool total() const {
    for (auto v : img_)
      if (v == kUndef) return false;
    return true;
  }
  Transformation to_total() const {
    require(total(), "partial map is not total");
    return Transformation(img_);
  }

  std::vector<unsigned> domain() const {
    std::vector<unsigned> d;
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != kUndef) d.push_back(static_cast<unsigned>(x));
    return d;
  }
  std::vector<unsigned> image() const {
    std::vector<unsigned> im;
    for (auto v : img_)
      if (v != kUndef) im.push_back(v);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
  unsigned rank() const { return static_cast<unsigned>(image().size()); }

  bool injective() const {
    return image().size() == domain().size();
  }
  bool is_idempotent() const { return compose(*this, *this) == *this; }

  /// Inverse of an injective partial map.
  PartialMap inverse() const {
    require(injective(), "inverse of a non-injective partial map");
    std::vector<std::uint8_t> img(img_.size(), kUndef);
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != kUndef) img[img_[x]] = static_cast<std::uint8_t>(x);
    return PartialMap(std::move(img));
  }

  /// Kernel as a list of blocks of the domain (same image point <=> same
  /// block), blocks ordered by least member.  Equal kernels imply equal
  /// domains, since the domain is the union of the blocks.
  std::vector<std::vector<unsigned>> kernel_blocks() const {
    std::vector<std::vector<unsigned>> blocks;
    std::vector<int> block_of_value(img_.size(), -1);
    for (std::size_t x = 0; x < img_.size(); ++x) {
      if (img_[x] == kUndef) continue;
      if (block_of_value[img_[x]] < 0) {
        block_of_value[img_[x]] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[block_of_value[img_[x]]].push_back(static_cast<unsigned>(x));
    }
    return blocks;
  }

  friend PartialMap compose(const PartialMap& f, const PartialMap& g) {
    std::vector<std::uint8_t> img(f.img_.size(), kUndef);
    for (std::size_t x = 0; x < img.size(); ++x)
      if (f.img_[x] != kUndef && g.img_[f.img_[x]] != kUndef)
        img[x] = g.img_[f.img_[x]];
    return PartialMap(std::move(img));
  }

  bool operator==(const PartialMap&) const = default;

  // domain-then-image order; kUndef never participates because domains are
  // compared first.
  std::strong_ordering operator<=>(const PartialMap& o) const {
    auto da = domain(), db = o.domain();
    if (auto c = da <=> db; c != 0) return c;
    for (auto x : da)
      if (auto c = img_[x] <=> o.img_[x]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<std::uint8_t> img_;
};

/// Equivalence relation on {0..n-1} given by its blocks, ordered by least
/// member.  Used both for kernels of total maps and for the alpha of a
/// kernel-constrained family.
class KernelPartition {
 public:
  KernelPartition() = default;
  KernelPartition(std::size_t n, std::vector<std::vector<unsigned>> blocks)
      : n_(n), blocks_(std::move(blocks)), block_of_(n, 0) {
    std::size_t seen = 0;
    for (auto& b : blocks_) {
      require(!b.empty(), "empty block in partition");
      std::sort(b.begin(), b.end());
      seen += b.size();
      for (auto x : b) {
        require(x < n_, "partition point out of range");
        block_of_[x] = static_cast<unsigned>(&b - blocks_.data());
      }
    }
    require(seen == n_, "blocks do not partition the set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (auto x : blocks_[i]) block_of_[x] = static_cast<unsigned>(i);
  }

  static KernelPartition of(const Transformation& f) {
    std::vector<std::vector<unsigned>> blocks;
    std::vector<int> block_of_value(f.degree(), -1);
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (block_of_value[f[x]] < 0) {
        block_of_value[f[x]] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[block_of_value[f[x]]].push_back(static_cast<unsigned>(x));
    }
    return KernelPartition(f.degree(), std::move(blocks));
  }
  static KernelPartition trivial(std::size_t n) {  // Δ
    std::vector<std::vector<unsigned>> blocks(n);
    for (std::size_t x = 0; x < n; ++x)
      blocks[x].push_back(static_cast<unsigned>(x));
    return KernelPartition(n, std::move(blocks));
  }
  static KernelPartition universal(std::size_t n) {  // ∇
    std::vector<std::vector<unsigned>> blocks(1);
    for (std::size_t x = 0; x < n; ++x)
      blocks[0].push_back(static_cast<unsigned>(x));
    return KernelPartition(n, std::move(blocks));
  }

  std::size_t degree() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
  unsigned block_of(unsigned x) const { return block_of_[x]; }
  bool same(unsigned x, unsigned y) const {
    return block_of_[x] == block_of_[y];
  }

  /// sigma ⊆ *this as relations: every sigma-block lies inside one block of
  /// *this.  E.g. ker(f) ⊇ alpha is ker_f.contains(alpha).
  bool contains(const KernelPartition& sigma) const {
    for (auto& b : sigma.blocks_)
      for (std::size_t i = 1; i < b.size(); ++i)
        if (!same(b[0], b[i])) return false;
    return true;
  }

  /// Every block meets a.
  bool saturated_by(const std::vector<unsigned>& a) const {
    std::vector<char> hit(blocks_.size(), 0);
    for (auto x : a) hit[block_of_[x]] = 1;
    for (auto h : hit)
      if (!h) return false;
    return true;
  }
  /// Distinct elements of a lie in distinct blocks.
  bool separates(const std::vector<unsigned>& a) const {
    std::vector<char> hit(blocks_.size(), 0);
    for (auto x : a) {
      if (hit[block_of_[x]]) return false;
      hit[block_of_[x]] = 1;
    }
    return true;
  }
  /// Every block meets a in exactly one point.
  bool cross_section(const std::vector<unsigned>& a) const {
    return a.size() == blocks_.size() && saturated_by(a) && separates(a);
  }

  /// Least member of each block, ascending: the canonical transversal.
  std::vector<unsigned> least_transversal() const {
    std::vector<unsigned> t;
    for (auto& b : blocks_) t.push_back(b[0]);
    std::sort(t.begin(), t.end());
    return t;
  }

  /// Number of classes of the pullback relation alpha f^{-1} =
  /// {(x,y) : (xf, yf) ∈ alpha} for a total map f on the same set.
  std::size_t pullback_num_classes(const Transformation& f) const {
    std::vector<char> hit(blocks_.size(), 0);
    for (std::size_t x = 0; x < f.degree(); ++x) hit[block_of_[f[x]]] = 1;
    std::size_t c = 0;
    for (auto h : hit) c += h;
    return c;
  }

  bool operator==(const KernelPartition&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<unsigned>> blocks_;
  std::vector<unsigned> block_of_;
};

// ---- literals: 1-indexed bracket syntax, "-" for undefined ("[1,1,3]",
// ---- "[2,-,1]").

inline std::string to_literal(const Transformation& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.degree(); ++x) {
    if (x) s += ",";
    s += std::to_string(f[x] + 1);
  }
  return s + "]";
}

inline std::string to_literal(const PartialMap& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.degree(); ++x) {
    if (x) s += ",";
    s += f.defined(x) ? std::to_string(f[x] + 1) : std::string("-");
  }
  return s + "]";
}

inline PartialMap parse_partial_map(const std::string& lit) {
  std::string body = lit;
  auto strip = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ')) t.pop_back();
  };
  strip(body);
  require(body.size() >= 2 && body.front() == '[' && body.back() == ']',
          "map literal must be bracketed, e.g. [1,1,3] or [2,-,1]");
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  std::vector<std::uint8_t> img;
  for (auto& p : parts) {
    strip(p);
    require(!p.empty(), "empty entry in map literal");
    if (p == "-") {
      img.push_back(kUndef);
      continue;
    }
    std::size_t pos = 0;
    int v = std::stoi(p, &pos);
    require(pos == p.size() && v >= 1, "map literal entries are 1-indexed");
    img.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return PartialMap(std::move(img));
}

inline Transformation parse_transformation(const std::string& lit) {
  return parse_partial_map(lit).to_total();
}

inline std::size_t hash_bytes(const std::vector<std::uint8_t>& v) {
  std::size_t h = 1469598103934665603ull;
  for (auto b : v) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

struct ElemHash {
  std::size_t operator()(const Transformation& t) const {
    return hash_bytes(t.images());
  }
  std::size_t operator()(const PartialMap& t) const {
    return hash_bytes(t.images());
  }
  std::size_t operator()(std::uint32_t v) const {
    return std::hash<std::uint32_t>()(v);
  }
};

}  // namespace eggbox

#endif  // EGGBOX_ELEMENT_HPP_
