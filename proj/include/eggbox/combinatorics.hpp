#ifndef EGGBOX_COMBINATORICS_HPP_
#define EGGBOX_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

#include "eggbox/base.hpp"

namespace eggbox {

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (unsigned i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

/// Stirling number of the second kind S(n, k).
inline std::uint64_t stirling2(unsigned n, unsigned k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> s(n + 1,
                                            std::vector<std::uint64_t>(k + 1));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= k && j <= i; ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Elementary symmetric polynomials e_0..e_k of the given values,
/// e_m = Σ over m-subsets of the product of the chosen values.
inline std::vector<std::uint64_t> elementary_symmetric(
    const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> e(values.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t m = i + 1; m > 0; --m) e[m] += values[i] * e[m - 1];
  return e;
}

/// All k-subsets of {0..n-1}, each ascending, in lexicographic order.
inline std::vector<std::vector<unsigned>> subsets_of_size(unsigned n,
                                                          unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// All non-empty subsets of {0..n-1}, smallest size first then lex.
inline std::vector<std::vector<unsigned>> nonempty_subsets(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned k = 1; k <= n; ++k)
    for (auto& s : subsets_of_size(n, k)) out.push_back(s);
  return out;
}

/// All set partitions of {0..n-1} in restricted-growth-string order; each
/// partition is a list of blocks, blocks ordered by least member.
inline std::vector<std::vector<std::vector<unsigned>>> set_partitions(
    unsigned n) {
  std::vector<std::vector<std::vector<unsigned>>> out;
  std::vector<unsigned> rgs(n, 0);
  auto emit = [&]() {
    unsigned nb = 0;
    for (unsigned i = 0; i < n; ++i) nb = std::max(nb, rgs[i] + 1);
    std::vector<std::vector<unsigned>> blocks(nb);
    for (unsigned i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
    out.push_back(blocks);
  };
  auto rec = [&](auto&& self, unsigned i, unsigned maxlab) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (unsigned lab = 0; lab <= maxlab + 1 && lab <= i; ++lab) {
      rgs[i] = lab;
      self(self, i + 1, std::max(maxlab, lab));
    }
  };
  if (n == 0) return out;
  rec(rec, 1, 0);  // element 0 always has label 0
  return out;
}

}  // namespace eggbox

#endif  // EGGBOX_COMBINATORICS_HPP_
