#ifndef EGGBOX_REGULARITY_HPP_
#define EGGBOX_REGULARITY_HPP_

#include <vector>

#include "eggbox/base.hpp"
#include "eggbox/semigroup.hpp"

namespace eggbox {

template <IndexedSemigroup Sg>
IndexSet idempotents(const Sg& s) {
  IndexSet out;
  for (elem_index x = 0; x < s.size(); ++x)
    if (s.product(x, x) == x) out.push_back(x);
  return out;
}

template <IndexedSemigroup Sg>
bool is_regular_element(const Sg& s, elem_index x) {
  for (elem_index w = 0; w < s.size(); ++w)
    if (s.product(s.product(x, w), x) == x) return true;
  return false;
}

/// Reg(S) = {x : x = xwx for some w}.
template <IndexedSemigroup Sg>
IndexSet regular_elements(const Sg& s) {
  IndexSet out;
  for (elem_index x = 0; x < s.size(); ++x)
    if (is_regular_element(s, x)) out.push_back(x);
  return out;
}

/// V(x) = {y : x = xyx, y = yxy}.
template <IndexedSemigroup Sg>
IndexSet inverses_of(const Sg& s, elem_index x) {
  IndexSet out;
  for (elem_index y = 0; y < s.size(); ++y)
    if (s.product(s.product(x, y), x) == x &&
        s.product(s.product(y, x), y) == y)
      out.push_back(y);
  return out;
}

/// 𝔼(S) = ⟨E(S)⟩, the idempotent-generated subsemigroup, as an index set.
template <IndexedSemigroup Sg>
IndexSet idempotent_generated(const Sg& s) {
  return closure_within(s, idempotents(s));
}

/// eSe for an idempotent e: the local monoid at e (identity e).
template <IndexedSemigroup Sg>
IndexSet local_monoid(const Sg& s, elem_index e) {
  invariant(s.product(e, e) == e, "local monoid base must be an idempotent");
  IndexSet out;
  for (elem_index x = 0; x < s.size(); ++x)
    out.push_back(s.product(s.product(e, x), e));
  sort_unique(out);
  return out;
}

template <IndexedSemigroup Sg>
bool is_regular_semigroup(const Sg& s) {
  for (elem_index x = 0; x < s.size(); ++x)
    if (!is_regular_element(s, x)) return false;
  return true;
}

/// Inverse semigroup test: every element has exactly one inverse.
template <IndexedSemigroup Sg>
bool is_inverse_semigroup(const Sg& s) {
  for (elem_index x = 0; x < s.size(); ++x)
    if (inverses_of(s, x).size() != 1) return false;
  return true;
}

/// Commuting idempotents test (with regularity this is equivalent to being
/// inverse; both sides are checked independently in the tests).
template <IndexedSemigroup Sg>
bool idempotents_commute(const Sg& s) {
  IndexSet e = idempotents(s);
  for (auto x : e)
    for (auto y : e)
      if (s.product(x, y) != s.product(y, x)) return false;
  return true;
}

/// Semilattice = all elements idempotent and commuting.
template <IndexedSemigroup Sg>
bool is_semilattice(const Sg& s) {
  return idempotents(s).size() == s.size() && idempotents_commute(s);
}

}  // namespace eggbox

#endif  // EGGBOX_REGULARITY_HPP_
