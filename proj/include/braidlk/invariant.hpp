#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "braidlk/braid_word.hpp"
#include "braidlk/diagram.hpp"

namespace braidlk {

enum class Axis : int { x = 0, y = 1 };

/// One basis element X_j or Y_j. Ordering puts all X before all Y, then
/// ascending j: the canonical serialization order.
struct BasisKey {
  Axis axis;
  int j;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// An element of the free abelian group on {X_j, Y_j : j in Z}, stored as a
/// sparse map with zero coefficients pruned.
class FreeAbelianValue {
 public:
  using Terms = std::map<BasisKey, std::int64_t>;

  FreeAbelianValue() = default;

  static FreeAbelianValue basis(Axis axis, int j, std::int64_t coeff = 1) {
    FreeAbelianValue v;
    v.add_term(axis, j, coeff);
    return v;
  }

  void add_term(Axis axis, int j, std::int64_t coeff) {
    if (coeff == 0) return;
    const BasisKey key{axis, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else if ((it->second += coeff) == 0) {
      terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const FreeAbelianValue&, const FreeAbelianValue&) = default;

 private:
  Terms terms_;
};

inline FreeAbelianValue ga_add(const FreeAbelianValue& u, const FreeAbelianValue& v) {
  FreeAbelianValue out = u;
  for (const auto& [key, coeff] : v.terms()) out.add_term(key.axis, key.j, coeff);
  return out;
}

inline FreeAbelianValue ga_sub(const FreeAbelianValue& u, const FreeAbelianValue& v) {
  FreeAbelianValue out = u;
  for (const auto& [key, coeff] : v.terms()) out.add_term(key.axis, key.j, -coeff);
  return out;
}

inline FreeAbelianValue ga_scale(const FreeAbelianValue& u, std::int64_t c) {
  FreeAbelianValue out;
  for (const auto& [key, coeff] : u.terms()) out.add_term(key.axis, key.j, coeff * c);
  return out;
}

/// Sums X_{lk} over positive crossings and Y_{lk} over negative crossings of
/// all smoothings of the closure of w. Requires the closure to be a knot.
inline FreeAbelianValue i_lk(const BraidWord& w) {
  const ClosedBraid closed = hat(w);
  if (!closed.knot)
    throw std::invalid_argument("i_lk requires a word whose closure is a knot");
  FreeAbelianValue v;
  for (const Smoothing& s : smooth_all(closed))
    v.add_term(s.crossing_sign > 0 ? Axis::x : Axis::y, s.lk, 1);
  return v;
}

/// The homomorphism determined by X_j -> |j| and Y_j -> -|j-1|.
inline std::int64_t g_hom(const FreeAbelianValue& v) {
  std::int64_t total = 0;
  for (const auto& [key, coeff] : v.terms()) {
    const std::int64_t j = key.j;
    total += coeff * (key.axis == Axis::x ? std::abs(j) : -std::abs(j - 1));
  }
  return total;
}

/// The integer word invariant on 3-strand words with knot closure.
inline std::int64_t big_g(const BraidWord& w) {
  if (w.strand_count() != 3)
    throw std::invalid_argument("big_g is defined on 3-strand words");
  return g_hom(i_lk(w));
}

/// |big_g(a) - big_g(b)|: a lower bound on the braid-relation distance.
inline std::int64_t lower_bound(const BraidWord& a, const BraidWord& b) {
  const std::int64_t diff = big_g(a) - big_g(b);
  return diff < 0 ? -diff : diff;
}

/// The closed form of i_lk(a_k) - i_lk(b_k):
/// sum over i = 1..k of
///   X_{i-2k-1} + 2 X_{2k+1-i} + X_{i-2k} - X_{i-k-1} - 2 X_{k-i+1} - X_{i-k}.
/// Applying g_hom gives 4k^2.
inline FreeAbelianValue family_difference_formula(int k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
  FreeAbelianValue v;
  for (int i = 1; i <= k; ++i) {
    v.add_term(Axis::x, i - 2 * k - 1, 1);
    v.add_term(Axis::x, 2 * k + 1 - i, 2);
    v.add_term(Axis::x, i - 2 * k, 1);
    v.add_term(Axis::x, i - k - 1, -1);
    v.add_term(Axis::x, k - i + 1, -2);
    v.add_term(Axis::x, i - k, -1);
  }
  return v;
}

enum class DeltaClass {
  zero,
  matched_rii,    // +-(X_j + Y_{j+1})
  unmatched_rii,  // +-(X_j + Y_j)
  ri,             // +-X_0 or +-Y_0
  riii_x,         // +-(X_j - X_{j+1})
  riii_y,         // +-(Y_j - Y_{j+1})
  other,
};

/// Exact shape of an i_lk difference; j and sign are meaningful only for the
/// classes that carry them (sign is the coefficient of the first basis term).
struct DeltaShape {
  DeltaClass kind = DeltaClass::other;
  int j = 0;
  int sign = 0;
  friend bool operator==(const DeltaShape&, const DeltaShape&) = default;
};

/// Pattern-matches a value against the move-effect table: zero,
/// matched/unmatched RII, RI, or RIII shapes, else Other. The match is exact
/// integer algebra; no tolerance is involved.
inline DeltaShape classify_value(const FreeAbelianValue& delta) {
  const auto& terms = delta.terms();

  if (terms.empty()) return DeltaShape{DeltaClass::zero, 0, 0};

  if (terms.size() == 1) {
    const auto& [key, coeff] = *terms.begin();
    if (key.j == 0 && (coeff == 1 || coeff == -1))
      return DeltaShape{DeltaClass::ri, 0, static_cast<int>(coeff)};
    return DeltaShape{DeltaClass::other, 0, 0};
  }

  if (terms.size() == 2) {
    const auto first = *terms.begin();
    const auto second = *std::next(terms.begin());
    const int c1 = static_cast<int>(first.second), c2 = static_cast<int>(second.second);
    if (first.first.axis == Axis::x && second.first.axis == Axis::y) {
      if (c1 == c2 && (c1 == 1 || c1 == -1)) {
        if (second.first.j == first.first.j + 1)
          return DeltaShape{DeltaClass::matched_rii, first.first.j, c1};
        if (second.first.j == first.first.j)
          return DeltaShape{DeltaClass::unmatched_rii, first.first.j, c1};
      }
    } else if (first.first.axis == second.first.axis &&
               second.first.j == first.first.j + 1 && c1 == -c2 && (c1 == 1 || c1 == -1)) {
      return DeltaShape{first.first.axis == Axis::x ? DeltaClass::riii_x
                                                    : DeltaClass::riii_y,
                        first.first.j, c1};
    }
  }
  return DeltaShape{DeltaClass::other, 0, 0};
}

/// classify_value applied to i_lk(after) - i_lk(before).
inline DeltaShape classify_delta(const BraidWord& before, const BraidWord& after) {
  if (before.strand_count() != after.strand_count())
    throw std::invalid_argument("classify_delta requires a common strand count");
  return classify_value(ga_sub(i_lk(after), i_lk(before)));
}

}  // namespace braidlk
