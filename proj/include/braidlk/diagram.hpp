#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidlk/braid_word.hpp"

namespace braidlk {

/// The closure of w followed by the descending staircase. The closure is a
/// knot exactly when the underlying permutation is a single n-cycle;
/// otherwise it is a multi-component link and smoothing is refused.
struct ClosedBraid {
  BraidWord word;
  bool knot = false;
};

/// One oriented smoothing of a closed-braid knot diagram. components maps
/// each strand identity (0-based) to 0 for component A or 1 for B, with A
/// the component containing strand 1. lk is the linking number of the two
/// components: half the signed count of crossings between them.
struct Smoothing {
  int position = 0;      // 1-based letter index that was smoothed
  int crossing_sign = 0; // sign of the smoothed letter
  std::vector<int> components;
  int lk = 0;
};

/// Strand identities (1-based) meeting at one crossing of a closure, from
/// the occupancy simulation; skipped marks a suppressed crossing.
struct CrossingStrands {
  int position;
  int strand_lower;  // occupant of position index before the crossing
  int strand_upper;  // occupant of position index+1
  bool skipped;
};

/// Closes w by appending sigma_{n-1} ... sigma_1. For B3 this is the
/// two-letter staircase s2 s1; a word representing the identity braid then
/// closes to a knot rather than an n-component link.
inline ClosedBraid hat(const BraidWord& w) {
  std::vector<Letter> letters = w.letters();
  for (int i = w.strand_count() - 1; i >= 1; --i) letters.push_back(Letter{i, +1});
  BraidWord closed(w.strand_count(), std::move(letters));
  const bool knot = permutation(closed).is_single_cycle();
  return ClosedBraid{std::move(closed), knot};
}

/// Tracks which strand identities cross at each letter, top to bottom. Every
/// letter swaps its two positions except the skipped one (1-based), whose
/// entry is still reported but marked.
inline std::vector<CrossingStrands> occupancy(const ClosedBraid& c,
                                              std::optional<int> skip = std::nullopt) {
  if (skip && (*skip < 1 || *skip > static_cast<int>(c.word.size())))
    throw std::invalid_argument("occupancy skip position out of range");
  const int n = c.word.strand_count();
  std::vector<int> occ(static_cast<std::size_t>(n));
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<CrossingStrands> table;
  table.reserve(c.word.size());
  for (std::size_t q = 0; q < c.word.size(); ++q) {
    const int i = c.word.letter(q).index - 1;
    const bool skipped = skip && *skip == static_cast<int>(q) + 1;
    table.push_back({static_cast<int>(q) + 1, occ[static_cast<std::size_t>(i)] + 1,
                     occ[static_cast<std::size_t>(i) + 1] + 1, skipped});
    if (!skipped)
      std::swap(occ[static_cast<std::size_t>(i)], occ[static_cast<std::size_t>(i) + 1]);
  }
  return table;
}

/// Orientedly smooths the crossing at letter p (1-based): the two strands
/// pass without crossing, which for a braid letter is exactly its deletion.
/// Deleting one letter of a knot closure splits it into two components; lk
/// is half the signed count of the remaining crossings joining them.
inline Smoothing smooth(const ClosedBraid& c, int p) {
  if (!c.knot)
    throw std::invalid_argument("smoothing requires a knot closure");
  if (p < 1 || p > static_cast<int>(c.word.size()))
    throw std::invalid_argument("smoothing position out of range");
  const int n = c.word.strand_count();

  std::vector<Letter> rest = c.word.letters();
  rest.erase(rest.begin() + (p - 1));
  const auto cycles = permutation(BraidWord(n, std::move(rest))).cycles();
  if (cycles.size() != 2)
    throw std::logic_error("smoothing a knot closure must give two components");

  Smoothing s;
  s.position = p;
  s.crossing_sign = c.word.letter(static_cast<std::size_t>(p) - 1).sign;
  // cycles() lists the cycle of strand 0 first, which is component A
  s.components.assign(static_cast<std::size_t>(n), 1);
  for (int strand : cycles[0]) s.components[static_cast<std::size_t>(strand)] = 0;

  int signed_sum = 0;
  for (const CrossingStrands& cs : occupancy(c, p)) {
    if (cs.skipped) continue;
    if (s.components[static_cast<std::size_t>(cs.strand_lower) - 1] !=
        s.components[static_cast<std::size_t>(cs.strand_upper) - 1])
      signed_sum += c.word.letter(static_cast<std::size_t>(cs.position) - 1).sign;
  }
  if (signed_sum % 2 != 0)
    throw std::logic_error("inter-component crossing count must be even");
  s.lk = signed_sum / 2;
  return s;
}

/// One smoothing per letter, in letter order.
inline std::vector<Smoothing> smooth_all(const ClosedBraid& c) {
  if (!c.knot)
    throw std::invalid_argument("smoothing requires a knot closure");
  std::vector<Smoothing> out;
  out.reserve(c.word.size());
  for (int p = 1; p <= static_cast<int>(c.word.size()); ++p)
    out.push_back(smooth(c, p));
  return out;
}

}  // namespace braidlk
