#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "braidlk/braid_word.hpp"
#include "braidlk/diagram.hpp"
#include "braidlk/moves.hpp"

namespace braidlk {

using Rng = std::mt19937_64;

/// Uniform word: each letter drawn independently from {+-1 .. +-(n-1)}.
inline BraidWord random_word(Rng& rng, int n, int len) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  if (len < 0) throw std::invalid_argument("length cannot be negative");
  std::uniform_int_distribution<int> pick(0, 2 * (n - 1) - 1);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int v = pick(rng);
    const int index = v / 2 + 1;
    letters.push_back(Letter{index, v % 2 == 0 ? +1 : -1});
  }
  return BraidWord(n, std::move(letters));
}

/// Uniform length in [0, max_len], then uniform letters, rejection-filtered
/// until the closure is a knot. Throws after too many rejections (which a
/// correct filter never hits at desk scale).
inline BraidWord random_knot_word(Rng& rng, int n, int max_len, int max_attempts = 100000) {
  std::uniform_int_distribution<int> pick_len(0, max_len);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BraidWord w = random_word(rng, n, pick_len(rng));
    if (hat(w).knot) return w;
  }
  throw std::runtime_error("knot-closure rejection sampling did not converge");
}

/// A knot-closure word together with one applicable move of the requested
/// kind, both chosen uniformly; words are redrawn until the kind applies.
inline std::pair<BraidWord, Move> random_word_with_move(Rng& rng, int n, int max_len,
                                                        MoveKind kind,
                                                        int max_attempts = 100000) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BraidWord w = random_knot_word(rng, n, max_len, max_attempts);
    std::vector<Move> options;
    for (const Move& m : applicable_moves(w))
      if (m.kind == kind) options.push_back(m);
    if (options.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return {std::move(w), options[pick(rng)]};
  }
  throw std::runtime_error("no applicable move of the requested kind was found");
}

}  // namespace braidlk
