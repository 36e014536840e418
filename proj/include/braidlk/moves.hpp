#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidlk/braid_word.hpp"

namespace braidlk {

// The three word modifications, as explicit moves:
//   braid    s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1}   (window 3, the only costed move)
//   commute  s_i s_j -> s_j s_i for |i-j| >= 2          (window 2)
//   cancel   s_i s_i^-1 or s_i^-1 s_i -> empty          (window 2)
//   insert   empty -> s_i s_i^-1 or s_i^-1 s_i          (window 0, pos may be len+1)
// Only positive-letter braid/commute windows are moves; the inverse-letter
// forms decompose into one positive move plus cancels/inserts.
enum class MoveKind : std::uint8_t { braid, commute, cancel, insert };

enum class BraidDirection : std::uint8_t { lower_to_upper, upper_to_lower };
enum class InsertOrder : std::uint8_t { pos_neg, neg_pos };

struct Move {
  MoveKind kind = MoveKind::braid;
  int pos = 1;  // 1-based index of the first letter of the affected window
  BraidDirection direction = BraidDirection::lower_to_upper;  // braid only
  int insert_index = 0;                                       // insert only
  InsertOrder insert_order = InsertOrder::pos_neg;            // insert only

  static Move braid(int pos, BraidDirection direction) {
    Move m;
    m.kind = MoveKind::braid;
    m.pos = pos;
    m.direction = direction;
    return m;
  }
  static Move commute(int pos) {
    Move m;
    m.kind = MoveKind::commute;
    m.pos = pos;
    return m;
  }
  static Move cancel(int pos) {
    Move m;
    m.kind = MoveKind::cancel;
    m.pos = pos;
    return m;
  }
  static Move insertion(int pos, int index, InsertOrder order) {
    Move m;
    m.kind = MoveKind::insert;
    m.pos = pos;
    m.insert_index = index;
    m.insert_order = order;
    return m;
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Compact text encoding, e.g. "braid@5:LU", "commute@2", "cancel@1",
/// "insert@3:2:PN".
inline std::string move_to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::braid:
      return "braid@" + std::to_string(m.pos) +
             (m.direction == BraidDirection::lower_to_upper ? ":LU" : ":UL");
    case MoveKind::commute:
      return "commute@" + std::to_string(m.pos);
    case MoveKind::cancel:
      return "cancel@" + std::to_string(m.pos);
    case MoveKind::insert:
      return "insert@" + std::to_string(m.pos) + ":" + std::to_string(m.insert_index) +
             (m.insert_order == InsertOrder::pos_neg ? ":PN" : ":NP");
  }
  return "?";
}

inline int move_cost(const Move& m) { return m.kind == MoveKind::braid ? 1 : 0; }

namespace detail {

inline std::optional<BraidDirection> braid_window_at(const BraidWord& w, int pos) {
  if (pos < 1 || pos + 2 > static_cast<int>(w.size())) return std::nullopt;
  const Letter& x = w.letter(pos - 1);
  const Letter& y = w.letter(pos);
  const Letter& z = w.letter(pos + 1);
  if (x.sign != 1 || y.sign != 1 || z.sign != 1) return std::nullopt;
  if (x.index != z.index) return std::nullopt;
  if (y.index == x.index + 1) return BraidDirection::lower_to_upper;
  if (y.index == x.index - 1) return BraidDirection::upper_to_lower;
  return std::nullopt;
}

inline bool commute_window_at(const BraidWord& w, int pos) {
  if (pos < 1 || pos + 1 > static_cast<int>(w.size())) return false;
  const Letter& x = w.letter(pos - 1);
  const Letter& y = w.letter(pos);
  return x.sign == 1 && y.sign == 1 && std::abs(x.index - y.index) >= 2;
}

inline bool cancel_window_at(const BraidWord& w, int pos) {
  if (pos < 1 || pos + 1 > static_cast<int>(w.size())) return false;
  const Letter& x = w.letter(pos - 1);
  const Letter& y = w.letter(pos);
  return x.index == y.index && x.sign == -y.sign;
}

}  // namespace detail

/// Every move applicable to w, in canonical order: braids, commutes, cancels
/// (each by ascending pos), then all insertions by pos / generator / order.
/// Insertion is the only growth source; callers cap it.
inline std::vector<Move> applicable_moves(const BraidWord& w) {
  std::vector<Move> out;
  const int len = static_cast<int>(w.size());
  for (int pos = 1; pos + 2 <= len; ++pos)
    if (auto dir = detail::braid_window_at(w, pos))
      out.push_back(Move::braid(pos, *dir));
  for (int pos = 1; pos + 1 <= len; ++pos)
    if (detail::commute_window_at(w, pos))
      out.push_back(Move::commute(pos));
  for (int pos = 1; pos + 1 <= len; ++pos)
    if (detail::cancel_window_at(w, pos))
      out.push_back(Move::cancel(pos));
  for (int pos = 1; pos <= len + 1; ++pos)
    for (int index = 1; index <= w.strand_count() - 1; ++index) {
      out.push_back(Move::insertion(pos, index, InsertOrder::pos_neg));
      out.push_back(Move::insertion(pos, index, InsertOrder::neg_pos));
    }
  return out;
}

/// Applies m to w. Throws if the window does not match the move's pattern;
/// that signals a caller logic error, not a search miss.
inline BraidWord apply_move(const BraidWord& w, const Move& m) {
  std::vector<Letter> letters = w.letters();
  const int len = static_cast<int>(letters.size());
  switch (m.kind) {
    case MoveKind::braid: {
      auto dir = detail::braid_window_at(w, m.pos);
      if (!dir || *dir != m.direction)
        throw std::invalid_argument("braid move not applicable at pos " + std::to_string(m.pos));
      const int a = letters[m.pos - 1].index;
      const int b = letters[m.pos].index;
      letters[m.pos - 1] = Letter{b, +1};
      letters[m.pos] = Letter{a, +1};
      letters[m.pos + 1] = Letter{b, +1};
      break;
    }
    case MoveKind::commute: {
      if (!detail::commute_window_at(w, m.pos))
        throw std::invalid_argument("commute move not applicable at pos " + std::to_string(m.pos));
      std::swap(letters[m.pos - 1], letters[m.pos]);
      break;
    }
    case MoveKind::cancel: {
      if (!detail::cancel_window_at(w, m.pos))
        throw std::invalid_argument("cancel move not applicable at pos " + std::to_string(m.pos));
      letters.erase(letters.begin() + (m.pos - 1), letters.begin() + (m.pos + 1));
      break;
    }
    case MoveKind::insert: {
      if (m.pos < 1 || m.pos > len + 1)
        throw std::invalid_argument("insert position out of range");
      if (m.insert_index < 1 || m.insert_index > w.strand_count() - 1)
        throw std::invalid_argument("insert generator index out of range");
      const int s = m.insert_order == InsertOrder::pos_neg ? +1 : -1;
      const Letter pair[2] = {Letter{m.insert_index, s}, Letter{m.insert_index, -s}};
      letters.insert(letters.begin() + (m.pos - 1), pair, pair + 2);
      break;
    }
  }
  return BraidWord(w.strand_count(), std::move(letters));
}

/// A replayable modification sequence. Each step's word is the result of
/// applying its move to the previous word; type1_count counts braid moves.
struct MoveTrace {
  struct Step {
    Move move;
    BraidWord word;
    std::optional<std::int64_t> g;  // annotated by callers that can compute it
  };

  BraidWord start;
  std::vector<Step> steps;
  int type1_count = 0;

  const BraidWord& final_word() const { return steps.empty() ? start : steps.back().word; }

  /// Applies the move to the current final word and appends the step.
  void append(const Move& m) {
    BraidWord next = apply_move(final_word(), m);
    steps.push_back(Step{m, std::move(next), std::nullopt});
    type1_count += move_cost(m);
  }
};

/// The explicit braid-move schedule carrying a_k to b_k. The V^k W^k segment
/// is sorted to W^k V^k by adjacent block swaps, innermost pair first; each
/// VW -> WV swap on a window [1 1 2 1 1 2] costs four braid moves, at window
/// offsets 2,1,4,3 (LU,LU,UL,UL). Exactly 4k^2 braid moves total, all replayed
/// through apply_move.
inline MoveTrace slide_schedule(int k) {
  if (k < 1) throw std::invalid_argument("slide schedule requires k >= 1");
  MoveTrace trace;
  trace.start = make_family(Family::a, k);

  // middle segment block layout after the 4k-letter W^-k prefix
  std::vector<char> blocks(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) blocks[i] = 'V';
  for (int i = k; i < 2 * k; ++i) blocks[i] = 'W';

  const int micro_offsets[4] = {2, 1, 4, 3};  // 1-based within the 6-letter window
  const BraidDirection micro_dirs[4] = {
      BraidDirection::lower_to_upper, BraidDirection::lower_to_upper,
      BraidDirection::upper_to_lower, BraidDirection::upper_to_lower};

  for (int pass = 0; pass < k; ++pass) {
    // rightmost not-yet-moved V starts at block index k-1-pass and slides
    // right through all k W blocks
    for (int step = 0; step < k; ++step) {
      const int bpos = (k - 1 - pass) + step;
      int offset = 4 * k;  // letters before the window, 0-based
      for (int j = 0; j < bpos; ++j)
        offset += blocks[j] == 'V' ? 2 : 4;
      if (blocks[bpos] != 'V' || blocks[bpos + 1] != 'W')
        throw std::logic_error("slide schedule block bookkeeping broke");
      for (int mv = 0; mv < 4; ++mv)
        trace.append(Move::braid(offset + micro_offsets[mv], micro_dirs[mv]));
      std::swap(blocks[bpos], blocks[bpos + 1]);
    }
  }
  return trace;
}

/// Cancel-only trace from w to the empty word. Requires that w freely reduces
/// to E; always picks the leftmost cancelling pair.
inline MoveTrace reduce_to_empty(const BraidWord& w) {
  if (!free_reduce(w).empty())
    throw std::invalid_argument("word does not freely reduce to the empty word");
  MoveTrace trace;
  trace.start = w;
  while (!trace.final_word().empty()) {
    const BraidWord& cur = trace.final_word();
    bool found = false;
    for (int pos = 1; pos + 1 <= static_cast<int>(cur.size()); ++pos) {
      if (detail::cancel_window_at(cur, pos)) {
        trace.append(Move::cancel(pos));
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("free reduction stalled on a reducible word");
  }
  return trace;
}

}  // namespace braidlk
