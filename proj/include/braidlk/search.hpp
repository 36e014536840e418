#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidlk/braid_word.hpp"
#include "braidlk/moves.hpp"

namespace braidlk {

/// Outcome of a capped shortest-path search over the move graph. cost_upper
/// is exact only relative to the caps; certified_exact is set when it meets
/// a supplied lower bound.
struct SearchResult {
  std::optional<int> cost_upper;
  MoveTrace trace;
  bool certified_exact = false;
  int max_len = 0;
  int max_cost = 0;
  std::uint64_t states_visited = 0;
};

inline int default_max_len(const BraidWord& a, const BraidWord& b) {
  return static_cast<int>(a.size() + b.size()) + 4;
}

inline int default_max_cost(const BraidWord& a, const BraidWord& b) {
  return 4 * static_cast<int>(a.size() + b.size());
}

namespace detail {

// Letters as signed chars; generator indices of any sane braid fit a char.
inline void word_to_chars(const BraidWord& w, char* out) {
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<char>(w.letter(i).signed_value());
}

inline BraidWord chars_to_word(const char* letters, int len, int n) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    ls.push_back(Letter::from_signed(static_cast<int>(letters[i])));
  return BraidWord(n, std::move(ls));
}

/// Enumerates all children of a word given as raw letters, in exactly the
/// order of applicable_moves: braids, commutes, cancels, then insertions.
/// scratch must hold len + 2 chars; f(move, child_letters, child_len) is
/// called once per edge. Insertions are skipped when allow_insert is false.
template <typename F>
void for_each_child(const char* w, int len, int n, bool allow_insert, char* scratch,
                    F&& f) {
  for (int p = 0; p + 2 < len; ++p) {
    const char x = w[p], y = w[p + 1], z = w[p + 2];
    if (x > 0 && y > 0 && x == z && (y == x + 1 || y == x - 1)) {
      std::memcpy(scratch, w, static_cast<std::size_t>(len));
      scratch[p] = y;
      scratch[p + 1] = x;
      scratch[p + 2] = y;
      f(Move::braid(p + 1, y == x + 1 ? BraidDirection::lower_to_upper
                                      : BraidDirection::upper_to_lower),
        scratch, len);
    }
  }
  for (int p = 0; p + 1 < len; ++p) {
    const char x = w[p], y = w[p + 1];
    if (x > 0 && y > 0 && (x - y >= 2 || y - x >= 2)) {
      std::memcpy(scratch, w, static_cast<std::size_t>(len));
      scratch[p] = y;
      scratch[p + 1] = x;
      f(Move::commute(p + 1), scratch, len);
    }
  }
  for (int p = 0; p + 1 < len; ++p) {
    if (w[p] == -w[p + 1]) {
      std::memcpy(scratch, w, static_cast<std::size_t>(p));
      std::memcpy(scratch + p, w + p + 2, static_cast<std::size_t>(len - p - 2));
      f(Move::cancel(p + 1), scratch, len - 2);
    }
  }
  if (!allow_insert) return;
  for (int p = 0; p <= len; ++p)
    for (int g = 1; g <= n - 1; ++g) {
      std::memcpy(scratch, w, static_cast<std::size_t>(p));
      std::memcpy(scratch + p + 2, w + p, static_cast<std::size_t>(len - p));
      scratch[p] = static_cast<char>(g);
      scratch[p + 1] = static_cast<char>(-g);
      f(Move::insertion(p + 1, g, InsertOrder::pos_neg), scratch, len + 2);
      scratch[p] = static_cast<char>(-g);
      scratch[p + 1] = static_cast<char>(g);
      f(Move::insertion(p + 1, g, InsertOrder::neg_pos), scratch, len + 2);
    }
}

/// The move that undoes m, given the parent's letters (needed for cancels).
inline Move inverse_move_chars(const char* parent, const Move& m) {
  switch (m.kind) {
    case MoveKind::braid:
      return Move::braid(m.pos, m.direction == BraidDirection::lower_to_upper
                                    ? BraidDirection::upper_to_lower
                                    : BraidDirection::lower_to_upper);
    case MoveKind::commute:
      return Move::commute(m.pos);
    case MoveKind::cancel: {
      const char first = parent[m.pos - 1];
      return Move::insertion(m.pos, first > 0 ? first : -first,
                             first > 0 ? InsertOrder::pos_neg : InsertOrder::neg_pos);
    }
    case MoveKind::insert:
      return Move::cancel(m.pos);
  }
  throw std::logic_error("unknown move kind");
}

inline Move inverse_move(const BraidWord& w, const Move& m) {
  if (m.kind == MoveKind::cancel) {
    const Letter& first = w.letter(static_cast<std::size_t>(m.pos - 1));
    return Move::insertion(m.pos, first.index,
                           first.sign > 0 ? InsertOrder::pos_neg : InsertOrder::neg_pos);
  }
  char unused = 0;
  return inverse_move_chars(&unused, m);
}

inline std::uint32_t pack_move(const Move& m) {
  std::uint32_t v = static_cast<std::uint32_t>(m.kind);
  v |= static_cast<std::uint32_t>(m.pos) << 2;
  const std::uint32_t flag =
      m.kind == MoveKind::braid
          ? (m.direction == BraidDirection::upper_to_lower ? 1u : 0u)
          : (m.insert_order == InsertOrder::neg_pos ? 1u : 0u);
  v |= flag << 22;
  v |= static_cast<std::uint32_t>(m.insert_index) << 23;
  return v;
}

inline Move unpack_move(std::uint32_t v) {
  Move m;
  m.kind = static_cast<MoveKind>(v & 3u);
  m.pos = static_cast<int>((v >> 2) & 0xFFFFFu);
  const bool flag = (v >> 22) & 1u;
  // only set the fields the kind actually uses, so pack/unpack round-trips
  // compare equal to factory-built moves
  if (m.kind == MoveKind::braid)
    m.direction = flag ? BraidDirection::upper_to_lower : BraidDirection::lower_to_upper;
  if (m.kind == MoveKind::insert) {
    m.insert_order = flag ? InsertOrder::neg_pos : InsertOrder::pos_neg;
    m.insert_index = static_cast<int>(v >> 23);
  }
  return m;
}

// 32-byte key for words of at most 31 letters: byte 0 is the length,
// letters follow, zero padding after. Stored as four words for fast
// comparison and hashing.
struct PackedKey {
  std::array<std::uint64_t, 4> q{};
  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::uint64_t w : k.q) {
      h ^= w;
      h *= 0xBF58476D1CE4E5B9ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

struct PackedKeyOps {
  using Key = PackedKey;
  using Hash = PackedKeyHash;
  static constexpr int max_letters = 31;
  static Key make(const char* letters, int len) {
    Key k;
    auto* bytes = reinterpret_cast<char*>(k.q.data());
    bytes[0] = static_cast<char>(len);
    if (len > 0) std::memcpy(bytes + 1, letters, static_cast<std::size_t>(len));
    return k;
  }
  static int extract(const Key& k, char* out) {
    const auto* bytes = reinterpret_cast<const char*>(k.q.data());
    const int len = static_cast<int>(bytes[0]);
    if (len > 0) std::memcpy(out, bytes + 1, static_cast<std::size_t>(len));
    return len;
  }
};

struct StringKeyOps {
  using Key = std::string;
  using Hash = std::hash<std::string>;
  static Key make(const char* letters, int len) {
    return std::string(letters, static_cast<std::size_t>(len));
  }
  static int extract(const Key& k, char* out) {
    if (!k.empty()) std::memcpy(out, k.data(), k.size());
    return static_cast<int>(k.size());
  }
};

/// Leftmost free cancellations until none remain: the positions taken (with
/// the first letter of each cancelled pair) plus the reduced word.
struct CancelTrail {
  std::vector<std::pair<int, Letter>> cancels;  // 1-based pos, first letter of pair
  BraidWord reduced;
};

inline CancelTrail leftmost_cancel_trail(const BraidWord& w) {
  CancelTrail trail{{}, w};
  std::vector<Letter> cur = w.letters();
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p].index == cur[p + 1].index && cur[p].sign == -cur[p + 1].sign) {
        trail.cancels.emplace_back(static_cast<int>(p) + 1, cur[p]);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p),
                  cur.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        again = true;
        break;
      }
    }
  }
  trail.reduced = BraidWord(w.strand_count(), std::move(cur));
  return trail;
}

template <class Ops>
SearchResult search_core(const BraidWord& a, const BraidWord& b, int max_len, int max_cost,
                         std::optional<int> lower_bound) {
  using Key = typename Ops::Key;
  const int n = a.strand_count();

  SearchResult result;
  result.max_len = max_len;
  result.max_cost = max_cost;
  result.trace.start = a;

  struct Node {
    std::int32_t cost;
    std::uint32_t back;  // packed move; applied to this word it yields the parent
  };
  std::unordered_map<Key, Node, typename Ops::Hash> nodes;
  nodes.reserve(1u << 16);
  // per-cost FIFO buckets of pointers to map keys (stable across rehash);
  // indexed afresh on every use because pushes may grow the vector
  std::vector<std::deque<const Key*>> buckets;
  auto push = [&](const Key* key, int cost) {
    if (static_cast<int>(buckets.size()) <= cost)
      buckets.resize(static_cast<std::size_t>(cost) + 1);
    buckets[static_cast<std::size_t>(cost)].push_back(key);
  };

  std::vector<char> cur_buf(static_cast<std::size_t>(max_len) + 2);
  std::vector<char> scratch(static_cast<std::size_t>(max_len) + 2);
  std::vector<char> chain_buf(static_cast<std::size_t>(max_len) + 2);
  std::vector<char> reduce_stack(static_cast<std::size_t>(max_len) + 2);

  word_to_chars(a, cur_buf.data());
  const Key akey = Ops::make(cur_buf.data(), static_cast<int>(a.size()));
  word_to_chars(b, cur_buf.data());
  const Key bkey = Ops::make(cur_buf.data(), static_cast<int>(b.size()));

  const CancelTrail b_trail = leftmost_cancel_trail(b);
  std::vector<char> b_reduced(b_trail.reduced.size() + 1);
  word_to_chars(b_trail.reduced, b_reduced.data());
  const int b_reduced_len = static_cast<int>(b_trail.reduced.size());

  // single-pass stack reduction; the free group's normal form is unique, so
  // this matches leftmost cancellation
  auto freely_equal_to_b = [&](const char* letters, int len) {
    int sp = 0;
    for (int i = 0; i < len; ++i) {
      if (sp > 0 && reduce_stack[static_cast<std::size_t>(sp - 1)] == -letters[i])
        --sp;
      else
        reduce_stack[static_cast<std::size_t>(sp++)] = letters[i];
    }
    return sp == b_reduced_len &&
           std::memcmp(reduce_stack.data(), b_reduced.data(),
                       static_cast<std::size_t>(sp)) == 0;
  };

  // forward moves from a to the word stored under `key`, via back pointers
  auto chain_to = [&](Key key) {
    std::vector<Move> backward;
    while (!(key == akey)) {
      const Node& node = nodes.at(key);
      const Move back = unpack_move(node.back);
      const int len = Ops::extract(key, chain_buf.data());
      BraidWord word = chars_to_word(chain_buf.data(), len, n);
      backward.push_back(inverse_move(word, back));
      const BraidWord parent = apply_move(word, back);
      word_to_chars(parent, chain_buf.data());
      key = Ops::make(chain_buf.data(), static_cast<int>(parent.size()));
    }
    return std::vector<Move>(backward.rbegin(), backward.rend());
  };

  auto finish = [&](const std::vector<Move>& moves, int cost) {
    for (const Move& m : moves) result.trace.append(m);
    if (result.trace.final_word() != b)
      throw std::logic_error("search trace replay did not reach the target");
    result.cost_upper = cost;
    result.certified_exact = lower_bound && *lower_bound == cost;
    result.states_visited = nodes.size();
    return result;
  };

  // explicit free path: cancel `from` down to its reduction, then re-insert
  // b's cancelled pairs in reverse; valid whenever the reductions agree
  auto free_tail = [&](const BraidWord& from) {
    std::vector<Move> moves;
    for (const auto& cancel : leftmost_cancel_trail(from).cancels)
      moves.push_back(Move::cancel(cancel.first));
    for (auto it = b_trail.cancels.rbegin(); it != b_trail.cancels.rend(); ++it)
      moves.push_back(Move::insertion(
          it->first, it->second.index,
          it->second.sign > 0 ? InsertOrder::pos_neg : InsertOrder::neg_pos));
    return moves;
  };

  const auto seeded = nodes.emplace(akey, Node{0, 0});
  push(&seeded.first->first, 0);

  for (int cost = 0; cost < static_cast<int>(buckets.size()); ++cost) {
    while (!buckets[static_cast<std::size_t>(cost)].empty()) {
      const Key* key_ptr = buckets[static_cast<std::size_t>(cost)].front();
      buckets[static_cast<std::size_t>(cost)].pop_front();
      const auto here = nodes.find(*key_ptr);
      if (here == nodes.end() || here->second.cost != cost) continue;  // stale
      if (*key_ptr == bkey) return finish(chain_to(*key_ptr), cost);
      const int len = Ops::extract(*key_ptr, cur_buf.data());
      if (lower_bound && cost == *lower_bound && freely_equal_to_b(cur_buf.data(), len)) {
        std::vector<Move> moves = chain_to(*key_ptr);
        for (const Move& m : free_tail(chars_to_word(cur_buf.data(), len, n)))
          moves.push_back(m);
        return finish(moves, cost);
      }

      bool shortcut = false;
      std::vector<Move> shortcut_moves;
      for_each_child(
          cur_buf.data(), len, n, len + 2 <= max_len, scratch.data(),
          [&](const Move& m, const char* child, int child_len) {
            if (shortcut) return;
            const int child_cost = cost + move_cost(m);
            if (child_cost > max_cost) return;
            Key child_key = Ops::make(child, child_len);
            auto it = nodes.find(child_key);
            if (it != nodes.end() && it->second.cost <= child_cost) return;
            const std::uint32_t back = pack_move(inverse_move_chars(cur_buf.data(), m));
            if (it == nodes.end())
              it = nodes.emplace(std::move(child_key), Node{child_cost, back}).first;
            else
              it->second = Node{child_cost, back};
            push(&it->first, child_cost);
            if (lower_bound && child_cost == *lower_bound &&
                (it->first == bkey || freely_equal_to_b(child, child_len))) {
              shortcut_moves = chain_to(*key_ptr);
              shortcut_moves.push_back(m);
              if (!(it->first == bkey))
                for (const Move& t : free_tail(chars_to_word(child, child_len, n)))
                  shortcut_moves.push_back(t);
              shortcut = true;
            }
          });
      if (shortcut) return finish(shortcut_moves, *lower_bound);
    }
  }

  result.states_visited = nodes.size();
  return result;  // none found within caps
}

}  // namespace detail

/// Deterministic 0/1-weighted shortest-path search from a to b over the move
/// graph: a path's cost is its braid-relation count, states expand in cost
/// order with FIFO order inside each cost layer, and only words of length
/// <= max_len on paths of cost <= max_cost are explored. Exhausting the caps
/// yields an empty cost_upper, not an error. A supplied lower_bound must be a
/// genuine lower bound on the distance; it marks the result certified_exact
/// when attained and lets the search stop the moment a path attaining it is
/// known to exist.
inline SearchResult search_distance(const BraidWord& a, const BraidWord& b, int max_len,
                                    int max_cost,
                                    std::optional<int> lower_bound = std::nullopt) {
  if (a.strand_count() != b.strand_count())
    throw std::invalid_argument("search endpoints must share a strand count");
  if (lower_bound && *lower_bound < 0)
    throw std::invalid_argument("lower bound cannot be negative");

  if (a == b) {
    SearchResult result;
    result.max_len = max_len;
    result.max_cost = max_cost;
    result.trace.start = a;
    result.cost_upper = 0;
    result.states_visited = 1;
    result.certified_exact = lower_bound && *lower_bound == 0;
    return result;
  }

  SearchResult none;
  none.max_len = max_len;
  none.max_cost = max_cost;
  none.trace.start = a;
  if (static_cast<int>(a.size()) > max_len || static_cast<int>(b.size()) > max_len ||
      max_cost < 0)
    return none;

  if (max_len <= detail::PackedKeyOps::max_letters)
    return detail::search_core<detail::PackedKeyOps>(a, b, max_len, max_cost, lower_bound);
  return detail::search_core<detail::StringKeyOps>(a, b, max_len, max_cost, lower_bound);
}

inline SearchResult search_distance(const BraidWord& a, const BraidWord& b,
                                    std::optional<int> lower_bound = std::nullopt) {
  return search_distance(a, b, default_max_len(a, b), default_max_cost(a, b), lower_bound);
}

}  // namespace braidlk
