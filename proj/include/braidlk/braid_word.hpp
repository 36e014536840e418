#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidlk {

/// One generator occurrence: sigma_index (sign +1) or its inverse (sign -1).
struct Letter {
  int index;  // 1 <= index <= n-1
  int sign;   // +1 or -1

  static Letter from_signed(int value) {
    if (value == 0)
      throw std::invalid_argument("letter value must be nonzero");
    return value > 0 ? Letter{value, +1} : Letter{-value, -1};
  }

  int signed_value() const { return sign > 0 ? index : -index; }
  Letter inverse() const { return Letter{index, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators of the braid group on `strand_count` strands.
/// The empty word is valid and denotes the identity word E.
class BraidWord {
 public:
  BraidWord() : n_(2) {}

  explicit BraidWord(int n) : n_(n) { check_n(n); }

  BraidWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    check_n(n);
    for (const Letter& l : letters_) {
      if (l.index < 1 || l.index > n_ - 1)
        throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                    " out of range for " + std::to_string(n_) + " strands");
      if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("letter sign must be +1 or -1");
    }
  }

  int strand_count() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& letter(std::size_t i) const { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  static void check_n(int n) {
    if (n < 2)
      throw std::invalid_argument("strand count must be at least 2");
  }

  int n_;
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated nonzero integers; k > 0 is sigma_k, k < 0 its
/// inverse. Without an explicit strand count, n = 1 + max |k| (minimum 2).
inline BraidWord parse_word(std::string_view text, std::optional<int> n = std::nullopt) {
  std::vector<Letter> letters;
  int max_index = 0;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter token '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("bad letter token '" + token + "'");
    if (value == 0)
      throw std::invalid_argument("letter token must be nonzero");
    letters.push_back(Letter::from_signed(value));
    max_index = std::max(max_index, std::abs(value));
  }
  int strands = n ? *n : std::max(2, max_index + 1);
  return BraidWord(strands, std::move(letters));
}

inline std::string format_word(const BraidWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.signed_value());
  }
  return out;
}

inline BraidWord invert(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(w.strand_count(), std::move(letters));
}

inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strand_count() != v.strand_count())
    throw std::invalid_argument("cannot concatenate words over different strand counts");
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strand_count(), std::move(letters));
}

inline BraidWord power(const BraidWord& w, int k) {
  if (k < 0) return power(invert(w), -k);
  std::vector<Letter> letters;
  letters.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return BraidWord(w.strand_count(), std::move(letters));
}

/// Cancels adjacent inverse pairs until none remain. Idempotent.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strand_count(), std::move(stack));
}

/// Bijection of strand start positions 1..n to end positions, 0-based stored.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
      if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v])
        throw std::invalid_argument("mapping is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = i;
    return Permutation(std::move(map));
  }

  int degree() const { return static_cast<int>(map_.size()); }
  int apply(int s) const { return map_.at(s); }

  /// this after other: (a.compose_after(b))(s) = a(b(s)).
  Permutation compose_after(const Permutation& other) const {
    if (degree() != other.degree())
      throw std::invalid_argument("degree mismatch");
    std::vector<int> map(map_.size());
    for (std::size_t s = 0; s < map_.size(); ++s)
      map[s] = map_[other.map_[s]];
    return Permutation(std::move(map));
  }

  Permutation inverse() const {
    std::vector<int> map(map_.size());
    for (std::size_t s = 0; s < map_.size(); ++s)
      map[map_[s]] = static_cast<int>(s);
    return Permutation(std::move(map));
  }

  bool is_identity() const {
    for (std::size_t s = 0; s < map_.size(); ++s)
      if (map_[s] != static_cast<int>(s)) return false;
    return true;
  }

  /// Cycles of the bijection, each listed from its smallest element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t s = 0; s < map_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> cycle;
      int x = static_cast<int>(s);
      while (!seen[x]) {
        seen[x] = true;
        cycle.push_back(x);
        x = map_[x];
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  bool is_single_cycle() const { return cycles().size() == 1; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Letters act top to bottom; each letter transposes positions i, i+1
/// regardless of sign. permutation(concat(u,v)) = permutation(v) o permutation(u).
inline Permutation permutation(const BraidWord& w) {
  const int n = w.strand_count();
  std::vector<int> occ(n);  // occ[pos] = strand identity
  for (int i = 0; i < n; ++i) occ[i] = i;
  for (const Letter& l : w.letters())
    std::swap(occ[l.index - 1], occ[l.index]);
  std::vector<int> map(n);  // strand -> final position
  for (int pos = 0; pos < n; ++pos) map[occ[pos]] = pos;
  return Permutation(std::move(map));
}

enum class Family { v, w, a, b };

/// The B3 building blocks V = s1^2, W = s2 s1^2 s2 and the 12k-letter
/// families a_k = W^-k V^k W^k V^-k, b_k = W^-k W^k V^k V^-k.
inline BraidWord make_family(Family kind, int k = 1) {
  const BraidWord v = parse_word("1 1", 3);
  const BraidWord w = parse_word("2 1 1 2", 3);
  switch (kind) {
    case Family::v: return v;
    case Family::w: return w;
    case Family::a:
      if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
      return concat(concat(power(w, -k), power(v, k)), concat(power(w, k), power(v, -k)));
    case Family::b:
      if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
      return concat(concat(power(w, -k), power(w, k)), concat(power(v, k), power(v, -k)));
  }
  throw std::invalid_argument("unknown family kind");
}

inline BraidWord embed(const BraidWord& w, int m) {
  if (m <= w.strand_count())
    throw std::invalid_argument("embedding requires a larger strand count");
  return BraidWord(m, w.letters());
}

/// Deletes the last m-n strands by identity, following their trajectories:
/// every crossing that involves a deleted strand disappears, and surviving
/// crossings are re-indexed by the rank of their position among kept strands.
inline BraidWord delete_last_strands(const BraidWord& w, int n) {
  const int m = w.strand_count();
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  if (n >= m) throw std::invalid_argument("can only delete down to fewer strands");
  std::vector<int> occ(m);
  for (int i = 0; i < m; ++i) occ[i] = i;
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const int i = l.index - 1;  // 0-based left position
    const int u = occ[i], v = occ[i + 1];
    if (u < n && v < n) {
      int rank = 0;  // kept strands at positions 0..i
      for (int j = 0; j <= i; ++j)
        if (occ[j] < n) ++rank;
      out.push_back(Letter{rank, l.sign});
    }
    std::swap(occ[i], occ[i + 1]);
  }
  return BraidWord(n, std::move(out));
}

}  // namespace braidlk
