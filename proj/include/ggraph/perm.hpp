#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ggraph {

// A permutation of [n] in 1-based one-line notation: word()[j-1] == w(j).
class Permutation {
 public:
  Permutation() = default;
  // Throws PreconditionError unless `word` is a bijection of [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  // The simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int n, int i);

  int size() const { return static_cast<int>(word_.size()); }
  // w(j) for 1 <= j <= n.
  int operator()(int j) const { return word_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  // Composition (u * v)(j) = u(v(j)).
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Number of inversions: pairs i<j with w(i) > w(j).
int length(const Permutation& w);

// s_i * w * s_i. Throws PreconditionError unless 1 <= i <= n-1.
Permutation conj_by_s(const Permutation& w, int i);

// The Knuth move v K_i w (dual = false) or dual Knuth move v dK_i w
// (dual = true). Returns v itself when the relevant window is monotone.
// Throws PreconditionError unless 1 < i < n.
Permutation knuth_move(const Permutation& v, int i, bool dual);

// Lexicographically first reduced word (i_1, ..., i_k) with
// w = s_{i_1} s_{i_2} ... s_{i_k}.
std::vector<int> reduced_word(const Permutation& w);

// A permutation equal to its own inverse.
class Involution {
 public:
  Involution() = default;
  // Throws PreconditionError unless `perm` is an involution.
  explicit Involution(Permutation perm);
  explicit Involution(std::vector<int> word) : Involution(Permutation(std::move(word))) {}

  static Involution identity(int n) { return Involution(Permutation::identity(n)); }
  // Builds the involution of [n] with the given 2-cycles; every other
  // point is fixed. Throws PreconditionError on overlapping cycles.
  static Involution from_cycles(int n, std::span<const std::pair<int, int>> cycles);

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int operator()(int j) const { return perm_(j); }
  const std::vector<int>& word() const { return perm_.word(); }

  int fixed_point_count() const;

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution&, const Involution&) = default;

 private:
  Permutation perm_;
};

// All pairs (a, b) with a <= b = y(a), sorted by increasing b.
std::vector<std::pair<int, int>> cycles_sorted(const Involution& y);

Involution conj_by_s(const Involution& z, int i);

enum class ConjOrder { lower, equal, higher };

// Bruhat comparison of s_i z s_i against z: equal if they coincide, higher
// if z(i) < z(i+1) (so z < s_i z s_i), lower otherwise.
ConjOrder conj_compare(const Involution& z, int i);

// Every involution of [n] exactly once, lexicographic on one-line words.
std::vector<Involution> enumerate_involutions(int n);
void for_each_involution(int n, const std::function<void(const Involution&)>& fn);

// |I_n| by the recurrence I_n = I_{n-1} + (n-1) I_{n-2}.
std::uint64_t involution_count(int n);

// "4231" (n <= 9), "4,2,3,1" or "[4,2,3,1]".
Permutation parse_permutation(std::string_view text);
// One-line forms as above, or cycle notation "(1,4)(2,3)". Cycle notation
// needs `n` (pass 0 to use the largest letter that appears).
Involution parse_involution(std::string_view text, int n = 0);

// "4231" when every letter is a single digit, "4,2,3,1" otherwise.
std::string to_oneline(const Permutation& w);
// "(1,4)(2,3)"; the identity renders as "()".
std::string to_cycle_string(const Involution& y);

}  // namespace ggraph

template <>
struct std::hash<ggraph::Permutation> {
  std::size_t operator()(const ggraph::Permutation& w) const noexcept;
};
