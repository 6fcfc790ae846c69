#include "ggraph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ggraph/errors.hpp"

namespace ggraph {

namespace {

void check_generator(int n, int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    std::ostringstream msg;
    msg << what << ": index " << i << " out of range [" << lo << ", " << hi << "] for n=" << n;
    throw PreconditionError(msg.str());
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation w;
  w.word_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int j = 0; j < n; ++j) w.word_[static_cast<std::size_t>(j)] = j + 1;
  return w;
}

Permutation Permutation::simple(int n, int i) {
  check_generator(n, i, 1, n - 1, "simple");
  Permutation w = identity(n);
  std::swap(w.word_[static_cast<std::size_t>(i - 1)], w.word_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.word_.resize(word_.size());
  for (int j = 1; j <= size(); ++j) inv.word_[static_cast<std::size_t>((*this)(j) - 1)] = j;
  return inv;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j) {
    if ((*this)(j) != j) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int j = 1; j <= size(); ++j) {
    if ((*this)((*this)(j)) != j) return false;
  }
  return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw PreconditionError("composition of permutations of different sizes");
  Permutation w;
  w.word_.resize(v.word_.size());
  for (int j = 1; j <= v.size(); ++j) w.word_[static_cast<std::size_t>(j - 1)] = u(v(j));
  return w;
}

int length(const Permutation& w) {
  int inv = 0;
  const auto& word = w.word();
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) inv += word[a] > word[b] ? 1 : 0;
  }
  return inv;
}

Permutation conj_by_s(const Permutation& w, int i) {
  const int n = w.size();
  check_generator(n, i, 1, n - 1, "conj_by_s");
  // (s w s)(j) = s(w(s(j))): swap positions i,i+1 and values i,i+1.
  std::vector<int> word = w.word();
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  for (int& v : word) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return Permutation(std::move(word));
}

Permutation knuth_move(const Permutation& v, int i, bool dual) {
  const int n = v.size();
  check_generator(n, i, 2, n - 1, "knuth_move");
  if (dual) return knuth_move(v.inverse(), i, false).inverse();

  std::vector<int> word = v.word();
  auto first = word.begin() + (i - 2);
  auto last = first + 3;
  const bool increasing = first[0] < first[1] && first[1] < first[2];
  const bool decreasing = first[0] > first[1] && first[1] > first[2];
  if (increasing || decreasing) return v;
  std::iter_swap(std::min_element(first, last), std::max_element(first, last));
  return Permutation(std::move(word));
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> out;
  Permutation cur = w;
  Permutation pos = cur.inverse();
  const int n = w.size();
  while (!cur.is_identity()) {
    // s_i is a left descent of cur iff i+1 precedes i in its one-line word.
    int i = 1;
    while (pos(i) < pos(i + 1)) ++i;
    out.push_back(i);
    cur = Permutation::simple(n, i) * cur;
    pos = cur.inverse();
  }
  return out;
}

Involution::Involution(Permutation perm) : perm_(std::move(perm)) {
  if (!perm_.is_involution()) throw PreconditionError("permutation is not an involution");
}

Involution Involution::from_cycles(int n, std::span<const std::pair<int, int>> cycles) {
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  auto assign = [&](int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw PreconditionError("cycle entry out of range [1, " + std::to_string(n) + "]");
    }
    auto& slot = word[static_cast<std::size_t>(a - 1)];
    if (slot != 0) throw PreconditionError("overlapping cycles");
    slot = b;
  };
  for (auto [a, b] : cycles) {
    assign(a, b);
    if (a != b) assign(b, a);
  }
  for (int j = 1; j <= n; ++j) {
    if (word[static_cast<std::size_t>(j - 1)] == 0) word[static_cast<std::size_t>(j - 1)] = j;
  }
  return Involution(Permutation(std::move(word)));
}

int Involution::fixed_point_count() const {
  int k = 0;
  for (int j = 1; j <= size(); ++j) k += (*this)(j) == j ? 1 : 0;
  return k;
}

std::vector<std::pair<int, int>> cycles_sorted(const Involution& y) {
  std::vector<std::pair<int, int>> out;
  for (int b = 1; b <= y.size(); ++b) {
    if (y(b) <= b) out.emplace_back(y(b), b);
  }
  return out;
}

Involution conj_by_s(const Involution& z, int i) { return Involution(conj_by_s(z.perm(), i)); }

ConjOrder conj_compare(const Involution& z, int i) {
  const int n = z.size();
  check_generator(n, i, 1, n - 1, "conj_compare");
  // s z s = z iff z maps {i, i+1} onto itself.
  const int a = z(i);
  const int b = z(i + 1);
  if ((a == i + 1 && b == i) || (a == i && b == i + 1)) return ConjOrder::equal;
  return a < b ? ConjOrder::higher : ConjOrder::lower;
}

void for_each_involution(int n, const std::function<void(const Involution&)>& fn) {
  for (const auto& y : enumerate_involutions(n)) fn(y);
}

std::vector<Involution> enumerate_involutions(int n) {
  std::vector<std::vector<int>> words;
  std::vector<int> word(static_cast<std::size_t>(std::max(n, 0)), 0);
  // Fill the smallest unassigned position: fixed, or paired with a later one.
  auto rec = [&](auto&& self, int from) -> void {
    int j = from;
    while (j <= n && word[static_cast<std::size_t>(j - 1)] != 0) ++j;
    if (j > n) {
      words.push_back(word);
      return;
    }
    word[static_cast<std::size_t>(j - 1)] = j;
    self(self, j + 1);
    for (int k = j + 1; k <= n; ++k) {
      if (word[static_cast<std::size_t>(k - 1)] != 0) continue;
      word[static_cast<std::size_t>(j - 1)] = k;
      word[static_cast<std::size_t>(k - 1)] = j;
      self(self, j + 1);
      word[static_cast<std::size_t>(k - 1)] = 0;
    }
    word[static_cast<std::size_t>(j - 1)] = 0;
  };
  rec(rec, 1);
  std::sort(words.begin(), words.end());
  std::vector<Involution> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(Permutation(std::move(w)));
  return out;
}

std::uint64_t involution_count(int n) {
  std::uint64_t prev = 1;  // I_0
  std::uint64_t cur = 1;   // I_1
  if (n <= 1) return 1;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t next = cur + static_cast<std::uint64_t>(m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ',' || std::isspace(static_cast<unsigned char>(s[pos])))) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw ParseError("unexpected character '" + std::string(1, s[pos]) + "'");
    out.push_back(std::stoi(std::string(s.substr(pos, end - pos))));
    pos = end;
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated '['");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> word;
  const bool separated = s.find_first_of(", \t") != std::string_view::npos;
  if (separated) {
    word = parse_int_list(s);
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("unexpected character '" + std::string(1, c) + "'");
      }
      word.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Involution parse_involution(std::string_view text, int n) {
  std::string_view s = trim(text);
  if (s.empty() || s.front() != '(') {
    Permutation w = parse_permutation(s);
    if (n != 0 && w.size() != n) throw ParseError("expected a word of length " + std::to_string(n));
    if (!w.is_involution()) throw ParseError("not an involution: " + std::string(s));
    return Involution(std::move(w));
  }
  std::vector<std::pair<int, int>> cycles;
  int largest = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation");
    const std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    std::vector<int> cyc = parse_int_list(s.substr(pos + 1, close - pos - 1));
    if (cyc.size() == 2) {
      cycles.emplace_back(std::min(cyc[0], cyc[1]), std::max(cyc[0], cyc[1]));
    } else if (cyc.size() > 2) {
      throw ParseError("cycles of an involution have length at most 2");
    }
    for (int v : cyc) largest = std::max(largest, v);
    pos = close + 1;
  }
  if (n == 0) n = largest;
  if (largest > n) throw ParseError("cycle entry exceeds n=" + std::to_string(n));
  try {
    return Involution::from_cycles(n, cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string to_oneline(const Permutation& w) {
  const bool digits = w.size() <= 9;
  std::string out;
  for (int j = 1; j <= w.size(); ++j) {
    if (!digits && j > 1) out += ',';
    out += std::to_string(w(j));
  }
  return out;
}

std::string to_cycle_string(const Involution& y) {
  std::string out;
  for (int a = 1; a <= y.size(); ++a) {
    if (y(a) > a) out += "(" + std::to_string(a) + "," + std::to_string(y(a)) + ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace ggraph

std::size_t std::hash<ggraph::Permutation>::operator()(const ggraph::Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}
