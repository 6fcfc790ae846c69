#include "ggraph/module.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ggraph {

namespace {

using Entry = std::pair<std::uint32_t, LaurentPoly>;

// Sorts by index, combines duplicates and drops zeros.
SparseVec normalize(std::vector<Entry> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : raw) {
    if (!out.entries.empty() && out.entries.back().first == e.first) {
      out.entries.back().second += e.second;
      if (out.entries.back().second.is_zero()) out.entries.pop_back();
    } else if (!e.second.is_zero()) {
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec combine(const SparseVec& a, const SparseVec& b, std::int64_t sign) {
  std::vector<Entry> raw = a.entries;
  for (const auto& [v, c] : b.entries) raw.emplace_back(v, sign > 0 ? c : -c);
  return normalize(std::move(raw));
}

}  // namespace

LaurentPoly SparseVec::coeff(std::uint32_t v) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), v,
                             [](const Entry& e, std::uint32_t key) { return e.first < key; });
  return it != entries.end() && it->first == v ? it->second : LaurentPoly();
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) { return combine(a, b, 1); }
SparseVec operator-(const SparseVec& a, const SparseVec& b) { return combine(a, b, -1); }

SparseVec operator*(const LaurentPoly& c, const SparseVec& a) {
  SparseVec out;
  if (c.is_zero()) return out;
  for (const auto& [v, p] : a.entries) out.entries.emplace_back(v, c * p);
  return out;
}

void Accumulator::add(std::uint32_t v, const LaurentPoly& p, std::int64_t c, int shift) {
  if (!used_[v]) {
    used_[v] = 1;
    touched_.push_back(v);
  }
  slots_[v].add_scaled(p, c, shift);
}

void Accumulator::add(const SparseVec& a, const LaurentPoly& c) {
  for (const auto& [v, p] : a.entries) {
    for (const auto& t : c.terms()) add(v, p, t.coeff, t.exp);
  }
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  for (std::uint32_t v : touched_) {
    if (!slots_[v].is_zero()) out.entries.emplace_back(v, std::move(slots_[v]));
    slots_[v] = LaurentPoly();
    used_[v] = 0;
  }
  touched_.clear();
  return out;
}

StandardModule::StandardModule(int n, std::vector<int> lengths, std::vector<std::vector<Action>> actions)
    : n_(n), lengths_(std::move(lengths)), actions_(std::move(actions)), tau_(lengths_.size(), 0) {
  const std::size_t size = lengths_.size();
  if (static_cast<int>(actions_.size()) != std::max(n_ - 1, 0)) {
    throw std::invalid_argument("StandardModule: need one action table per generator");
  }
  for (int i = 1; i < n_; ++i) {
    const auto& table = actions_[static_cast<std::size_t>(i - 1)];
    if (table.size() != size) throw std::invalid_argument("StandardModule: action table size mismatch");
    for (std::uint32_t v = 0; v < size; ++v) {
      const Action& a = table[v];
      const bool ok = a.target < size &&
                      (a.kind == ActionKind::ascent    ? a.target > v && lengths_[a.target] > lengths_[v]
                       : a.kind == ActionKind::descent ? a.target < v && lengths_[a.target] < lengths_[v]
                                                       : a.target == v);
      if (!ok) {
        throw std::invalid_argument("StandardModule: inconsistent action of s_" + std::to_string(i) + " on vertex " +
                                    std::to_string(v));
      }
      if (a.kind == ActionKind::ascent || a.kind == ActionKind::eigen_neg_inv) tau_[v] |= 1U << i;
    }
  }
  bar_table_.reserve(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    const int i = strict_descent(v);
    if (i == 0) {
      bar_table_.push_back(SparseVec::unit(v));
    } else {
      bar_table_.push_back(apply_bar_generator(i, bar_table_[action(i, v).target]));
    }
  }
}

int StandardModule::strict_descent(std::uint32_t v, bool largest) const {
  int found = 0;
  for (int i = 1; i < n_; ++i) {
    if (action(i, v).kind == ActionKind::descent) {
      found = i;
      if (!largest) break;
    }
  }
  return found;
}

SparseVec StandardModule::apply(int i, const SparseVec& a) const {
  static const LaurentPoly kXMinusXInv = LaurentPoly::x_minus_x_inv();
  std::vector<Entry> raw;
  raw.reserve(2 * a.entries.size());
  for (const auto& [v, c] : a.entries) {
    const Action& act = action(i, v);
    switch (act.kind) {
      case ActionKind::ascent:
        raw.emplace_back(act.target, c);
        break;
      case ActionKind::descent:
        raw.emplace_back(act.target, c);
        raw.emplace_back(v, kXMinusXInv * c);
        break;
      case ActionKind::eigen_x:
        raw.emplace_back(v, LaurentPoly::x() * c);
        break;
      case ActionKind::eigen_neg_inv:
        raw.emplace_back(v, LaurentPoly::monomial(-1, -1) * c);
        break;
    }
  }
  return normalize(std::move(raw));
}

SparseVec StandardModule::apply_bar_generator(int i, const SparseVec& a) const {
  return apply(i, a) - LaurentPoly::x_minus_x_inv() * a;
}

SparseVec StandardModule::bar(const SparseVec& a) const {
  Accumulator acc(size());
  for (const auto& [v, c] : a.entries) acc.add(bar_table_[v], c.bar());
  return acc.take();
}

CanonicalBasis canonical_basis(const StandardModule& m, const CanonicalOptions& opts) {
  const std::size_t size = m.size();
  CanonicalBasis out;
  out.columns.reserve(size);
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> mu_by_col(size);
  Accumulator acc(size);
  const LaurentPoly x_inv = LaurentPoly::x_inv();

  for (std::uint32_t z = 0; z < size; ++z) {
    const int i = m.strict_descent(z, opts.choice == DescentChoice::largest);
    if (i == 0) {
      out.columns.push_back(SparseVec::unit(z));
      continue;
    }
    const std::uint32_t w = m.action(i, z).target;
    const SparseVec& cw = out.columns[w];
    acc.add(m.apply(i, cw), LaurentPoly(1));
    acc.add(cw, x_inv);
    for (const auto& [y, mu] : mu_by_col[w]) {
      if ((m.tau(y) >> i & 1U) == 0) acc.add(out.columns[y], LaurentPoly(-mu));
    }
    SparseVec cz = acc.take();

    for (const auto& [y, c] : cz.entries) {
      if (y == z) {
        if (c != LaurentPoly(1)) throw std::logic_error("canonical basis: diagonal coefficient is not 1");
        continue;
      }
      if (!c.in_neg_span() || m.length(y) >= m.length(z)) {
        throw std::logic_error("canonical basis: column " + std::to_string(z) + " is not unitriangular");
      }
      if (std::int64_t mu = c.coeff(-1); mu != 0) mu_by_col[z].emplace_back(y, mu);
    }
    if (cz.coeff(z) != LaurentPoly(1)) throw std::logic_error("canonical basis: missing diagonal term");
    if (opts.verify_bar && m.bar(cz) != cz) {
      throw std::logic_error("canonical basis: column " + std::to_string(z) + " is not bar-invariant");
    }
    out.columns.push_back(std::move(cz));
  }
  for (std::uint32_t z = 0; z < size; ++z) {
    for (const auto& [y, mu] : mu_by_col[z]) out.mu.push_back({y, z, mu});
  }
  return out;
}

std::vector<Edge> omega(const std::vector<MuEntry>& mu) {
  std::vector<Edge> out;
  out.reserve(2 * mu.size());
  for (const auto& e : mu) {
    out.push_back({e.y, e.z, e.mu});
    out.push_back({e.z, e.y, e.mu});
  }
  std::sort(out.begin(), out.end());
  std::vector<Edge> merged;
  for (const auto& e : out) {
    if (!merged.empty() && merged.back().from == e.from && merged.back().to == e.to) {
      merged.back().weight = checked::add(merged.back().weight, e.weight);
      if (merged.back().weight == 0) merged.pop_back();
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace ggraph
