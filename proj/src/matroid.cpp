#include "subsel/matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subsel {

bool size_lex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool sorted_unique(const IndexSet& s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](int a, int b) { return a >= b; }) == s.end();
}

IndexSet with_element(const IndexSet& s, int x) {
  IndexSet t = s;
  t.insert(std::upper_bound(t.begin(), t.end(), x), x);
  return t;
}

}  // namespace

MatroidSpec::MatroidSpec(int n, std::variant<Uniform, Partition, Explicit> v)
    : n_(n), variant_(std::move(v)) {}

MatroidSpec MatroidSpec::uniform(int ground_size, int k) {
  if (ground_size < 0) {
    throw std::invalid_argument("matroid: ground size must be >= 0");
  }
  if (k < 1) throw std::invalid_argument("matroid.k: must be >= 1");
  return MatroidSpec(ground_size, Uniform{k});
}

MatroidSpec MatroidSpec::partition(int ground_size,
                                   std::vector<std::vector<int>> blocks,
                                   std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    throw std::invalid_argument(
        "matroid.caps: one capacity per block required");
  }
  std::vector<int> block_of(ground_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (caps[b] < 0) {
      throw std::invalid_argument("matroid.caps: capacities must be >= 0");
    }
    for (int x : blocks[b]) {
      if (x < 0 || x >= ground_size) {
        throw std::invalid_argument("matroid.blocks: index " +
                                    std::to_string(x) + " out of range");
      }
      if (block_of[x] != -1) {
        throw std::invalid_argument("matroid.blocks: index " +
                                    std::to_string(x) +
                                    " appears in two blocks");
      }
      block_of[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < ground_size; ++x) {
    if (block_of[x] == -1) {
      throw std::invalid_argument("matroid.blocks: index " +
                                  std::to_string(x) + " not covered");
    }
  }
  MatroidSpec m(ground_size, Partition{std::move(blocks), std::move(caps)});
  m.block_of_ = std::move(block_of);
  return m;
}

MatroidSpec MatroidSpec::explicit_family(int ground_size,
                                         std::vector<IndexSet> sets) {
  std::vector<IndexSet> family;
  family.reserve(sets.size() + 1);
  for (IndexSet s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s) {
      if (x < 0 || x >= ground_size) {
        throw std::invalid_argument("matroid.sets: index " +
                                    std::to_string(x) + " out of range");
      }
    }
    family.push_back(std::move(s));
  }
  family.push_back({});  // hereditary property forces the empty set
  std::sort(family.begin(), family.end(), size_lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return MatroidSpec(ground_size, Explicit{std::move(family)});
}

bool MatroidSpec::is_uniform() const {
  return std::holds_alternative<Uniform>(variant_);
}
bool MatroidSpec::is_partition() const {
  return std::holds_alternative<Partition>(variant_);
}
bool MatroidSpec::is_explicit() const {
  return std::holds_alternative<Explicit>(variant_);
}

std::string MatroidSpec::kind_name() const {
  if (is_uniform()) return "uniform";
  if (is_partition()) return "partition";
  return "explicit";
}

const MatroidSpec::Uniform& MatroidSpec::as_uniform() const {
  return std::get<Uniform>(variant_);
}
const MatroidSpec::Partition& MatroidSpec::as_partition() const {
  return std::get<Partition>(variant_);
}
const MatroidSpec::Explicit& MatroidSpec::as_explicit() const {
  return std::get<Explicit>(variant_);
}

int MatroidSpec::rank_cap() const {
  if (const auto* u = std::get_if<Uniform>(&variant_)) {
    return std::min(u->k, n_);
  }
  if (const auto* p = std::get_if<Partition>(&variant_)) {
    int r = 0;
    for (std::size_t b = 0; b < p->blocks.size(); ++b) {
      r += std::min<int>(p->caps[b], static_cast<int>(p->blocks[b].size()));
    }
    return r;
  }
  const auto& fam = std::get<Explicit>(variant_).family;
  std::size_t r = 0;
  for (const IndexSet& s : fam) r = std::max(r, s.size());
  return static_cast<int>(r);
}

void MatroidSpec::check_index(int x) const {
  if (x < 0 || x >= n_) {
    throw std::out_of_range("matroid: index " + std::to_string(x) +
                            " out of range for ground size " +
                            std::to_string(n_));
  }
}

void MatroidSpec::check_set(const IndexSet& s) const {
  if (!sorted_unique(s)) {
    throw std::invalid_argument(
        "matroid: index set must be sorted and duplicate-free");
  }
  for (int x : s) check_index(x);
}

bool MatroidSpec::is_independent(const IndexSet& s) const {
  check_set(s);
  if (const auto* u = std::get_if<Uniform>(&variant_)) {
    return static_cast<int>(s.size()) <= u->k;
  }
  if (const auto* p = std::get_if<Partition>(&variant_)) {
    std::vector<int> count(p->blocks.size(), 0);
    for (int x : s) {
      if (++count[block_of_[x]] > p->caps[block_of_[x]]) return false;
    }
    return true;
  }
  const auto& fam = std::get<Explicit>(variant_).family;
  return std::binary_search(fam.begin(), fam.end(), s, size_lex_less);
}

bool MatroidSpec::can_extend(const IndexSet& s, int x) const {
  check_index(x);
  if (std::binary_search(s.begin(), s.end(), x)) {
    throw std::invalid_argument("matroid: element already in the set");
  }
  if (const auto* u = std::get_if<Uniform>(&variant_)) {
    return static_cast<int>(s.size()) + 1 <= u->k;
  }
  if (const auto* p = std::get_if<Partition>(&variant_)) {
    int count = 0;
    for (int y : s) {
      if (block_of_[y] == block_of_[x]) ++count;
    }
    return count + 1 <= p->caps[block_of_[x]];
  }
  return is_independent(with_element(s, x));
}

AxiomReport MatroidSpec::validate_axioms() const {
  AxiomReport report;
  const auto* e = std::get_if<Explicit>(&variant_);
  if (e == nullptr) return report;  // uniform/partition are matroids
  if (n_ > 20) {
    throw std::runtime_error(
        "validate_axioms: ground size " + std::to_string(n_) +
        " exceeds the exhaustive-check guard of 20; use a sampled check");
  }
  const auto& fam = e->family;
  const auto member = [&](const IndexSet& s) {
    return std::binary_search(fam.begin(), fam.end(), s, size_lex_less);
  };

  for (const IndexSet& s : fam) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      IndexSet sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (!member(sub)) {
        report.hereditary_ok = false;
        if (!report.counterexample) report.counterexample = {sub, s};
        break;
      }
    }
    if (!report.hereditary_ok) break;
  }

  for (const IndexSet& s : fam) {
    for (const IndexSet& t : fam) {
      if (t.size() <= s.size()) continue;
      bool extendable = false;
      for (int j : t) {
        if (std::binary_search(s.begin(), s.end(), j)) continue;
        if (member(with_element(s, j))) {
          extendable = true;
          break;
        }
      }
      if (!extendable) {
        report.augmentation_ok = false;
        if (!report.counterexample) report.counterexample = {s, t};
        break;
      }
    }
    if (!report.augmentation_ok) break;
  }
  return report;
}

void MatroidSpec::enumerate_independent_sets(
    std::optional<int> max_card,
    const std::function<void(const IndexSet&)>& visit) const {
  const int cap = std::min(rank_cap(), max_card.value_or(rank_cap()));
  if (const auto* e = std::get_if<Explicit>(&variant_)) {
    for (const IndexSet& s : e->family) {
      if (static_cast<int>(s.size()) <= cap) visit(s);
    }
    return;
  }
  if (n_ > 25) {
    throw std::runtime_error("enumerate_independent_sets: ground size " +
                             std::to_string(n_) +
                             " exceeds the enumeration guard of 25");
  }
  // Iterative deepening keeps size-lex order with O(rank) memory. Pruning a
  // branch at a dependent prefix+x is safe: by heredity no independent set
  // extends it.
  IndexSet prefix;
  const std::function<void(int, int)> dfs = [&](int start, int remaining) {
    if (remaining == 0) {
      visit(prefix);
      return;
    }
    for (int x = start; x <= n_ - remaining; ++x) {
      if (!can_extend(prefix, x)) continue;
      prefix.push_back(x);
      dfs(x + 1, remaining - 1);
      prefix.pop_back();
    }
  };
  for (int size = 0; size <= cap; ++size) dfs(0, size);
}

std::vector<IndexSet> MatroidSpec::independent_sets(
    std::optional<int> max_card) const {
  std::vector<IndexSet> out;
  enumerate_independent_sets(max_card,
                             [&](const IndexSet& s) { out.push_back(s); });
  return out;
}

}  // namespace subsel
