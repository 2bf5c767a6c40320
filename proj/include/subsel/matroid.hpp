#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace subsel {

/// Sorted, duplicate-free list of ground-set indices.
using IndexSet = std::vector<int>;

/// Orders sets by cardinality first, then lexicographically. This is the
/// canonical order for every enumeration and axiom scan in this module, so
/// ties and counterexamples are reproducible.
bool size_lex_less(const IndexSet& a, const IndexSet& b);

struct AxiomReport {
  bool hereditary_ok = true;
  bool augmentation_ok = true;
  /// First violating pair in scan order: (subset, superset) for hereditary,
  /// (smaller, larger) for augmentation.
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
};

/// Independence structure over ground indices {0..n-1}: uniform or partition
/// matroid, or an explicit set family (which need not satisfy the matroid
/// axioms; the selectors only require the membership oracle).
class MatroidSpec {
 public:
  struct Uniform {
    int k = 1;
  };
  struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> caps;
  };
  struct Explicit {
    std::vector<IndexSet> family;  // size-lex sorted, contains {}
  };

  MatroidSpec() : MatroidSpec(uniform(0, 1)) {}

  static MatroidSpec uniform(int ground_size, int k);
  static MatroidSpec partition(int ground_size,
                               std::vector<std::vector<int>> blocks,
                               std::vector<int> caps);
  /// The empty set is always inserted; members are canonicalized and deduped.
  static MatroidSpec explicit_family(int ground_size,
                                     std::vector<IndexSet> sets);

  int ground_size() const { return n_; }
  bool is_uniform() const;
  bool is_partition() const;
  bool is_explicit() const;
  std::string kind_name() const;  // "uniform" | "partition" | "explicit"

  const Uniform& as_uniform() const;
  const Partition& as_partition() const;
  const Explicit& as_explicit() const;

  /// Maximum cardinality of any independent set.
  int rank_cap() const;

  bool is_independent(const IndexSet& s) const;

  /// Preconditions: s independent, x not in s. Equivalent to
  /// is_independent(s + {x}).
  bool can_extend(const IndexSet& s, int x) const;

  /// Exhaustive hereditary/augmentation check. Uniform and partition
  /// variants are matroids by construction and return trivially valid;
  /// explicit families are scanned in size-lex order (guard: n <= 20).
  AxiomReport validate_axioms() const;

  /// Visits every independent set of cardinality <= max_card exactly once,
  /// in size-lex order. Uniform/partition use hereditary DFS pruning with a
  /// ground-size guard of 25; explicit streams its family.
  void enumerate_independent_sets(
      std::optional<int> max_card,
      const std::function<void(const IndexSet&)>& visit) const;

  /// Convenience variant collecting the enumeration into a vector.
  std::vector<IndexSet> independent_sets(
      std::optional<int> max_card = std::nullopt) const;

 private:
  MatroidSpec(int n, std::variant<Uniform, Partition, Explicit> v);

  void check_index(int x) const;
  void check_set(const IndexSet& s) const;

  int n_ = 0;
  std::variant<Uniform, Partition, Explicit> variant_;
  std::vector<int> block_of_;  // partition only: index -> block id
};

}  // namespace subsel
