#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sdsc {

/// Symmetric sparse matrix over real values. Each off-diagonal pair is stored
/// once in canonical (row < col) form; queries for (i, j) and (j, i) see the
/// same value. A per-row adjacency index gives O(degree) neighbor iteration
/// in both directions. Immutable after construction; build through
/// SymmetricSparseBuilder.
class SymmetricSparse {
 public:
  struct Entry {
    int row;  // row <= col; row == col only when the builder allows diagonals
    int col;
    double value;
  };
  struct Neighbor {
    int index;
    double value;
  };

  SymmetricSparse() = default;

  int size() const { return size_; }
  bool allows_diagonal() const { return allow_diagonal_; }

  /// Stored entries (unordered pairs plus any diagonal entries).
  std::size_t entry_count() const { return entries_.size(); }

  /// Matrix elements backed by a stored entry: off-diagonal pairs count twice.
  std::size_t element_count() const { return element_count_; }

  bool contains(int i, int j) const;

  /// Value at (i, j), or `absent` when no entry is stored there.
  double value_or(int i, int j, double absent = 0.0) const;

  /// Canonical triplets sorted by (row, col).
  const std::vector<Entry>& entries() const { return entries_; }

  /// Neighbors of i (including a diagonal self-entry if present), sorted by
  /// index.
  std::span<const Neighbor> neighbors(int i) const;

  bool operator==(const SymmetricSparse& other) const;

 private:
  friend class SymmetricSparseBuilder;

  int size_ = 0;
  bool allow_diagonal_ = false;
  std::size_t element_count_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_offsets_;  // size_ + 1
  std::vector<Neighbor> adjacency_;
};

class SymmetricSparseBuilder {
 public:
  struct Options {
    bool allow_diagonal = false;
    bool allow_infinite = false;  // permits +inf values (distance matrices)
    bool keep_zeros = false;      // keep explicit 0.0 entries instead of dropping
  };

  explicit SymmetricSparseBuilder(int size, Options options = {});

  /// Overwrites any previous value at (i, j).
  void set(int i, int j, double value);
  /// Keeps the larger of the existing and new value.
  void merge_max(int i, int j, double value);
  /// Adds to the existing value (absent counts as zero).
  void merge_add(int i, int j, double value);
  /// Keeps the smaller of the existing and new value.
  void merge_min(int i, int j, double value);

  SymmetricSparse build();

 private:
  std::uint64_t key_of(int i, int j) const;
  void check_value(double value) const;

  int size_;
  Options options_;
  std::unordered_map<std::uint64_t, double> items_;
};

}  // namespace sdsc
