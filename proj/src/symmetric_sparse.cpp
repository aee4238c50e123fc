#include "sdsc/symmetric_sparse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdsc/errors.hpp"

namespace sdsc {

namespace {

void check_index(int i, int n) {
  if (i < 0 || i >= n) {
    throw ValidationError("matrix index " + std::to_string(i) +
                          " out of range for size " + std::to_string(n));
  }
}

}  // namespace

bool SymmetricSparse::contains(int i, int j) const {
  return !std::isnan(value_or(i, j, std::numeric_limits<double>::quiet_NaN()));
}

double SymmetricSparse::value_or(int i, int j, double absent) const {
  check_index(i, size_);
  check_index(j, size_);
  const auto nbrs = neighbors(i);
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), j,
      [](const Neighbor& n, int idx) { return n.index < idx; });
  if (it != nbrs.end() && it->index == j) return it->value;
  return absent;
}

std::span<const SymmetricSparse::Neighbor> SymmetricSparse::neighbors(
    int i) const {
  check_index(i, size_);
  const std::size_t begin = row_offsets_[i];
  const std::size_t end = row_offsets_[i + 1];
  return {adjacency_.data() + begin, end - begin};
}

bool SymmetricSparse::operator==(const SymmetricSparse& other) const {
  if (size_ != other.size_) return false;
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    const Entry& a = entries_[e];
    const Entry& b = other.entries_[e];
    if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
  }
  return true;
}

SymmetricSparseBuilder::SymmetricSparseBuilder(int size, Options options)
    : size_(size), options_(options) {
  if (size < 0) throw ValidationError("matrix size must be nonnegative");
}

std::uint64_t SymmetricSparseBuilder::key_of(int i, int j) const {
  check_index(i, size_);
  check_index(j, size_);
  if (i == j && !options_.allow_diagonal) {
    throw ValidationError("diagonal entry (" + std::to_string(i) + ", " +
                          std::to_string(i) + ") not permitted");
  }
  const std::uint64_t lo = static_cast<std::uint64_t>(std::min(i, j));
  const std::uint64_t hi = static_cast<std::uint64_t>(std::max(i, j));
  return lo * static_cast<std::uint64_t>(size_) + hi;
}

void SymmetricSparseBuilder::check_value(double value) const {
  if (std::isnan(value)) throw ValidationError("matrix value is NaN");
  if (std::isinf(value)) {
    if (value < 0) throw ValidationError("matrix value is -inf");
    if (!options_.allow_infinite) {
      throw ValidationError("infinite value not permitted for this matrix");
    }
  }
}

void SymmetricSparseBuilder::set(int i, int j, double value) {
  check_value(value);
  items_[key_of(i, j)] = value;
}

void SymmetricSparseBuilder::merge_max(int i, int j, double value) {
  check_value(value);
  auto [it, inserted] = items_.try_emplace(key_of(i, j), value);
  if (!inserted && value > it->second) it->second = value;
}

void SymmetricSparseBuilder::merge_add(int i, int j, double value) {
  check_value(value);
  auto [it, inserted] = items_.try_emplace(key_of(i, j), value);
  if (!inserted) it->second += value;
}

void SymmetricSparseBuilder::merge_min(int i, int j, double value) {
  check_value(value);
  auto [it, inserted] = items_.try_emplace(key_of(i, j), value);
  if (!inserted && value < it->second) it->second = value;
}

SymmetricSparse SymmetricSparseBuilder::build() {
  std::vector<SymmetricSparse::Entry> entries;
  entries.reserve(items_.size());
  const std::uint64_t n = static_cast<std::uint64_t>(size_);
  for (const auto& [key, value] : items_) {
    if (value == 0.0 && !options_.keep_zeros) continue;
    entries.push_back({static_cast<int>(key / n), static_cast<int>(key % n),
                       value});
  }
  std::sort(entries.begin(), entries.end(),
            [](const SymmetricSparse::Entry& a,
               const SymmetricSparse::Entry& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });

  SymmetricSparse m;
  m.size_ = size_;
  m.allow_diagonal_ = options_.allow_diagonal;
  m.entries_ = std::move(entries);

  std::vector<std::size_t> degree(size_ + 1, 0);
  std::size_t elements = 0;
  for (const auto& e : m.entries_) {
    ++degree[e.row];
    elements += e.row == e.col ? 1 : 2;
    if (e.row != e.col) ++degree[e.col];
  }
  m.element_count_ = elements;

  m.row_offsets_.assign(size_ + 2, 0);
  for (int i = 0; i < size_; ++i) {
    m.row_offsets_[i + 1] = m.row_offsets_[i] + degree[i];
  }
  m.row_offsets_.resize(size_ + 1);

  m.adjacency_.resize(m.row_offsets_[size_]);
  std::vector<std::size_t> cursor(m.row_offsets_.begin(),
                                  m.row_offsets_.end() - 1);
  for (const auto& e : m.entries_) {
    m.adjacency_[cursor[e.row]++] = {e.col, e.value};
    if (e.row != e.col) m.adjacency_[cursor[e.col]++] = {e.row, e.value};
  }
  // Entries are processed in (row, col) order, so each row's neighbor list
  // comes out sorted except for interleaving between the two mirror writes.
  for (int i = 0; i < size_; ++i) {
    auto begin = m.adjacency_.begin() + static_cast<std::ptrdiff_t>(m.row_offsets_[i]);
    auto end = m.adjacency_.begin() + static_cast<std::ptrdiff_t>(m.row_offsets_[i + 1]);
    std::sort(begin, end, [](const SymmetricSparse::Neighbor& a,
                             const SymmetricSparse::Neighbor& b) {
      return a.index < b.index;
    });
  }
  return m;
}

}  // namespace sdsc
