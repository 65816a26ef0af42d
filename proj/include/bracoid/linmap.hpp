#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bracoid/scalar.hpp"

namespace bracoid {

/// A linear map K^dom -> K^cod over the rationals, stored column-compressed.
///
/// Tensor products use one flat-index convention everywhere: the basis pair
/// (i, j) of M (x) N is the flat index i * dim(N) + j, so the left leg varies
/// slowest. Construction canonicalizes (sorted, duplicates summed, zeros
/// dropped), which makes operator== the exact equality of linear maps.
class LinMap {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };
  struct Cell {
    std::uint32_t row;
    Scalar value;
  };

  LinMap() = default;
  /// The zero map.
  LinMap(std::size_t dom_dim, std::size_t cod_dim);
  /// Throws ShapeError if an index is out of range.
  LinMap(std::size_t dom_dim, std::size_t cod_dim, std::vector<Entry> entries);

  static LinMap identity(std::size_t n);
  /// Map sending basis column j to basis row images[j] with coefficient 1.
  static LinMap from_function(std::size_t dom_dim, std::size_t cod_dim, std::span<const std::size_t> images);

  [[nodiscard]] std::size_t dom_dim() const noexcept { return dom_; }
  [[nodiscard]] std::size_t cod_dim() const noexcept { return cod_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return cells_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return cells_.empty(); }

  [[nodiscard]] std::span<const Cell> column(std::size_t col) const;
  [[nodiscard]] Scalar at(std::size_t row, std::size_t col) const;
  /// All nonzero entries sorted row-major (row, then column).
  [[nodiscard]] std::vector<Entry> entries() const;

  /// If column col is exactly one basis vector with coefficient 1, its row.
  [[nodiscard]] std::optional<std::size_t> basis_image(std::size_t col) const;

  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  friend class LinMapBuilder;

  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<Cell> cells_;
};

/// Column-at-a-time construction for callers that produce canonical columns.
class LinMapBuilder {
 public:
  LinMapBuilder(std::size_t dom_dim, std::size_t cod_dim);
  /// Appends the next column. Cells must have strictly increasing rows and
  /// nonzero values.
  void push_column(std::span<const LinMap::Cell> cells);
  /// Appends the next column from unsorted (row, value) pairs.
  void push_unsorted_column(std::vector<LinMap::Cell>& scratch);
  LinMap finish() &&;

 private:
  LinMap map_;
};

/// f o g. Throws ShapeError naming both dimensions when f.dom != g.cod.
LinMap compose(const LinMap& f, const LinMap& g);
/// Kronecker product under the flat-index convention.
LinMap tensor(const LinMap& f, const LinMap& g);

template <typename... Rest>
LinMap compose(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return compose(f, compose(g, rest...));
}
template <typename... Rest>
LinMap tensor(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// The symmetry c_{M,N}: M (x) N -> N (x) M with dim M = m, dim N = n.
LinMap flip(std::size_t m, std::size_t n);

inline LinMap id(std::size_t n) { return LinMap::identity(n); }

LinMap add(const LinMap& f, const LinMap& g);
LinMap scale(const LinMap& f, const Scalar& s);

std::vector<Scalar> apply(const LinMap& f, std::span<const Scalar> v);

/// Rank by exact fraction-free elimination.
std::size_t rank(const LinMap& f);
/// Exact inverse; std::nullopt when f is not square or singular.
std::optional<LinMap> inverse(const LinMap& f);

/// Basis vector e_i of K^n.
std::vector<Scalar> basis_vector(std::size_t n, std::size_t i);

/// First (column, row) in column-major order where a and b differ.
struct Difference {
  std::size_t col;
  std::size_t row;
  Scalar lhs;
  Scalar rhs;
};
std::optional<Difference> first_difference(const LinMap& a, const LinMap& b);

/// Splits a flat tensor index into legs of the given dimensions.
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> legs);

}  // namespace bracoid
