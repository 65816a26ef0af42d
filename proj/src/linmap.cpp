#include "bracoid/linmap.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bracoid/errors.hpp"

namespace bracoid {
namespace {

void check_cod(std::size_t cod) {
  if (cod > std::numeric_limits<std::uint32_t>::max()) throw ShapeError("linear map codomain too large: " + std::to_string(cod));
}

// Sorts by row, sums duplicates, drops zeros.
void canonicalize_column(std::vector<LinMap::Cell>& cells) {
  if (cells.size() <= 1) {
    if (cells.size() == 1 && cells[0].value.is_zero()) cells.clear();
    return;
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i + 1;
    Scalar sum = cells[i].value;
    while (j < cells.size() && cells[j].row == cells[i].row) sum += cells[j++].value;
    if (!sum.is_zero()) cells[out++] = LinMap::Cell{cells[i].row, std::move(sum)};
    i = j;
  }
  cells.resize(out);
}

}  // namespace

LinMap::LinMap(std::size_t dom_dim, std::size_t cod_dim) : dom_(dom_dim), cod_(cod_dim), col_start_(dom_dim + 1, 0) {
  check_cod(cod_dim);
}

LinMap::LinMap(std::size_t dom_dim, std::size_t cod_dim, std::vector<Entry> entries) : dom_(dom_dim), cod_(cod_dim) {
  check_cod(cod_dim);
  for (const auto& e : entries) {
    if (e.row >= cod_dim || e.col >= dom_dim) {
      throw ShapeError("linear map entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                       ") outside " + std::to_string(cod_dim) + "x" + std::to_string(dom_dim));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  col_start_.assign(dom_dim + 1, 0);
  std::vector<Cell> column;
  std::size_t k = 0;
  for (std::size_t c = 0; c < dom_dim; ++c) {
    column.clear();
    while (k < entries.size() && entries[k].col == c) {
      column.push_back(Cell{static_cast<std::uint32_t>(entries[k].row), std::move(entries[k].value)});
      ++k;
    }
    canonicalize_column(column);
    for (auto& cell : column) cells_.push_back(std::move(cell));
    col_start_[c + 1] = cells_.size();
  }
}

LinMap LinMap::identity(std::size_t n) {
  LinMapBuilder b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Cell cell{static_cast<std::uint32_t>(i), Scalar(1)};
    b.push_column(std::span<const Cell>(&cell, 1));
  }
  return std::move(b).finish();
}

LinMap LinMap::from_function(std::size_t dom_dim, std::size_t cod_dim, std::span<const std::size_t> images) {
  if (images.size() != dom_dim) throw ShapeError("from_function: image count does not match domain");
  LinMapBuilder b(dom_dim, cod_dim);
  for (std::size_t j = 0; j < dom_dim; ++j) {
    if (images[j] >= cod_dim) throw ShapeError("from_function: image index out of range");
    Cell cell{static_cast<std::uint32_t>(images[j]), Scalar(1)};
    b.push_column(std::span<const Cell>(&cell, 1));
  }
  return std::move(b).finish();
}

std::span<const LinMap::Cell> LinMap::column(std::size_t col) const {
  return std::span<const Cell>(cells_.data() + col_start_[col], col_start_[col + 1] - col_start_[col]);
}

Scalar LinMap::at(std::size_t row, std::size_t col) const {
  if (row >= cod_ || col >= dom_) throw ShapeError("linear map index out of range");
  for (const auto& cell : column(col))
    if (cell.row == row) return cell.value;
  return Scalar();
}

std::vector<LinMap::Entry> LinMap::entries() const {
  std::vector<Entry> out;
  out.reserve(cells_.size());
  for (std::size_t c = 0; c < dom_; ++c)
    for (const auto& cell : column(c)) out.push_back(Entry{cell.row, c, cell.value});
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

std::optional<std::size_t> LinMap::basis_image(std::size_t col) const {
  auto cells = column(col);
  if (cells.size() != 1 || !cells[0].value.is_one()) return std::nullopt;
  return cells[0].row;
}

bool operator==(const LinMap& a, const LinMap& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.col_start_ != b.col_start_) return false;
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    if (a.cells_[i].row != b.cells_[i].row || !(a.cells_[i].value == b.cells_[i].value)) return false;
  }
  return true;
}

LinMapBuilder::LinMapBuilder(std::size_t dom_dim, std::size_t cod_dim) {
  check_cod(cod_dim);
  map_.dom_ = dom_dim;
  map_.cod_ = cod_dim;
  map_.col_start_.clear();
  map_.col_start_.reserve(dom_dim + 1);
  map_.col_start_.push_back(0);
}

void LinMapBuilder::push_column(std::span<const LinMap::Cell> cells) {
  for (const auto& c : cells) map_.cells_.push_back(c);
  map_.col_start_.push_back(map_.cells_.size());
}

void LinMapBuilder::push_unsorted_column(std::vector<LinMap::Cell>& scratch) {
  canonicalize_column(scratch);
  for (auto& c : scratch) map_.cells_.push_back(std::move(c));
  map_.col_start_.push_back(map_.cells_.size());
}

LinMap LinMapBuilder::finish() && {
  if (map_.col_start_.size() != map_.dom_ + 1) throw ShapeError("LinMapBuilder: wrong number of columns");
  return std::move(map_);
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.dom_dim() != g.cod_dim()) {
    throw ShapeError("compose: outer map has domain " + std::to_string(f.dom_dim()) + " but inner map has codomain " +
                     std::to_string(g.cod_dim()));
  }
  LinMapBuilder b(g.dom_dim(), f.cod_dim());
  std::vector<LinMap::Cell> scratch;
  for (std::size_t j = 0; j < g.dom_dim(); ++j) {
    auto inner = g.column(j);
    if (inner.size() == 1 && inner[0].value.is_one()) {
      b.push_column(f.column(inner[0].row));
      continue;
    }
    scratch.clear();
    for (const auto& gc : inner) {
      for (const auto& fc : f.column(gc.row)) {
        scratch.push_back(LinMap::Cell{fc.row, gc.value.is_one() ? fc.value : fc.value * gc.value});
      }
    }
    b.push_unsorted_column(scratch);
  }
  return std::move(b).finish();
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  const std::size_t gd = g.dom_dim();
  const std::size_t gc = g.cod_dim();
  LinMapBuilder b(f.dom_dim() * gd, f.cod_dim() * gc);
  std::vector<LinMap::Cell> column;
  for (std::size_t a = 0; a < f.dom_dim(); ++a) {
    auto fa = f.column(a);
    for (std::size_t c = 0; c < gd; ++c) {
      auto gcol = g.column(c);
      column.clear();
      for (const auto& x : fa) {
        for (const auto& y : gcol) {
          column.push_back(LinMap::Cell{static_cast<std::uint32_t>(x.row * gc + y.row),
                                        x.value.is_one() ? y.value : (y.value.is_one() ? x.value : x.value * y.value)});
        }
      }
      b.push_column(column);
    }
  }
  return std::move(b).finish();
}

LinMap flip(std::size_t m, std::size_t n) {
  std::vector<std::size_t> images(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i * n + j] = j * m + i;
  return LinMap::from_function(m * n, m * n, images);
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (f.dom_dim() != g.dom_dim() || f.cod_dim() != g.cod_dim()) throw ShapeError("add: dimension mismatch");
  LinMapBuilder b(f.dom_dim(), f.cod_dim());
  std::vector<LinMap::Cell> scratch;
  for (std::size_t j = 0; j < f.dom_dim(); ++j) {
    scratch.assign(f.column(j).begin(), f.column(j).end());
    scratch.insert(scratch.end(), g.column(j).begin(), g.column(j).end());
    b.push_unsorted_column(scratch);
  }
  return std::move(b).finish();
}

LinMap scale(const LinMap& f, const Scalar& s) {
  LinMapBuilder b(f.dom_dim(), f.cod_dim());
  std::vector<LinMap::Cell> scratch;
  for (std::size_t j = 0; j < f.dom_dim(); ++j) {
    scratch.clear();
    for (const auto& c : f.column(j)) scratch.push_back(LinMap::Cell{c.row, c.value * s});
    b.push_unsorted_column(scratch);
  }
  return std::move(b).finish();
}

std::vector<Scalar> apply(const LinMap& f, std::span<const Scalar> v) {
  if (v.size() != f.dom_dim()) {
    throw ShapeError("apply: vector of length " + std::to_string(v.size()) + " for map with domain " +
                     std::to_string(f.dom_dim()));
  }
  std::vector<Scalar> out(f.cod_dim());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& c : f.column(j)) out[c.row] += c.value * v[j];
  }
  return out;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const LinMap& f) {
  Dense m(f.cod_dim(), std::vector<Scalar>(f.dom_dim()));
  for (std::size_t j = 0; j < f.dom_dim(); ++j)
    for (const auto& c : f.column(j)) m[c.row][j] = c.value;
  return m;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Dense& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k)
        if (!m[r][k].is_zero()) m[i][k] = m[i][k] - factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const LinMap& f) {
  Dense m = to_dense(f);
  return rref(m, f.dom_dim()).size();
}

std::optional<LinMap> inverse(const LinMap& f) {
  const std::size_t n = f.dom_dim();
  if (f.cod_dim() != n) return std::nullopt;
  Dense m = to_dense(f);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = Scalar(1);
  }
  if (rref(m, n).size() != n) return std::nullopt;
  std::vector<LinMap::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m[i][n + j].is_zero()) entries.push_back({i, j, m[i][n + j]});
  return LinMap(n, n, std::move(entries));
}

std::vector<Scalar> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v.at(i) = Scalar(1);
  return v;
}

std::optional<Difference> first_difference(const LinMap& a, const LinMap& b) {
  if (a.dom_dim() != b.dom_dim() || a.cod_dim() != b.cod_dim()) {
    throw ShapeError("equation sides have shapes " + std::to_string(a.cod_dim()) + "x" + std::to_string(a.dom_dim()) +
                     " and " + std::to_string(b.cod_dim()) + "x" + std::to_string(b.dom_dim()));
  }
  for (std::size_t j = 0; j < a.dom_dim(); ++j) {
    auto ca = a.column(j);
    auto cb = b.column(j);
    std::size_t x = 0, y = 0;
    while (x < ca.size() || y < cb.size()) {
      if (y == cb.size() || (x < ca.size() && ca[x].row < cb[y].row)) return Difference{j, ca[x].row, ca[x].value, Scalar()};
      if (x == ca.size() || cb[y].row < ca[x].row) return Difference{j, cb[y].row, Scalar(), cb[y].value};
      if (!(ca[x].value == cb[y].value)) return Difference{j, ca[x].row, ca[x].value, cb[y].value};
      ++x;
      ++y;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> legs) {
  std::vector<std::size_t> out(legs.size());
  for (std::size_t k = legs.size(); k-- > 0;) {
    out[k] = legs[k] == 0 ? 0 : flat % legs[k];
    if (legs[k] != 0) flat /= legs[k];
  }
  return out;
}

}  // namespace bracoid
