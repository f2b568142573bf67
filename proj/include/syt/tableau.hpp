#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Row lengths do not form a partition.
class ShapeError : public Error {
public:
  ShapeError(const std::string& what, std::size_t row) : Error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

/// Entries are not a permutation of 1..n.
class EntryError : public Error {
public:
  EntryError(const std::string& what, std::size_t row) : Error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

/// A row or column is not strictly increasing.
class OrderError : public Error {
public:
  enum class Axis { Row, Column };
  OrderError(const std::string& what, Axis axis, std::size_t index)
      : Error(what), axis_(axis), index_(index) {}
  Axis axis() const noexcept { return axis_; }
  std::size_t index() const noexcept { return index_; }

private:
  Axis axis_;
  std::size_t index_;
};

/// Malformed text (non-numeric token, stray separator).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Generic precondition failure: entry out of range, empty input, size mismatch.
class RangeError : public Error {
public:
  using Error::Error;
};

/// A 1-based cell position, row 1 at the top, column 1 at the left.
struct CellCoord {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

std::string to_string(const CellCoord& c);

/// Non-increasing sequence of positive integers. The empty sequence is the
/// partition of 0.
class Partition {
public:
  Partition() = default;
  /// Throws ShapeError when `parts` is not non-increasing or has a zero.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool contains(const CellCoord& c) const noexcept;
  bool is_rectangular() const noexcept;
  /// Conjugate partition (reflection in the main diagonal).
  Partition transpose() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// "(4,3,1,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

/// Parses "4,3,1,1" (parentheses optional).
Partition parse_partition(std::string_view text);

/// A standard Young tableau: a filling of a Young diagram by 1..n, rows
/// increasing left to right, columns increasing top to bottom.
///
/// Instances are only obtained through validate() or from operations that
/// preserve the invariants, so every live value is standard.
class StandardTableau {
public:
  /// The empty tableau.
  StandardTableau() = default;

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Partition shape() const;

  /// Entry at a 1-based coordinate; the coordinate must be valid.
  int at(const CellCoord& c) const { return rows_[c.row - 1][c.col - 1]; }
  CellCoord find(int entry) const;

  /// Reflection in the main diagonal.
  StandardTableau transpose() const;

  /// Canonical order: shape lexicographic, then row-reading word.
  friend std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b);
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

  /// Wraps rows already known to be standard. Checked only in debug builds.
  static StandardTableau from_trusted(std::vector<std::vector<int>> rows);

private:
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  std::vector<std::vector<int>> rows_;
  std::size_t size_ = 0;

  friend StandardTableau validate(std::vector<std::vector<int>> rows);
};

/// Checks all tableau invariants. Throws ShapeError, EntryError or OrderError
/// naming the offending 1-based row or column.
StandardTableau validate(std::vector<std::vector<int>> rows);

inline Partition shape(const StandardTableau& t) { return t.shape(); }

/// Cells with no cell to the right and none below, in row order.
/// Throws RangeError on the empty shape.
std::vector<CellCoord> outer_corners(const Partition& shape);

/// Cellwise union (partwise maximum). Throws RangeError on empty input.
Partition shape_union(const std::vector<Partition>& shapes);

/// Every standard tableau of the given shape, ordered lexicographically by
/// row-reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

/// Every standard tableau with n entries, grouped by enumerate_partitions
/// order and lexicographic within each shape.
std::vector<StandardTableau> enumerate_syt_all(int n);

/// Number of standard tableaux with n entries, without enumerating them.
std::size_t count_syt_all(int n);

/// Text format: rows joined by " / ", entries separated by spaces. The empty
/// tableau is written "()".
std::string to_string(const StandardTableau& t);

/// Inverse of to_string; rejects anything that fails validate().
StandardTableau parse_tableau(std::string_view text);

}  // namespace syt
