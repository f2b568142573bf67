#include "syt/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace syt {

std::string to_string(const CellCoord& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw ShapeError("row " + std::to_string(i + 1) + " has non-positive length", i + 1);
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ShapeError("row " + std::to_string(i + 1) + " is longer than row " + std::to_string(i),
                       i + 1);
  }
}

int Partition::weight() const noexcept {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool Partition::contains(const CellCoord& c) const noexcept {
  return c.row >= 1 && c.col >= 1 && static_cast<std::size_t>(c.row) <= parts_.size() &&
         c.col <= parts_[c.row - 1];
}

bool Partition::is_rectangular() const noexcept {
  return !parts_.empty() && parts_.front() == parts_.back();
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("not an integer: '" + std::string(tok) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in shape");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    parts.push_back(parse_int(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) size_ += r.size();
}

StandardTableau StandardTableau::from_trusted(std::vector<std::vector<int>> rows) {
#ifndef NDEBUG
  return validate(std::move(rows));
#else
  return StandardTableau(std::move(rows));
#endif
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

CellCoord StandardTableau::find(int entry) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == entry) return {static_cast<int>(i + 1), static_cast<int>(j + 1)};
  throw RangeError("entry " + std::to_string(entry) + " not in tableau");
}

StandardTableau StandardTableau::transpose() const {
  if (rows_.empty()) return {};
  std::vector<std::vector<int>> cols(rows_.front().size());
  for (const auto& r : rows_)
    for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return StandardTableau(std::move(cols));
}

std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b) {
  // Shape first, then reading word. With equal shapes the nested vector
  // comparison is exactly reading-word order.
  const auto n = std::min(a.rows_.size(), b.rows_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.rows_[i].size() <=> b.rows_[i].size(); c != 0) return c;
  if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
  return a.rows_ <=> b.rows_;
}

StandardTableau validate(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  Partition shape(std::move(parts));

  const int n = shape.weight();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int v : rows[i]) {
      if (v < 1 || v > n)
        throw EntryError("entry " + std::to_string(v) + " in row " + std::to_string(i + 1) +
                             " is outside 1.." + std::to_string(n),
                         i + 1);
      if (seen[v])
        throw EntryError("entry " + std::to_string(v) + " in row " + std::to_string(i + 1) +
                             " is repeated",
                         i + 1);
      seen[v] = true;
    }
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j)
      if (rows[i][j - 1] >= rows[i][j])
        throw OrderError("row " + std::to_string(i + 1) + " is not increasing at column " +
                             std::to_string(j + 1),
                         OrderError::Axis::Row, i + 1);
    if (i == 0) continue;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i - 1][j] >= rows[i][j])
        throw OrderError("column " + std::to_string(j + 1) + " is not increasing at row " +
                             std::to_string(i + 1),
                         OrderError::Axis::Column, j + 1);
  }
  return StandardTableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// Shapes

std::vector<CellCoord> outer_corners(const Partition& shape) {
  if (shape.empty()) throw RangeError("empty shape has no outer corners");
  std::vector<CellCoord> out;
  for (std::size_t i = 0; i < shape.length(); ++i)
    if (i + 1 == shape.length() || shape[i + 1] < shape[i])
      out.push_back({static_cast<int>(i + 1), shape[i]});
  return out;
}

Partition shape_union(const std::vector<Partition>& shapes) {
  if (shapes.empty()) throw RangeError("shape union of an empty family");
  std::vector<int> parts;
  for (const auto& s : shapes) {
    if (s.length() > parts.size()) parts.resize(s.length(), 0);
    for (std::size_t i = 0; i < s.length(); ++i) parts[i] = std::max(parts[i], s[i]);
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Partial filling of a fixed shape: fill[r] cells of row r are occupied.
void place_next(const Partition& shape, int next, int n, std::vector<int>& fill,
                std::vector<std::vector<int>>& rows, std::vector<StandardTableau>& out) {
  if (next > n) {
    out.push_back(StandardTableau::from_trusted(rows));
    return;
  }
  for (std::size_t r = 0; r < shape.length(); ++r) {
    // The next free cell of row r is addable iff the row has room and the
    // cell above it is already filled.
    if (fill[r] >= shape[r]) continue;
    if (r > 0 && fill[r - 1] <= fill[r]) continue;
    rows[r].push_back(next);
    ++fill[r];
    place_next(shape, next + 1, n, fill, rows, out);
    --fill[r];
    rows[r].pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<int> fill(shape.length(), 0);
  std::vector<std::vector<int>> rows(shape.length());
  place_next(shape, 1, shape.weight(), fill, rows, out);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.rows() < b.rows(); });
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw RangeError("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<StandardTableau> enumerate_syt_all(int n) {
  std::vector<StandardTableau> out;
  for (const auto& p : enumerate_partitions(n)) {
    auto part = enumerate_syt(p);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

// f(shape) = sum over outer corners of f(shape minus corner).
std::size_t count_shape(const std::vector<int>& parts, std::map<std::vector<int>, std::size_t>& memo) {
  if (parts.empty()) return 1;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    auto smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += count_shape(smaller, memo);
  }
  memo.emplace(parts, total);
  return total;
}

}  // namespace

std::size_t count_syt_all(int n) {
  std::map<std::vector<int>, std::size_t> memo;
  std::size_t total = 0;
  for (const auto& p : enumerate_partitions(n)) total += count_shape(p.parts(), memo);
  return total;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_string(const StandardTableau& t) {
  if (t.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) s += " / ";
    const auto& r = t.rows()[i];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(r[j]);
    }
  }
  return s;
}

StandardTableau parse_tableau(std::string_view text) {
  text = trim(text);
  if (text == "()") return {};
  if (text.empty()) throw ParseError("empty tableau text (write the empty tableau as \"()\")");
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    auto segment = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    std::vector<int> row;
    std::istringstream in{std::string(segment)};
    std::string tok;
    while (in >> tok) row.push_back(parse_int(tok));
    if (row.empty())
      throw ShapeError("row " + std::to_string(rows.size() + 1) + " is empty", rows.size() + 1);
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return validate(std::move(rows));
}

}  // namespace syt
