#include "syt/reconstruction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace syt {

namespace {

using Kind = ReconstructionError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& what) { throw ReconstructionError(kind, what); }

// Source size n of a 1-minor deck; checks uniform member size.
int source_size(const Deck& deck) {
  if (deck.members.empty()) fail(Kind::NotADeck, "deck has no members");
  if (deck.k != 1) fail(Kind::NotADeck, "not a deck of 1-minors (k=" + std::to_string(deck.k) + ")");
  const auto s = deck.members.front().size();
  for (const auto& m : deck.members)
    if (m.size() != s) fail(Kind::NotADeck, "deck members have different sizes");
  return static_cast<int>(s) + 1;
}

bool is_single_row(const Partition& p) { return p.length() == 1; }
bool is_single_column(const Partition& p) { return !p.empty() && p[0] == 1; }

// (m,1): a row with one cell below its first entry.
bool is_row_and_cell(const Partition& p) { return p.length() == 2 && p[1] == 1 && p[0] >= 3; }

// The outer corner of `outer` missing from `inner`, when inner = outer minus a corner.
CellCoord removed_corner(const Partition& outer, const Partition& inner) {
  for (const auto& c : outer_corners(outer)) {
    if (inner.contains(c)) continue;
    std::vector<int> parts = outer.parts();
    if (--parts[c.row - 1] == 0) parts.pop_back();
    if (parts == inner.parts()) return c;
  }
  fail(Kind::NotADeck, "member shape " + to_string(inner) + " is not " + to_string(outer) +
                           " minus an outer corner");
}

StandardTableau single_row(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i + 1;
  return validate({r});
}

StandardTableau reconstruct_row_and_cell(const Deck& deck, int n) {
  const CellCoord max_cell = locate_max(deck);
  int second = n;
  if (max_cell != CellCoord{2, 1}) {
    // The second-row cell is untouched when n is deleted, and otherwise either
    // slides away or is renumbered down, so the largest value ever seen there
    // is the original entry.
    second = 0;
    for (const auto& m : deck.members)
      if (m.rows().size() >= 2) second = std::max(second, m.rows()[1][0]);
    if (second == 0) fail(Kind::NoMatch, "no member has a second row");
  }
  std::vector<int> first;
  for (int v = 1; v <= n; ++v)
    if (v != second) first.push_back(v);
  try {
    return validate({first, {second}});
  } catch (const Error& e) {
    fail(Kind::NoMatch, std::string("row-and-cell filling is not standard: ") + e.what());
  }
}

}  // namespace

std::string to_string(const ReconstructionOutcome& o) {
  switch (o.kind) {
    case ReconstructionOutcome::Kind::Unique:
      return "unique " + to_string(o.tableau()) + "\n";
    case ReconstructionOutcome::Kind::Ambiguous: {
      std::string s = "ambiguous " + std::to_string(o.candidates.size()) + "\n";
      for (const auto& t : o.candidates) s += to_string(t) + "\n";
      return s;
    }
    case ReconstructionOutcome::Kind::Invalid:
      break;
  }
  return "invalid " + o.reason + "\n";
}

Deck transpose(const Deck& deck) {
  std::vector<StandardTableau> members;
  members.reserve(deck.members.size());
  for (const auto& m : deck.members) members.push_back(m.transpose());
  return make_deck(std::move(members), deck.k, deck.n);
}

StandardTableau insert_max(const StandardTableau& t, const CellCoord& cell) {
  auto rows = t.rows();
  const int entry = static_cast<int>(t.size()) + 1;
  const auto r = static_cast<std::size_t>(cell.row - 1);
  const bool new_row = r == rows.size() && cell.col == 1;
  const bool extends_row = r < rows.size() && static_cast<std::size_t>(cell.col) == rows[r].size() + 1 &&
                           (r == 0 || rows[r - 1].size() >= static_cast<std::size_t>(cell.col));
  if (!new_row && !extends_row)
    fail(Kind::NotADeck, "cell " + to_string(cell) + " is not addable to " + to_string(t.shape()));
  if (new_row) rows.emplace_back();
  rows[r].push_back(entry);
  return StandardTableau::from_trusted(std::move(rows));
}

Partition reconstruct_shape(const Deck& deck) {
  const int n = source_size(deck);
  if (n < 3)
    fail(Kind::TooSmall, "the 1-minor set determines the shape only for n >= 3 (n=" +
                             std::to_string(n) + ")");

  std::set<Partition> shapes;
  for (const auto& m : deck.members) shapes.insert(m.shape());

  if (shapes.size() == 1) {
    const Partition& mu = *shapes.begin();
    if (is_single_row(mu)) return Partition(std::vector<int>{mu[0] + 1});
    if (is_single_column(mu)) return Partition(std::vector<int>(mu.length() + 1, 1));
    std::vector<int> parts = mu.parts();
    ++parts.back();
    if (parts.front() != parts.back())
      fail(Kind::NotADeck, "single member shape " + to_string(mu) + " is not a rectangle minus a corner");
    return Partition(std::move(parts));
  }

  Partition u = shape_union({shapes.begin(), shapes.end()});
  if (u.weight() != n)
    fail(Kind::NotADeck, "union of member shapes " + to_string(u) + " does not have " +
                             std::to_string(n) + " cells");
  for (const auto& s : shapes) removed_corner(u, s);
  return u;
}

CellCoord locate_max(const Deck& deck) {
  const int n = source_size(deck);
  if (n < 4)
    fail(Kind::TooSmall, "the 1-minor set locates the largest entry only for n >= 4 (n=" +
                             std::to_string(n) + ")");
  const Partition shape = reconstruct_shape(deck);
  const auto corners = outer_corners(shape);
  if (corners.size() == 1) return corners.front();

  // Per outer corner of the source shape: number of members showing n-1 there,
  // and whether some member shows a smaller entry there.
  std::vector<int> hits(corners.size(), 0);
  std::vector<bool> low(corners.size(), false);
  for (const auto& m : deck.members) {
    const CellCoord gone = removed_corner(shape, m.shape());
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (corners[i] == gone) continue;
      if (m.at(corners[i]) == n - 1)
        ++hits[i];
      else
        low[i] = true;
    }
  }

  std::vector<std::size_t> pinned;
  for (std::size_t i = 0; i < corners.size(); ++i)
    if (hits[i] >= 2) pinned.push_back(i);
  if (pinned.size() == 1) return corners[pinned.front()];
  if (corners.size() >= 3 || pinned.size() > 1)
    fail(Kind::NotADeck, "no unique surviving corner carries the largest entry");

  // Exactly two corners from here on.
  if (low[0] != low[1]) return low[0] ? corners[1] : corners[0];
  if (low[0]) fail(Kind::NotADeck, "both surviving corners show entries below n-1");

  const auto& p = shape.parts();
  const bool cell_beside_first_row =
      p.size() >= 2 && p[0] == p[1] + 1 && std::all_of(p.begin() + 1, p.end(), [&](int x) { return x == p[1]; });
  const bool cell_below_first_column =
      p.size() >= 2 && p.back() == 1 && std::all_of(p.begin(), p.end() - 1, [&](int x) { return x == p[0]; });
  if (cell_beside_first_row) return {1, p[0]};
  if (cell_below_first_column) return {static_cast<int>(p.size()), 1};
  fail(Kind::NotADeck, "largest entry not determined for shape " + to_string(shape));
}

Deck reduce_deck(const Deck& deck) {
  const int n = source_size(deck);
  if (n < 2) fail(Kind::TooSmall, "cannot reduce the deck of a single-cell tableau");
  std::vector<StandardTableau> reduced;
  reduced.reserve(deck.members.size());
  for (const auto& m : deck.members) reduced.push_back(delete_entry(m, n - 1));
  return make_deck(std::move(reduced), 1, n - 1);
}

bool is_base_shape(const Partition& shape) {
  if (shape.empty()) return false;
  const auto& p = shape.parts();
  if (is_single_row(shape) || is_single_column(shape)) return true;
  if (is_row_and_cell(shape) || is_row_and_cell(shape.transpose())) return true;
  return p == std::vector<int>{3, 2} || p == std::vector<int>{2, 2, 1};
}

const std::vector<TabulatedDeck>& two_row_table() {
  static const std::vector<TabulatedDeck> table = [] {
    const std::vector<std::pair<const char*, std::vector<const char*>>> raw = {
        {"1 2 3 / 4 5", {"1 2 / 3 4", "1 2 3 / 4"}},
        {"1 2 4 / 3 5", {"1 3 / 2 4", "1 2 3 / 4", "1 2 / 3 4", "1 2 4 / 3"}},
        {"1 3 4 / 2 5", {"1 2 3 / 4", "1 3 / 2 4", "1 3 4 / 2"}},
        {"1 2 5 / 3 4", {"1 3 4 / 2", "1 2 4 / 3", "1 2 / 3 4"}},
        {"1 3 5 / 2 4", {"1 2 4 / 3", "1 3 4 / 2", "1 3 / 2 4"}},
    };
    std::vector<TabulatedDeck> out;
    for (const auto& [t, members] : raw) {
      std::vector<StandardTableau> ms;
      for (const char* m : members) ms.push_back(parse_tableau(m));
      out.push_back({parse_tableau(t), make_deck(std::move(ms), 1, 5)});
    }
    return out;
  }();
  return table;
}

StandardTableau reconstruct_base(const Deck& deck, const Partition& shape) {
  const int n = source_size(deck);
  if (shape.weight() != n)
    fail(Kind::NotADeck, "shape " + to_string(shape) + " does not have " + std::to_string(n) + " cells");
  if (!is_base_shape(shape)) fail(Kind::UnsupportedShape, "no direct rule for shape " + to_string(shape));

  if (is_single_row(shape)) return single_row(n);
  if (is_single_column(shape)) return single_row(n).transpose();
  if (is_row_and_cell(shape)) return reconstruct_row_and_cell(deck, n);
  if (is_row_and_cell(shape.transpose())) return reconstruct_row_and_cell(transpose(deck), n).transpose();

  const bool transposed = shape.parts() == std::vector<int>{2, 2, 1};
  const Deck probe = transposed ? transpose(deck) : deck;
  for (const auto& entry : two_row_table())
    if (entry.deck.members == probe.members) return transposed ? entry.tableau.transpose() : entry.tableau;
  fail(Kind::NoMatch, "deck matches none of the five tabulated decks for shape " + to_string(shape));
}

StandardTableau reconstruct_inductive(const Deck& deck) {
  const int n = source_size(deck);
  const Partition shape = reconstruct_shape(deck);
  if (is_base_shape(shape)) return reconstruct_base(deck, shape);
  if (n < 5) fail(Kind::UnsupportedShape, "shape " + to_string(shape) + " is not reconstructible by induction");
  const CellCoord max_cell = locate_max(deck);
  const StandardTableau smaller = reconstruct_inductive(reduce_deck(deck));
  return insert_max(smaller, max_cell);
}

namespace {

ReconstructionOutcome invalid(std::string reason) {
  ReconstructionOutcome o;
  o.kind = ReconstructionOutcome::Kind::Invalid;
  o.reason = std::move(reason);
  return o;
}

ReconstructionOutcome from_candidates(std::vector<StandardTableau> candidates) {
  if (candidates.empty()) return invalid("no tableau has this deck");
  ReconstructionOutcome o;
  o.method = ReconstructionOutcome::Method::Exhaustive;
  o.kind = candidates.size() == 1 ? ReconstructionOutcome::Kind::Unique : ReconstructionOutcome::Kind::Ambiguous;
  o.candidates = std::move(candidates);
  return o;
}

// Empty string when the deck is well formed, otherwise the reason.
std::string shape_problem(const Deck& deck) {
  if (deck.members.empty()) return "deck has no members";
  if (deck.k != 1) return "not a deck of 1-minors";
  const auto s = deck.members.front().size();
  for (const auto& m : deck.members)
    if (m.size() != s) return "deck members have different sizes";
  if (deck.n != 0 && static_cast<std::size_t>(deck.n) != s + 1)
    return "deck header n=" + std::to_string(deck.n) + " does not match member size " + std::to_string(s);
  return {};
}

}  // namespace

ReconstructionOutcome reconstruct_from_set(const Deck& deck) {
  if (auto why = shape_problem(deck); !why.empty()) return invalid(why);
  const int n = static_cast<int>(deck.members.front().size()) + 1;

  if (n >= 5) {
    StandardTableau t;
    try {
      t = reconstruct_inductive(deck);
    } catch (const ReconstructionError& e) {
      return invalid(e.what());
    }
    if (minor_set(t, 1).members != deck.members)
      return invalid("deck is inconsistent: the reconstructed tableau " + to_string(t) + " has a different deck");
    ReconstructionOutcome o;
    o.kind = ReconstructionOutcome::Kind::Unique;
    o.method = ReconstructionOutcome::Method::Inductive;
    o.candidates.push_back(std::move(t));
    return o;
  }

  std::vector<StandardTableau> matches;
  for (auto& t : enumerate_syt_all(n))
    if (minor_set(t, 1).members == deck.members) matches.push_back(std::move(t));
  return from_candidates(std::move(matches));
}

ReconstructionOutcome reconstruct_from_multiset(const DeckMultiset& cards) {
  if (cards.cards.empty()) return invalid("deck has no members");
  if (cards.k != 1) return invalid("not a deck of 1-minors");
  const int n = static_cast<int>(cards.total());
  for (const auto& [t, _] : cards.cards)
    if (static_cast<int>(t.size()) != n - 1)
      return invalid("total multiplicity " + std::to_string(n) + " does not match member size " +
                     std::to_string(t.size()));

  if (n >= 5) {
    Deck set = support(cards);
    set.n = n;
    auto o = reconstruct_from_set(set);
    if (o.unique() && minor_multiset(o.tableau(), 1).cards != cards.cards)
      return invalid("multiplicities are inconsistent with the reconstructed tableau " + to_string(o.tableau()));
    return o;
  }

  std::vector<StandardTableau> matches;
  for (auto& t : enumerate_syt_all(n))
    if (minor_multiset(t, 1).cards == cards.cards) matches.push_back(std::move(t));
  return from_candidates(std::move(matches));
}

}  // namespace syt
