#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syt/tableau.hpp"

namespace syt {

/// Cells visited by the hole during a deletion, from the deleted entry's cell
/// to the vacated outer corner. Consecutive cells are one step right or down.
struct SlidePath {
  std::vector<CellCoord> cells;

  const CellCoord& end() const { return cells.back(); }
};

/// The set of k-minors of a tableau with n entries. Members are distinct and
/// kept in canonical order.
struct Deck {
  int k = 1;
  int n = 0;
  std::vector<StandardTableau> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Deck&, const Deck&) = default;
};

/// The multiset of k-minors. `cards` holds (member, multiplicity) pairs in
/// canonical member order, every multiplicity positive.
struct DeckMultiset {
  int k = 1;
  int n = 0;
  std::vector<std::pair<StandardTableau, std::size_t>> cards;

  std::size_t total() const noexcept;
  std::size_t multiplicity(const StandardTableau& t) const;
  friend bool operator==(const DeckMultiset&, const DeckMultiset&) = default;
};

/// T - m: vacate the cell of m, slide the hole toward the smaller of its
/// right/below neighbours until it reaches an outer corner, then renumber
/// every entry p > m to p - 1. Deleting from a single cell yields the empty
/// tableau. Throws RangeError unless 1 <= m <= n.
StandardTableau delete_entry(const StandardTableau& t, int m);

/// The hole trajectory of delete_entry(t, m).
SlidePath slide_path(const StandardTableau& t, int m);

/// delete_entry together with its trajectory.
std::pair<StandardTableau, SlidePath> delete_entry_traced(const StandardTableau& t, int m);

/// Every tableau reachable by k successive deletions. k = 0 gives {t}.
Deck minor_set(const StandardTableau& t, int k);

/// Multiset of k-minors. For k >= 2 each ordered sequence of deleted entries
/// contributes one card.
DeckMultiset minor_multiset(const StandardTableau& t, int k);

/// Sorts and deduplicates.
Deck make_deck(std::vector<StandardTableau> members, int k, int n);
/// Sorts and merges equal members.
DeckMultiset make_multiset(std::vector<StandardTableau> cards, int k, int n);

Deck support(const DeckMultiset& ms);

/// Cardinality of the multiset intersection (sum of per-member minima).
std::size_t intersection_size(const DeckMultiset& a, const DeckMultiset& b);
/// True iff every multiplicity in `sub` is at most the one in `super`.
bool is_submultiset(const DeckMultiset& sub, const DeckMultiset& super);

/// `deck k=<k> n=<n> size=<count>` followed by one member per line.
std::string to_string(const Deck& d);
/// As for Deck, each member line suffixed with ` x<multiplicity>`.
std::string to_string(const DeckMultiset& d);

/// Parses the Deck text format. The header line is optional; without it k = 1
/// and n = member size + 1. Multiplicity suffixes are accepted and ignored.
Deck parse_deck(std::string_view text);
/// Parses the DeckMultiset text format; lines without a suffix count once.
DeckMultiset parse_deck_multiset(std::string_view text);

}  // namespace syt
