#pragma once

#include <string>
#include <vector>

#include "syt/jeu_de_taquin.hpp"
#include "syt/tableau.hpp"

namespace syt {

class ReconstructionError : public Error {
public:
  enum class Kind { TooSmall, NotADeck, UnsupportedShape, NoMatch };
  ReconstructionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Result of a reconstruction attempt. `candidates` holds the answer for
/// Unique (one member) and every tableau with the given deck for Ambiguous.
struct ReconstructionOutcome {
  enum class Kind { Unique, Ambiguous, Invalid };
  /// How the answer was obtained: the deck-driven induction or brute force
  /// over all tableaux of the right size.
  enum class Method { Inductive, Exhaustive };

  Kind kind = Kind::Invalid;
  Method method = Method::Exhaustive;
  std::vector<StandardTableau> candidates;
  std::string reason;

  bool unique() const noexcept { return kind == Kind::Unique; }
  const StandardTableau& tableau() const { return candidates.front(); }

  friend bool operator==(const ReconstructionOutcome&, const ReconstructionOutcome&) = default;
};

/// `unique <tableau>` | `ambiguous <count>` then one candidate per line |
/// `invalid <reason>`. Always newline-terminated.
std::string to_string(const ReconstructionOutcome& o);

/// Shape of the tableau whose 1-minor set is `deck`; needs n >= 3.
///
/// A single member shape means the source shape is a rectangle: for a shape
/// with at least two rows and columns the last part grows by one, a single
/// row or column is extended. Otherwise the answer is the union of member
/// shapes.
Partition reconstruct_shape(const Deck& deck);

/// Cell holding the largest entry n of the source tableau; needs n >= 4.
///
/// With one outer corner that corner is the answer. Otherwise, reading the
/// surviving outer corners of each member (corners of the source shape still
/// present in the member):
///  - a corner where n-1 sits in two or more distinct members holds n;
///  - with two corners, one showing an entry below n-1 excludes itself;
///  - what remains is a rectangle with one extra cell beside its first row or
///    below its first column, and that cell holds n.
/// Decks that fall through every case raise NotADeck.
CellCoord locate_max(const Deck& deck);

/// The 1-minor set of T - n: delete n-1 from every member and deduplicate.
Deck reduce_deck(const Deck& deck);

/// Shapes solved directly: one row, one column, (n-1,1) and its transpose
/// for n >= 4, (3,2) and (2,2,1).
bool is_base_shape(const Partition& shape);

/// Tableau of a base shape from its 1-minor set. Throws UnsupportedShape for
/// other shapes and NoMatch when no tableau fits.
StandardTableau reconstruct_base(const Deck& deck, const Partition& shape);

/// The five shape-(3,2) tableaux with their 1-minor sets, in the order
/// 1 2 3/4 5, 1 2 4/3 5, 1 3 4/2 5, 1 2 5/3 4, 1 3 5/2 4.
struct TabulatedDeck {
  StandardTableau tableau;
  Deck deck;
};
const std::vector<TabulatedDeck>& two_row_table();

/// Transposes every member.
Deck transpose(const Deck& deck);

/// Adds entry size+1 at `cell`, which must be an addable cell.
StandardTableau insert_max(const StandardTableau& t, const CellCoord& cell);

/// Runs only the inductive pipeline; throws ReconstructionError when the deck
/// is not produced by any tableau it can reach. Does not self-check.
StandardTableau reconstruct_inductive(const Deck& deck);

/// Reconstruction from a set of 1-minors. For n >= 5 the induction is used
/// and its answer re-checked against the input; smaller decks are resolved by
/// exhaustive search over all tableaux with n entries.
ReconstructionOutcome reconstruct_from_set(const Deck& deck);

/// Reconstruction from a multiset of 1-minors (n = total multiplicity).
ReconstructionOutcome reconstruct_from_multiset(const DeckMultiset& cards);

}  // namespace syt
