#include <doctest.h>

#include "syt/reconstruction.hpp"

using namespace syt;

namespace {

StandardTableau T(const char* s) { return parse_tableau(s); }
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Deck deck_of(std::vector<const char*> members) {
  std::vector<StandardTableau> ms;
  for (const char* m : members) ms.push_back(T(m));
  const int n = static_cast<int>(ms.front().size()) + 1;
  return make_deck(std::move(ms), 1, n);
}

DeckMultiset cards_of(std::vector<std::pair<const char*, int>> cards) {
  std::vector<StandardTableau> ms;
  for (const auto& [m, c] : cards)
    for (int i = 0; i < c; ++i) ms.push_back(T(m));
  const int n = static_cast<int>(ms.size());
  return make_multiset(std::move(ms), 1, n);
}

ReconstructionError::Kind error_kind(auto&& f) {
  try {
    f();
  } catch (const ReconstructionError& e) {
    return e.kind();
  }
  FAIL("expected ReconstructionError");
  return ReconstructionError::Kind::NoMatch;
}

using EK = ReconstructionError::Kind;
using OK = ReconstructionOutcome::Kind;

}  // namespace

TEST_CASE("reconstruct_shape") {
  CHECK(reconstruct_shape(deck_of({"1 2 / 3 4", "1 2 3 / 4"})) == P({3, 2}));
  CHECK(reconstruct_shape(deck_of({"1 3 / 2", "1 2 / 3"})) == P({2, 2}));
  CHECK(reconstruct_shape(deck_of({"1 2 3 4"})) == P({5}));
  CHECK(reconstruct_shape(deck_of({"1 / 2 / 3"})) == P({1, 1, 1, 1}));
  CHECK(reconstruct_shape(minor_set(T("1 2 3 / 4 5 6"), 1)) == P({3, 3}));

  CHECK(error_kind([] { reconstruct_shape(deck_of({"1"})); }) == EK::TooSmall);
  CHECK(reconstruct_shape(deck_of({"1 2", "1 / 2"})) == P({2, 1}));
  CHECK(error_kind([] { reconstruct_shape(Deck{1, 4, {T("1 2"), T("1 2 3")}}); }) == EK::NotADeck);
  CHECK(error_kind([] { reconstruct_shape(Deck{1, 4, {}}); }) == EK::NotADeck);
  // (2,2) plus one cell is not a rectangle.
  CHECK(error_kind([] { reconstruct_shape(deck_of({"1 2 / 3 4"})); }) == EK::NotADeck);
  // Union (3,1,1) has 5 cells, not 4.
  CHECK(error_kind([] { reconstruct_shape(deck_of({"1 2 3", "1 / 2 / 3"})); }) == EK::NotADeck);
}

TEST_CASE("locate_max") {
  CHECK(locate_max(minor_set(T("1 2 3 / 4 5"), 1)) == CellCoord{2, 2});
  CHECK(locate_max(minor_set(T("1 2 / 3 4"), 1)) == CellCoord{2, 2});
  CHECK(locate_max(minor_set(T("1 2 3 5 / 4"), 1)) == CellCoord{1, 4});
  CHECK(locate_max(minor_set(T("1 2 3 / 4 / 5"), 1)) == CellCoord{3, 1});
  // Single path into the corner holding n: the extra cell decides.
  CHECK(locate_max(minor_set(T("1 4 / 2 / 3"), 1)) == CellCoord{1, 2});
  CHECK(error_kind([] { locate_max(minor_set(T("1 2 / 3"), 1)); }) == EK::TooSmall);
}

TEST_CASE("reduce_deck") {
  const auto reduced = reduce_deck(deck_of({"1 2 / 3 4", "1 2 3 / 4"}));
  CHECK(reduced == deck_of({"1 2 / 3", "1 2 3"}));
  CHECK(reduced == minor_set(T("1 2 3 / 4"), 1));

  const auto single = reduce_deck(deck_of({"1"}));
  REQUIRE(single.size() == 1);
  CHECK(single.members.front().empty());

  const auto second = reduce_deck(deck_of({"1 3 / 2 4", "1 2 3 / 4", "1 2 / 3 4", "1 2 4 / 3"}));
  CHECK(second == deck_of({"1 2 / 3", "1 3 / 2", "1 2 3"}));
  CHECK(second == minor_set(T("1 2 4 / 3"), 1));

  CHECK(error_kind([] { reduce_deck(Deck{1, 1, {StandardTableau{}}}); }) == EK::TooSmall);
}

TEST_CASE("reconstruct_base") {
  CHECK(reconstruct_base(deck_of({"1 2 / 3 4", "1 2 3 / 4"}), P({3, 2})) == T("1 2 3 / 4 5"));
  CHECK(reconstruct_base(deck_of({"1 2 3 4"}), P({5})) == T("1 2 3 4 5"));
  CHECK(reconstruct_base(deck_of({"1 / 2 / 3"}), P({1, 1, 1, 1})) == T("1 / 2 / 3 / 4"));
  CHECK(reconstruct_base(minor_set(T("1 2 3 5 / 4"), 1), P({4, 1})) == T("1 2 3 5 / 4"));
  CHECK(reconstruct_base(minor_set(T("1 2 3 4 / 5"), 1), P({4, 1})) == T("1 2 3 4 / 5"));
  CHECK(reconstruct_base(minor_set(T("1 3 / 2 / 4 / 5"), 1), P({2, 1, 1, 1})) == T("1 3 / 2 / 4 / 5"));
  CHECK(reconstruct_base(minor_set(T("1 3 / 2 5 / 4"), 1), P({2, 2, 1})) == T("1 3 / 2 5 / 4"));

  CHECK(error_kind([] { reconstruct_base(minor_set(T("1 2 / 3 / 4"), 1), P({3, 1, 1})); }) ==
        EK::NotADeck);
  CHECK(error_kind([] { reconstruct_base(minor_set(T("1 2 4 / 3 / 5"), 1), P({3, 1, 1})); }) ==
        EK::UnsupportedShape);
  // Shape (3,2) by union, but matching none of the five tabulated decks.
  CHECK(error_kind([] { reconstruct_base(deck_of({"1 2 / 3 4", "1 2 4 / 3"}), P({3, 2})); }) == EK::NoMatch);
}

TEST_CASE("every base-shape tableau up to 9 entries is recovered directly") {
  for (int n = 3; n <= 9; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      const auto shape = t.shape();
      if (!is_base_shape(shape)) continue;
      CHECK(reconstruct_base(minor_set(t, 1), shape) == t);
    }
  CHECK(is_base_shape(P({3, 1, 1})) == false);
  CHECK(is_base_shape(P({2, 2})) == false);
  CHECK(is_base_shape(P({2, 1})) == false);
  CHECK(is_base_shape(P({3, 1})));
  CHECK(is_base_shape(P({2, 1, 1})));
}

TEST_CASE("the tabulated two-row decks agree with computed ones") {
  const auto& table = two_row_table();
  REQUIRE(table.size() == 5);
  std::vector<StandardTableau> tabulated;
  for (const auto& e : table) {
    CHECK(minor_set(e.tableau, 1) == e.deck);
    tabulated.push_back(e.tableau);
  }
  std::sort(tabulated.begin(), tabulated.end());
  CHECK(tabulated == enumerate_syt(P({3, 2})));
}

TEST_CASE("transposed decks") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_syt_all(n)) CHECK(transpose(minor_set(t, 1)) == minor_set(t.transpose(), 1));
}

TEST_CASE("insert_max") {
  CHECK(insert_max(T("1 2 / 3"), {1, 3}) == T("1 2 4 / 3"));
  CHECK(insert_max(T("1 2 / 3"), {2, 2}) == T("1 2 / 3 4"));
  CHECK(insert_max(T("1 2 / 3"), {3, 1}) == T("1 2 / 3 / 4"));
  CHECK(insert_max(StandardTableau{}, {1, 1}) == T("1"));
  CHECK(error_kind([] { insert_max(T("1 2 / 3"), {2, 3}); }) == EK::NotADeck);
  CHECK(error_kind([] { insert_max(T("1 2 / 3"), {4, 1}); }) == EK::NotADeck);
}

TEST_CASE("reconstruct_from_set") {
  auto o = reconstruct_from_set(minor_set(T("1 3 5 / 2 4"), 1));
  REQUIRE(o.unique());
  CHECK(o.tableau() == T("1 3 5 / 2 4"));

  o = reconstruct_from_set(deck_of({"1 2", "1 / 2"}));
  CHECK(o.kind == OK::Ambiguous);
  CHECK(o.candidates == std::vector<StandardTableau>{T("1 2 / 3"), T("1 3 / 2")});
  CHECK(to_string(o) == "ambiguous 2\n1 2 / 3\n1 3 / 2\n");

  const auto big = T("1 2 7 8 / 3 5 9 / 4 / 6");
  o = reconstruct_from_set(minor_set(big, 1));
  REQUIRE(o.unique());
  CHECK(o.tableau() == big);
  CHECK(o.method == ReconstructionOutcome::Method::Inductive);
  CHECK(to_string(o) == "unique 1 2 7 8 / 3 5 9 / 4 / 6\n");

  o = reconstruct_from_set(deck_of({"()"}));
  REQUIRE(o.unique());
  CHECK(o.tableau() == T("1"));
}

TEST_CASE("reconstruct_from_set rejects decks no tableau has") {
  CHECK(reconstruct_from_set(Deck{1, 0, {}}).kind == OK::Invalid);
  CHECK(reconstruct_from_set(Deck{1, 0, {T("1 2"), T("1 2 3")}}).kind == OK::Invalid);
  CHECK(reconstruct_from_set(Deck{2, 5, {T("1 2 3")}}).kind == OK::Invalid);
  CHECK(reconstruct_from_set(Deck{1, 9, {T("1 2 3")}}).kind == OK::Invalid);
  auto o = reconstruct_from_set(deck_of({"1 2 / 3 4", "1 2 4 / 3"}));
  CHECK(o.kind == OK::Invalid);
  CHECK(to_string(o).starts_with("invalid "));
  // Small decks go through exhaustive search.
  CHECK(reconstruct_from_set(deck_of({"1 2 3", "1 / 2 / 3"})).kind == OK::Invalid);
  // A real deck with one member dropped.
  auto members = minor_set(T("1 2 4 / 3 5 / 6"), 1).members;
  members.erase(members.begin());
  CHECK(reconstruct_from_set(make_deck(members, 1, 6)).kind == OK::Invalid);
}

TEST_CASE("reconstruct_from_multiset") {
  auto o = reconstruct_from_multiset(cards_of({{"1 / 2", 2}, {"1 2", 1}}));
  REQUIRE(o.unique());
  CHECK(o.tableau() == T("1 2 / 3"));

  o = reconstruct_from_multiset(cards_of({{"1 3 / 2", 2}, {"1 2 / 3", 2}}));
  CHECK(o.kind == OK::Ambiguous);
  CHECK(o.candidates == std::vector<StandardTableau>{T("1 2 / 3 4"), T("1 3 / 2 4")});

  o = reconstruct_from_multiset(cards_of({{"1", 2}}));
  CHECK(o.kind == OK::Ambiguous);
  CHECK(o.candidates == std::vector<StandardTableau>{T("1 2"), T("1 / 2")});

  // Right support, wrong multiplicities.
  auto ms = minor_multiset(T("1 2 4 / 3 5"), 1);
  auto tweaked = ms;
  ++tweaked.cards[0].second;
  --tweaked.cards[1].second;
  CHECK(reconstruct_from_multiset(tweaked).kind == OK::Invalid);
  // Total multiplicity must match member size.
  ms.cards.front().second += 1;
  CHECK(reconstruct_from_multiset(ms).kind == OK::Invalid);
  CHECK(reconstruct_from_multiset(DeckMultiset{}).kind == OK::Invalid);
}

TEST_CASE("pipeline stages over every tableau up to 8 entries") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      const auto deck = minor_set(t, 1);
      if (n >= 3) CHECK(reconstruct_shape(deck) == t.shape());
      if (n >= 4) CHECK(locate_max(deck) == t.find(n));
      CHECK(reduce_deck(deck) == minor_set(delete_entry(t, n), 1));
    }
}

TEST_CASE("round trips up to 8 entries") {
  for (int n = 5; n <= 8; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      const auto s = reconstruct_from_set(minor_set(t, 1));
      REQUIRE(s.unique());
      CHECK(s.tableau() == t);
      CHECK(s.method == ReconstructionOutcome::Method::Inductive);
      const auto m = reconstruct_from_multiset(minor_multiset(t, 1));
      REQUIRE(m.unique());
      CHECK(m.tableau() == t);
    }
  const std::vector<StandardTableau> square{T("1 2 / 3 4"), T("1 3 / 2 4")};
  for (int n = 3; n <= 4; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      const auto m = reconstruct_from_multiset(minor_multiset(t, 1));
      if (t.shape() == P({2, 2})) {
        CHECK(m.kind == OK::Ambiguous);
        CHECK(m.candidates == square);
      } else {
        REQUIRE(m.unique());
        CHECK(m.tableau() == t);
      }
    }
}
