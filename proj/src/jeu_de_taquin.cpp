#include "syt/jeu_de_taquin.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace syt {

std::pair<StandardTableau, SlidePath> delete_entry_traced(const StandardTableau& t, int m) {
  const int n = static_cast<int>(t.size());
  if (m < 1 || m > n)
    throw RangeError("entry " + std::to_string(m) + " out of range 1.." + std::to_string(n));

  auto rows = t.rows();
  SlidePath path;
  CellCoord hole = t.find(m);
  path.cells.push_back(hole);

  while (true) {
    const std::size_t r = hole.row - 1, c = hole.col - 1;
    const bool has_right = c + 1 < rows[r].size();
    const bool has_below = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_below) break;
    bool take_right;
    if (has_right && has_below) {
      assert(rows[r][c + 1] != rows[r + 1][c]);
      take_right = rows[r][c + 1] < rows[r + 1][c];
    } else {
      take_right = has_right;
    }
    if (take_right) {
      rows[r][c] = rows[r][c + 1];
      ++hole.col;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++hole.row;
    }
    path.cells.push_back(hole);
  }

  // The hole is now an outer corner: drop it.
  rows[hole.row - 1].pop_back();
  if (rows[hole.row - 1].empty()) rows.pop_back();
  for (auto& row : rows)
    for (int& v : row)
      if (v > m) --v;

  return {StandardTableau::from_trusted(std::move(rows)), std::move(path)};
}

StandardTableau delete_entry(const StandardTableau& t, int m) {
  return delete_entry_traced(t, m).first;
}

SlidePath slide_path(const StandardTableau& t, int m) {
  return delete_entry_traced(t, m).second;
}

std::size_t DeckMultiset::total() const noexcept {
  std::size_t s = 0;
  for (const auto& [_, c] : cards) s += c;
  return s;
}

std::size_t DeckMultiset::multiplicity(const StandardTableau& t) const {
  auto it = std::lower_bound(cards.begin(), cards.end(), t,
                             [](const auto& card, const StandardTableau& x) { return card.first < x; });
  return (it != cards.end() && it->first == t) ? it->second : 0;
}

Deck make_deck(std::vector<StandardTableau> members, int k, int n) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Deck{k, n, std::move(members)};
}

DeckMultiset make_multiset(std::vector<StandardTableau> cards, int k, int n) {
  std::sort(cards.begin(), cards.end());
  DeckMultiset ms{k, n, {}};
  for (auto& c : cards) {
    if (!ms.cards.empty() && ms.cards.back().first == c)
      ++ms.cards.back().second;
    else
      ms.cards.emplace_back(std::move(c), 1);
  }
  return ms;
}

Deck support(const DeckMultiset& ms) {
  Deck d{ms.k, ms.n, {}};
  d.members.reserve(ms.cards.size());
  for (const auto& [t, _] : ms.cards) d.members.push_back(t);
  return d;
}

namespace {

void check_order(const StandardTableau& t, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > t.size())
    throw RangeError("minor order " + std::to_string(k) + " out of range 0.." +
                     std::to_string(t.size()));
}

}  // namespace

Deck minor_set(const StandardTableau& t, int k) {
  check_order(t, k);
  std::vector<StandardTableau> level{t};
  for (int step = 0; step < k; ++step) {
    std::vector<StandardTableau> next;
    for (const auto& s : level)
      for (int m = 1; m <= static_cast<int>(s.size()); ++m) next.push_back(delete_entry(s, m));
    level = make_deck(std::move(next), 0, 0).members;
  }
  return Deck{k, static_cast<int>(t.size()), std::move(level)};
}

DeckMultiset minor_multiset(const StandardTableau& t, int k) {
  check_order(t, k);
  std::map<StandardTableau, std::size_t> level{{t, 1}};
  for (int step = 0; step < k; ++step) {
    std::map<StandardTableau, std::size_t> next;
    for (const auto& [s, count] : level)
      for (int m = 1; m <= static_cast<int>(s.size()); ++m) next[delete_entry(s, m)] += count;
    level = std::move(next);
  }
  DeckMultiset ms{k, static_cast<int>(t.size()), {}};
  ms.cards.assign(level.begin(), level.end());
  return ms;
}

std::size_t intersection_size(const DeckMultiset& a, const DeckMultiset& b) {
  std::size_t common = 0;
  auto i = a.cards.begin(), j = b.cards.begin();
  while (i != a.cards.end() && j != b.cards.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      common += std::min(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return common;
}

bool is_submultiset(const DeckMultiset& sub, const DeckMultiset& super) {
  for (const auto& [t, c] : sub.cards)
    if (super.multiplicity(t) < c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string header(int k, int n, std::size_t size) {
  return "deck k=" + std::to_string(k) + " n=" + std::to_string(n) + " size=" + std::to_string(size) +
         "\n";
}

struct ParsedLine {
  StandardTableau tableau;
  std::size_t multiplicity = 1;
};

struct ParsedDeck {
  bool has_header = false;
  int k = 1;
  int n = 0;
  std::size_t size = 0;
  std::vector<ParsedLine> lines;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int header_field(std::string_view line, std::string_view key) {
  const auto pos = line.find(key);
  if (pos == std::string_view::npos)
    throw ParseError("deck header lacks '" + std::string(key) + "': " + std::string(line));
  auto rest = line.substr(pos + key.size());
  int v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc{} || v < 0)
    throw ParseError("bad value for '" + std::string(key) + "' in deck header");
  return v;
}

ParsedDeck parse_lines(std::string_view text) {
  ParsedDeck out;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool first = true;
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (line.empty()) continue;
    if (first && line.starts_with("deck")) {
      out.has_header = true;
      out.k = header_field(line, "k=");
      out.n = header_field(line, "n=");
      out.size = static_cast<std::size_t>(header_field(line, "size="));
      first = false;
      continue;
    }
    first = false;
    ParsedLine pl;
    if (auto x = line.rfind(" x"); x != std::string_view::npos) {
      auto digits = line.substr(x + 2);
      std::size_t mult = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mult);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || mult == 0)
        throw ParseError("bad multiplicity suffix: " + std::string(line));
      pl.multiplicity = mult;
      line = trim(line.substr(0, x));
    }
    pl.tableau = parse_tableau(line);
    out.lines.push_back(std::move(pl));
  }
  if (out.lines.empty()) throw ParseError("deck has no members");
  if (out.has_header && out.size != out.lines.size())
    throw ParseError("deck header announces " + std::to_string(out.size) + " members, found " +
                     std::to_string(out.lines.size()));
  const auto member_size = out.lines.front().tableau.size();
  for (const auto& l : out.lines)
    if (l.tableau.size() != member_size) throw ParseError("deck members have different sizes");
  if (!out.has_header) out.n = static_cast<int>(member_size) + out.k;
  if (static_cast<std::size_t>(out.n) != member_size + static_cast<std::size_t>(out.k))
    throw ParseError("deck header n - k does not match member size " + std::to_string(member_size));
  return out;
}

}  // namespace

std::string to_string(const Deck& d) {
  std::string s = header(d.k, d.n, d.members.size());
  for (const auto& t : d.members) s += to_string(t) + "\n";
  return s;
}

std::string to_string(const DeckMultiset& d) {
  std::string s = header(d.k, d.n, d.cards.size());
  for (const auto& [t, c] : d.cards) s += to_string(t) + " x" + std::to_string(c) + "\n";
  return s;
}

Deck parse_deck(std::string_view text) {
  auto parsed = parse_lines(text);
  std::vector<StandardTableau> members;
  for (auto& l : parsed.lines) members.push_back(std::move(l.tableau));
  return make_deck(std::move(members), parsed.k, parsed.n);
}

DeckMultiset parse_deck_multiset(std::string_view text) {
  auto parsed = parse_lines(text);
  std::vector<StandardTableau> cards;
  for (auto& l : parsed.lines)
    for (std::size_t i = 0; i < l.multiplicity; ++i) cards.push_back(l.tableau);
  return make_multiset(std::move(cards), parsed.k, parsed.n);
}

}  // namespace syt
