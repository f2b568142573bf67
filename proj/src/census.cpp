#include "syt/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "syt/reconstruction.hpp"

namespace syt {

std::string_view to_string(DeckMode mode) { return mode == DeckMode::Set ? "set" : "multiset"; }

std::string deck_encoding(const StandardTableau& t, int k, DeckMode mode) {
  return mode == DeckMode::Set ? to_string(minor_set(t, k)) : to_string(minor_multiset(t, k));
}

CensusReport census(int n, int k, DeckMode mode, const CensusOptions& options) {
  if (n < 1) throw RangeError("census needs n >= 1");
  if (k < 1 || k > n) throw RangeError("census needs 1 <= k <= n (k=" + std::to_string(k) + ")");
  const std::size_t expected = count_syt_all(n);
  if (expected > options.cap)
    throw ResourceLimit("census of " + std::to_string(expected) + " tableaux exceeds the cap of " +
                        std::to_string(options.cap));

  const auto start = std::chrono::steady_clock::now();
  const auto shapes = enumerate_partitions(n);

  // One slot per shape; workers claim shapes through a shared counter and the
  // merge walks the slots in shape order.
  using Keyed = std::vector<std::pair<std::string, StandardTableau>>;
  std::vector<Keyed> slots(shapes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      for (auto& t : enumerate_syt(shapes[i])) {
        auto key = deck_encoding(t, k, mode);
        slots[i].emplace_back(std::move(key), std::move(t));
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(shapes.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Members stay in enumeration order; classes are ordered by first member.
  std::map<std::string, std::size_t> group_of;
  std::vector<std::vector<StandardTableau>> groups;
  CensusReport report{n, k, mode, {}, 0, 0.0};
  for (auto& slot : slots)
    for (auto& [key, t] : slot) {
      auto [it, fresh] = group_of.try_emplace(std::move(key), groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(std::move(t));
      ++report.total;
    }
  for (auto& members : groups)
    if (members.size() >= 2) report.classes.push_back(std::move(members));
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_string(const CensusReport& report) {
  std::string s = "census n=" + std::to_string(report.n) + " k=" + std::to_string(report.k) +
                  " mode=" + std::string(to_string(report.mode)) + " classes=" +
                  std::to_string(report.classes.size()) + "\n";
  if (report.k >= 2 && report.mode == DeckMode::Multiset)
    s += "note multiplicities count ordered deletion sequences\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    s += "class " + std::to_string(i + 1) + " size=" + std::to_string(report.classes[i].size()) + "\n";
    for (const auto& t : report.classes[i]) s += to_string(t) + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Common minors and the lower bound construction

std::size_t common_minor_count(const StandardTableau& a, const StandardTableau& b) {
  if (a.size() != b.size())
    throw RangeError("tableaux have different sizes (" + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()) + ")");
  return intersection_size(minor_multiset(a, 1), minor_multiset(b, 1));
}

namespace {

std::vector<int> iota_except(int from, int to, int skip) {
  std::vector<int> out;
  for (int v = from; v <= to; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

}  // namespace

std::pair<StandardTableau, StandardTableau> proposition_pair(int n) {
  if (n < 4) throw RangeError("the construction needs n >= 4 (n=" + std::to_string(n) + ")");
  const int k = n / 2;
  std::vector<std::vector<int>> first{iota_except(1, 2 * k, k + 1), {k + 1}};
  std::vector<std::vector<int>> second{iota_except(1, 2 * k, k), {k}};
  if (n % 2 == 1) {
    first.push_back({n});
    second.push_back({n});
  }
  return {validate(std::move(first)), validate(std::move(second))};
}

HBoundReport verify_proposition(int n) {
  HBoundReport r;
  r.n = n;
  std::tie(r.first, r.second) = proposition_pair(n);
  const int k = n / 2;
  r.claimed = static_cast<std::size_t>(k) + 1;
  if (r.first == r.second) r.failures.push_back("constructed tableaux coincide");

  const auto ms_first = minor_multiset(r.first, 1);
  const auto ms_second = minor_multiset(r.second, 1);
  r.common = intersection_size(ms_first, ms_second);
  if (r.common < r.claimed)
    r.failures.push_back("only " + std::to_string(r.common) + " common 1-minors, expected at least " +
                         std::to_string(r.claimed));

  std::vector<std::vector<int>> repeated{iota_except(1, 2 * k - 1, k), {k}};
  std::vector<std::vector<int>> single{iota_except(1, 2 * k - 1, 0)};
  if (n % 2 == 1) {
    repeated.push_back({2 * k});
    single.push_back({2 * k});
  }
  r.repeated_minor = validate(std::move(repeated));
  r.single_minor = validate(std::move(single));
  r.repeated_in_first = ms_first.multiplicity(r.repeated_minor);
  r.repeated_in_second = ms_second.multiplicity(r.repeated_minor);
  r.single_in_first = ms_first.multiplicity(r.single_minor);
  r.single_in_second = ms_second.multiplicity(r.single_minor);
  const auto kk = static_cast<std::size_t>(k);
  if (r.repeated_in_first < kk || r.repeated_in_second < kk)
    r.failures.push_back("minor " + to_string(r.repeated_minor) + " appears " +
                         std::to_string(r.repeated_in_first) + " and " + std::to_string(r.repeated_in_second) +
                         " times, expected at least " + std::to_string(k));
  if (r.single_in_first < 1 || r.single_in_second < 1)
    r.failures.push_back("minor " + to_string(r.single_minor) + " is not shared");
  return r;
}

std::string to_string(const HBoundReport& report) {
  return "hbound n=" + std::to_string(report.n) + " common=" + std::to_string(report.common) +
         " claimed=" + std::to_string(report.claimed) +
         " exact=" + (report.exact ? std::to_string(*report.exact) : std::string("none")) + "\n";
}

std::size_t compute_H1_exact(int n, bool allow_large) {
  if (n < 5) throw RangeError("exact H1 is defined here only for n >= 5 (n=" + std::to_string(n) + ")");
  if (n > 9 && !allow_large)
    throw ResourceLimit("exact H1 for n=" + std::to_string(n) + " needs the large-run override");
  const auto all = enumerate_syt_all(n);
  std::vector<DeckMultiset> decks;
  decks.reserve(all.size());
  for (const auto& t : all) decks.push_back(minor_multiset(t, 1));
  std::size_t best = 0;
  for (std::size_t i = 0; i < decks.size(); ++i)
    for (std::size_t j = i + 1; j < decks.size(); ++j) best = std::max(best, intersection_size(decks[i], decks[j]));
  return best + 1;
}

// ---------------------------------------------------------------------------
// Differential check

namespace {

void check_mode(const std::vector<StandardTableau>& all, const CensusReport& rep,
                DifferentialReport::ModeCounts& counts, std::vector<std::string>& mismatches) {
  counts.classes = rep.classes.size();
  std::map<StandardTableau, const std::vector<StandardTableau>*> class_of;
  for (const auto& c : rep.classes)
    for (const auto& t : c) class_of[t] = &c;

  for (const auto& t : all) {
    const auto outcome = rep.mode == DeckMode::Set ? reconstruct_from_set(minor_set(t, 1))
                                                   : reconstruct_from_multiset(minor_multiset(t, 1));
    switch (outcome.kind) {
      case ReconstructionOutcome::Kind::Unique: ++counts.unique; break;
      case ReconstructionOutcome::Kind::Ambiguous: ++counts.ambiguous; break;
      case ReconstructionOutcome::Kind::Invalid: ++counts.invalid; break;
    }
    const std::string where = std::string(to_string(rep.mode)) + " mode, " + to_string(t) + ": ";
    auto it = class_of.find(t);
    if (it == class_of.end()) {
      if (!outcome.unique() || !(outcome.tableau() == t))
        mismatches.push_back(where + "census says unique, reconstruction gave " + to_string(outcome));
    } else if (outcome.kind != ReconstructionOutcome::Kind::Ambiguous || outcome.candidates != *it->second) {
      mismatches.push_back(where + "census class of size " + std::to_string(it->second->size()) +
                           ", reconstruction gave " + to_string(outcome));
    }
  }
}

}  // namespace

DifferentialReport differential_check(int n, const CensusOptions& options) {
  DifferentialReport r;
  r.n = n;
  const auto set_rep = census(n, 1, DeckMode::Set, options);
  const auto ms_rep = census(n, 1, DeckMode::Multiset, options);
  const auto all = enumerate_syt_all(n);
  check_mode(all, set_rep, r.set, r.mismatches);
  check_mode(all, ms_rep, r.multiset, r.mismatches);
  return r;
}

// ---------------------------------------------------------------------------
// Property suites

namespace {

using Suite = void (*)(int max_n, SuiteResult&);

void shape_suite(int max_n, SuiteResult& r) {
  for (int n = 3; n <= max_n; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      ++r.checked;
      try {
        if (auto s = reconstruct_shape(minor_set(t, 1)); s != t.shape())
          r.violations.push_back(to_string(t) + ": shape " + to_string(s));
      } catch (const Error& e) {
        r.violations.push_back(to_string(t) + ": " + e.what());
      }
    }
}

void max_location_suite(int max_n, SuiteResult& r) {
  for (int n = 4; n <= max_n; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      ++r.checked;
      try {
        if (auto c = locate_max(minor_set(t, 1)); c != t.find(n))
          r.violations.push_back(to_string(t) + ": located " + to_string(c));
      } catch (const Error& e) {
        r.violations.push_back(to_string(t) + ": " + e.what());
      }
    }
}

void reduction_suite(int max_n, SuiteResult& r) {
  for (int n = 2; n <= max_n; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      ++r.checked;
      const auto expected = minor_set(delete_entry(t, n), 1);
      if (reduce_deck(minor_set(t, 1)).members != expected.members)
        r.violations.push_back(to_string(t) + ": reduced deck differs from the deck of T - n");
      if (delete_entry(delete_entry(t, n - 1), n - 1) != delete_entry(delete_entry(t, n), n - 1))
        r.violations.push_back(to_string(t) + ": (T-(n-1))-(n-1) differs from (T-n)-(n-1)");
    }
}

void two_row_table_suite(int, SuiteResult& r) {
  const auto tableaux = enumerate_syt(Partition(std::vector<int>{3, 2}));
  const auto& table = two_row_table();
  if (tableaux.size() != table.size()) r.violations.push_back("shape (3,2) does not have five tableaux");
  for (const auto& entry : table) {
    ++r.checked;
    if (std::find(tableaux.begin(), tableaux.end(), entry.tableau) == tableaux.end())
      r.violations.push_back(to_string(entry.tableau) + ": not an enumerated tableau");
    if (minor_set(entry.tableau, 1).members != entry.deck.members)
      r.violations.push_back(to_string(entry.tableau) + ": tabulated deck differs from the computed one");
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table[i].deck == table[j].deck)
        r.violations.push_back("decks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  for (const auto& shape : {Partition(std::vector<int>{3, 2}), Partition(std::vector<int>{2, 2, 1})})
    for (const auto& t : enumerate_syt(shape)) {
      ++r.checked;
      try {
        if (reconstruct_base(minor_set(t, 1), shape) != t)
          r.violations.push_back(to_string(t) + ": base reconstruction gave another tableau");
      } catch (const Error& e) {
        r.violations.push_back(to_string(t) + ": " + e.what());
      }
    }
}

void set_round_trip_suite(int max_n, SuiteResult& r) {
  for (int n = 5; n <= max_n; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      ++r.checked;
      const auto o = reconstruct_from_set(minor_set(t, 1));
      if (!o.unique() || o.tableau() != t || o.method != ReconstructionOutcome::Method::Inductive)
        r.violations.push_back(to_string(t) + ": " + to_string(o));
    }
}

void small_n_suite(int max_n, SuiteResult& r) {
  // Expected (set ambiguous, multiset ambiguous) counts for n = 1..4.
  const std::size_t expected[5][2] = {{0, 0}, {0, 0}, {2, 2}, {2, 0}, {2, 2}};
  for (int n = 1; n <= std::min(4, max_n); ++n) {
    const auto d = differential_check(n);
    r.checked += d.set.unique + d.set.ambiguous + d.set.invalid;
    for (const auto& m : d.mismatches) r.violations.push_back(m);
    if (d.set.ambiguous != expected[n][0] || d.multiset.ambiguous != expected[n][1])
      r.violations.push_back("n=" + std::to_string(n) + ": " + std::to_string(d.set.ambiguous) + " set / " +
                             std::to_string(d.multiset.ambiguous) + " multiset ambiguous tableaux");
  }
  if (max_n >= 4) {
    const auto rep = census(4, 1, DeckMode::Multiset);
    const std::vector<StandardTableau> square{parse_tableau("1 2 / 3 4"), parse_tableau("1 3 / 2 4")};
    if (rep.classes.size() != 1 || rep.classes.front() != square)
      r.violations.push_back("n=4 multiset collisions are not exactly the two (2,2) tableaux");
  }
  for (int n = 5; n <= max_n; ++n)
    for (const auto& t : enumerate_syt_all(n)) {
      ++r.checked;
      const auto o = reconstruct_from_multiset(minor_multiset(t, 1));
      if (!o.unique() || o.tableau() != t) r.violations.push_back(to_string(t) + ": " + to_string(o));
    }
}

void proposition_suite(int max_n, SuiteResult& r) {
  for (int n = 4; n <= max_n; ++n) {
    ++r.checked;
    const auto rep = verify_proposition(n);
    for (const auto& f : rep.failures) r.violations.push_back("n=" + std::to_string(n) + ": " + f);
  }
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"lemma3.1", shape_suite},          {"lemma3.2", max_location_suite},
      {"lemma3.3", reduction_suite},      {"lemma3.6", two_row_table_suite},
      {"theorem3.7", set_round_trip_suite}, {"section4", small_n_suite},
      {"proposition5", proposition_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, int max_n) {
  for (const auto& [suite_name, fn] : suites()) {
    if (suite_name != name) continue;
    SuiteResult r{suite_name, max_n, 0, {}};
    fn(max_n, r);
    return r;
  }
  throw RangeError("unknown suite '" + std::string(name) + "'");
}

}  // namespace syt
