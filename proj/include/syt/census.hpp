#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syt/jeu_de_taquin.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// Raised when a brute-force job would exceed its configured size cap.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

enum class DeckMode { Set, Multiset };

std::string_view to_string(DeckMode mode);

struct CensusOptions {
  /// Largest number of tableaux a census may enumerate.
  std::size_t cap = 1'000'000;
  /// Worker threads. Output does not depend on this.
  unsigned jobs = 1;
};

/// Exhaustive grouping of all tableaux with n entries by their k-minor deck.
struct CensusReport {
  int n = 0;
  int k = 1;
  DeckMode mode = DeckMode::Set;
  /// Groups of two or more tableaux sharing a deck. Members are in canonical
  /// order and classes are ordered by their first member.
  std::vector<std::vector<StandardTableau>> classes;
  std::size_t total = 0;
  double elapsed_seconds = 0.0;
};

/// Canonical deck encoding used as the grouping key.
std::string deck_encoding(const StandardTableau& t, int k, DeckMode mode);

/// Requires n >= 1 and 1 <= k <= n; throws ResourceLimit past options.cap.
CensusReport census(int n, int k, DeckMode mode, const CensusOptions& options = {});

/// Header `census n=<n> k=<k> mode=<mode> classes=<c>`, then one block per
/// class: `class <i> size=<s>` followed by its members. The elapsed time is
/// not part of the text so output is byte-stable.
std::string to_string(const CensusReport& report);

/// Cardinality of the intersection of the two 1-minor multisets.
/// Throws RangeError when the sizes differ.
std::size_t common_minor_count(const StandardTableau& a, const StandardTableau& b);

/// Two distinct tableaux with n entries sharing at least floor(n/2)+1
/// 1-minors. With n = 2k (k = n/2):
///   first  = [1..k, k+2..2k] over [k+1]
///   second = [1..k-1, k+1..2k] over [k]
/// and for n = 2k+1 both gain a third row holding 2k+1. Needs n >= 4.
std::pair<StandardTableau, StandardTableau> proposition_pair(int n);

struct HBoundReport {
  int n = 0;
  StandardTableau first;
  StandardTableau second;
  std::size_t common = 0;
  /// floor(n/2) + 1.
  std::size_t claimed = 0;
  std::optional<std::size_t> exact;

  /// The minor shared floor(n/2) times, and the row (n even) or row-plus-cell
  /// (n odd) minor shared once.
  StandardTableau repeated_minor;
  StandardTableau single_minor;
  std::size_t repeated_in_first = 0, repeated_in_second = 0;
  std::size_t single_in_first = 0, single_in_second = 0;

  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

HBoundReport verify_proposition(int n);

/// `hbound n=<n> common=<c> claimed=<b> exact=<v|none>`.
std::string to_string(const HBoundReport& report);

/// Largest number of 1-minors shared by two distinct tableaux with n entries,
/// plus one: the smallest m such that any m cards of a 1-minor multiset
/// determine the tableau. Needs n >= 5; n > 9 throws ResourceLimit unless
/// `allow_large` is set.
std::size_t compute_H1_exact(int n, bool allow_large = false);

struct DifferentialReport {
  int n = 0;
  struct ModeCounts {
    std::size_t unique = 0;
    std::size_t ambiguous = 0;
    std::size_t invalid = 0;
    /// Number of collision classes the census reported.
    std::size_t classes = 0;
  };
  ModeCounts set;
  ModeCounts multiset;
  std::vector<std::string> mismatches;
  bool passed() const noexcept { return mismatches.empty(); }
};

/// Runs both reconstructors on every tableau with n entries and checks each
/// outcome against the census grouping: Unique exactly for singleton classes,
/// Ambiguous candidates equal to the class otherwise.
DifferentialReport differential_check(int n, const CensusOptions& options = {});

struct SuiteResult {
  std::string name;
  int max_n = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named property suite over all tableaux up to max_n entries.
/// Throws RangeError for unknown names.
SuiteResult run_suite(std::string_view name, int max_n);

}  // namespace syt
