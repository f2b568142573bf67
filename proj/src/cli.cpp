#include "syt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "syt/census.hpp"
#include "syt/jeu_de_taquin.hpp"
#include "syt/reconstruction.hpp"
#include "syt/structured.hpp"
#include "syt/tableau.hpp"

namespace syt::cli {

namespace {

struct Options {
  // enumerate
  std::optional<int> n;
  std::string shape;
  // delete / minors
  std::string tableau;
  int entry = 0;
  bool trace = false;
  int k = 1;
  bool multiset = false;
  bool json = false;
  // reconstruct
  bool expect_unique = false;
  // census
  unsigned jobs = 1;
  // hbound
  bool exact = false;
  bool allow_large = false;
  // verify
  std::string suite;
  int max_n = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::size_t census_cap() {
  CensusOptions defaults;
  const char* raw = std::getenv(kCapVariable);
  if (!raw || !*raw) return defaults.cap;
  char* end = nullptr;
  const auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string(kCapVariable) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

int do_enumerate(const Options& o, std::ostream& out) {
  std::vector<StandardTableau> all;
  if (!o.shape.empty()) {
    const Partition shape = parse_partition(o.shape);
    if (o.n && *o.n != shape.weight())
      throw UsageError("--shape " + to_string(shape) + " does not have --n " + std::to_string(*o.n) + " cells");
    all = enumerate_syt(shape);
  } else if (o.n) {
    if (*o.n < 0) throw UsageError("--n must be non-negative");
    all = enumerate_syt_all(*o.n);
  } else {
    throw UsageError("enumerate needs --n or --shape");
  }
  for (const auto& t : all) out << (o.json ? to_json(t).dump() : to_string(t)) << '\n';
  return kOk;
}

int do_delete(const Options& o, std::ostream& out) {
  const auto t = parse_tableau(o.tableau);
  const auto [result, path] = delete_entry_traced(t, o.entry);
  out << to_string(result) << '\n';
  if (o.trace) {
    out << "path";
    for (const auto& c : path.cells) out << ' ' << to_string(c);
    out << '\n';
  }
  return kOk;
}

int do_minors(const Options& o, std::ostream& out) {
  const auto t = parse_tableau(o.tableau);
  if (o.multiset) {
    const auto ms = minor_multiset(t, o.k);
    out << (o.json ? to_json(ms).dump() + "\n" : to_string(ms));
  } else {
    const auto d = minor_set(t, o.k);
    out << (o.json ? to_json(d).dump() + "\n" : to_string(d));
  }
  return kOk;
}

int do_reconstruct(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto outcome = o.multiset ? reconstruct_from_multiset(parse_deck_multiset(text))
                                  : reconstruct_from_set(parse_deck(text));
  out << to_string(outcome);
  if (o.expect_unique && !outcome.unique()) {
    err << "error: deck does not determine a unique tableau\n";
    return kDomainError;
  }
  return kOk;
}

int do_census(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("census needs --n");
  CensusOptions opts;
  opts.cap = census_cap();
  opts.jobs = o.jobs;
  const auto rep = census(*o.n, o.k, o.multiset ? DeckMode::Multiset : DeckMode::Set, opts);
  out << (o.json ? to_json(rep).dump() + "\n" : to_string(rep));
  return kOk;
}

int do_hbound(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("hbound needs --n");
  auto rep = verify_proposition(*o.n);
  std::vector<std::vector<StandardTableau>> collisions;
  if (o.exact) {
    if (*o.n >= 5) {
      rep.exact = compute_H1_exact(*o.n, o.allow_large);
    } else {
      // Not every tableau is determined by its full multiset here, so there
      // is no number to report; list the pairs that cannot be told apart.
      collisions = census(*o.n, 1, DeckMode::Multiset).classes;
    }
  }
  out << to_string(rep);
  for (const auto& c : collisions) {
    out << "collision";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " | " : " ") << to_string(c[i]);
    out << '\n';
  }
  for (const auto& f : rep.failures) out << "failure " << f << '\n';
  return rep.passed() ? kOk : kDomainError;
}

int do_verify(const Options& o, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("--suite: unknown suite '" + o.suite + "'");
  const auto r = run_suite(o.suite, o.max_n);
  out << "suite " << r.name << " max-n=" << r.max_n << " checked=" << r.checked
      << " violations=" << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "violation " << v << '\n';
  return r.passed() ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard Young tableaux: minors, reconstruction and deck census", "syt"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "List standard tableaux");
  enumerate->add_option("--n", o.n, "Number of entries");
  enumerate->add_option("--shape", o.shape, "Comma-separated partition, e.g. 4,3,1,1");
  enumerate->add_flag("--json", o.json, "Emit one JSON record per line");

  auto* del = app.add_subcommand("delete", "Delete an entry by jeu de taquin");
  del->add_option("--tableau", o.tableau, "Tableau, rows separated by '/'")->required();
  del->add_option("--entry", o.entry, "Entry to delete")->required();
  del->add_flag("--trace", o.trace, "Also print the slide path");

  auto* minors = app.add_subcommand("minors", "Print the deck of k-minors");
  minors->add_option("--tableau", o.tableau, "Tableau, rows separated by '/'")->required();
  minors->add_option("--k", o.k, "Minor order")->capture_default_str();
  minors->add_flag("--multiset", o.multiset, "Count multiplicities");
  minors->add_flag("--json", o.json, "Emit JSON");

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a tableau from a deck on standard input");
  reconstruct->add_flag("--multiset", o.multiset, "Read a deck with multiplicities");
  reconstruct->add_flag("--expect-unique", o.expect_unique, "Exit 1 unless the answer is unique");

  auto* cen = app.add_subcommand("census", "Group all tableaux of a size by deck");
  cen->add_option("--n", o.n, "Number of entries")->required();
  cen->add_option("--k", o.k, "Minor order")->capture_default_str();
  cen->add_flag("--multiset", o.multiset, "Compare multisets instead of sets");
  cen->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cen->add_flag("--json", o.json, "Emit JSON");

  auto* hbound = app.add_subcommand("hbound", "Check the common-minor lower bound construction");
  hbound->add_option("--n", o.n, "Number of entries")->required();
  hbound->add_flag("--exact", o.exact, "Also compute the exact value by pairwise search");
  hbound->add_flag("--allow-large", o.allow_large, "Permit the exact search beyond n = 9");

  auto* verify = app.add_subcommand("verify", "Run a property suite exhaustively");
  verify->add_option("--suite", o.suite, "Suite name")->required();
  verify->add_option("--max-n", o.max_n, "Largest size checked")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*enumerate) return do_enumerate(o, out);
    if (*del) return do_delete(o, out);
    if (*minors) return do_minors(o, out);
    if (*reconstruct) return do_reconstruct(o, in, out, err);
    if (*cen) return do_census(o, out);
    if (*hbound) return do_hbound(o, out);
    if (*verify) return do_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace syt::cli
