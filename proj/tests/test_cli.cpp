#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "syt/cli.hpp"
#include "syt/tableau.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = syt::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli enumerate") {
  auto r = run({"enumerate", "--n", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 2 3\n1 2 / 3\n1 3 / 2\n1 / 2 / 3\n");
  r = run({"enumerate", "--shape", "2,2"});
  CHECK(r.out == "1 2 / 3 4\n1 3 / 2 4\n");
  r = run({"enumerate", "--shape", "2,1", "--json"});
  CHECK(r.out == "{\"rows\":[[1,2],[3]],\"shape\":[2,1]}\n{\"rows\":[[1,3],[2]],\"shape\":[2,1]}\n");
  CHECK(run({"enumerate", "--n", "4", "--shape", "2,1"}).status == 2);
  CHECK(run({"enumerate"}).status == 2);
  CHECK(run({"enumerate", "--shape", "1,2"}).status == 1);
}

TEST_CASE("cli delete") {
  auto r = run({"delete", "--tableau", "1 2 3 4", "--entry", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 2 3\n");
  r = run({"delete", "--tableau", "1 2 7 8 / 3 5 9 / 4 / 6", "--entry", "1", "--trace"});
  CHECK(r.out == "1 4 6 7 / 2 8 / 3 / 5\npath (1,1) (1,2) (2,2) (2,3)\n");
  r = run({"delete", "--tableau", "1 2", "--entry", "5"});
  CHECK(r.status == 1);
  CHECK(r.err.find("out of range") != std::string::npos);
  r = run({"delete", "--tableau", "1 3 / 2 2", "--entry", "1"});
  CHECK(r.status == 1);
  CHECK(r.err.find("repeated") != std::string::npos);
  r = run({"delete", "--entry", "1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--tableau") != std::string::npos);
}

TEST_CASE("cli minors") {
  auto r = run({"minors", "--tableau", "1 2 3 / 4 5"});
  CHECK(r.status == 0);
  CHECK(r.out == "deck k=1 n=5 size=2\n1 2 / 3 4\n1 2 3 / 4\n");
  r = run({"minors", "--tableau", "1 2 / 3 4", "--multiset"});
  CHECK(r.out == "deck k=1 n=4 size=2\n1 2 / 3 x2\n1 3 / 2 x2\n");
  r = run({"minors", "--tableau", "1 2 / 3 4", "--k", "2"});
  CHECK(r.out == "deck k=2 n=4 size=2\n1 / 2\n1 2\n");
  CHECK(run({"minors", "--tableau", "1 2", "--k", "3"}).status == 1);
  CHECK(run({"minors", "--tableau", "1 2", "--k", "x"}).status == 2);
}

TEST_CASE("cli reconstruct") {
  auto deck = run({"minors", "--tableau", "1 3 5 / 2 4"}).out;
  auto r = run({"reconstruct"}, deck);
  CHECK(r.status == 0);
  CHECK(r.out == "unique 1 3 5 / 2 4\n");

  r = run({"reconstruct"}, "1 2\n1 / 2\n");
  CHECK(r.status == 0);
  CHECK(r.out == "ambiguous 2\n1 2 / 3\n1 3 / 2\n");
  r = run({"reconstruct", "--expect-unique"}, "1 2\n1 / 2\n");
  CHECK(r.status == 1);

  r = run({"reconstruct", "--multiset"}, "1 / 2 x2\n1 2 x1\n");
  CHECK(r.out == "unique 1 2 / 3\n");
  r = run({"reconstruct", "--multiset", "--expect-unique"}, run({"minors", "--tableau", "1 2 / 3 4", "--multiset"}).out);
  CHECK(r.status == 1);
  CHECK(r.out.starts_with("ambiguous 2\n"));

  r = run({"reconstruct"}, "1 2 / 3 4\n1 2 4 / 3\n");
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("invalid "));
  CHECK(run({"reconstruct", "--expect-unique"}, "1 2 / 3 4\n1 2 4 / 3\n").status == 1);
  CHECK(run({"reconstruct"}, "").status == 1);
}

TEST_CASE("cli reconstruct after minors is the identity for sizes 5 to 10") {
  std::mt19937 rng(7);
  for (int n = 5; n <= 10; ++n) {
    const auto all = syt::enumerate_syt_all(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
      const auto text = syt::to_string(all[pick(rng)]);
      for (bool multiset : {false, true}) {
        std::vector<std::string> m{"minors", "--tableau", text};
        std::vector<std::string> r{"reconstruct", "--expect-unique"};
        if (multiset) {
          m.push_back("--multiset");
          r.push_back("--multiset");
        }
        const auto got = run(r, run(m).out);
        CHECK(got.status == 0);
        CHECK(got.out == "unique " + text + "\n");
      }
    }
  }
}

TEST_CASE("cli census") {
  auto r = run({"census", "--n", "4", "--multiset"});
  CHECK(r.status == 0);
  CHECK(r.out == "census n=4 k=1 mode=multiset classes=1\nclass 1 size=2\n1 2 / 3 4\n1 3 / 2 4\n");
  CHECK(run({"census", "--n", "7", "--jobs", "3"}).out == run({"census", "--n", "7"}).out);
  CHECK(run({"census", "--n", "5", "--json"}).out.starts_with("{"));
  CHECK(run({"census", "--n", "4", "--jobs", "0"}).status == 2);

  ::setenv(syt::cli::kCapVariable, "20", 1);
  r = run({"census", "--n", "5"});
  CHECK(r.status == 1);
  CHECK(r.err.find("cap") != std::string::npos);
  ::setenv(syt::cli::kCapVariable, "junk", 1);
  CHECK(run({"census", "--n", "5"}).status == 2);
  ::unsetenv(syt::cli::kCapVariable);
  CHECK(run({"census", "--n", "5"}).status == 0);
}

TEST_CASE("cli hbound") {
  auto r = run({"hbound", "--n", "6"});
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("hbound n=6 common="));
  CHECK(r.out.ends_with(" claimed=4 exact=none\n"));
  r = run({"hbound", "--n", "6", "--exact"});
  CHECK(r.status == 0);
  CHECK(r.out.find("exact=none") == std::string::npos);
  r = run({"hbound", "--n", "4", "--exact"});
  CHECK(r.out.find("exact=none") != std::string::npos);
  CHECK(r.out.find("collision 1 2 / 3 4 | 1 3 / 2 4") != std::string::npos);
  CHECK(run({"hbound", "--n", "10", "--exact"}).status == 1);
  CHECK(run({"hbound", "--n", "3"}).status == 1);
}

TEST_CASE("cli verify") {
  auto r = run({"verify", "--suite", "theorem3.7", "--max-n", "8"});
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("suite theorem3.7 max-n=8 checked="));
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(run({"verify", "--suite", "bogus", "--max-n", "5"}).status == 2);
  CHECK(run({"verify", "--suite", "lemma3.1"}).status == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
