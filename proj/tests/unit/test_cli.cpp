#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shimura::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

bool ends_with_line(const std::string& s, const std::string& line) {
  const auto ls = lines(s);
  return !ls.empty() && ls.back() == line;
}

}  // namespace

TEST_CASE("golden exit codes") {
  const std::pair<std::vector<std::string>, int> cases[] = {
      {{"bernoulli", "--d", "6"}, 0},
      {{"bernoulli", "--d", "4"}, 2},
      {{"bernoulli", "--d", "abc"}, 2},
      {{"bernoulli"}, 2},
      {{"search", "--e", "24"}, 0},
      {{"search", "--format", "xml"}, 2},
      {{"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11"}, 0},
      {{"surface", "--d", "17", "--ram", "3"}, 2},
      {{"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:2"}, 2},
      {{"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:12"}, 2},
      {{"surface", "--d", "33", "--ram", "2", "--subgroup", "cusp:11"}, 2},
      {{"quotient", "--e", "24", "--g", "5"}, 0},
      {{"quotient", "--e", "24", "--g", "4"}, 2},
      {{"quotient", "--e", "36"}, 0},
      {{"curve", "--ram", "2,5", "--index", "12"}, 0},
      {{"curve", "--ram", "2,5,7", "--index", "1"}, 2},
      {{"quartic", "--poly", "1,0,0,0,1", "--subfield", "2"}, 2},
      {{"quartic", "--poly", "1,-1,-3,1", "--subfield", "5"}, 2},
      {{"frobnicate"}, 2},
      {{"--help"}, 0},
  };
  for (const auto& [args, code] : cases) {
    const auto r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CHECK_MESSAGE(r.code == code, joined << "-> " << r.code << " " << r.err);
    if (code == 2) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("worked reports") {
  CHECK(run({"bernoulli", "--d", "6"}).out == "12\n");
  CHECK(run({"bernoulli", "--d", "5"}).out == "4/5\n");
  CHECK(run({"quotient", "--e", "24", "--g", "5"}).out == "K² = 4, c₂ = 8, p_g = 0, q = 0, general type: yes\n");
  const auto s = run({"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11"});
  CHECK(ends_with_line(s.out, "ADMISSIBLE of type 24; p_g(X) = 5"));
  CHECK(s.out.find("π₁(X/σ) is finite") != std::string::npos);
  CHECK(s.out.find("  g = 5: K² = 4") != std::string::npos);
  const auto neg = run({"surface", "--d", "17", "--ram", "2", "--subgroup", "borel:17"});
  CHECK(neg.code == 0);
  CHECK(lines(neg.out).back().rfind("NOT ADMISSIBLE", 0) == 0);
  const auto c = run({"curve", "--ram", "2,5", "--index", "12"});
  CHECK(c.out.find("genus = 5") != std::string::npos);
  const auto bad = run({"surface", "--d", "17", "--ram", "3"});
  CHECK(bad.err.find("inert") != std::string::npos);
}

TEST_CASE("quartic report") {
  const auto r = run({"quartic", "--poly", "1,-1,-3,1,1", "--subfield", "5", "--subgroup", "unipotent:29",
                      "--infinite-conjugate-assert"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_k = 725") != std::string::npos);
  CHECK(r.out.find("index = 420") != std::string::npos);
  CHECK(ends_with_line(r.out, "ADMISSIBLE of type 28; p_g(X) = 6"));
  const auto un = run({"quartic", "--poly", "1,-1,-3,1,1", "--subfield", "5", "--subgroup", "unipotent:29"});
  CHECK(un.code == 0);
  CHECK(lines(un.out).back().find("no involution") != std::string::npos);
}

TEST_CASE("CSV output round-trips") {
  CHECK(shimura::cli::csv_escape("a,b") == "\"a,b\"");
  CHECK(shimura::cli::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(shimura::cli::csv_split("\"a,b\",c,\"x\"\"y\"") == std::vector<std::string>{"a,b", "c", "x\"y"});
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "--format", "csv", "--all"},
           {"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11", "--format", "csv"},
           {"quotient", "--e", "36", "--format", "csv"},
           {"curve", "--ram", "2,5", "--index", "12", "--format", "csv"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    std::string again;
    std::size_t width = 0;
    for (const auto& l : lines(r.out)) {
      const auto fields = shimura::cli::csv_split(l);
      if (!width) width = fields.size();
      CHECK(fields.size() == width);
      for (std::size_t i = 0; i < fields.size(); ++i) again += (i ? "," : "") + shimura::cli::csv_escape(fields[i]);
      again += "\n";
    }
    CHECK(again == r.out);
  }
}

TEST_CASE("text and CSV carry the same facts") {
  const auto csv = lines(run({"search", "--format", "csv"}).out);
  const auto text = lines(run({"search"}).out);
  REQUIRE(csv.size() >= 2);
  CHECK(csv[0] == "D,d,B2_num,B2_den,e,ram_primes,index,status,reason");
  // Header and summary line bracket one text line per CSV row.
  CHECK(text.size() == csv.size() + 1);
  int matched = 0;
  for (std::size_t i = 1; i < csv.size(); ++i) {
    const auto f = shimura::cli::csv_split(csv[i]);
    REQUIRE(f.size() == 9);
    if (f[8].rfind("matched", 0) == 0) ++matched;
    const std::string& t = text[i];
    CHECK(t.find(" " + f[0] + " ") != std::string::npos);
    CHECK(t.find(f[8]) != std::string::npos);
  }
  CHECK(matched == 14);
  CHECK(text.back().rfind("matched 14, missing 0", 0) == 0);

  const auto sc = lines(run({"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11", "--format", "csv"}).out);
  const auto st = run({"surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11"}).out;
  REQUIRE(sc.size() == 2);
  const auto h = shimura::cli::csv_split(sc[0]);
  const auto v = shimura::cli::csv_split(sc[1]);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == "index") CHECK(st.find("index = " + v[i] + "\n") != std::string::npos);
    if (h[i] == "euler") CHECK(st.find("euler = " + v[i]) != std::string::npos);
    if (h[i] == "pg") CHECK(st.find("pg = " + v[i] + "\n") != std::string::npos);
    if (h[i] == "admissible_type") CHECK(st.find("type " + v[i]) != std::string::npos);
  }
}
