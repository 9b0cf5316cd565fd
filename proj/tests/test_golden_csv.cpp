#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "neel/csv.hpp"
#include "neel/golden.hpp"

using namespace neel;

namespace {

std::string temp_path(const char* stem) {
  std::string p = "neel_test_";
  p += stem;
  p += ".tmp";
  return p;
}

struct FileGuard {
  std::string path;
  ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("golden store records once and then regresses") {
  const std::string path = temp_path("golden");
  FileGuard guard{path};
  std::remove(path.c_str());
  {
    GoldenStore store(path);
    CHECK_FALSE(store.has("tn_ratio", "u=0.4;tz=0"));
    GoldenEntry e = store.record_or_get("tn_ratio", "u=0.4;tz=0", 1.5e-8, 2e-8);
    CHECK(e.value == 1.5e-8);
  }
  {
    GoldenStore store(path);
    CHECK(store.has("tn_ratio", "u=0.4;tz=0"));
    // a second record call must return the frozen entry, not overwrite
    GoldenEntry e = store.record_or_get("tn_ratio", "u=0.4;tz=0", 99.0, 99.0);
    CHECK(e.value == doctest::Approx(1.5e-8).epsilon(1e-12));
    CHECK(e.tolerance == doctest::Approx(2e-8).epsilon(1e-12));
    CHECK_THROWS_AS(store.get("absent", ""), std::runtime_error);
  }
}

TEST_CASE("golden parameters may contain commas") {
  const std::string path = temp_path("golden_params");
  FileGuard guard{path};
  std::remove(path.c_str());
  {
    GoldenStore store(path);
    store.record_or_get("grid", "u=2,1,0.6,0.4", 0.25, 0.5);
  }
  GoldenStore store(path);
  GoldenEntry e = store.get("grid", "u=2,1,0.6,0.4");
  CHECK(e.value == doctest::Approx(0.25));
}

TEST_CASE("corrupted golden file is a named failure") {
  const std::string path = temp_path("golden_bad");
  FileGuard guard{path};
  {
    std::ofstream out(path);
    out << "tn_ratio,u=0.4,not_a_number,1e-8\n";
  }
  bool threw = false;
  try {
    GoldenStore store(path);
  } catch (const std::runtime_error& e) {
    threw = true;
    const std::string what = e.what();
    CHECK(what.find(path) != std::string::npos);
    CHECK(what.find("line 1") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("csv round trip is format-stable") {
  CsvTable t;
  t.header = {"x", "y", "status"};
  t.rows.push_back({format_sci12(0.1), format_sci12(-3.25e-17), "ok"});
  t.rows.push_back({format_sci12(1.0 / 3.0), format_sci12(4.0), "ok"});
  std::ostringstream out;
  write_csv(out, t);
  const std::string text = out.str();
  // LF endings only
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  CsvTable back = read_csv(in);
  REQUIRE(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(back.rows[i] == t.rows[i]);
  }
  // numeric cells reparse to values that reformat identically
  for (const auto& row : back.rows) {
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      CHECK(format_sci12(std::stod(row[c])) == row[c]);
    }
  }
}

TEST_CASE("csv format and shape violations") {
  CHECK(format_sci12(1.76387698886204569) == "1.76387698886e+00");
  CHECK(format_sci12(0.0457568743359) == "4.57568743359e-02");
  CsvTable ragged;
  ragged.header = {"a", "b"};
  ragged.rows.push_back({"1"});
  std::ostringstream out;
  CHECK_THROWS_AS(write_csv(out, ragged), std::runtime_error);
  CsvTable badcell;
  badcell.header = {"a,b"};
  CHECK_THROWS_AS(write_csv(out, badcell), std::runtime_error);
  std::istringstream in("a,b\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(in), std::runtime_error);
}
