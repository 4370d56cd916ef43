#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "redscope/errors.hpp"
#include "redscope/scan_io.hpp"

using namespace redscope;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Domain;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("redscope-scan-" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<ScanRow> reread(const std::vector<ScanRow>& rows) {
  std::stringstream ss;
  write_scan_csv(ss, rows);
  return read_scan_csv(ss);
}

}  // namespace

TEST_CASE("csv layout") {
  const auto rows = scan_rows(builtin_field("d4-field").to_cm_field(), 2, 20);
  std::stringstream ss;
  write_scan_csv(ss, rows);
  std::string header, first, second;
  std::getline(ss, header);
  std::getline(ss, first);
  std::getline(ss, second);
  CHECK(header == "p,degrees,split_class,inert_count,reduction_type");
  CHECK(first == "2,,RamifiedOrBad,,");
  CHECK(second.rfind("3,", 0) == 0);
}

TEST_CASE("csv and summary round-trip") {
  for (const char* name : {"zeta5", "d4-field", "gaussian", "s4-quartic"}) {
    const auto result = empirical_scan(builtin_field(name).to_cm_field(), 30'000, 2);
    const auto back = reread(result.rows);
    CHECK(back == result.rows);
    CHECK(summary_json(summarize(back, 30'000)) == summary_json(result.report));
  }
}

TEST_CASE("malformed csv") {
  auto parse = [](std::string text) {
    std::stringstream ss(text);
    return read_scan_csv(ss);
  };
  const std::string h = "p,degrees,split_class,inert_count,reduction_type\n";
  CHECK(kind_of([&] { parse(""); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse("p,degrees\n"); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse(h + "7,1-1,CompletelySplit,0\n"); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse(h + "x,1-1,CompletelySplit,0,Ordinary\n"); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse(h + "7,1-1,Split,0,Ordinary\n"); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse(h + "7,1-1,CompletelySplit,0,\n"); }) == ErrorKind::Config);
  CHECK(kind_of([&] { parse(h + "7,1-1,CompletelySplit,0,Ordinary\n5,1-1,CompletelySplit,0,Ordinary\n"); }) ==
        ErrorKind::Config);
  CHECK(parse(h + "7,1-1,CompletelySplit,,Ordinary\r\n").size() == 1);
}

TEST_CASE("decimal rendering") {
  CHECK(decimal(Rational(1, 4)) == "0.250000");
  CHECK(decimal(Rational(1, 6)) == "0.166667");
  CHECK(decimal(Rational(2, 3)) == "0.666667");
  CHECK(decimal(Rational(1)) == "1.000000");
  CHECK(decimal(Rational(0)) == "0.000000");
  CHECK(decimal(Rational(-1, 8)) == "-0.125000");
}

TEST_CASE("summary document") {
  // primes below 100 that are 1 mod 5: 11 31 41 61 71
  const auto report = empirical_scan(builtin_field("zeta5").to_cm_field(), 100).report;
  const auto doc = summary_json(report);
  CHECK(doc.rfind("{\n  \"bound\": 100,\n  \"total\": 24,", 0) == 0);
  CHECK(doc.find("\"CompletelySplit\": {\n      \"count\": 5,\n      \"fraction\": \"5/24\"") != std::string::npos);
  CHECK(doc.find("\"excluded\": [\n    5\n  ]") != std::string::npos);
  CHECK(doc.back() == '\n');
}

TEST_CASE("scan cache extends instead of recomputing") {
  const auto dir = scratch("cache");
  ScanCache cache(dir);
  const auto spec = builtin_field("d4-field");
  const auto cm = spec.to_cm_field();
  CHECK_FALSE(cache.cached_bound(spec).has_value());

  CHECK(cache.rows(spec, 5'000, 1) == scan_rows(cm, 2, 5'000));
  CHECK(cache.cached_bound(spec) == std::optional<u64>(5'000));

  CHECK(cache.rows(spec, 20'000, 2) == scan_rows(cm, 2, 20'000));
  CHECK(cache.cached_bound(spec) == std::optional<u64>(20'000));

  // a smaller bound is served from the entry without shrinking it
  CHECK(cache.rows(spec, 1'000, 1) == scan_rows(cm, 2, 1'000));
  CHECK(cache.cached_bound(spec) == std::optional<u64>(20'000));

  // other fields get their own entry
  const auto other = builtin_field("zeta5");
  cache.rows(other, 3'000, 1);
  CHECK(cache.cached_bound(other) == std::optional<u64>(3'000));
  CHECK(cache.cached_bound(spec) == std::optional<u64>(20'000));

  // a damaged entry is rebuilt
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path());
    std::string first;
    std::getline(in, first);
    in.close();
    if (first.find(spec.canonical()) != std::string::npos) std::ofstream(e.path()) << first << "\ngarbage\n";
  }
  CHECK(cache.rows(spec, 4'000, 1) == scan_rows(cm, 2, 4'000));
  CHECK(cache.cached_bound(spec) == std::optional<u64>(4'000));
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  ::setenv("REDUCTION_SCOPE_CACHE", "/tmp/somewhere", 1);
  CHECK(ScanCache::default_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv("REDUCTION_SCOPE_CACHE");
  CHECK(ScanCache::default_dir() != fs::path("/tmp/somewhere"));
}
