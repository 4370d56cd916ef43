#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "redscope/config.hpp"
#include "redscope/errors.hpp"

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
  auto dir = fs::temp_directory_path() / ("redscope-config-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("integer lists") {
  CHECK(parse_int_list("89,0,134,0,1") == std::vector<i64>{89, 0, 134, 0, 1});
  CHECK(parse_int_list(" -1, +1 ,1") == std::vector<i64>{-1, 1, 1});
  CHECK(kind_of([] { parse_int_list("1,,2"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_int_list("1.5"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_int_list(""); }) == ErrorKind::Config);
}

TEST_CASE("built-in fields") {
  for (const auto& name : builtin_field_names()) {
    auto f = builtin_field(name);
    CHECK(f.label == name);
    REQUIRE(f.group.has_value());
    auto cm = f.to_cm_field();
    CHECK(builtin_group(*f.group).degree_n() == cm.field.degree());
  }
  CHECK(builtin_field("zeta5").canonical() != builtin_field("zeta8").canonical());
  CHECK(kind_of([] { builtin_field("zeta7"); }) == ErrorKind::Config);
}

TEST_CASE("run config parsing") {
  const auto dir = scratch("run");
  write(dir / "mine.yaml", "label: mine\npoly: [5, 0, 1]\ngalois: true\ngroup: C2\n");
  const std::string text = R"(
bound: 5000
workers: 3
seed: 42
output:
  dir: out
groups:
  - name: C2b
    degree: 2
    order: 2
    classes:
      - {size: 1, cycle_type: [1, 1]}
      - {size: 1, cycle_type: "2"}
fields:
  - zeta5
  - builtin: d4-field
  - file: mine.yaml
  - label: q-sqrt-m3
    poly: "1,1,1"
    galois: true
    group: C2b
    rules: [equal-degree]
curves:
  - {label: 37a1, a: [0, 0, 1, -1, 0]}
  - {a: "0,0,0,-1,0"}
)";
  RunConfig cfg = parse_run_config(text, dir);
  CHECK(cfg.bound == 5000);
  CHECK(cfg.workers == 3);
  CHECK(cfg.seed == 42);
  CHECK(cfg.output_dir == dir / "out");
  REQUIRE(cfg.fields.size() == 4);
  CHECK(cfg.fields[0].label == "zeta5");
  CHECK(cfg.fields[1].k0_poly == std::vector<i64>{89, 134, 1});
  CHECK(cfg.fields[2].poly == std::vector<i64>{5, 0, 1});
  CHECK(cfg.fields[3].equal_degree_rule);
  REQUIRE(cfg.curves.size() == 2);
  CHECK(cfg.curves[0].label == "37a1");
  CHECK(cfg.curves[1].a == std::array<i64, 5>{0, 0, 0, -1, 0});
  CHECK(gtr_density(cfg.resolve_group("C2b")) == Rational(1, 2));
  CHECK(cfg.resolve_group("D4").order() == 8);

  const auto file = dir / "run.yaml";
  write(file, text);
  CHECK(load_run_config(file).fields.size() == 4);
}

TEST_CASE("run config errors") {
  auto err = [](const std::string& text) { return kind_of([&] { parse_run_config(text); }); };
  CHECK(err("bound: 1\n") == ErrorKind::Config);
  CHECK(err("bound: 1.5e6\n") == ErrorKind::Config);
  CHECK(err("workers: 0\n") == ErrorKind::Config);
  CHECK(err("bogus: 1\n") == ErrorKind::Config);
  CHECK(err("fields: [{poly: [1,0,1], group: Q8}]\n") == ErrorKind::Config);
  CHECK(err("fields: [{poly: [1,0,2]}]\n") == ErrorKind::Config);  // not monic
  CHECK(err("fields: [{poly: [1,2,1]}]\n") == ErrorKind::Config);  // zero discriminant
  CHECK(err("fields: [{poly: [1,0,1], rules: [equal-degree]}]\n") == ErrorKind::Config);
  CHECK(err("fields: [nowhere]\n") == ErrorKind::Config);
  CHECK(err("curves: [{a: [0,0,0,0,0]}]\n") == ErrorKind::Config);
  CHECK(err("curves: [{a: [0,0,0,1]}]\n") == ErrorKind::Config);
  CHECK(err("groups: [{name: X, degree: 2, order: 3, classes: [{size: 1, cycle_type: [1,1]}]}]\n") == ErrorKind::Config);
  CHECK(err("bound: [unclosed\n") == ErrorKind::Config);
  CHECK(kind_of([] { load_run_config("/nonexistent/run.yaml"); }) == ErrorKind::Config);
}

TEST_CASE("group files") {
  const auto dir = scratch("group");
  write(dir / "s3.yaml",
        "name: S3\ndegree: 3\norder: 6\nclasses:\n"
        "  - {size: 1, cycle_type: [1,1,1]}\n  - {size: 3, cycle_type: [2,1]}\n  - {size: 2, cycle_type: [3]}\n");
  auto t = load_group((dir / "s3.yaml").string());
  CHECK(gtr_density(t) == gtr_density(builtin_group("S3")));
  CHECK(load_group("D4").name() == "D4");
  CHECK(kind_of([] { load_group("Q8"); }) == ErrorKind::Config);
}

TEST_CASE("built-in field and group pairs agree with Chebotarev at 10^6") {
  for (const auto& name : builtin_field_names()) {
    const auto spec = builtin_field(name);
    const auto table = builtin_group(*spec.group);
    const auto report = empirical_scan(spec.to_cm_field(), 1'000'000).report;
    const double n = static_cast<double>(report.total);
    const double tol = 3.0 / std::sqrt(n);
    const double split = static_cast<double>(report.count(SplitClass::CompletelySplit)) / n;
    const double almost = static_cast<double>(report.count(SplitClass::AlmostNotCompletely)) / n;
    INFO(name);
    CHECK(std::abs(split - boost::rational_cast<double>(ordinary_density(table))) < tol);
    CHECK(std::abs(split + almost - boost::rational_cast<double>(gtr_density(table))) < tol);
    if (spec.galois) CHECK(report.count(SplitClass::AlmostNotCompletely) == 0);
  }
}
