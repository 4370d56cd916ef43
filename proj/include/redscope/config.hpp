#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redscope/density.hpp"

namespace redscope {

/// A CM field as written in a config: polynomials constant term first.
struct FieldSpec {
  std::string label;
  std::vector<i64> poly;
  std::optional<std::vector<i64>> k0_poly;
  bool galois = false;
  bool equal_degree_rule = false;
  std::optional<std::string> group;

  CmField to_cm_field() const;
  /// Stable text identifying everything that affects scan rows.
  std::string canonical() const;
};

/// zeta5, d4-field, gaussian, pure-cubic, s4-quartic, zeta8.
/// Throws ErrorKind::Config for an unknown name.
FieldSpec builtin_field(std::string_view name);
std::vector<std::string> builtin_field_names();

struct CurveSpec {
  std::string label;
  std::array<i64, 5> a{};
};

struct RunConfig {
  std::vector<FieldSpec> fields;
  std::vector<CurveSpec> curves;
  std::vector<GroupClassTable> groups;  // inline tables, searched before the built-ins
  u64 bound = 1'000'000;
  unsigned workers = 1;
  u64 seed = 0;
  std::filesystem::path output_dir = ".";
  std::optional<std::filesystem::path> cache_dir;

  GroupClassTable resolve_group(std::string_view name) const;
};

/// Comma-separated integers, e.g. "89,0,134,0,1". Throws ErrorKind::Config.
std::vector<i64> parse_int_list(std::string_view text);

/// Either a built-in field name or a path to a field file.
FieldSpec load_field(std::string_view name_or_path);
FieldSpec load_field_file(const std::filesystem::path& path);
GroupClassTable load_group_file(const std::filesystem::path& path);
/// Built-in name or path to a group file.
GroupClassTable load_group(std::string_view name_or_path);

/// Throws ErrorKind::Config on malformed files, bound < 2, workers < 1 or
/// an unresolvable group name.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::string_view yaml_text, const std::filesystem::path& base_dir = ".");

}  // namespace redscope
