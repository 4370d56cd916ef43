#include "redscope/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "redscope/elliptic.hpp"
#include "redscope/errors.hpp"

namespace redscope {

namespace {

std::string join(const std::vector<i64>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string where(const YAML::Node& node) {
  const auto mark = node.Mark();
  if (mark.is_null()) return "";
  return " (line " + std::to_string(mark.line + 1) + ")";
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(ErrorKind::Config, "'" + key + "' must be a scalar" + where(node));
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(ErrorKind::Config, "bad value for '" + key + "': " + node.Scalar() + where(node));
  }
}

i64 integer(const YAML::Node& node, const std::string& key) {
  // only plain integers; yaml-cpp would otherwise accept some float spellings
  const std::string text = scalar<std::string>(node, key);
  i64 v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) fail(ErrorKind::Config, "'" + key + "' must be an integer, got " + text + where(node));
  return v;
}

std::vector<i64> int_list(const YAML::Node& node, const std::string& key) {
  if (node.IsScalar()) return parse_int_list(node.Scalar());
  if (!node.IsSequence()) fail(ErrorKind::Config, "'" + key + "' must be a list of integers" + where(node));
  std::vector<i64> out;
  for (const auto& item : node) out.push_back(integer(item, key));
  return out;
}

YAML::Node load_yaml_text(std::string_view text, const std::string& origin) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    fail(ErrorKind::Config, origin + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Config, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void reject_unknown_keys(const YAML::Node& node, std::initializer_list<std::string_view> known, const std::string& what) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    bool ok = false;
    for (auto k : known) ok = ok || k == key;
    if (!ok) fail(ErrorKind::Config, "unknown key '" + key + "' in " + what + where(kv.first));
  }
}

FieldSpec field_from_node(const YAML::Node& node, const std::filesystem::path& base_dir) {
  if (!node.IsMap()) fail(ErrorKind::Config, "field entry must be a map" + where(node));
  if (node["builtin"]) return builtin_field(scalar<std::string>(node["builtin"], "builtin"));
  if (node["file"]) return load_field_file(base_dir / scalar<std::string>(node["file"], "file"));
  reject_unknown_keys(node, {"label", "poly", "k0_poly", "galois", "group", "rules"}, "field");
  if (!node["poly"]) fail(ErrorKind::Config, "field needs 'poly'" + where(node));
  FieldSpec f;
  f.poly = int_list(node["poly"], "poly");
  if (node["label"]) f.label = scalar<std::string>(node["label"], "label");
  if (node["k0_poly"]) f.k0_poly = int_list(node["k0_poly"], "k0_poly");
  if (node["galois"]) f.galois = scalar<bool>(node["galois"], "galois");
  if (node["group"]) f.group = scalar<std::string>(node["group"], "group");
  if (const auto rules = node["rules"]) {
    if (!rules.IsSequence()) fail(ErrorKind::Config, "'rules' must be a list" + where(rules));
    for (const auto& r : rules) {
      const auto name = scalar<std::string>(r, "rules");
      if (name != "equal-degree") fail(ErrorKind::Config, "unknown rule '" + name + "'" + where(r));
      f.equal_degree_rule = true;
    }
  }
  if (f.equal_degree_rule && !f.galois) fail(ErrorKind::Config, "equal-degree rule needs galois: true" + where(node));
  f.to_cm_field();  // validates the polynomials
  return f;
}

GroupClassTable group_from_node(const YAML::Node& node) {
  if (!node.IsMap()) fail(ErrorKind::Config, "group entry must be a map" + where(node));
  reject_unknown_keys(node, {"name", "degree", "order", "classes"}, "group");
  for (const char* k : {"degree", "order", "classes"})
    if (!node[k]) fail(ErrorKind::Config, std::string("group needs '") + k + "'" + where(node));
  std::vector<ConjugacyClass> classes;
  const auto cls = node["classes"];
  if (!cls.IsSequence()) fail(ErrorKind::Config, "'classes' must be a list" + where(cls));
  for (const auto& c : cls) {
    if (!c.IsMap() || !c["size"] || !c["cycle_type"]) fail(ErrorKind::Config, "class needs size and cycle_type" + where(c));
    ConjugacyClass cc;
    cc.size = integer(c["size"], "size");
    for (i64 part : int_list(c["cycle_type"], "cycle_type")) cc.cycle_type.push_back(static_cast<int>(part));
    classes.push_back(std::move(cc));
  }
  const std::string name = node["name"] ? scalar<std::string>(node["name"], "name") : "";
  try {
    return {name, static_cast<int>(integer(node["degree"], "degree")), integer(node["order"], "order"), std::move(classes)};
  } catch (const Error& e) {
    fail(ErrorKind::Config, std::string("group ") + name + ": " + e.what());
  }
}

}  // namespace

CmField FieldSpec::to_cm_field() const {
  try {
    CmField cm{NumberField(poly, label), std::nullopt, galois, equal_degree_rule};
    if (k0_poly) cm.k0.emplace(*k0_poly, label.empty() ? "" : label + "/K0");
    return cm;
  } catch (const Error& e) {
    fail(ErrorKind::Config, "field " + (label.empty() ? join(poly) : label) + ": " + e.what());
  }
}

std::string FieldSpec::canonical() const {
  std::string s = "poly=" + join(poly);
  s += ";k0=" + (k0_poly ? join(*k0_poly) : std::string("-"));
  s += ";galois=" + std::to_string(galois ? 1 : 0);
  s += ";equal_degree=" + std::to_string(equal_degree_rule ? 1 : 0);
  return s;
}

FieldSpec builtin_field(std::string_view name) {
  if (name == "zeta5") return {"zeta5", {1, 1, 1, 1, 1}, std::vector<i64>{-1, 1, 1}, true, true, "C4"};
  if (name == "d4-field") return {"d4-field", {89, 0, 134, 0, 1}, std::vector<i64>{89, 134, 1}, false, false, "D4"};
  if (name == "zeta8") return {"zeta8", {1, 0, 0, 0, 1}, std::vector<i64>{-2, 0, 1}, true, true, "V4"};
  if (name == "gaussian") return {"gaussian", {1, 0, 1}, std::nullopt, true, false, "C2"};
  // not CM; carried for their Galois groups
  if (name == "pure-cubic") return {"pure-cubic", {-2, 0, 0, 1}, std::nullopt, false, false, "S3"};
  if (name == "s4-quartic") return {"s4-quartic", {-1, -1, 0, 0, 1}, std::nullopt, false, false, "S4"};
  fail(ErrorKind::Config, "unknown field '" + std::string(name) + "'");
}

std::vector<std::string> builtin_field_names() {
  return {"zeta5", "d4-field", "zeta8", "gaussian", "pure-cubic", "s4-quartic"};
}

GroupClassTable RunConfig::resolve_group(std::string_view name) const {
  for (const auto& g : groups)
    if (g.name() == name) return g;
  return builtin_group(name);
}

std::vector<i64> parse_int_list(std::string_view text) {
  std::vector<i64> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      fail(ErrorKind::Config, "bad integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

FieldSpec load_field(std::string_view name_or_path) {
  for (const auto& n : builtin_field_names())
    if (n == name_or_path) return builtin_field(name_or_path);
  if (!std::filesystem::exists(name_or_path)) {
    fail(ErrorKind::Config, "unknown field '" + std::string(name_or_path) + "' (not built in, no such file)");
  }
  return load_field_file(std::filesystem::path(name_or_path));
}

FieldSpec load_field_file(const std::filesystem::path& path) {
  auto node = load_yaml_text(read_file(path), path.string());
  FieldSpec f = field_from_node(node, path.parent_path());
  if (f.label.empty()) f.label = path.stem().string();
  return f;
}

GroupClassTable load_group_file(const std::filesystem::path& path) {
  return group_from_node(load_yaml_text(read_file(path), path.string()));
}

GroupClassTable load_group(std::string_view name_or_path) {
  for (const auto& n : builtin_group_names())
    if (n == name_or_path) return builtin_group(name_or_path);
  if (!std::filesystem::exists(name_or_path)) fail(ErrorKind::Config, "unknown group '" + std::string(name_or_path) + "'");
  return load_group_file(std::filesystem::path(name_or_path));
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path), path.parent_path());
}

RunConfig parse_run_config(std::string_view yaml_text, const std::filesystem::path& base_dir) {
  const auto root = load_yaml_text(yaml_text, "config");
  if (!root.IsMap()) fail(ErrorKind::Config, "config must be a map");
  reject_unknown_keys(root, {"bound", "workers", "seed", "output", "fields", "curves", "groups"}, "config");
  RunConfig cfg;
  if (root["bound"]) {
    const i64 b = integer(root["bound"], "bound");
    if (b < 2) fail(ErrorKind::Config, "bound must be >= 2");
    cfg.bound = static_cast<u64>(b);
  }
  if (root["workers"]) {
    const i64 w = integer(root["workers"], "workers");
    if (w < 1 || w > 1024) fail(ErrorKind::Config, "workers must be in [1, 1024]");
    cfg.workers = static_cast<unsigned>(w);
  }
  if (root["seed"]) cfg.seed = static_cast<u64>(integer(root["seed"], "seed"));
  if (const auto out = root["output"]) {
    if (!out.IsMap()) fail(ErrorKind::Config, "'output' must be a map" + where(out));
    reject_unknown_keys(out, {"dir", "cache_dir"}, "output");
    if (out["dir"]) cfg.output_dir = base_dir / scalar<std::string>(out["dir"], "dir");
    if (out["cache_dir"]) cfg.cache_dir = base_dir / scalar<std::string>(out["cache_dir"], "cache_dir");
  } else {
    cfg.output_dir = base_dir;
  }
  if (const auto groups = root["groups"]) {
    if (!groups.IsSequence()) fail(ErrorKind::Config, "'groups' must be a list" + where(groups));
    for (const auto& g : groups) cfg.groups.push_back(group_from_node(g));
  }
  if (const auto fields = root["fields"]) {
    if (!fields.IsSequence()) fail(ErrorKind::Config, "'fields' must be a list" + where(fields));
    for (const auto& f : fields) {
      if (f.IsScalar()) {
        cfg.fields.push_back(load_field(f.Scalar()));
      } else {
        cfg.fields.push_back(field_from_node(f, base_dir));
      }
    }
  }
  if (const auto curves = root["curves"]) {
    if (!curves.IsSequence()) fail(ErrorKind::Config, "'curves' must be a list" + where(curves));
    for (const auto& c : curves) {
      if (!c.IsMap() || !c["a"]) fail(ErrorKind::Config, "curve needs 'a' (a1,a2,a3,a4,a6)" + where(c));
      reject_unknown_keys(c, {"label", "a"}, "curve");
      const auto a = int_list(c["a"], "a");
      if (a.size() != 5) fail(ErrorKind::Config, "curve needs five coefficients" + where(c));
      CurveSpec spec;
      std::copy(a.begin(), a.end(), spec.a.begin());
      if (c["label"]) spec.label = scalar<std::string>(c["label"], "label");
      EllipticCurveQ(spec.a, spec.label);  // rejects singular models
      cfg.curves.push_back(spec);
    }
  }
  for (const auto& f : cfg.fields) {
    if (!f.group) continue;
    try {
      cfg.resolve_group(*f.group);
    } catch (const Error&) {
      fail(ErrorKind::Config, "field " + f.label + " names unknown group '" + *f.group + "'");
    }
  }
  return cfg;
}

}  // namespace redscope
