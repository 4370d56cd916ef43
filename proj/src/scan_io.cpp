#include "redscope/scan_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "redscope/errors.hpp"

namespace redscope {

namespace {

constexpr std::string_view kHeader = "p,degrees,split_class,inert_count,reduction_type";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) return out;
    pos = at + 1;
  }
}

template <typename T>
T number(std::string_view s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorKind::Config, "scan csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

u64 fnv1a(std::string_view s) {
  u64 h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::ordered_json tally(u64 count, u64 total) {
  const Rational f = total ? Rational(static_cast<i64>(count), static_cast<i64>(total)) : Rational(0);
  return {{"count", count}, {"fraction", to_string(f)}, {"decimal", decimal(f)}};
}

}  // namespace

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << r.p << ',';
    for (std::size_t i = 0; i < r.degrees.size(); ++i) out << (i ? "-" : "") << r.degrees[i];
    out << ',' << to_string(r.split_class) << ',';
    if (r.inert_count) out << *r.inert_count;
    out << ',';
    if (r.reduction) out << to_string(*r.reduction);
    out << '\n';
  }
}

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  std::vector<ScanRow> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kHeader) fail(ErrorKind::Config, "scan csv: unexpected header '" + line + "'");
      header = true;
      continue;
    }
    const auto cols = split(line, ',');
    if (cols.size() != 5) fail(ErrorKind::Config, "scan csv line " + std::to_string(lineno) + ": expected 5 columns");
    ScanRow r;
    r.p = number<u64>(cols[0], lineno);
    if (!cols[1].empty())
      for (auto d : split(cols[1], '-')) r.degrees.push_back(number<int>(d, lineno));
    try {
      r.split_class = parse_split_class(cols[2]);
      if (!cols[4].empty()) r.reduction = parse_reduction_type(cols[4]);
    } catch (const Error& e) {
      fail(ErrorKind::Config, "scan csv line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!cols[3].empty()) r.inert_count = number<int>(cols[3], lineno);
    if ((r.split_class == SplitClass::RamifiedOrBad) == r.reduction.has_value()) {
      fail(ErrorKind::Config, "scan csv line " + std::to_string(lineno) + ": verdict must be empty exactly for excluded primes");
    }
    if (!rows.empty() && rows.back().p >= r.p) fail(ErrorKind::Config, "scan csv line " + std::to_string(lineno) + ": primes not ascending");
    rows.push_back(std::move(r));
  }
  if (!header) fail(ErrorKind::Config, "scan csv: missing header");
  return rows;
}

std::string decimal(const Rational& r) {
  const bool neg = r < 0;
  const i128 num = neg ? -static_cast<i128>(r.numerator()) : r.numerator();
  const i128 scaled = (num * 2'000'000 + r.denominator()) / (2 * static_cast<i128>(r.denominator()));
  const auto whole = static_cast<i64>(scaled / 1'000'000);
  const auto frac = static_cast<i64>(scaled % 1'000'000);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%06lld", neg ? "-" : "", static_cast<long long>(whole), static_cast<long long>(frac));
  return buf;
}

std::string summary_json(const DensityReport& report) {
  nlohmann::ordered_json doc;
  doc["bound"] = report.bound;
  doc["total"] = report.total;
  auto& sc = doc["split_class"];
  for (auto c : {SplitClass::CompletelySplit, SplitClass::AlmostNotCompletely, SplitClass::Other}) {
    sc[std::string(to_string(c))] = tally(report.count(c), report.total);
  }
  auto& rt = doc["reduction_type"];
  for (auto t : {ReductionType::Ordinary, ReductionType::AlmostOrdinary, ReductionType::HodgeWitt,
                 ReductionType::NonHodgeWitt, ReductionType::Undetermined}) {
    rt[std::string(to_string(t))] = tally(report.count(t), report.total);
  }
  doc["excluded"] = report.excluded;
  return doc.dump(2) + "\n";
}

ScanCache::ScanCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ScanCache::default_dir() {
  if (const char* env = std::getenv("REDUCTION_SCOPE_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "reduction-scope";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "reduction-scope";
  return ".reduction-scope-cache";
}

std::filesystem::path ScanCache::entry(const FieldSpec& field) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.csv", static_cast<unsigned long long>(fnv1a(field.canonical())));
  return dir_ / name;
}

std::optional<u64> ScanCache::cached_bound(const FieldSpec& field) const {
  std::ifstream in(entry(field));
  std::string first;
  if (!in || !std::getline(in, first)) return std::nullopt;
  const std::string prefix = "# " + field.canonical() + " bound=";
  if (first.rfind(prefix, 0) != 0) return std::nullopt;  // hash collision or foreign file
  u64 b = 0;
  const std::string_view tail(first.data() + prefix.size(), first.size() - prefix.size());
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), b);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) return std::nullopt;
  return b;
}

std::vector<ScanRow> ScanCache::rows(const FieldSpec& field, u64 bound, unsigned workers) {
  if (bound < 2) fail(ErrorKind::Domain, "scan bound must be >= 2");
  const CmField cm = field.to_cm_field();
  std::vector<ScanRow> rows;
  u64 have = 1;
  if (auto b = cached_bound(field)) {
    std::ifstream in(entry(field));
    try {
      rows = read_scan_csv(in);
      have = *b;
    } catch (const Error&) {
      rows.clear();  // unreadable entry: rescan
    }
  }
  if (have >= bound) {
    std::erase_if(rows, [&](const ScanRow& r) { return r.p > bound; });
    return rows;
  }
  auto fresh = scan_rows(cm, have + 1, bound, workers);
  rows.insert(rows.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (!ec) {
    const auto target = entry(field);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << "# " << field.canonical() << " bound=" << bound << '\n';
      write_scan_csv(out, rows);
    }
    std::filesystem::rename(tmp, target, ec);
  }
  return rows;
}

}  // namespace redscope
