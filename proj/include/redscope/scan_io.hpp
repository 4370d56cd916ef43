#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "redscope/config.hpp"
#include "redscope/density.hpp"

namespace redscope {

/// Header: p,degrees,split_class,inert_count,reduction_type. Degrees are
/// dash-separated ascending; excluded primes have empty fields after the
/// split class.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
/// Throws ErrorKind::Config on a malformed file.
std::vector<ScanRow> read_scan_csv(std::istream& in);

/// Summary document as pretty-printed JSON with a trailing newline. The
/// text depends only on the report, so re-summarizing a CSV reproduces it.
std::string summary_json(const DensityReport& report);

/// Six-digit decimal rendering of an exact fraction, e.g. "0.250000".
std::string decimal(const Rational& r);

/// Scan rows cached under (field canonical string, bound). A request for a
/// larger bound scans only the missing range and rewrites the entry.
class ScanCache {
 public:
  explicit ScanCache(std::filesystem::path dir);

  /// REDUCTION_SCOPE_CACHE, else $XDG_CACHE_HOME/reduction-scope, else
  /// $HOME/.cache/reduction-scope, else ./.reduction-scope-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Rows for all primes <= bound.
  std::vector<ScanRow> rows(const FieldSpec& field, u64 bound, unsigned workers);

  /// Bound of the stored entry, if any.
  std::optional<u64> cached_bound(const FieldSpec& field) const;

 private:
  std::filesystem::path entry(const FieldSpec& field) const;

  std::filesystem::path dir_;
};

}  // namespace redscope
