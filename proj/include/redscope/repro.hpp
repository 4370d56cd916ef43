#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace redscope {

struct ReproCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproReport {
  std::string name;
  std::vector<ReproCheck> checks;
  double seconds = 0;

  bool passed() const;
};

/// zeta5, d4-field, fermat-2-7, e-times-eprime, j0-37.
std::vector<std::string> repro_names();

/// Throws ErrorKind::Config for an unknown name.
ReproReport run_repro(std::string_view name, unsigned workers = 1);

}  // namespace redscope
