#include "redscope/repro.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "redscope/config.hpp"
#include "redscope/elliptic.hpp"
#include "redscope/errors.hpp"
#include "redscope/fermat.hpp"
#include "redscope/primes.hpp"

namespace redscope {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

ReproCheck within(std::string name, u64 count, u64 total, double target, double tol) {
  const double f = total ? static_cast<double>(count) / static_cast<double>(total) : 0.0;
  return {std::move(name), total > 0 && std::abs(f - target) <= tol,
          fmt("%llu/%llu = %.6f, target %.6f +- %.2f", static_cast<unsigned long long>(count),
              static_cast<unsigned long long>(total), f, target, tol)};
}

ReproCheck exact(std::string name, const Rational& got, const Rational& want) {
  return {std::move(name), got == want, to_string(got) + " (expected " + to_string(want) + ")"};
}

ReproCheck no_exceptions(std::string name, u64 bad, u64 total, u64 first_bad) {
  std::string detail = fmt("%llu mismatches over %llu primes", static_cast<unsigned long long>(bad),
                           static_cast<unsigned long long>(total));
  if (bad) detail += fmt(", first at p=%llu", static_cast<unsigned long long>(first_bad));
  return {std::move(name), bad == 0 && total > 0, detail};
}

std::vector<ReproCheck> zeta5(unsigned workers) {
  const CmField cm = builtin_field("zeta5").to_cm_field();
  const auto t0 = Clock::now();
  const auto rows = scan_rows(cm, 7, 999'999, workers);
  const double secs = since(t0);
  u64 split = 0, bad = 0, first_bad = 0;
  for (const auto& r : rows) {
    if (r.split_class == SplitClass::CompletelySplit) ++split;
    const bool ordinary = r.reduction == ReductionType::Ordinary;
    if (ordinary != (r.p % 5 == 1)) {
      if (!bad++) first_bad = r.p;
    }
  }
  return {
      exact("theoretical ordinary density (C4)", ordinary_density(builtin_group("C4")), Rational(1, 4)),
      within("completely split fraction, 7 <= p < 10^6", split, rows.size(), 0.25, 0.01),
      no_exceptions("ordinary iff p = 1 mod 5", bad, rows.size(), first_bad),
      {"scan under 60 s", secs < 60.0, fmt("%.2f s with %u workers", secs, workers)},
  };
}

std::vector<ReproCheck> d4_field(unsigned workers) {
  const CmField cm = builtin_field("d4-field").to_cm_field();
  const auto d4 = builtin_group("D4");
  const auto rows = scan_rows(cm, 2, 999'999, workers);
  const auto report = summarize(rows, 999'999);
  u64 bad = 0, first_bad = 0, almost = 0;
  for (const auto& r : rows) {
    if (r.split_class != SplitClass::AlmostNotCompletely) continue;
    ++almost;
    if (r.inert_count != 1) {
      if (!bad++) first_bad = r.p;
    }
  }
  return {
      exact("gtr density (D4)", gtr_density(d4), Rational(3, 8)),
      exact("ordinary density (D4)", ordinary_density(d4), Rational(1, 8)),
      within("completely split fraction, p < 10^6", report.count(SplitClass::CompletelySplit), report.total, 1.0 / 8, 0.02),
      within("almost completely split fraction, p < 10^6", report.count(SplitClass::AlmostNotCompletely), report.total,
             2.0 / 8, 0.02),
      no_exceptions("inert count 1 at almost completely split primes", bad, almost, first_bad),
  };
}

std::vector<ReproCheck> fermat_2_7() {
  const FermatSpec spec{2, 7};
  u64 total = 0, ord = 0, hw = 0, nonhw = 0, bad = 0, first_bad = 0;
  for (u64 p : primes_in_range(11, 99'999)) {
    const auto v = classify_fermat(spec, p);
    ++total;
    ord += v.ordinary == true;
    hw += is_hodge_witt(v.reduction);
    nonhw += v.reduction == ReductionType::NonHodgeWitt;
    const u64 r = p % 7;
    const bool want_ord = r == 1;
    const bool want_hw = r == 1 || r == 2 || r == 4;
    const auto want = want_ord ? ReductionType::Ordinary : want_hw ? ReductionType::HodgeWitt : ReductionType::NonHodgeWitt;
    if (v.reduction != want || v.ordinary != want_ord) {
      if (!bad++) first_bad = p;
    }
  }
  const auto d = fermat_densities(spec);
  return {
      exact("tabulated ordinary density", d.ord.value_or(Rational(-1)), Rational(1, 6)),
      exact("tabulated Hodge-Witt density", d.hw, Rational(1, 2)),
      exact("tabulated non-Hodge-Witt density", d.nonhw, Rational(1, 2)),
      within("ordinary frequency, 11 <= p < 10^5", ord, total, 1.0 / 6, 0.03),
      within("Hodge-Witt frequency", hw, total, 0.5, 0.03),
      within("non-Hodge-Witt frequency", nonhw, total, 0.5, 0.03),
      no_exceptions("verdicts follow p mod 7", bad, total, first_bad),
  };
}

std::vector<ReproCheck> e_times_eprime(unsigned workers) {
  const EllipticCurveQ e({0, 0, 0, -1, 0}, "y^2=x^3-x");
  const EllipticCurveQ e2({0, 0, 0, 0, 1}, "y^2=x^3+1");
  std::vector<u64> primes;
  for (u64 p : primes_in_range(5, 99'999))
    if (!e.is_excluded(p) && !e2.is_excluded(p)) primes.push_back(p);
  const auto verdicts = parallel_ordered<u64>(primes, workers, [&](std::span<const u64> range) {
    FrobeniusTraceCounter counter;
    std::vector<ReductionType> out;
    for (u64 p : range) out.push_back(classify_product_surface(e, e2, p, counter));
    return out;
  });
  u64 ord = 0, hw = 0, bad = 0, first_bad = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const u64 p = primes[i];
    ord += verdicts[i] == ReductionType::Ordinary;
    hw += is_hodge_witt(verdicts[i]);
    const int ordinary_factors = (p % 4 == 1) + (p % 3 == 1);
    const auto want = ordinary_factors == 2   ? ReductionType::Ordinary
                      : ordinary_factors == 1 ? ReductionType::AlmostOrdinary
                                              : ReductionType::NonHodgeWitt;
    if (verdicts[i] != want) {
      if (!bad++) first_bad = p;
    }
  }
  return {
      within("ordinary fraction, good 5 <= p < 10^5", ord, primes.size(), 0.25, 0.02),
      within("Hodge-Witt fraction", hw, primes.size(), 0.75, 0.02),
      no_exceptions("verdicts follow p mod 4 and p mod 3", bad, primes.size(), first_bad),
  };
}

std::vector<ReproCheck> j0_37(unsigned workers) {
  const EllipticCurveQ a({0, 0, 1, -1, 0}, "37a1");
  const EllipticCurveQ b({0, 1, 1, -23, -50}, "37b1");
  constexpr u64 p = 18'489'743;
  const auto t0 = Clock::now();
  FrobeniusTraceCounter counter;
  const i64 ap_a = counter.ap(a, p);
  const i64 ap_b = counter.ap(b, p);
  const double secs = since(t0);
  const auto common = common_supersingular(a, b, 100'000, workers);
  std::string listed;
  for (u64 q : common.primes) listed += " " + std::to_string(q);
  return {
      {"a_p(37a1) = 0 at 18489743", ap_a == 0, "a_p = " + std::to_string(ap_a)},
      {"a_p(37b1) = 0 at 18489743", ap_b == 0, "a_p = " + std::to_string(ap_b)},
      {"both evaluations under 30 s", secs < 30.0, fmt("%.2f s", secs)},
      {"no common supersingular prime below 10^5", common.primes.empty(),
       common.primes.empty() ? std::string("none") : "found:" + listed},
  };
}

}  // namespace

bool ReproReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> repro_names() { return {"zeta5", "d4-field", "fermat-2-7", "e-times-eprime", "j0-37"}; }

ReproReport run_repro(std::string_view name, unsigned workers) {
  if (workers == 0) workers = 1;
  const auto t0 = Clock::now();
  ReproReport report{std::string(name), {}, 0};
  if (name == "zeta5") {
    report.checks = zeta5(workers);
  } else if (name == "d4-field") {
    report.checks = d4_field(workers);
  } else if (name == "fermat-2-7") {
    report.checks = fermat_2_7();
  } else if (name == "e-times-eprime") {
    report.checks = e_times_eprime(workers);
  } else if (name == "j0-37") {
    report.checks = j0_37(workers);
  } else {
    fail(ErrorKind::Config, "unknown example '" + std::string(name) + "'");
  }
  report.seconds = since(t0);
  return report;
}

}  // namespace redscope
