// reduction-scope: command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "redscope/config.hpp"
#include "redscope/density.hpp"
#include "redscope/elliptic.hpp"
#include "redscope/errors.hpp"
#include "redscope/fermat.hpp"
#include "redscope/polygon.hpp"
#include "redscope/repro.hpp"
#include "redscope/scan_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace redscope;

namespace {

enum Exit { kOk = 0, kReproFailed = 1, kConfig = 2, kExcluded = 3, kConsistency = 4, kUsage = 5 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ExcludedPrime: return kExcluded;
    case ErrorKind::Consistency: return kConsistency;
    default: return kConfig;
  }
}

void report_error(std::string_view code, std::string_view reason) {
  std::string one_line(reason);
  for (char& c : one_line)
    if (c == '\n' || c == '\r') c = ' ';
  std::fprintf(stderr, "error: code=%.*s reason=%s\n", static_cast<int>(code.size()), code.data(), one_line.c_str());
}

struct Globals {
  bool json = false;
  std::string config_path;
  unsigned workers = 0;
  std::optional<RunConfig> config;

  unsigned worker_count() const {
    if (workers) return workers;
    if (config) return config->workers;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

struct FieldArgs {
  std::string field;
  std::string poly;
  std::string k0_poly;
  bool galois = false;
  bool equal_degree = false;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--field", field, "built-in field name or field file");
    auto* p = cmd->add_option("--poly", poly, "defining polynomial coefficients, constant term first");
    cmd->add_option("--k0-poly", k0_poly, "totally real subfield polynomial, constant term first")->needs(p);
    cmd->add_flag("--galois", galois, "field is Galois over Q")->needs(p);
    cmd->add_flag("--equal-degree", equal_degree, "apply the equal-degree rule (Galois fields)")->needs(p);
    f->excludes(p);
  }

  bool given() const { return !field.empty() || !poly.empty(); }

  FieldSpec resolve() const {
    if (!field.empty()) return load_field(field);
    if (poly.empty()) fail(ErrorKind::Config, "need --field or --poly");
    FieldSpec f;
    f.label = "custom";
    f.poly = parse_int_list(poly);
    if (!k0_poly.empty()) f.k0_poly = parse_int_list(k0_poly);
    f.galois = galois;
    f.equal_degree_rule = equal_degree;
    if (f.equal_degree_rule && !f.galois) fail(ErrorKind::Config, "--equal-degree needs --galois");
    f.to_cm_field();
    return f;
  }
};

std::string dashed(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "-" : "") + std::to_string(d[i]);
  return s;
}

std::string joined(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

EllipticCurveQ curve_from(const std::string& text, const std::string& label) {
  return EllipticCurveQ(parse_weierstrass(text), label.empty() ? text : label);
}

std::vector<Valuation> parse_valuations(const std::string& text) {
  std::vector<Valuation> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item == "inf" || item == "oo") {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(parse_rational(item));
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& v : parse_valuations(text)) {
    if (!v) fail(ErrorKind::Config, "slopes must be finite");
    out.push_back(*v);
  }
  return out;
}

json polygon_json(const Polygon& poly) {
  json segs = json::array();
  for (const auto& s : poly.segments()) segs.push_back({{"slope", to_string(s.slope)}, {"multiplicity", s.multiplicity}});
  return {{"width", poly.width()}, {"height", to_string(poly.height())}, {"segments", segs}};
}

std::string polygon_text(const Polygon& poly) {
  std::string s;
  for (const auto& seg : poly.segments()) s += (s.empty() ? "" : " ") + to_string(seg.slope) + "x" + std::to_string(seg.multiplicity);
  return s;
}

json densities_json(const GroupClassTable& t) {
  const Rational hw = gtr_density(t), ord = ordinary_density(t);
  return {{"group", t.name()}, {"degree", t.degree_n()}, {"order", t.order()},
          {"hw", to_string(hw)},  {"ord", to_string(ord)},  {"hw_decimal", decimal(hw)},
          {"ord_decimal", decimal(ord)}};
}

std::string safe_name(std::string label) {
  for (char& c : label)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return label.empty() ? "field" : label;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction types and Chebotarev densities of CM abelian varieties, elliptic products and Fermat varieties"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--config", g.config_path, "run configuration (YAML)");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 1024u));

  // split / cm-classify
  FieldArgs split_field;
  u64 split_p = 0;
  auto* split = app.add_subcommand("split", "residue degrees and split class of p");
  split_field.add(split);
  split->add_option("--prime", split_p, "prime")->required();

  FieldArgs cls_field;
  u64 cls_p = 0;
  auto* cls = app.add_subcommand("cm-classify", "reduction type of the CM field's abelian varieties at p");
  cls_field.add(cls);
  cls->add_option("--prime", cls_p, "prime")->required();

  // scan / summarize
  FieldArgs scan_field;
  u64 scan_bound = 0;
  std::string scan_out, cache_dir;
  bool no_cache = false;
  auto* scan = app.add_subcommand("scan", "classify all primes up to a bound; write CSV and summary JSON");
  scan_field.add(scan);
  scan->add_option("--bound", scan_bound, "scan primes p <= bound");
  scan->add_option("--out-dir", scan_out, "directory for <label>.csv and <label>.summary.json");
  scan->add_option("--cache-dir", cache_dir, "scan cache directory");
  scan->add_flag("--no-cache", no_cache, "do not read or write the scan cache");

  std::string sum_csv, sum_out;
  u64 sum_bound = 0;
  auto* summ = app.add_subcommand("summarize", "rebuild the summary JSON of a scan CSV");
  summ->add_option("--csv", sum_csv, "scan CSV")->required();
  summ->add_option("--bound", sum_bound, "bound the scan was run with")->required();
  summ->add_option("--out", sum_out, "write here instead of stdout");

  // density
  std::string group_name;
  auto* dens = app.add_subcommand("density", "theoretical ordinary and Hodge-Witt densities of a class table");
  dens->add_option("--group", group_name, "built-in group name or group file")->required();

  // elliptic curves
  std::string curve1, curve2, label1;
  u64 ec_p = 0, ec_bound = 0;
  auto* ecap = app.add_subcommand("ec-ap", "trace of Frobenius a_p");
  ecap->add_option("--curve", curve1, "a1,a2,a3,a4,a6")->required();
  ecap->add_option("--prime", ec_p, "prime")->required();

  auto* sss = app.add_subcommand("ss-search", "supersingular primes of a curve up to a bound");
  sss->add_option("--curve", curve1, "a1,a2,a3,a4,a6")->required();
  sss->add_option("--bound", ec_bound, "bound")->required();

  auto* ssc = app.add_subcommand("ss-common", "primes where two curves are both supersingular");
  ssc->add_option("--curve1", curve1, "a1,a2,a3,a4,a6")->required();
  ssc->add_option("--curve2", curve2, "a1,a2,a3,a4,a6")->required();
  ssc->add_option("--bound", ec_bound, "bound")->required();

  auto* prod = app.add_subcommand("product", "reduction type of E1 x E2 at p");
  prod->add_option("--curve1", curve1, "a1,a2,a3,a4,a6")->required();
  prod->add_option("--curve2", curve2, "a1,a2,a3,a4,a6")->required();
  prod->add_option("--prime", ec_p, "prime")->required();
  for (auto* c : {ecap, sss}) c->add_option("--label", label1, "curve label");

  // fermat
  int fer_n = 0, fer_m = 0;
  u64 fer_p = 0;
  bool fer_dens = false;
  auto* fer = app.add_subcommand("fermat", "Fermat variety of dimension n and degree m");
  fer->add_option("--n", fer_n, "dimension")->required();
  fer->add_option("--m", fer_m, "degree")->required();
  auto* fer_prime = fer->add_option("--prime", fer_p, "classify at this prime");
  fer->add_flag("--densities", fer_dens, "print densities instead")->excludes(fer_prime);

  // polygon
  std::string poly_vals, poly_slopes, poly_hodge;
  int abelian_g = 0;
  bool k3 = false;
  auto* pol = app.add_subcommand("polygon", "Newton/Hodge polygons and Mazur's comparison");
  auto* o_vals = pol->add_option("--valuations", poly_vals, "coefficient valuations c0..cn, rationals or inf");
  auto* o_slopes = pol->add_option("--slopes", poly_slopes, "Newton slopes with repetition");
  o_vals->excludes(o_slopes);
  pol->add_option("--hodge", poly_hodge, "Hodge numbers h^{0,w},...,h^{w,0}");
  pol->add_option("--abelian", abelian_g, "classify as an abelian variety of this dimension");
  pol->add_flag("--k3", k3, "K3 status of the Newton polygon of H^2");

  // repro / list
  std::string repro_name;
  auto* rep = app.add_subcommand("repro", "re-run a worked example; exit 0 iff every check passes");
  rep->add_option("name", repro_name, "zeta5, d4-field, fermat-2-7, e-times-eprime, j0-37 or all")->required();

  auto* lst = app.add_subcommand("list", "built-in fields, groups and examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg.rfind("-", 0) == 0) continue;
      if (i > 1 && std::string(argv[i - 1]).rfind("--", 0) == 0 && std::string(argv[i - 1]) != "--json") continue;
      bool known = false;
      for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == arg;
      if (!known) {
        report_error("usage", "unknown subcommand '" + arg + "'");
        return kUsage;
      }
      break;
    }
    report_error("usage", e.what());
    return kUsage;
  }

  try {
    if (!g.config_path.empty()) g.config = load_run_config(g.config_path);
    const unsigned workers = g.worker_count();

    if (*split || *cls) {
      const bool is_split = split->parsed();
      const FieldSpec spec = (is_split ? split_field : cls_field).resolve();
      const u64 p = is_split ? split_p : cls_p;
      const CmField cm = spec.to_cm_field();
      if (is_split) {
        const auto pat = splitting_pattern(cm.field, p);
        const SplitClass sc = classify_split(pat, cm.field.degree());
        emit(g,
             {{"command", "split"}, {"field", spec.label}, {"p", p}, {"degrees", pat.degrees},
              {"ramified", pat.ramified}, {"split_class", to_string(sc)}},
             "p=" + std::to_string(p) + " degrees=" + (pat.ramified ? "ramified" : dashed(pat.degrees)) +
                 " class=" + std::string(to_string(sc)));
        return kOk;
      }
      const ScanRow row = classify_prime(cm, p);
      if (!row.reduction) fail(ErrorKind::ExcludedPrime, std::to_string(p) + " divides the discriminant of " + spec.label);
      json doc{{"command", "cm-classify"}, {"field", spec.label}, {"p", p}, {"degrees", row.degrees},
               {"split_class", to_string(row.split_class)}};
      doc["inert_count"] = row.inert_count ? json(*row.inert_count) : json(nullptr);
      doc["reduction_type"] = to_string(*row.reduction);
      emit(g, doc,
           "p=" + std::to_string(p) + " degrees=" + dashed(row.degrees) + " class=" + std::string(to_string(row.split_class)) +
               (row.inert_count ? " inert=" + std::to_string(*row.inert_count) : std::string()) +
               " reduction=" + std::string(to_string(*row.reduction)));
      return kOk;
    }

    if (*scan) {
      std::vector<FieldSpec> fields;
      if (scan_field.given()) {
        fields.push_back(scan_field.resolve());
      } else if (g.config) {
        fields = g.config->fields;
      }
      if (fields.empty()) fail(ErrorKind::Config, "scan needs --field, --poly or a config with fields");
      const u64 bound = scan_bound ? scan_bound : g.config ? g.config->bound : 0;
      if (bound < 2) fail(ErrorKind::Config, "scan needs --bound >= 2");
      fs::path out_dir = !scan_out.empty() ? fs::path(scan_out) : g.config ? g.config->output_dir : fs::path(".");
      fs::path cdir = !cache_dir.empty()                 ? fs::path(cache_dir)
                      : g.config && g.config->cache_dir ? *g.config->cache_dir
                                                         : ScanCache::default_dir();
      fs::create_directories(out_dir);
      json all = json::array();
      std::string text;
      for (const auto& spec : fields) {
        std::vector<ScanRow> rows;
        if (no_cache) {
          rows = scan_rows(spec.to_cm_field(), 2, bound, workers);
        } else {
          ScanCache cache(cdir);
          rows = cache.rows(spec, bound, workers);
        }
        const DensityReport report = summarize(rows, bound);
        const std::string stem = safe_name(spec.label);
        const fs::path csv_path = out_dir / (stem + ".csv");
        const fs::path json_path = out_dir / (stem + ".summary.json");
        {
          std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
          write_scan_csv(csv, rows);
          std::ofstream js(json_path, std::ios::binary | std::ios::trunc);
          js << summary_json(report);
          if (!csv || !js) fail(ErrorKind::Config, "cannot write to " + out_dir.string());
        }
        json entry{{"field", spec.label}, {"bound", bound}, {"csv", csv_path.string()}, {"summary", json_path.string()},
                   {"summary_data", json::parse(summary_json(report))}};
        text += "field=" + spec.label + " bound=" + std::to_string(bound) + " primes=" + std::to_string(report.total) +
                " excluded=" + std::to_string(report.excluded.size()) + "\n";
        for (auto c : {SplitClass::CompletelySplit, SplitClass::AlmostNotCompletely, SplitClass::Other}) {
          text += "  " + std::string(to_string(c)) + " " + std::to_string(report.count(c)) + " (" +
                  decimal(report.fraction(c)) + ")\n";
        }
        for (auto t : {ReductionType::Ordinary, ReductionType::AlmostOrdinary, ReductionType::HodgeWitt,
                       ReductionType::NonHodgeWitt, ReductionType::Undetermined}) {
          if (report.count(t)) text += "  " + std::string(to_string(t)) + " " + std::to_string(report.count(t)) + " (" + decimal(report.fraction(t)) + ")\n";
        }
        if (spec.group) {
          const auto table = g.config ? g.config->resolve_group(*spec.group) : builtin_group(*spec.group);
          entry["theoretical"] = densities_json(table);
          text += "  theoretical (" + table.name() + "): ord=" + to_string(ordinary_density(table)) +
                  " hw=" + to_string(gtr_density(table)) + "\n";
        }
        text += "  wrote " + csv_path.string() + " and " + json_path.string() + "\n";
        all.push_back(entry);
      }
      emit(g, {{"command", "scan"}, {"results", all}}, text);
      return kOk;
    }

    if (*summ) {
      std::ifstream in(sum_csv, std::ios::binary);
      if (!in) fail(ErrorKind::Config, "cannot read " + sum_csv);
      const auto rows = read_scan_csv(in);
      const std::string doc = summary_json(summarize(rows, sum_bound));
      if (sum_out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(sum_out, std::ios::binary | std::ios::trunc);
        out << doc;
        if (!out) fail(ErrorKind::Config, "cannot write " + sum_out);
      }
      return kOk;
    }

    if (*dens) {
      const auto table = g.config ? g.config->resolve_group(group_name) : load_group(group_name);
      json doc{{"command", "density"}};
      doc.update(densities_json(table));
      emit(g, doc,
           "group=" + table.name() + " hw=" + to_string(gtr_density(table)) + " ord=" + to_string(ordinary_density(table)));
      return kOk;
    }

    if (*ecap) {
      const auto e = curve_from(curve1, label1);
      const i64 a = ap(e, ec_p);
      emit(g, {{"command", "ec-ap"}, {"curve", e.label()}, {"p", ec_p}, {"ap", a}, {"supersingular", a == 0}},
           std::to_string(a));
      return kOk;
    }

    if (*sss || *ssc) {
      const auto e1 = curve_from(curve1, label1);
      PrimeSearchResult r;
      json doc{{"command", sss->parsed() ? "ss-search" : "ss-common"}, {"bound", ec_bound}};
      if (sss->parsed()) {
        r = supersingular_search(e1, ec_bound, workers);
        doc["curve"] = e1.label();
      } else {
        const auto e2 = curve_from(curve2, "");
        r = common_supersingular(e1, e2, ec_bound, workers);
        doc["curve1"] = e1.label();
        doc["curve2"] = e2.label();
      }
      doc["primes"] = r.primes;
      doc["bad_primes"] = r.bad_primes;
      emit(g, doc, "primes: " + joined(r.primes) + "\nbad: " + joined(r.bad_primes));
      return kOk;
    }

    if (*prod) {
      const auto e1 = curve_from(curve1, "");
      const auto e2 = curve_from(curve2, "");
      FrobeniusTraceCounter counter;
      const ReductionType t = classify_product_surface(e1, e2, ec_p, counter);
      const i64 a1 = counter.ap(e1, ec_p), a2 = counter.ap(e2, ec_p);
      emit(g,
           {{"command", "product"}, {"p", ec_p}, {"ap1", a1}, {"ap2", a2}, {"reduction_type", to_string(t)}},
           "ap1=" + std::to_string(a1) + " ap2=" + std::to_string(a2) + " reduction=" + std::string(to_string(t)));
      return kOk;
    }

    if (*fer) {
      const FermatSpec spec{fer_n, fer_m};
      if (fer_dens || !fer_p) {
        if (fer_n < 1 || fer_m < 1) fail(ErrorKind::Domain, "n and m must be positive");
        const auto d = fermat_densities(spec);
        const std::string ord = d.ord ? to_string(*d.ord) : "unknown";
        json doc{{"command", "fermat"}, {"n", fer_n}, {"m", fer_m}};
        doc["ord"] = d.ord ? json(to_string(*d.ord)) : json(nullptr);
        doc["hw"] = to_string(d.hw);
        doc["nonhw"] = to_string(d.nonhw);
        emit(g, doc, "ord=" + ord + " hw=" + to_string(d.hw) + " nonhw=" + to_string(d.nonhw));
        return kOk;
      }
      const auto v = classify_fermat(spec, fer_p);
      json doc{{"command", "fermat"}, {"n", fer_n}, {"m", fer_m}, {"p", fer_p}};
      doc["ordinary"] = v.ordinary ? json(*v.ordinary) : json(nullptr);
      doc["reduction_type"] = to_string(v.reduction);
      emit(g, doc,
           std::string("ordinary=") + (v.ordinary ? (*v.ordinary ? "true" : "false") : "unknown") +
               " reduction=" + std::string(to_string(v.reduction)));
      return kOk;
    }

    if (*pol) {
      json doc{{"command", "polygon"}};
      std::string text;
      std::optional<Polygon> newton, hodge;
      if (!poly_vals.empty()) newton = newton_polygon(parse_valuations(poly_vals));
      if (!poly_slopes.empty()) newton = Polygon::from_slopes(parse_rationals(poly_slopes));
      if (!poly_hodge.empty()) hodge = hodge_polygon(parse_int_list(poly_hodge));
      if (!newton && !hodge) fail(ErrorKind::Config, "polygon needs --valuations, --slopes or --hodge");
      if (newton) {
        doc["newton"] = polygon_json(*newton);
        text += "newton: " + polygon_text(*newton) + "\n";
      }
      if (hodge) {
        doc["hodge"] = polygon_json(*hodge);
        text += "hodge: " + polygon_text(*hodge) + "\n";
      }
      if (newton && hodge) {
        const auto m = lies_above(*newton, *hodge);
        doc["mazur"] = {{"above", m.above}, {"same_endpoints", m.same_endpoints}};
        text += std::string("mazur: above=") + (m.above ? "true" : "false") +
                " same_endpoints=" + (m.same_endpoints ? "true" : "false") + "\n";
      }
      if (abelian_g) {
        if (!newton) fail(ErrorKind::Config, "--abelian needs a Newton polygon");
        const auto t = classify_abelian_from_slopes(*newton, abelian_g);
        doc["reduction_type"] = to_string(t);
        text += "reduction=" + std::string(to_string(t)) + "\n";
      }
      if (k3) {
        if (!newton) fail(ErrorKind::Config, "--k3 needs a Newton polygon");
        const auto s = k3_status(*newton);
        doc["k3"] = {{"ordinary", s.ordinary}, {"finite_height", s.finite_height}};
        text += std::string("k3: ordinary=") + (s.ordinary ? "true" : "false") +
                " finite_height=" + (s.finite_height ? "true" : "false") + "\n";
      }
      emit(g, doc, text);
      return kOk;
    }

    if (*rep) {
      std::vector<std::string> names = repro_name == "all" ? repro_names() : std::vector<std::string>{repro_name};
      bool ok = true;
      json reports = json::array();
      std::string text;
      for (const auto& name : names) {
        const auto r = run_repro(name, workers);
        ok = ok && r.passed();
        json checks = json::array();
        text += name + ": " + (r.passed() ? "PASS" : "FAIL");
        char secs[32];
        std::snprintf(secs, sizeof secs, " (%.2f s)\n", r.seconds);
        text += secs;
        for (const auto& c : r.checks) {
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
          text += std::string("  [") + (c.passed ? "ok" : "FAIL") + "] " + c.name + ": " + c.detail + "\n";
        }
        reports.push_back({{"name", name}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
      }
      emit(g, {{"command", "repro"}, {"passed", ok}, {"reports", reports}}, text);
      return ok ? kOk : kReproFailed;
    }

    if (*lst) {
      json doc{{"command", "list"}, {"fields", builtin_field_names()}, {"groups", builtin_group_names()},
               {"examples", repro_names()}};
      std::string text = "fields:";
      for (const auto& f : builtin_field_names()) text += " " + f;
      text += "\ngroups:";
      for (const auto& n : builtin_group_names()) text += " " + n;
      text += "\nexamples:";
      for (const auto& n : repro_names()) text += " " + n;
      emit(g, doc, text);
      return kOk;
    }
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    report_error("config", e.what());
    return kConfig;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return kConsistency;
  }
  return kUsage;
}
