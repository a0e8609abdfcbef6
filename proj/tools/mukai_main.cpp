// Command-line front end: classification, (-1)-divisor census, cone
// membership, section-space dimensions, and Cox generation reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mukai/cones.hpp"
#include "mukai/coxgen.hpp"
#include "mukai/errors.hpp"
#include "mukai/interp.hpp"
#include "mukai/json_io.hpp"
#include "mukai/lattice.hpp"
#include "mukai/orbit.hpp"
#include "mukai/roots.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotMoriDream = 2;
constexpr int kExitInvariant = 3;

struct CommonOpts {
  int64_t a = 0, b = 0, c = 0;
  uint64_t prime = mukai::kDefaultPrime;
  uint64_t seed = 1;
  int seeds = 3;
  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 1;
  std::size_t limit = mukai::kDefaultOrbitLimit;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_interp = true) {
  cmd->add_option("a", opts.a, "first parameter (number of factors + 1)")->required();
  cmd->add_option("b", opts.b, "second parameter")->required();
  cmd->add_option("c", opts.c, "third parameter (projective dimension + 1)")->required();
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", opts.threads, "worker threads");
  cmd->add_option("--limit", opts.limit, "orbit size cap");
  if (with_interp) {
    cmd->add_option("--prime", opts.prime, "interpolation prime (< 2^32)");
    cmd->add_option("--seed", opts.seed, "random seed for point configurations");
    cmd->add_option("--seeds", opts.seeds, "seed count for probabilistic verdicts");
  }
}

mukai::Params make_params(const CommonOpts& opts) {
  return mukai::Params(opts.a, opts.b, opts.c);
}

// Accepts both "[h1,.. | m1,..]" and {"h":[...],"m":[...]}.
mukai::DivisorClass parse_divisor_arg(const std::string& text, const mukai::Params& p) {
  const auto first = text.find_first_not_of(' ');
  if (first != std::string::npos && text[first] == '{') {
    return mukai::divisor_from_json(text, p);
  }
  return mukai::parse_divisor(text, p);
}

nlohmann::json json_header(const std::string& command, const mukai::Params& p,
                           const CommonOpts& opts) {
  return {{"command", command},
          {"params", {{"a", p.a}, {"b", p.b}, {"c", p.c}}},
          {"prime", opts.prime},
          {"seed", opts.seed},
          {"version", kVersion}};
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << payload;
}

// ---- classify ----------------------------------------------------------

int run_classify(const CommonOpts& opts, const std::string& cartan_out) {
  const mukai::Params p = make_params(opts);
  const bool mori = mukai::is_mori_dream(p);
  const mukai::DynkinType type = mukai::dynkin_type(p);
  const mukai::DivisorClass antik = mukai::anticanonical(p);

  std::string case_label = "-";
  std::string bound = "-", reg = "-";
  if (mori) {
    case_label = mukai::to_string(mukai::classify_case(p));
    bound = std::to_string(mukai::generator_degree_bound(p));
    reg = std::to_string(mukai::regularity(p));
  }

  if (!cartan_out.empty()) {
    write_or_print(cartan_out, mukai::cartan_csv(mukai::simple_roots(p)));
  }

  if (opts.format == "json") {
    nlohmann::json j = json_header("classify", p, opts);
    j["mori_dream"] = mori;
    j["dynkin"] = type.name();
    if (mori) {
      j["case"] = case_label;
    } else {
      j["case"] = nullptr;
    }
    j["rank"] = p.rank();
    j["dimension"] = p.dim();
    j["kappa"] = p.kappa();
    j["anticanonical"] = mukai::format_divisor(antik, p);
    if (mori) {
      j["generator_degree_bound"] = mukai::generator_degree_bound(p);
      j["regularity"] = mukai::regularity(p);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "params: " << mukai::to_string(p) << "\n"
              << "mori dream: " << yesno(mori) << "\n"
              << "dynkin: " << type.name() << "\n"
              << "case: " << case_label << "\n"
              << "rank: " << p.rank() << "\n"
              << "dimension: " << p.dim() << "\n"
              << "kappa: " << p.kappa() << "\n"
              << "anticanonical: " << mukai::format_divisor(antik, p) << "\n"
              << "generator degree bound: " << bound << "\n"
              << "regularity: " << reg << "\n";
  }
  return mori ? kExitOk : kExitNotMoriDream;
}

// ---- minus-one ---------------------------------------------------------

std::filesystem::path cache_path(const std::string& dir, const mukai::Params& p) {
  std::ostringstream name;
  name << "orbit_a" << p.a << "b" << p.b << "c" << p.c << "_seedE" << p.num_points()
       << ".txt";
  return std::filesystem::path(dir) / name.str();
}

int run_minus_one(const CommonOpts& opts, bool show_classes, bool factor_classes) {
  const mukai::Params p = make_params(opts);
  const mukai::DivisorClass seed = mukai::DivisorClass::exceptional(p, p.num_points());

  mukai::OrbitSet orbit;
  bool from_cache = false;
  if (!opts.cache_dir.empty()) {
    const auto path = cache_path(opts.cache_dir, p);
    if (std::ifstream is(path); is) {
      std::string why;
      if (auto cached = mukai::read_orbit_file(is, p, seed, &why)) {
        orbit = std::move(*cached);
        from_cache = true;
      } else {
        std::cerr << "warning: ignoring cache " << path.string() << " (" << why
                  << "); recomputing\n";
      }
    }
  }
  if (!from_cache) {
    orbit = mukai::minus_one_divisors(p, opts.limit, opts.threads);
    if (!opts.cache_dir.empty()) {
      std::filesystem::create_directories(opts.cache_dir);
      std::ofstream os(cache_path(opts.cache_dir, p));
      mukai::write_orbit_file(os, orbit);
    }
  }

  const auto classes = mukai::classes_up_to_point_symmetry(orbit, factor_classes);

  if (opts.format == "json") {
    nlohmann::json j = json_header("minus-one", p, opts);
    j["count"] = orbit.size();
    j["class_count"] = classes.size();
    j["from_cache"] = from_cache;
    if (show_classes) {
      auto& arr = j["classes"] = nlohmann::json::array();
      for (const auto& cls : classes) {
        arr.push_back({{"representative", mukai::format_divisor(cls.representative, p)},
                       {"count", cls.count}});
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "minus-one divisors on " << mukai::to_string(p) << ": " << orbit.size()
              << "\n";
    std::cout << "classes up to point symmetry"
              << (factor_classes ? " and factor symmetry" : "") << ": " << classes.size()
              << "\n";
    if (show_classes) {
      for (const auto& cls : classes) {
        std::cout << "  " << mukai::format_divisor(cls.representative, p) << "  x"
                  << cls.count << "\n";
      }
    }
  }
  return kExitOk;
}

// ---- cones -------------------------------------------------------------

int run_cones(const CommonOpts& opts, const std::string& divisor_text,
              bool show_certificates) {
  const mukai::Params p = make_params(opts);
  const mukai::DivisorClass d = parse_divisor_arg(divisor_text, p);

  mukai::EffectiveCone cone(p, opts.limit, opts.threads);
  const mukai::MembershipCertificate cert = cone.member(d);
  const bool effective = cert.member;
  const bool movable = effective && cone.in_movable(d, false, opts.threads);
  const bool big = effective && cone.is_big(d);

  if (opts.format == "json") {
    nlohmann::json j = json_header("cones", p, opts);
    j["divisor"] = mukai::format_divisor(d, p);
    j["effective"] = effective;
    j["movable"] = movable;
    j["big"] = big;
    j["certificate"] = nlohmann::json::parse(mukai::certificate_to_json(cert));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "divisor: " << mukai::format_divisor(d, p) << "\n"
              << "effective: " << yesno(effective) << "\n"
              << "movable: " << yesno(movable) << "\n"
              << "big: " << yesno(big) << "\n";
    if (show_certificates) {
      std::cout << "certificate: " << mukai::certificate_to_json(cert) << "\n";
    }
  }
  return kExitOk;
}

// ---- h0 ----------------------------------------------------------------

int run_h0(const CommonOpts& opts, const std::string& divisor_text,
           const std::string& basis_out, const std::string& matrix_out) {
  const mukai::Params p = make_params(opts);
  const mukai::DivisorClass d = parse_divisor_arg(divisor_text, p);
  mukai::InterpConfig cfg;
  cfg.prime = opts.prime;
  cfg.seed = opts.seed;

  const auto result = mukai::h0_multiseed(p, d, cfg, opts.seeds);
  if (!result.unanimous) {
    std::cerr << "warning: seeds disagree on h0; reporting the majority value\n";
  }

  if (!basis_out.empty()) {
    write_or_print(basis_out, mukai::section_basis_to_json(mukai::section_basis(p, d, cfg), p));
  }
  if (!matrix_out.empty()) {
    mukai::DivisorClass clamped = d;
    for (auto& mj : clamped.m) mj = std::max<int64_t>(mj, 0);
    write_or_print(matrix_out, mukai::condition_matrix_to_json(
                                   mukai::condition_matrix(p, clamped, cfg), p, clamped, cfg));
  }

  if (opts.format == "json") {
    nlohmann::json j = json_header("h0", p, opts);
    j["divisor"] = mukai::format_divisor(d, p);
    j["h0"] = result.value;
    j["unanimous"] = result.unanimous;
    j["values"] = result.values;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.value << "\n";
  }
  return kExitOk;
}

// ---- coxcheck ----------------------------------------------------------

int run_coxcheck(const CommonOpts& opts, int64_t max_degree, int64_t budget_ms,
                 const std::string& out_path) {
  const mukai::Params p = make_params(opts);
  mukai::InterpConfig cfg;
  cfg.prime = opts.prime;
  cfg.seed = opts.seed;

  const mukai::CoxReport report =
      mukai::cox_generation_report(p, max_degree, cfg, opts.seeds, budget_ms);

  if (opts.format == "json") {
    write_or_print(out_path, mukai::cox_report_json(report));
  } else if (opts.format == "csv") {
    write_or_print(out_path, mukai::cox_report_csv(report));
  } else {
    std::ostringstream os;
    os << "cox generation report for " << mukai::to_string(p) << ", degrees 2.."
       << max_degree << " (prime " << opts.prime << ", " << opts.seeds << " seeds)\n";
    for (const auto& row : report.rows) {
      os << "  deg " << row.degree << "  " << mukai::format_divisor(row.divisor, p)
         << "  h0=" << row.h0 << "  rank=" << row.image_rank << "  "
         << (row.generated ? "generated" : "NOT GENERATED")
         << (row.seeds_agree ? "" : "  [seeds disagree]") << "\n";
    }
    if (report.partial) os << "partial: budget exhausted before all classes were checked\n";
    os << "verdict: " << (report.all_generated ? "all generated" : "FAILURES FOUND") << "\n";
    write_or_print(out_path, os.str());
  }
  return kExitOk;
}

// ---- cartan ------------------------------------------------------------

int run_cartan(const CommonOpts& opts, const std::string& out_path) {
  const mukai::Params p = make_params(opts);
  write_or_print(out_path, mukai::cartan_csv(mukai::simple_roots(p)));
  return kExitOk;
}

// ---- duality -----------------------------------------------------------

int run_duality(const CommonOpts& opts) {
  const mukai::Params p = make_params(opts);
  const mukai::DualityReport report = mukai::verify_sqm_duality(p, opts.limit, opts.threads);
  if (opts.format == "json") {
    nlohmann::json j = json_header("duality", p, opts);
    j["count"] = report.count;
    j["count_swapped"] = report.count_swapped;
    j["ok"] = report.ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "minus-one count " << mukai::to_string(report.params) << ": "
              << report.count << "\n"
              << "minus-one count " << mukai::to_string(report.swapped) << ": "
              << report.count_swapped << "\n"
              << "match: " << yesno(report.ok) << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-lattice toolkit for point blow-ups of products of projective spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOpts classify_opts;
  std::string classify_cartan_out;
  auto* classify = app.add_subcommand("classify", "Mori dream verdict and invariants");
  add_common(classify, classify_opts, false);
  classify->add_option("--cartan-csv", classify_cartan_out, "also write the Cartan matrix CSV");

  CommonOpts minus_opts;
  bool minus_classes = false, minus_factor = false;
  auto* minus = app.add_subcommand("minus-one", "enumerate the (-1)-divisors");
  add_common(minus, minus_opts, false);
  minus->add_flag("--classes", minus_classes, "print the symmetry class table");
  minus->add_flag("--factor-classes", minus_factor, "merge classes under factor symmetry too");
  minus->add_option("--cache", minus_opts.cache_dir, "orbit cache directory");

  CommonOpts cones_opts;
  std::string cones_divisor;
  bool cones_certs = false;
  auto* cones = app.add_subcommand("cones", "effective / movable / big membership");
  add_common(cones, cones_opts, false);
  cones->add_option("divisor", cones_divisor, "divisor as \"[h1,.. | m1,..]\"")->required();
  cones->add_flag("--certificates", cones_certs, "print the LP certificate");

  CommonOpts h0_opts;
  std::string h0_divisor, h0_basis_out, h0_matrix_out;
  auto* h0cmd = app.add_subcommand("h0", "section-space dimension by interpolation");
  add_common(h0cmd, h0_opts);
  h0cmd->add_option("divisor", h0_divisor, "divisor as \"[h1,.. | m1,..]\"")->required();
  h0cmd->add_option("--basis-out", h0_basis_out, "write the section basis as JSON");
  h0cmd->add_option("--matrix-out", h0_matrix_out, "write the condition matrix as JSON");

  CommonOpts cox_opts;
  int64_t cox_max_degree = 2;
  int64_t cox_budget = 0;
  std::string cox_out;
  auto* cox = app.add_subcommand("coxcheck", "degree-1 generation report");
  add_common(cox, cox_opts);
  cox->add_option("--max-degree", cox_max_degree, "largest anticanonical degree to check");
  cox->add_option("--budget-ms", cox_budget, "wall-clock cap; report marked partial beyond it");
  cox->add_option("--out", cox_out, "write report to a file instead of stdout");

  CommonOpts cartan_opts;
  std::string cartan_out;
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of the simple roots as CSV");
  add_common(cartan, cartan_opts, false);
  cartan->add_option("--out", cartan_out, "output file (stdout when omitted)");

  CommonOpts duality_opts;
  auto* duality = app.add_subcommand("duality", "compare (-1)-counts of (a,b,c) and (c,b,a)");
  add_common(duality, duality_opts, false);

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return run_classify(classify_opts, classify_cartan_out);
    if (minus->parsed()) return run_minus_one(minus_opts, minus_classes, minus_factor);
    if (cones->parsed()) return run_cones(cones_opts, cones_divisor, cones_certs);
    if (h0cmd->parsed()) return run_h0(h0_opts, h0_divisor, h0_basis_out, h0_matrix_out);
    if (cox->parsed()) return run_coxcheck(cox_opts, cox_max_degree, cox_budget, cox_out);
    if (cartan->parsed()) return run_cartan(cartan_opts, cartan_out);
    if (duality->parsed()) return run_duality(duality_opts);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const mukai::not_mori_dream& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotMoriDream;
  } catch (const mukai::invariant_violation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
