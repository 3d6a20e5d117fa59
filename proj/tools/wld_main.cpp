// wld: verification toolkit for weighted low-lying-zero densities,
// weighted equidistribution measures, and their random-matrix counterparts.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wld/chebyshev.hpp"
#include "wld/kernels.hpp"
#include "wld/measures.hpp"
#include "wld/primesums.hpp"
#include "wld/residues.hpp"
#include "wld/rmt.hpp"
#include "wld/threads.hpp"
#include "wld/verify.hpp"

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw CLI::RuntimeError("cannot open output file: " + path, 4);
  out << body;
}

int run_b_table(int r_max, bool force, const std::string& out_path) {
  if (r_max < 1 || (r_max > wld::kDefaultMaxR && !force))
    throw CLI::RuntimeError("r-max above 8 requires --force", 2);
  std::ostringstream csv;
  csv << "r,j,numerator,denominator\n";
  for (int r = 1; r <= r_max; ++r) {
    const wld::BTable table = wld::b_table(r, force);
    for (const auto& [j, value] : table.values)
      csv << r << ',' << j << ',' << value.numerator_string() << ','
          << value.denominator_string() << '\n';
  }
  emit(out_path, csv.str());
  return 0;
}

struct FamilyColumn {
  std::string name;
  wld::KernelFamily family;
  int min_r = 1;
  int max_r = 1 << 20;
};

int run_density_curve(const std::string& family, int r, double x_min, double x_max, int npoints,
                      const std::string& out_path) {
  if (npoints < 1) throw CLI::RuntimeError("npoints must be >= 1", 2);
  const FamilyColumn all[] = {
      {"theoremA", wld::KernelFamily::theorem_a, 1, 3},
      {"conjectureD", wld::KernelFamily::conjecture_d, 1, wld::kDefaultMaxR},
      {"Sp", wld::KernelFamily::sp, 0},
      {"SOeven", wld::KernelFamily::so_even, 1},
      {"U", wld::KernelFamily::u, 1},
  };
  std::vector<FamilyColumn> columns;
  for (const FamilyColumn& c : all) {
    if (family != "all" && family != c.name) continue;
    if (r < c.min_r || r > c.max_r) {
      if (family == c.name) throw CLI::RuntimeError("family " + family + " undefined at this r", 2);
      continue;
    }
    columns.push_back(c);
  }
  if (columns.empty()) throw CLI::RuntimeError("unknown family: " + family, 2);

  std::ostringstream csv;
  csv << "x";
  for (const auto& c : columns) csv << ',' << c.name;
  csv << '\n';
  for (int i = 0; i < npoints; ++i) {
    const double x = npoints == 1 ? x_min : x_min + (x_max - x_min) * i / (npoints - 1.0);
    csv << fmt17(x);
    for (const auto& c : columns) csv << ',' << fmt17(wld::w_eval({c.family, r}, x));
    csv << '\n';
  }
  emit(out_path, csv.str());
  return 0;
}

int run_measure_moments(long p, int r, bool unweighted, int ell_max, const std::string& out_path) {
  const wld::MeasureSpec spec{p, r, !unweighted};
  std::ostringstream csv;
  csv << "p,r,harmonic,ell,moment_quadrature,moment_closed,abs_diff\n";
  for (int ell = 0; ell <= ell_max; ++ell) {
    const double quad = wld::cheb_moment(spec, ell);
    double closed = std::numeric_limits<double>::quiet_NaN();
    try {
      closed = wld::cheb_moment_closed(spec, ell);
    } catch (const std::invalid_argument&) {
      // no closed route for this family
    }
    csv << p << ',' << r << ',' << (spec.harmonic ? 1 : 0) << ',' << ell << ',' << fmt17(quad)
        << ',' << fmt17(closed) << ','
        << fmt17(std::isnan(closed) ? closed : std::abs(quad - closed)) << '\n';
  }
  emit(out_path, csv.str());
  return 0;
}

int run_measure_density(long p, int r, bool unweighted, int npoints, const std::string& out_path) {
  const wld::MeasureSpec spec{p, r, !unweighted};
  std::ostringstream csv;
  csv << "p,r,harmonic,x,density\n";
  for (int i = 0; i < npoints; ++i) {
    const double x = -2.0 + 4.0 * (i + 0.5) / npoints;
    csv << p << ',' << r << ',' << (spec.harmonic ? 1 : 0) << ',' << fmt17(x) << ','
        << fmt17(wld::measure_density(spec, x)) << '\n';
  }
  emit(out_path, csv.str());
  return 0;
}

int run_rmt_sim(int N, long samples, int r, double delta, std::uint64_t seed, int threads,
                const std::string& out_path) {
  wld::RmtConfig config;
  config.N = N;
  config.samples = samples;
  config.r = r;
  config.seed = seed;
  config.pair = wld::fejer_pair(delta);
  config.threads = threads;
  const wld::RmtEstimate est = wld::weighted_one_level(config);
  nlohmann::ordered_json j;
  j["estimate"] = est.weighted_mean;
  j["std_error"] = est.std_error;
  j["reference"] = est.reference;
  j["z_score"] = est.z_score;
  j["config"] = {{"N", N}, {"samples", samples}, {"r", r}, {"delta", delta}, {"seed", seed}};
  emit(out_path, j.dump(2) + "\n");
  return 0;
}

int run_lemma41(int n, double R, double delta, std::uint64_t limit, const std::string& out_path) {
  const wld::PrimeTable table = wld::sieve(limit);
  const wld::Lemma41Result res = wld::lemma41_partial_sum(n, R, wld::fejer_pair(delta), table);
  nlohmann::ordered_json j;
  j["lhs"] = res.lhs;
  j["rhs"] = res.rhs;
  j["rel_error"] = res.rel_error;
  j["config"] = {{"n", n}, {"R", R}, {"delta", delta}, {"limit", limit}};
  emit(out_path, j.dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& level, int threads, std::uint64_t seed,
               const std::string& out_path) {
  const wld::VerifyLevel lvl = level == "full" ? wld::VerifyLevel::full : wld::VerifyLevel::fast;
  const auto results = wld::run_verification(lvl, threads, seed);
  // timings go to stderr only: identical configurations must produce
  // byte-identical report files
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& c : results) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"note", c.note}});
    all_pass = all_pass && c.pass;
    std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  measured " << fmt17(c.measured)
              << "  tol " << fmt17(c.tolerance) << "  (" << c.seconds << " s)\n";
  }
  nlohmann::ordered_json j;
  j["level"] = level;
  j["seed"] = seed;
  j["pass"] = all_pass;
  j["checks"] = checks;
  emit(out_path, j.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for weighted density kernels, equidistribution "
               "measures, and random-matrix checks"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  app.add_option("--threads", threads, "worker cap (default: WLD_THREADS or hardware)");

  double rel_tol = 1e-12;
  app.add_option("--rel-tol", rel_tol, "adaptive quadrature relative tolerance")
      ->capture_default_str();

  std::string out_path;
  app.add_option("--out,-o", out_path, "output file (default: stdout)")->capture_default_str();

  // b-table
  auto* b = app.add_subcommand("b-table", "exact residue coefficients b_r(j) as CSV");
  b->fallthrough();
  int r_max = 4;
  bool force = false;
  b->add_option("--r-max", r_max, "largest r")->capture_default_str();
  b->add_flag("--force", force, "allow r above 8 (slow)");

  // density-curve
  auto* dc = app.add_subcommand("density-curve", "kernel values on a grid as CSV");
  dc->fallthrough();
  std::string family = "all";
  int dc_r = 1;
  double x_min = -5.0, x_max = 5.0;
  int npoints = 201;
  dc->add_option("--family", family, "theoremA|conjectureD|Sp|SOeven|U|all")->capture_default_str();
  dc->add_option("--r", dc_r, "weight exponent")->capture_default_str();
  dc->add_option("--x-min", x_min)->capture_default_str();
  dc->add_option("--x-max", x_max)->capture_default_str();
  dc->add_option("--npoints", npoints)->capture_default_str();

  // measure-moments
  auto* mm = app.add_subcommand("measure-moments", "measure moments, quadrature vs closed, CSV");
  mm->fallthrough();
  long mm_p = 2;
  int mm_r = 2, ell_max = 10;
  bool mm_unweighted = false;
  mm->add_option("--p", mm_p, "prime-power norm >= 2")->capture_default_str();
  mm->add_option("--r", mm_r, "weight exponent")->capture_default_str();
  mm->add_flag("--unweighted", mm_unweighted, "drop the adjoint-normalized weight");
  mm->add_option("--ell-max", ell_max)->capture_default_str();

  // measure-density
  auto* md = app.add_subcommand("measure-density", "measure density curve as CSV");
  md->fallthrough();
  long md_p = 2;
  int md_r = 2, md_npoints = 400;
  bool md_unweighted = false;
  md->add_option("--p", md_p)->capture_default_str();
  md->add_option("--r", md_r)->capture_default_str();
  md->add_flag("--unweighted", md_unweighted);
  md->add_option("--npoints", md_npoints)->capture_default_str();

  // rmt-sim
  auto* rs = app.add_subcommand("rmt-sim", "weighted one-level Monte Carlo on SO(2N), JSON");
  rs->fallthrough();
  int rs_N = 40, rs_r = 1;
  long rs_samples = 200000;
  double rs_delta = 0.5;
  std::uint64_t rs_seed = 1;
  rs->add_option("--N", rs_N, "half-dimension")->capture_default_str();
  rs->add_option("--samples", rs_samples)->capture_default_str();
  rs->add_option("--r", rs_r, "weight exponent det(I-U)^r")->capture_default_str();
  rs->add_option("--delta", rs_delta, "Fejer support radius")->capture_default_str();
  rs->add_option("--seed", rs_seed)->capture_default_str();

  // lemma41
  auto* lm = app.add_subcommand("lemma41", "prime-sum partial sums vs main term, JSON");
  lm->fallthrough();
  int lm_n = 1;
  double lm_R = 1e14, lm_delta = 0.5;
  std::uint64_t lm_limit = 10'000'000;
  lm->add_option("--n", lm_n, "log-power n >= 1")->capture_default_str();
  lm->add_option("--R", lm_R)->capture_default_str();
  lm->add_option("--delta", lm_delta)->capture_default_str();
  lm->add_option("--limit", lm_limit, "sieve bound")->capture_default_str();

  // verify
  auto* vf = app.add_subcommand("verify", "run the acceptance checks, JSON report");
  vf->fallthrough();
  std::string level = "fast";
  std::uint64_t vf_seed = 2024;
  vf->add_option("--level", level, "fast|full")->capture_default_str()
      ->check(CLI::IsMember({"fast", "full"}));
  vf->add_option("--seed", vf_seed, "Monte Carlo seed (full level)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  wld::default_quad_rel_tol() = rel_tol;
  try {
    if (b->parsed()) return run_b_table(r_max, force, out_path);
    if (dc->parsed()) return run_density_curve(family, dc_r, x_min, x_max, npoints, out_path);
    if (mm->parsed()) return run_measure_moments(mm_p, mm_r, mm_unweighted, ell_max, out_path);
    if (md->parsed()) return run_measure_density(md_p, md_r, md_unweighted, md_npoints, out_path);
    if (rs->parsed()) return run_rmt_sim(rs_N, rs_samples, rs_r, rs_delta, rs_seed, threads, out_path);
    if (lm->parsed()) return run_lemma41(lm_n, lm_R, lm_delta, lm_limit, out_path);
    if (vf->parsed()) return run_verify(level, threads, vf_seed, out_path);
  } catch (const CLI::RuntimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.get_exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
