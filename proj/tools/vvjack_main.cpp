#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "vvjack/verify.hpp"

namespace {

using namespace vvjack;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
  bool json = false;
  int workers = 1;
  size_t memo_budget = 1u << 20;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_flag("--json", c.json, "emit a JSON report");
  cmd->add_option("--workers", c.workers, "worker threads for scans/sweeps")
      ->envname("VVJACK_WORKERS");
  cmd->add_option("--memo-budget", c.memo_budget,
                  "max entries in the zeta memo table")
      ->envname("VVJACK_MEMO_BUDGET");
}

std::string scalar_or_int(const ScalarQk& s) { return s.str(); }

int emit(const Json& report, bool as_json, const std::string& text) {
  if (as_json) std::cout << report.dump(2) << "\n";
  else std::cout << text;
  const auto ok = report.find("pass");
  return (ok != report.end() && !ok->get<bool>()) ? 1 : 0;
}

int cmd_rsyt(const std::string& tau_str, const CommonOpts& c) {
  const Partition tau = Partition::parse(tau_str);
  const auto tabs = enumerate_rsyt(tau);
  Json report;
  report["command"] = "rsyt";
  report["tau"] = tau.parts;
  report["count"] = tabs.size();
  Json list = Json::array();
  std::string text = "tau = " + tau.str() + ": " + std::to_string(tabs.size()) +
                     " tableaux\n";
  for (const auto& t : tabs) {
    Json item;
    item["id"] = t.word();
    item["rows"] = t.rows;
    item["contents"] = t.content_vector();
    list.push_back(std::move(item));
    text += "  [" + t.word() + "]  contents ";
    text += composition_str(t.content_vector()) + "\n";
  }
  report["tableaux"] = std::move(list);
  return emit(report, c.json, text);
}

// resolves --tableau (row word) or defaults to the first tableau
int tableau_index(const ShapeData& sd, const std::string& id) {
  if (id.empty()) return 0;
  const int t = sd.index_of_word(id);
  if (t < 0) throw ParseError("unknown tableau id: " + id);
  return t;
}

int cmd_jack(const std::string& tau_str, const std::string& alpha_str,
             const std::string& tab_id, bool norm_only, const CommonOpts& c) {
  const Partition tau = Partition::parse(tau_str);
  const ShapeData sd(tau);
  const Composition alpha = composition_parse(alpha_str);
  if (static_cast<int>(alpha.size()) != sd.N)
    throw ParseError("alpha must have length " + std::to_string(sd.N));
  const int t = tableau_index(sd, tab_id);

  Json report;
  report["command"] = norm_only ? "norm" : "jack";
  report["tau"] = tau.parts;
  report["alpha"] = alpha;
  report["tableau"] = sd.tabs[t].word();
  Json xi = Json::array();
  std::string text = "zeta label: alpha = (" + composition_str(alpha) +
                     "), tableau [" + sd.tabs[t].word() + "]\n";
  text += "spectral vector:\n";
  for (int i = 1; i <= sd.N; ++i) {
    const std::string s = spectral_value(sd, alpha, t, i).str();
    xi.push_back(s);
    text += "  xi_" + std::to_string(i) + " = " + s + "\n";
  }
  report["spectral"] = std::move(xi);
  const std::string nrm = zeta_norm(sd, alpha, t).str();
  report["norm"] = nrm;
  text += "norm^2 = " + nrm + "\n";
  if (!norm_only) {
    JackContext ctx(sd, c.memo_budget);
    const VPoly& z = ctx.zeta(alpha, t);
    report["poly"] = vpoly_json(sd, z);
    text += "polynomial: " + std::to_string(z.term_count()) + " monomials\n";
    text += report["poly"].dump(2) + "\n";
  }
  return emit(report, c.json, text);
}

int cmd_minimal(const std::string& tau_str, bool antisym, bool skip_poly,
                bool force_poly, const CommonOpts& c) {
  const Partition tau = Partition::parse(tau_str);
  const ShapeData sd(tau);
  JackContext ctx(sd, c.memo_budget);

  const auto label = antisym ? min_antisymmetric_label(tau) : min_symmetric_label(tau);
  const HookNormFactored norm =
      antisym ? hook_norm_antisymmetric(tau) : hook_norm_symmetric(tau);

  // the polynomial has one zeta summand per rearrangement of lambda; skip the
  // construction when that grows past a small budget unless forced
  const size_t n_alphas = orbit_compositions(label.first).size();
  const bool build = force_poly || (!skip_poly && n_alphas * sd.dim() <= 2500);

  Json report;
  report["command"] = antisym ? "antisymmetric" : "symmetric";
  report["tau"] = tau.parts;
  report["lambda"] = label.first;
  report["tableau"] = label.second.word();
  report["norm_prefactor"] = bigq_str(norm.prefactor);
  Json factors = Json::array();
  std::string display = bigq_str(norm.prefactor);
  for (auto [hook, len] : norm.factors) {
    Json f;
    const std::string base =
        std::string("1") + (antisym ? "+" : "-") + std::to_string(hook) + "*k";
    f["base"] = base;
    f["n"] = len;
    factors.push_back(std::move(f));
    display += " * (" + base + ")_" + std::to_string(len);
  }
  report["norm_factors"] = std::move(factors);
  report["norm_factored"] = display;
  report["norm"] = norm.value().str();

  std::string text = (antisym ? "f^a" : "f^s");
  text += " for tau = " + tau.str() + "\n";
  text += "lambda = (" + composition_str(label.first) + "), tableau [" +
          label.second.word() + "]\n";
  text += "norm^2 = " + display + "\n";
  text += "       = " + norm.value().str() + "\n";

  if (build) {
    const MinimalPoly mp = antisym ? min_antisymmetric(sd, ctx, true)
                                   : min_symmetric(sd, ctx, true);
    report["poly"] = vpoly_json(sd, mp.poly);
    text += "polynomial: " + std::to_string(mp.poly.term_count()) +
            " monomials\n" + report["poly"].dump(2) + "\n";
  } else {
    report["poly"] = nullptr;
    report["note"] = "polynomial skipped (" + std::to_string(n_alphas) +
                     " zeta summands); pass --force-poly to build it";
    text += "polynomial skipped (" + std::to_string(n_alphas) +
            " zeta summands); pass --force-poly to build it\n";
  }
  return emit(report, c.json, text);
}

int cmd_verify(const std::string& tau_str, int nmax, const CommonOpts& c) {
  const Partition tau = Partition::parse(tau_str);
  const auto start = Clock::now();
  const auto results = run_verify_suite(tau, nmax, c.memo_budget);

  Json report;
  report["command"] = "verify";
  report["tau"] = tau.parts;
  report["nmax"] = nmax;
  Json checks = Json::array();
  bool all_pass = true;
  std::string text = "verify tau = " + tau.str() + ", nmax = " +
                     std::to_string(nmax) + "\n";
  Json timings;
  for (const auto& r : results) {
    Json item;
    item["name"] = r.name;
    item["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) item["counterexample"] = r.counterexample;
    checks.push_back(std::move(item));
    timings[r.name] = r.millis;
    all_pass = all_pass && r.pass;
    text += std::string("  ") + (r.pass ? "pass" : "FAIL") + "  " + r.name + "\n";
    if (!r.pass) text += "        " + r.counterexample.dump() + "\n";
  }
  report["checks"] = std::move(checks);
  report["pass"] = all_pass;
  Json tj;
  tj["total_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  tj["checks_ms"] = std::move(timings);
  report["timings"] = std::move(tj);
  text += all_pass ? "all checks passed\n" : "FAILURES present\n";
  return emit(report, c.json, text);
}

int cmd_scan(const std::string& tau_str, int dmax, const std::string& cand_str,
             int ncap, const CommonOpts& c) {
  const Partition tau = Partition::parse(tau_str);
  const ShapeData sd(tau);
  std::vector<BigQ> candidates;
  if (!cand_str.empty()) {
    size_t pos = 0;
    while (pos <= cand_str.size()) {
      const size_t comma = cand_str.find(',', pos);
      const std::string tok =
          cand_str.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos);
      candidates.push_back(bigq_parse(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    candidates = default_candidates(tau, ncap > 0 ? ncap : tau.max_hook());
  }

  const auto start = Clock::now();
  const ScanReport scan = singular_scan(sd, dmax, candidates, c.workers);

  Json report;
  report["command"] = "singular-scan";
  report["tau"] = tau.parts;
  report["dmax"] = dmax;
  Json cells = Json::array();
  Json flagged = Json::array();
  std::string text = "singular scan tau = " + tau.str() + ", degrees 0.." +
                     std::to_string(dmax) + "\n";
  for (const auto& cell : scan.cells) {
    Json item;
    item["kappa0"] = bigq_str(cell.kappa0);
    item["degree"] = cell.degree;
    if (cell.pole) item["pole"] = true;
    else item["corank"] = cell.corank;
    cells.push_back(std::move(item));
    if (cell.corank > 0) {
      Json f;
      f["kappa0"] = bigq_str(cell.kappa0);
      f["degree"] = cell.degree;
      f["corank"] = cell.corank;
      flagged.push_back(std::move(f));
      text += "  kappa0 = " + bigq_str(cell.kappa0) + ", degree " +
              std::to_string(cell.degree) + ": corank " +
              std::to_string(cell.corank) + "\n";
    }
  }
  report["cells"] = std::move(cells);
  report["singular_evidence"] = flagged;
  Json tj;
  tj["total_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report["timings"] = std::move(tj);
  text += std::to_string(flagged.size()) + " cells with positive corank\n";
  return emit(report, c.json, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vector-valued Jack polynomials for symmetric-group standard modules"};
  app.require_subcommand(1);

  std::string tau_str, alpha_str, tab_id, cand_str;
  int nmax = 2, dmax = 3, ncap = 0;
  bool skip_poly = false, force_poly = false;
  CommonOpts copts;

  auto* rsyt = app.add_subcommand("rsyt", "list the reversed standard tableaux");
  rsyt->add_option("tau", tau_str, "partition, e.g. 5,3,2")->required();
  CommonOpts rsyt_opts;
  add_common(rsyt, rsyt_opts);

  auto* jack = app.add_subcommand("jack", "construct one Jack polynomial");
  jack->add_option("--tau", tau_str, "shape partition")->required();
  jack->add_option("--alpha", alpha_str, "composition label")->required();
  jack->add_option("--tableau", tab_id, "tableau row word (default: first)");
  CommonOpts jack_opts;
  add_common(jack, jack_opts);

  auto* norm = app.add_subcommand("norm", "closed-form norm and spectral vector");
  norm->add_option("--tau", tau_str, "shape partition")->required();
  norm->add_option("--alpha", alpha_str, "composition label")->required();
  norm->add_option("--tableau", tab_id, "tableau row word (default: first)");
  CommonOpts norm_opts;
  add_common(norm, norm_opts);

  auto* sym = app.add_subcommand("symmetric", "minimal symmetric element and norm");
  sym->add_option("--tau", tau_str, "shape partition")->required();
  sym->add_flag("--skip-poly", skip_poly, "norm only, skip the polynomial");
  sym->add_flag("--force-poly", force_poly, "build the polynomial regardless of size");
  CommonOpts sym_opts;
  add_common(sym, sym_opts);

  auto* asym =
      app.add_subcommand("antisymmetric", "minimal antisymmetric element and norm");
  asym->add_option("--tau", tau_str, "shape partition")->required();
  asym->add_flag("--skip-poly", skip_poly, "norm only, skip the polynomial");
  asym->add_flag("--force-poly", force_poly, "build the polynomial regardless of size");
  CommonOpts asym_opts;
  add_common(asym, asym_opts);

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--tau", tau_str, "shape partition")->required();
  verify->add_option("--nmax", nmax, "polynomial degree cap (default 2)");
  CommonOpts verify_opts;
  add_common(verify, verify_opts);

  auto* scan = app.add_subcommand("singular-scan", "Gram-corank scan over kappa0");
  scan->add_option("--tau", tau_str, "shape partition")->required();
  scan->add_option("--dmax", dmax, "max polynomial degree (default 3)");
  scan->add_option("--candidates", cand_str, "comma-separated rationals n/m");
  scan->add_option("--ncap", ncap, "numerator cap for default candidates");
  CommonOpts scan_opts;
  add_common(scan, scan_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rsyt->parsed()) return cmd_rsyt(tau_str, rsyt_opts);
    if (jack->parsed()) return cmd_jack(tau_str, alpha_str, tab_id, false, jack_opts);
    if (norm->parsed()) return cmd_jack(tau_str, alpha_str, tab_id, true, norm_opts);
    if (sym->parsed())
      return cmd_minimal(tau_str, false, skip_poly, force_poly, sym_opts);
    if (asym->parsed())
      return cmd_minimal(tau_str, true, skip_poly, force_poly, asym_opts);
    if (verify->parsed()) return cmd_verify(tau_str, nmax, verify_opts);
    if (scan->parsed()) return cmd_scan(tau_str, dmax, cand_str, ncap, scan_opts);
  } catch (const vvjack::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
