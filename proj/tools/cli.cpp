#include "cli.hpp"

#include "qes/aim.hpp"
#include "qes/bender_dunne.hpp"
#include "qes/fixtures.hpp"
#include "qes/fock.hpp"
#include "qes/norms.hpp"
#include "qes/verify.hpp"

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include <ctime>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace qes::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;
  bool no_meta = false;

  std::string lambda, lambda2, beta, beta2;
  unsigned n = 0;
  bool fixture = false;
  std::string tol = "1e-24";
  std::string level;
  int n_max = -1;
  std::string form = "transformed";
  int count = -1;
  unsigned root = 1;
  double x_min = -3.0, x_max = 3.0;
  int points = 61;
};

// squared parameter from either spelling; never goes through a double
std::optional<Rat> squared(const std::string& plain, const std::string& sq, const char* name) {
  if (!sq.empty()) {
    Rat r = parse_rat(sq);
    if (r < 0) throw UsageError(fmt::format("--{}2 must be >= 0", name));
    return r;
  }
  if (!plain.empty()) {
    Rat r = parse_rat(plain);
    if (r < 0) throw UsageError(fmt::format("--{} must be >= 0", name));
    return Rat(r * r);
  }
  return std::nullopt;
}

Rat require(const std::optional<Rat>& v, const char* name) {
  if (!v) throw UsageError(fmt::format("missing --{0} or --{0}2", name));
  return *v;
}

std::string g17(double v) { return fmt::format("{:.17g}", v); }

void emit_json(std::ostream& out, const Options& o, const char* command, json params, json results) {
  json j;
  j["schema"] = "qes-rabi/v1";
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  if (!o.no_meta) j["meta"] = {{"generated", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)))}};
  out << j.dump(2) << "\n";
}

// --- aim ---

int cmd_aim(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1 || o.n > kDefaultAimNMax) throw UsageError(fmt::format("--n must be in 1..{}", kDefaultAimNMax));
  if (o.fixture && o.n > 5) throw UsageError("--fixture: the printed table covers n <= 5");
  const auto chain = termination_polys(o.n);
  const auto& t = chain.back();
  std::optional<AimFixtureReport> rep;
  if (o.fixture) rep = check_aim_fixture(chain);
  const auto energies = qes_energies_from_aim(t);

  if (o.format == "json") {
    json coeffs = json::array();
    for (const auto& c : t.coeffs) {
      json ks = json::array();
      for (unsigned k : c.peeled.linear_ks) ks.push_back(k);
      coeffs.push_back({{"d", c.d},
                        {"factored", c.peeled.to_string()},
                        {"expanded", c.poly.to_string()},
                        {"content", to_string(c.peeled.content)},
                        {"l_power", c.peeled.l_power},
                        {"energy_shifts", ks}});
    }
    json en = json::array();
    for (const auto& e : energies) en.push_back(e.energy.to_string());
    json res = {{"n", o.n}, {"sign", t.sign}, {"coefficients", coeffs}, {"y", t.y_poly.to_string()}, {"energies", en}};
    if (rep) {
      json errata = json::array(), bad = json::array();
      for (const auto& e : rep->applied_errata)
        errata.push_back({{"n", e.n}, {"d", e.d}, {"printed", e.printed.get_str()}, {"computed", e.corrected.get_str()}});
      for (const auto& m : rep->mismatches) bad.push_back(m);
      res["fixture"] = {{"passed", rep->passed}, {"entries_checked", rep->entries_checked}, {"errata", errata},
                        {"mismatches", bad}};
    }
    emit_json(out, o, "aim", {{"n", o.n}, {"fixture", o.fixture}}, res);
  } else if (o.format == "csv") {
    out << "n,d,factored,expanded\n";
    for (const auto& c : t.coeffs) out << fmt::format("{},{},{},{}\n", o.n, c.d, c.peeled.to_string(), c.poly.to_string());
  } else {
    for (const auto& c : t.coeffs) out << fmt::format("C[{},{}] = {}\n", o.n, c.d, c.peeled.to_string());
    out << fmt::format("Y_{} = {}\n", o.n, t.y_poly.to_string());
    out << "QES energies:";
    for (const auto& e : energies) out << " E = " << e.energy.to_string() << ";";
    out << "\n";
    if (rep) {
      out << fmt::format("fixture: {} entries checked, {}\n", rep->entries_checked, rep->passed ? "all match" : "MISMATCH");
      for (const auto& e : rep->applied_errata)
        out << fmt::format("  erratum C[{},{}]: printed {}, computed {} ({})\n", e.n, e.d, e.printed.get_str(),
                           e.corrected.get_str(), e.note);
      for (const auto& m : rep->mismatches) out << "  " << m << "\n";
    }
  }
  if (rep && !rep->passed) {
    err << "verification failed: aim fixture\n";
    return kCheckFailed;
  }
  return kOk;
}

// --- juddian ---

int cmd_juddian(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 12) throw UsageError("--n must be in 1..12");
  const Rat b2 = require(squared(o.beta, o.beta2, "beta"), "beta");
  const Rat tol = parse_rat(o.tol);
  if (tol <= 0) throw UsageError("--tol must be > 0");
  const auto s = solve_juddian(o.n, b2, tol);

  if (o.format == "json") {
    json roots = json::array(), boundary = json::array();
    for (const auto& r : s.roots) {
      json jr = {{"lambda2_lo", to_string(r.interval.lo)},
                 {"lambda2_hi", to_string(r.interval.hi)},
                 {"lambda2", to_double(r.lambda2)},
                 {"energy", to_double(qes_energy(o.n, 0, r.lambda2))},
                 {"exact", r.exact}};
      if (r.exact) {
        jr["lambda2_exact"] = to_string(r.lambda2);
        jr["energy_exact"] = to_string(qes_energy(o.n, 0, r.lambda2));
      }
      roots.push_back(jr);
    }
    for (const auto& r : s.boundary_roots) boundary.push_back(to_string(r));
    emit_json(out, o, "juddian", {{"N", o.n}, {"beta2", to_string(b2)}, {"tol", to_string(tol)}},
              {{"polynomial", s.poly.to_string('L')}, {"roots", roots}, {"boundary_roots", boundary}});
  } else if (o.format == "csv") {
    out << "N,root,lambda2_lo,lambda2_hi,lambda2,energy,exact\n";
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      const auto& r = s.roots[i];
      out << fmt::format("{},{},{},{},{},{},{}\n", o.n, i + 1, to_string(r.interval.lo), to_string(r.interval.hi),
                         g17(to_double(r.lambda2)), g17(to_double(qes_energy(o.n, 0, r.lambda2))), r.exact ? 1 : 0);
    }
  } else {
    out << fmt::format("J_{}(L; B = {}) = {}\n", o.n, to_string(b2), s.poly.to_string('L'));
    if (s.roots.empty()) out << "no roots with L > 0\n";
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      const auto& r = s.roots[i];
      const Rat e = qes_energy(o.n, 0, r.lambda2);
      if (r.exact)
        out << fmt::format("root {}: L = {} (exact), E = {}\n", i + 1, to_string(r.lambda2), to_string(e));
      else
        out << fmt::format("root {}: L in [{}, {}], L ~ {}, E ~ {}\n", i + 1, to_string(r.interval.lo),
                           to_string(r.interval.hi), g17(to_double(r.lambda2)), g17(to_double(e)));
    }
    for (const auto& r : s.boundary_roots)
      out << fmt::format("boundary root L = {} (non-physical: lambda must be > 0)\n", to_string(r));
  }
  return kOk;
}

// --- verify ---

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto level = parse_verify_level(o.level);
  const auto checks = run_verify(level);
  json items = json::array(), failed = json::array();
  for (const auto& c : checks) {
    items.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) failed.push_back(c.id);
  }
  const json summary = {{"checks", checks.size()}, {"passed", checks.size() - failed.size()}, {"failed", failed}};
  if (o.format == "json") {
    json res = summary;
    res["items"] = items;
    emit_json(out, o, "verify", {{"level", o.level}}, res);
  } else if (o.format == "csv") {
    out << "id,passed\n";
    for (const auto& c : checks) out << fmt::format("{},{}\n", c.id, c.passed ? 1 : 0);
  } else {
    for (const auto& c : checks) out << fmt::format("{} {}: {}\n", c.passed ? "PASS" : "FAIL", c.id, c.detail);
    json j = {{"schema", "qes-rabi/v1"}, {"command", "verify"}, {"params", {{"level", o.level}}}, {"results", summary}};
    out << j.dump() << "\n";
  }
  for (const auto& id : failed) err << "verification failed: " << id.get<std::string>() << "\n";
  return failed.empty() ? kOk : kCheckFailed;
}

// --- norms ---

int cmd_norms(const Options& o, std::ostream& out) {
  const Rat l2 = require(squared(o.lambda, o.lambda2, "lambda"), "lambda");
  if (o.n > 200) throw UsageError("--n must be <= 200");
  const auto seq = gamma_recursion(o.n, l2);
  const bool integral = l2.get_den() == 1;
  auto closed = [&](unsigned n) -> std::optional<double> {
    if (integral) return std::nullopt;
    return gamma_closed_form(n, to_double(l2));
  };

  if (o.format == "csv") {
    out << norms_csv(seq);
  } else if (o.format == "json") {
    json rows = json::array();
    for (unsigned n = 0; n < seq.values.size(); ++n) {
      json r = {{"n", n}, {"gamma", to_string(seq.values[n])}, {"gamma_float", to_double(seq.values[n])},
                {"sign", std::string(1, sign_char(seq.signs[n]))}};
      if (auto c = closed(n)) r["gamma_closed_form"] = *c;
      rows.push_back(r);
    }
    emit_json(out, o, "norms", {{"lambda2", to_string(l2)}, {"n", o.n}}, {{"rows", rows}});
  } else {
    out << fmt::format("squared norms at L = {}\n", to_string(l2));
    for (unsigned n = 0; n < seq.values.size(); ++n)
      out << fmt::format("gamma_{} = {}  ({})  {}\n", n, to_string(seq.values[n]), g17(to_double(seq.values[n])),
                         sign_char(seq.signs[n]));
  }
  return kOk;
}

// --- spectrum ---

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Rat l2 = require(squared(o.lambda, o.lambda2, "lambda"), "lambda");
  const Rat b2 = require(squared(o.beta, o.beta2, "beta"), "beta");
  const TruncationSpec spec{o.n_max >= 0 ? o.n_max : default_oracle_nmax(to_double(l2)), parse_form(o.form)};
  const auto s = oracle_spectrum(ModelParams::exact(l2, b2), spec);
  const std::size_t shown = o.count >= 0 ? std::min<std::size_t>(o.count, s.eigenvalues.size()) : s.eigenvalues.size();

  if (o.format == "json") {
    json ev = json::array();
    for (std::size_t i = 0; i < shown; ++i) ev.push_back(s.eigenvalues[i]);
    emit_json(out, o, "spectrum",
              {{"lambda2", to_string(l2)}, {"beta2", to_string(b2)}, {"n_max", spec.n_max}, {"form", form_name(spec.form)}},
              {{"dim", spec.dim()}, {"eigenvalues", ev}});
  } else {
    if (o.format == "csv")
      out << fmt::format("# lambda2={},beta2={},n_max={},form={}\nindex,eigenvalue\n", to_string(l2), to_string(b2),
                         spec.n_max, form_name(spec.form));
    else
      out << fmt::format("{} form, n_max = {}, L = {}, B = {}\n", form_name(spec.form), spec.n_max, to_string(l2),
                         to_string(b2));
    for (std::size_t i = 0; i < shown; ++i)
      out << (o.format == "csv" ? fmt::format("{},{}\n", i, g17(s.eigenvalues[i]))
                                : fmt::format("{:>4}  {}\n", i, g17(s.eigenvalues[i])));
  }
  return kOk;
}

// --- wavefunction ---

int cmd_wavefunction(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 12) throw UsageError("--N must be in 1..12");
  if (o.points < 1) throw UsageError("--points must be >= 1");
  const Rat b2 = require(squared(o.beta, o.beta2, "beta"), "beta");

  QesEigenfunction f;
  bool exact = true;
  std::string note;
  if (auto l2 = squared(o.lambda, o.lambda2, "lambda")) {
    f = qes_eigenfunction(o.n, *l2, b2);
  } else {
    const auto s = solve_juddian(o.n, b2, parse_rat(o.tol));
    if (s.roots.empty()) throw std::domain_error(fmt::format("J_{} has no root with L > 0 at B = {}", o.n, to_string(b2)));
    if (o.root < 1 || o.root > s.roots.size())
      throw UsageError(fmt::format("--root must be in 1..{}", s.roots.size()));
    const auto& r = s.roots[o.root - 1];
    exact = r.exact;
    if (exact) {
      f = qes_eigenfunction(o.n, r.lambda2, b2);
    } else {
      // irrational root: chi is exact at the certified rational midpoint
      f = near_qes_eigenfunction(o.n, r.lambda2, b2);
      note = fmt::format("L is the midpoint of a certified enclosure of width {}", to_string(Rat(r.interval.hi - r.interval.lo)));
    }
  }
  const Rat l2 = qes_energy(o.n, 0, 0) - f.energy;
  const ModelParams mp = ModelParams::exact(l2, b2);
  const double energy = to_double(f.energy);
  const auto psi = psi_pair_from_chi(f.chi, energy, mp);
  const auto grid = residual_grid(o.x_min, o.x_max, o.points, mp.lambda());
  const double resid = system_residual(psi, energy, mp, grid);
  std::vector<Rat> coeffs;
  for (const auto& c : f.chi.coefficients_in(Var::X)) coeffs.push_back(c.constant_term());

  if (o.format == "json") {
    json cj = json::array(), samples = json::array();
    for (const auto& c : coeffs) cj.push_back(to_string(c));
    for (double x : grid) samples.push_back({{"x", x}, {"psi1", psi.psi1(x).value}, {"psi2", psi.psi2(x).value}});
    json res = {{"lambda2", to_string(l2)},
                {"lambda2_float", to_double(l2)},
                {"exact", exact},
                {"energy", to_string(f.energy)},
                {"chi", f.chi.to_string()},
                {"chi_coefficients", cj},
                {"juddian_value", to_string(f.juddian_value)},
                {"system_residual", resid},
                {"samples", samples}};
    if (!note.empty()) res["note"] = note;
    emit_json(out, o, "wavefunction", {{"N", o.n}, {"beta2", to_string(b2)}, {"root", o.root}}, res);
  } else if (o.format == "csv") {
    out << fmt::format("# chi = {}, L = {}, E = {}\nx,psi1,psi2\n", f.chi.to_string(), to_string(l2), to_string(f.energy));
    for (double x : grid) out << fmt::format("{},{},{}\n", g17(x), g17(psi.psi1(x).value), g17(psi.psi2(x).value));
  } else {
    out << fmt::format("N = {}, B = {}, L = {}{}, E = {}\n", o.n, to_string(b2), to_string(l2),
                       exact ? "" : " (approx.)", to_string(f.energy));
    out << fmt::format("chi = {}  (X = xi)\n", f.chi.to_string());
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << fmt::format("  u_{} = {}\n", k, to_string(coeffs[k]));
    if (!exact) out << fmt::format("J_{} at this L = {}  ({})\n", o.n, g17(to_double(f.juddian_value)), note);
    out << fmt::format("max first-order system residual on the grid = {:.3e}\n", resid);
    out << "x  psi1  psi2\n";
    for (double x : grid) out << fmt::format("{}  {}  {}\n", g17(x), g17(psi.psi1(x).value), g17(psi.psi2(x).value));
  }
  return kOk;
}

void add_params(CLI::App* sub, Options& o, bool lambda, bool beta) {
  if (lambda) {
    auto* a = sub->add_option("--lambda", o.lambda, "coupling lambda (exact decimal or p/q)");
    auto* b = sub->add_option("--lambda2", o.lambda2, "lambda^2 (exact decimal or p/q)");
    a->excludes(b);
  }
  if (beta) {
    auto* a = sub->add_option("--beta", o.beta, "beta (exact decimal or p/q)");
    auto* b = sub->add_option("--beta2", o.beta2, "beta^2 (exact decimal or p/q)");
    a->excludes(b);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact QES sector of the Rabi Hamiltonian", "qes-rabi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", o.output, "write to this file instead of stdout");
  app.add_flag("--no-meta", o.no_meta, "omit the timestamp block from JSON");

  auto* aim = app.add_subcommand("aim", "AIM termination coefficients C_nd and Y_n");
  aim->add_option("--n", o.n, "iteration")->required();
  aim->add_flag("--fixture", o.fixture, "compare with the embedded printed table (n <= 5)");

  auto* jud = app.add_subcommand("juddian", "certified roots of J_N(L; B) in L > 0");
  jud->add_option("--n", o.n, "N")->required();
  jud->add_option("--tol", o.tol, "enclosure width");
  add_params(jud, o, false, true);

  auto* ver = app.add_subcommand("verify", "run the acceptance checks");
  ver->add_option("level", o.level, "fixtures | cross | oracle | all")->required();

  auto* nrm = app.add_subcommand("norms", "squared norms gamma_0..gamma_n");
  nrm->add_option("--n", o.n, "last index")->required();
  add_params(nrm, o, true, false);

  auto* spc = app.add_subcommand("spectrum", "truncated Fock-space spectrum");
  spc->add_option("--nmax", o.n_max, "Fock cutoff (default 40 + 40 L, or $QES_RABI_NMAX_DEFAULT)");
  spc->add_option("--form", o.form, "transformed | original");
  spc->add_option("--count", o.count, "print only the lowest eigenvalues");
  add_params(spc, o, true, true);

  auto* wav = app.add_subcommand("wavefunction", "exact chi and sampled (psi1, psi2) at a Juddian point");
  wav->add_option("--N", o.n, "N")->required();
  wav->add_option("--root", o.root, "which positive root of J_N (1 = smallest)");
  wav->add_option("--tol", o.tol, "enclosure width for irrational roots");
  wav->add_option("--x-min", o.x_min);
  wav->add_option("--x-max", o.x_max);
  wav->add_option("--points", o.points);
  add_params(wav, o, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open " << o.output << "\n";
      return kError;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;

  try {
    if (*aim) return cmd_aim(o, sink, err);
    if (*jud) return cmd_juddian(o, sink);
    if (*ver) return cmd_verify(o, sink, err);
    if (*nrm) return cmd_norms(o, sink);
    if (*spc) return cmd_spectrum(o, sink);
    if (*wav) return cmd_wavefunction(o, sink);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace qes::cli
