// Command-line front end: catalog, verify, eigen, ising.
// Exit codes: 0 ok, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cartan/io.hpp"
#include "cartan/qdeform.hpp"
#include "cartan/rootsys.hpp"
#include "cartan/spectral.hpp"
#include "cartan/verify.hpp"

namespace {

using namespace cartan;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystemId parse_system(const std::string& s) {
  try {
    return RootSystemId::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int cmd_catalog(const std::string& system, bool as_json) {
  const auto d = catalog(parse_system(system));
  if (as_json) {
    std::cout << io::to_json(d).dump(2) << '\n';
    return 0;
  }
  std::cout << d.id.name() << "  rank " << d.rank << "  h = " << d.h << "\nexponents:";
  for (int k : d.exponents) std::cout << ' ' << k;
  std::cout << "\ncoloring:";
  for (std::size_t i = 0; i < d.coloring.size(); ++i)
    std::cout << ' ' << i + 1 << (d.coloring[i] == Color::white ? "w" : "b");
  std::cout << "\ncartan matrix:\n";
  for (std::size_t i = 0; i < d.cartan.rows(); ++i) {
    for (std::size_t j = 0; j < d.cartan.cols(); ++j) std::cout << std::setw(3) << d.cartan(i, j);
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& name, bool as_json, double scale) {
  if (!(scale > 0.0)) throw UsageError("tolerance scale must be positive");
  std::vector<verify::VerificationReport> reports;
  try {
    reports = verify::run(name, {scale});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  if (as_json) {
    json a = json::array();
    for (const auto& r : reports) a.push_back(verify::to_json(r));
    std::cout << json{{"checks", a}, {"status", ok ? "pass" : "fail"}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports)
      std::cout << std::left << std::setw(18) << r.name << (r.passed ? "PASS" : "FAIL") << "  deviation "
                << std::scientific << std::setprecision(2) << r.deviation << " (tol " << r.tolerance << ")  "
                << r.details << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_eigen(const std::string& system, std::optional<double> q, const std::string& format) {
  const auto id = parse_system(system);
  if (q && !(*q > 0.0 && std::isfinite(*q))) throw UsageError("--q must be a positive real number");
  const auto spec = spectral::catalog_spectrum(id);
  if (format == "csv") {
    std::cout << (q ? "k,lambda,lambda_q\n" : "k,lambda\n");
    std::cout << std::setprecision(17);
    for (const auto& p : spec) {
      std::cout << p.k << ',' << p.lambda;
      if (q) std::cout << ',' << qdeform::q_eigenvalue(p.lambda, *q);
      std::cout << '\n';
    }
    return 0;
  }
  json out{{"system", id.name()}, {"spectrum", io::to_json(spec)}};
  if (q) {
    const auto d = qdeform::deform(id);
    json eig = json::array();
    for (double x : qdeform::q_spectrum(d, *q)) eig.push_back(x);
    out["q"] = *q;
    out["eigenvalues"] = eig;
    out["exponent_vector"] = d.exponent_vector;
    out["certificate_deviation"] = qdeform::conjugation_certificate(d, *q);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_ising(const ising::IsingParams& p, int bands, const std::string& out_path) {
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (bands < 0) throw UsageError("--bands must be nonnegative");
  const auto spec = ising::momentum_spectrum(p);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot open " + out_path);
  }
  std::ostream& csv = out_path.empty() ? std::cout : file;
  io::write_csv(csv, spec);
  if (bands > 0) {
    json fits = json::array();
    for (const auto& f : ising::dispersion_probe(spec, bands)) fits.push_back(io::to_json(f));
    json j{{"exploratory", true}, {"ground_energy", spec.ground_energy}, {"fits", fits}};
    (out_path.empty() ? std::cerr : std::cout) << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan/Coxeter correspondence toolkit"};
  app.require_subcommand(1);

  std::string system, check, format = "json", out_path;
  bool as_json = false;
  double scale = 1.0;
  std::optional<double> q;
  ising::IsingParams ip;
  int bands = 0;

  auto* cat = app.add_subcommand("catalog", "Cartan matrix, exponents, Coxeter number and coloring");
  cat->add_option("system", system, "A<n>, D<n>, E6, E7 or E8")->required();
  cat->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "run a named identity check");
  ver->add_option("name", check)->required()->check(CLI::IsMember(verify::names()));
  ver->add_flag("--json", as_json);
  ver->add_option("--tolerance-scale", scale, "multiply every floating-point tolerance");

  auto* eig = app.add_subcommand("eigen", "spectrum of a Cartan matrix, optionally q-deformed");
  eig->add_option("system", system)->required();
  eig->add_option("--q", q, "deformation parameter (> 0)");
  eig->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* isg = app.add_subcommand("ising", "momentum-resolved spectrum of the periodic Ising chain");
  isg->add_option("--n", ip.n, "sites (2..14)");
  isg->add_option("--J", ip.J);
  isg->add_option("--hx", ip.hx);
  isg->add_option("--hz", ip.hz);
  isg->add_option("--bands", bands, "fit this many dispersion bands (exploratory)");
  isg->add_option("--out", out_path, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cat) return cmd_catalog(system, as_json);
    if (*ver) return cmd_verify(check, as_json, scale);
    if (*eig) return cmd_eigen(system, q, format);
    if (*isg) return cmd_ising(ip, bands, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
