#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "cartan/io.hpp"
#include "cartan/verify.hpp"

using namespace cartan;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CARTAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Json, IntMatrixRoundTripIsExact) {
  IntMatrix m{{9007199254740993LL, -1}, {0, -9007199254740993LL}};  // 2^53 + 1 does not survive a double
  const json j = io::to_json(m);
  EXPECT_TRUE(j[0][0].is_string());
  EXPECT_EQ(io::int_matrix_from_json(json::parse(j.dump())), m);
  EXPECT_EQ(io::int_matrix_from_json(io::to_json(cartan_matrix(E(8)))), cartan_matrix(E(8)));
  EXPECT_THROW(io::int_matrix_from_json(json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
}

TEST(Json, ComplexAndEigenpairRoundTrip) {
  std::mt19937 rng(4);
  std::normal_distribution<double> g;
  ComplexVector v(7);
  for (auto& z : v) z = {g(rng), g(rng)};
  EXPECT_EQ(io::complex_vector_from_json(json::parse(io::to_json(v).dump())), v);
  for (const auto& p : spectral::catalog_spectrum(E(6))) {
    const auto back = io::eigenpair_from_json(json::parse(io::to_json(p).dump()));
    EXPECT_EQ(back.k, p.k);
    EXPECT_EQ(back.h, p.h);
    EXPECT_EQ(back.lambda, p.lambda);
    EXPECT_EQ(back.vector, p.vector);
    EXPECT_EQ(back.residual, p.residual);
  }
}

TEST(Json, ReportRoundTrip) {
  for (const auto& r : verify::run("steinberg")) {
    const auto back = verify::report_from_json(json::parse(verify::to_json(r).dump()));
    EXPECT_EQ(back.name, r.name);
    EXPECT_EQ(back.passed, r.passed);
    EXPECT_EQ(back.deviation, r.deviation);
    EXPECT_EQ(back.tolerance, r.tolerance);
    EXPECT_EQ(back.details, r.details);
  }
  const verify::VerificationReport broken{"x", false, std::numeric_limits<double>::infinity(), 0.0, "error"};
  EXPECT_TRUE(std::isinf(verify::report_from_json(verify::to_json(broken)).deviation));
}

TEST(Json, CatalogShape) {
  const json j = io::to_json(catalog(E(8)));
  EXPECT_EQ(j["system"], "E8");
  EXPECT_EQ(j["h"], 30);
  EXPECT_EQ(j["exponents"], (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(j["edges"].size(), 7u);
}

TEST(Verify, ReportStatusMatchesTolerance) {
  for (const auto& r : verify::run("all")) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.details;
    EXPECT_GE(r.deviation, 0.0);
    if (r.passed) {
      EXPECT_LE(r.deviation, r.tolerance) << r.name;
    }
  }
  EXPECT_THROW(verify::run("bogus"), std::invalid_argument);
  EXPECT_EQ(verify::names().back(), "all");
  EXPECT_EQ(verify::names().size(), 12u);
}

TEST(Verify, TinyToleranceFailsFloatingChecks) {
  const auto r = verify::run("pf-zamolodchikov", {1e-12});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].passed);
  // exact checks ignore the scale
  EXPECT_TRUE(verify::run("steinberg", {1e-12})[0].passed);
}

TEST(Cli, Catalog) {
  auto r = run_cli("catalog E8");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("h = 30"), std::string::npos);
  EXPECT_NE(r.out.find(" -1  0  2 -1  0  0  0  0"), std::string::npos);
  r = run_cli("catalog A1 --json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["cartan"], json::parse(R"([["2"]])"));
  EXPECT_EQ(run_cli("catalog Z9").status, 2);
  EXPECT_EQ(run_cli("catalog E9").status, 2);
  EXPECT_EQ(run_cli("").status, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run_cli("verify e8-factorization").status, 0);
  EXPECT_EQ(run_cli("verify bogus").status, 2);
  EXPECT_EQ(run_cli("verify steinberg --tolerance-scale 0").status, 2);
  EXPECT_EQ(run_cli("verify pf-zamolodchikov --tolerance-scale 1e-12").status, 1);
  const auto a = run_cli("verify all --json");
  const auto b = run_cli("verify all --json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["checks"].size(), 11u);
}

TEST(Cli, Eigen) {
  auto r = run_cli("eigen A2");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["spectrum"][0]["lambda"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["spectrum"][1]["lambda"].get<double>(), 3.0, 1e-12);

  r = run_cli("eigen A1 --q 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(json::parse(r.out)["eigenvalues"][0].get<double>(), 2.0, 1e-12);

  r = run_cli("eigen E8 --q 2 --format json");
  ASSERT_EQ(r.status, 0);
  const json e8 = json::parse(r.out);
  EXPECT_EQ(e8["exponent_vector"], (std::vector<int>{0, 1, 1, 2, 3, 4, 5, 6}));
  std::vector<double> expect;
  for (const auto& p : e8["spectrum"]) expect.push_back(1 + (p["lambda"].get<double>() - 2) * std::sqrt(2.0) + 2);
  auto got = e8["eigenvalues"].get<std::vector<double>>();
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(got[i], expect[i], 1e-9);

  r = run_cli("eigen A3 --format csv");
  EXPECT_EQ(lines(r.out).front(), "k,lambda");
  EXPECT_EQ(lines(r.out).size(), 4u);
  EXPECT_EQ(run_cli("eigen A2 --q 0").status, 2);
  EXPECT_EQ(run_cli("eigen A2 --q -1").status, 2);
  EXPECT_EQ(run_cli("eigen A2 --format xml").status, 2);
}

TEST(Cli, Ising) {
  auto r = run_cli("ising");
  ASSERT_EQ(r.status, 0);
  auto ls = lines(r.out);
  EXPECT_EQ(ls.front(), "p,epsilon");
  EXPECT_EQ(ls.size(), 1u + 256u);

  // classical N = 4: excitation energies from a brute-force bitstring oracle
  r = run_cli("ising --n 4 --J 1 --hx 0 --hz 0");
  ASSERT_EQ(r.status, 0);
  ls = lines(r.out);
  std::vector<double> got, expect;
  for (std::size_t i = 1; i < ls.size(); ++i) got.push_back(std::stod(ls[i].substr(ls[i].find(',') + 1)));
  for (unsigned s = 0; s < 16; ++s) {
    int bonds = 0;
    for (int i = 0; i < 4; ++i) bonds += (((s >> i) ^ (s >> ((i + 1) % 4))) & 1) ? -1 : 1;
    expect.push_back(-bonds + 4.0);
  }
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);

  EXPECT_EQ(run_cli("ising --n 20").status, 2);
  EXPECT_EQ(run_cli("ising --n 1").status, 2);
  EXPECT_EQ(run_cli("ising --J -1").status, 2);
  EXPECT_EQ(run_cli("ising --bands -1").status, 2);
}

TEST(Cli, IsingFitsToFile) {
  const std::string path = ::testing::TempDir() + "ising_fit.csv";
  const auto r = run_cli("ising --n 8 --hx 3 --bands 1 --out " + path);
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["exploratory"].get<bool>());
  EXPECT_NEAR(j["fits"][0]["mass"].get<double>(), 4.0, 1e-2);
  std::FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}
