#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "photonsub/io.hpp"

using namespace photonsub;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "photonsub_io_test";
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("format_double round-trips arbitrary doubles") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-30, 30);
  for (int i = 0; i < 2000; ++i) {
    const double v = mant(rng) * std::pow(10.0, expo(rng));
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(io::format_double(0.25) == "0.25");
}

TEST_CASE("state spec serialization round trip") {
  for (const StateSpec spec :
       {StateSpec::subtracted_tbs(2, 0.37), StateSpec::thermal(1.5),
        StateSpec::coherent(0.01), StateSpec::fock(4)}) {
    const StateSpec back = io::state_spec_from_json(io::to_json(spec));
    CHECK(back.kind == spec.kind);
    CHECK(back.m == spec.m);
    CHECK(back.lambda == spec.lambda);
    CHECK(back.mu == spec.mu);
    CHECK(back.j == spec.j);
  }
  CHECK_THROWS(io::state_spec_from_json({{"kind", "squeezed"}}));
}

TEST_CASE("channel params: tau is derived, never read") {
  const ChannelParams ch = io::channel_params_from_json({{"gamma", 0.5}, {"eta", 0.98}});
  CHECK(ch.tau() == doctest::Approx(0.49));
  const auto j = io::to_json(ch);
  CHECK_FALSE(j.contains("tau"));
  CHECK_THROWS(io::channel_params_from_json({{"gamma", 1.5}, {"eta", 0.98}}));
}

TEST_CASE("wigner CSV is byte-identical across rewrites") {
  const GridSpec grid{3.0, 41};
  const WignerField field = wigner_subtracted_lossy(1, 0.01, 0.98, grid);
  const fs::path dir = temp_dir();
  io::write_wigner_csv(dir / "a.csv", field);
  io::write_wigner_csv(dir / "b.csv", field);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.substr(0, 6) == "q,p,w\n");
  CHECK_FALSE(fs::exists(dir / "a.csv.tmp")); // atomic write leaves no temp file
}

TEST_CASE("binary dump holds the row-major values") {
  const GridSpec grid{3.0, 21};
  const WignerField field = wigner_subtracted_lossy(0, 0.1, 1.0, grid);
  const fs::path dir = temp_dir();
  io::write_wigner_binary(dir / "field.bin", field);
  std::ifstream in(dir / "field.bin", std::ios::binary);
  std::vector<double> back(field.values.size());
  in.read(reinterpret_cast<char*>(back.data()),
          static_cast<std::streamsize>(back.size() * sizeof(double)));
  CHECK(in.gcount() ==
        static_cast<std::streamsize>(back.size() * sizeof(double)));
  CHECK(back == field.values);
}

TEST_CASE("sidecar and table writers") {
  const fs::path dir = temp_dir();
  io::write_sidecar(dir / "run.json", {{"command", "wigner"}, {"tol", 1e-12}});
  const auto parsed = nlohmann::json::parse(slurp(dir / "run.json"));
  CHECK(parsed["command"] == "wigner");

  io::write_fano_csv(dir / "fano.csv", {{1, 0.1, 0.98, 0.18, 0.19}});
  CHECK(slurp(dir / "fano.csv") ==
        "m,lambda,eta,fano_exact,fano_wigner\n1,0.1,0.98,0.18,0.19\n");

  FisherRow row;
  row.state_kind = StateKind::Coherent;
  row.lambda_or_mu = 0.01;
  row.gamma = 0.1;
  row.eta = 0.98;
  row.fisher = 2.0;
  row.delta_gamma = 1.0 / std::sqrt(2.0);
  row.dgamma_step = 1e-3;
  io::write_fisher_csv(dir / "fisher.csv", {row});
  const std::string fisher = slurp(dir / "fisher.csv");
  CHECK(fisher.find("state_kind,m_or_j,lambda_or_mu,gamma,eta,fisher,delta_gamma,"
                    "dgamma_step") == 0);
  CHECK(fisher.find("coherent,0,0.01,0.1,0.98,2,") != std::string::npos);

  io::write_negativity_csv(dir / "neg.csv", {{2, 0.01, 0.3, 0.98, 0.05}});
  CHECK(slurp(dir / "neg.csv") ==
        "m,lambda,gamma,eta,delta\n2,0.01,0.3,0.98,0.05\n");
}
