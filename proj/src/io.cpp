#include "photonsub/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace photonsub::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  // shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v || (std::isnan(back) && std::isnan(v))) return buf;
  }
  return buf;
}

json to_json(const StateSpec& spec) {
  return json{{"kind", to_string(spec.kind)},
              {"m", spec.m},
              {"lambda", spec.lambda},
              {"mu", spec.mu},
              {"j", spec.j}};
}

StateSpec state_spec_from_json(const json& j) {
  StateSpec spec;
  spec.kind = state_kind_from_string(j.at("kind").get<std::string>());
  spec.m = j.value("m", 0);
  spec.lambda = j.value("lambda", 0.0);
  spec.mu = j.value("mu", 0.0);
  spec.j = j.value("j", 0);
  spec.validate();
  return spec;
}

json to_json(const ChannelParams& params) {
  return json{{"gamma", params.gamma}, {"eta", params.eta}};
}

ChannelParams channel_params_from_json(const json& j) {
  ChannelParams params;
  params.gamma = j.at("gamma").get<double>();
  params.eta = j.at("eta").get<double>();
  params.validate();
  return params;
}

json to_json(const GridSpec& grid) {
  return json{{"q_max", grid.q_max}, {"n_points", grid.n_points}};
}

GridSpec grid_spec_from_json(const json& j) {
  GridSpec grid;
  grid.q_max = j.at("q_max").get<double>();
  grid.n_points = j.at("n_points").get<int>();
  grid.validate();
  return grid;
}

namespace {

void atomic_rename(const fs::path& tmp, const fs::path& path) {
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("failed to move " + tmp.string() + " to " + path.string() +
                             ": " + ec.message());
  }
}

fs::path tmp_name(const fs::path& path) {
  fs::path tmp = path;
  tmp += ".tmp";
  return tmp;
}

} // namespace

void write_text_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = tmp_name(path);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for " + tmp.string());
  }
  atomic_rename(tmp, path);
}

void write_wigner_csv(const fs::path& path, const WignerField& field) {
  const auto q = field.grid.axis();
  const int n = field.grid.n_points;
  std::string out = "q,p,w\n";
  out.reserve(static_cast<size_t>(n) * n * 24);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out += format_double(q[static_cast<size_t>(i)]);
      out += ',';
      out += format_double(q[static_cast<size_t>(j)]);
      out += ',';
      out += format_double(field.at(i, j));
      out += '\n';
    }
  write_text_atomic(path, out);
}

void write_wigner_binary(const fs::path& path, const WignerField& field) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = tmp_name(path);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * sizeof(double)));
    if (!out.good()) throw std::runtime_error("write failed for " + tmp.string());
  }
  atomic_rename(tmp, path);
}

void write_sidecar(const fs::path& path, const json& config) {
  write_text_atomic(path, config.dump(2) + "\n");
}

void write_fano_csv(const fs::path& path, const std::vector<FanoRow>& rows) {
  std::string out = "m,lambda,eta,fano_exact,fano_wigner\n";
  for (const FanoRow& r : rows) {
    out += std::to_string(r.m);
    out += ',';
    out += format_double(r.lambda);
    out += ',';
    out += format_double(r.eta);
    out += ',';
    out += format_double(r.fano_exact);
    out += ',';
    out += format_double(r.fano_wigner);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_fisher_csv(const fs::path& path, const std::vector<FisherRow>& rows) {
  std::string out = "state_kind,m_or_j,lambda_or_mu,gamma,eta,fisher,delta_gamma,dgamma_step\n";
  for (const FisherRow& r : rows) {
    out += to_string(r.state_kind);
    out += ',';
    out += std::to_string(r.m_or_j);
    out += ',';
    out += format_double(r.lambda_or_mu);
    out += ',';
    out += format_double(r.gamma);
    out += ',';
    out += format_double(r.eta);
    out += ',';
    out += format_double(r.fisher);
    out += ',';
    out += format_double(r.delta_gamma);
    out += ',';
    out += format_double(r.dgamma_step);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_negativity_csv(const fs::path& path, const std::vector<NegativityRow>& rows) {
  std::string out = "m,lambda,gamma,eta,delta\n";
  for (const NegativityRow& r : rows) {
    out += std::to_string(r.m);
    out += ',';
    out += format_double(r.lambda);
    out += ',';
    out += format_double(r.gamma);
    out += ',';
    out += format_double(r.eta);
    out += ',';
    out += format_double(r.delta);
    out += '\n';
  }
  write_text_atomic(path, out);
}

} // namespace photonsub::io
