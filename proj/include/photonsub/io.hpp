#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonsub/channels.hpp"
#include "photonsub/metrology.hpp"
#include "photonsub/phasespace.hpp"
#include "photonsub/statistics.hpp"

namespace photonsub::io {

/// Shortest decimal form that round-trips a double.
std::string format_double(double v);

nlohmann::json to_json(const StateSpec& spec);
StateSpec state_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChannelParams& params); // gamma, eta; tau derived
ChannelParams channel_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GridSpec& grid);
GridSpec grid_spec_from_json(const nlohmann::json& j);

/// Atomic write: temp file in the target directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// CSV with columns q,p,w in fixed row-major order.
void write_wigner_csv(const std::filesystem::path& path, const WignerField& field);

/// Row-major little-endian doubles; grid metadata lives in the sidecar.
void write_wigner_binary(const std::filesystem::path& path, const WignerField& field);

void write_sidecar(const std::filesystem::path& path, const nlohmann::json& config);

/// CSV with columns m,lambda,eta,fano_exact,fano_wigner.
void write_fano_csv(const std::filesystem::path& path, const std::vector<FanoRow>& rows);

/// CSV with columns state_kind,m_or_j,lambda_or_mu,gamma,eta,fisher,delta_gamma,dgamma_step.
void write_fisher_csv(const std::filesystem::path& path, const std::vector<FisherRow>& rows);

struct NegativityRow {
  int m = 0;
  double lambda = 0.0;
  double gamma = 0.0;
  double eta = 1.0;
  double delta = 0.0;
};

/// CSV with columns m,lambda,gamma,eta,delta.
void write_negativity_csv(const std::filesystem::path& path,
                          const std::vector<NegativityRow>& rows);

} // namespace photonsub::io
