#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace sagin {

/// Satellite -> {user, UAVr} -> user channel for an L-antenna user.
struct DualHopChannel {
  Eigen::VectorXcd h0;           // satellite -> user, length L
  std::complex<double> h1{};     // satellite -> UAVr
  Eigen::VectorXcd h2;           // UAVr -> user, length L
  double gain_g = 0.0;           // fixed AF gain
  double noise_psd_w_hz = 0.0;
  double bandwidth_hz = 0.0;

  double noise_power_w() const { return noise_psd_w_hz * bandwidth_hz; }
};

/// Stacked received model r = H x + N with noise covariance Rn = E[N N^H].
struct EquivalentChannel {
  Eigen::VectorXcd h;
  Eigen::MatrixXcd rn;
};

struct CombinerOutput {
  double snr_linear = 0.0;
  Eigen::VectorXcd weights;
  double branch_direct = 0.0;
  double branch_relay = 0.0;
};

class DegenerateNoiseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EquivalentChannel build_equivalent(const DualHopChannel& ch);

/// Rn^{-1} H. Throws DegenerateNoiseError unless Rn is positive definite.
Eigen::VectorXcd optimal_weights(const Eigen::VectorXcd& h, const Eigen::MatrixXcd& rn);

/// Output SNR P |w^H H|^2 / (w^H Rn w) of an arbitrary combiner.
double combiner_snr(const Eigen::VectorXcd& w, const Eigen::VectorXcd& h,
                    const Eigen::MatrixXcd& rn, double p_tx_w);

/// Weight-vector route: optimal weights on the equivalent channel, with the
/// direct and relayed branch SNRs split out.
CombinerOutput combine_optimal(const DualHopChannel& ch, double p_sat_w);

/// Relayed-branch SNR gamma_js gamma_ij / (gamma_ij + varsigma).
double relay_branch_snr(double gamma_js, double gamma_ij, double varsigma);

/// Closed-form output SNR of the optimal combiner.
double mrc_combined_snr(double gamma_is, double gamma_js, double gamma_ij, double varsigma);

/// p / (sigma^2 G^2). Throws std::domain_error for a silent relay (G = 0).
double varsigma(double p_w, double noise_power_w, double gain_g);

/// Fixed AF gain normalising the relay's mean output power to p_relay.
double relay_gain_from_power(double p_relay_w, double p_sat_w, double mean_h1_power,
                             double noise_power_w);

/// Coherent two-branch equal-gain combiner (sqrt(a) + sqrt(b))^2 / 2.
double egc_combined_snr(double gamma_direct, double gamma_relay_branch);

}  // namespace sagin
