#include "sagin/combining.hpp"

#include <cmath>

namespace sagin {

EquivalentChannel build_equivalent(const DualHopChannel& ch) {
  const Eigen::Index l = ch.h0.size();
  if (l < 1 || ch.h2.size() != l || ch.gain_g < 0.0) {
    throw std::invalid_argument("dual-hop channel needs equal-length h0/h2 and G >= 0");
  }
  const double sigma2 = ch.noise_power_w();

  EquivalentChannel eq;
  eq.h.resize(2 * l);
  eq.h.head(l) = ch.h0;
  eq.h.tail(l) = ch.h2 * (ch.gain_g * ch.h1);

  eq.rn = Eigen::MatrixXcd::Zero(2 * l, 2 * l);
  eq.rn.topLeftCorner(l, l) = sigma2 * Eigen::MatrixXcd::Identity(l, l);
  eq.rn.bottomRightCorner(l, l) =
      sigma2 * (ch.gain_g * ch.gain_g * ch.h2 * ch.h2.adjoint() +
                Eigen::MatrixXcd::Identity(l, l));
  return eq;
}

Eigen::VectorXcd optimal_weights(const Eigen::VectorXcd& h, const Eigen::MatrixXcd& rn) {
  Eigen::LLT<Eigen::MatrixXcd> llt(rn);
  if (llt.info() != Eigen::Success) {
    throw DegenerateNoiseError("noise covariance is not positive definite");
  }
  return llt.solve(h);
}

double combiner_snr(const Eigen::VectorXcd& w, const Eigen::VectorXcd& h,
                    const Eigen::MatrixXcd& rn, double p_tx_w) {
  const std::complex<double> signal = w.dot(h);  // w^H h
  const double noise = (w.adjoint() * rn * w)(0, 0).real();
  return p_tx_w * std::norm(signal) / noise;
}

CombinerOutput combine_optimal(const DualHopChannel& ch, double p_sat_w) {
  const EquivalentChannel eq = build_equivalent(ch);
  CombinerOutput out;
  out.weights = optimal_weights(eq.h, eq.rn);
  out.snr_linear = combiner_snr(out.weights, eq.h, eq.rn, p_sat_w);

  // Rn is block diagonal, so the optimum splits into per-block quadratic forms.
  const Eigen::Index l = ch.h0.size();
  out.branch_direct =
      p_sat_w * eq.h.head(l).dot(out.weights.head(l)).real();
  out.branch_relay =
      p_sat_w * eq.h.tail(l).dot(out.weights.tail(l)).real();
  return out;
}

double relay_branch_snr(double gamma_js, double gamma_ij, double varsigma) {
  if (gamma_ij == 0.0) return 0.0;
  return gamma_js * gamma_ij / (gamma_ij + varsigma);
}

double mrc_combined_snr(double gamma_is, double gamma_js, double gamma_ij, double varsigma) {
  return gamma_is + relay_branch_snr(gamma_js, gamma_ij, varsigma);
}

double varsigma(double p_w, double noise_power_w, double gain_g) {
  if (!(gain_g > 0.0)) throw std::domain_error("silent relay: AF gain is zero");
  return p_w / (noise_power_w * gain_g * gain_g);
}

double relay_gain_from_power(double p_relay_w, double p_sat_w, double mean_h1_power,
                             double noise_power_w) {
  return std::sqrt(p_relay_w / (p_sat_w * mean_h1_power + noise_power_w));
}

double egc_combined_snr(double gamma_direct, double gamma_relay_branch) {
  const double s = std::sqrt(gamma_direct) + std::sqrt(gamma_relay_branch);
  return s * s / 2.0;
}

}  // namespace sagin
