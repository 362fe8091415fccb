#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "sagin/channel.hpp"
#include "sagin/combining.hpp"
#include "sagin/rng.hpp"

using namespace sagin;
using cd = std::complex<double>;

namespace {

cd cn(Rng& rng) { return {standard_normal(rng) / std::sqrt(2.0), standard_normal(rng) / std::sqrt(2.0)}; }

DualHopChannel random_channel(Rng& rng, int l) {
  DualHopChannel ch;
  ch.h0.resize(l);
  ch.h2.resize(l);
  for (int k = 0; k < l; ++k) {
    ch.h0(k) = cn(rng);
    ch.h2(k) = cn(rng);
  }
  ch.h1 = cn(rng);
  ch.gain_g = 0.1 + 3.0 * uniform01(rng);
  ch.noise_psd_w_hz = 1.0;
  ch.bandwidth_hz = 0.5 + uniform01(rng);
  return ch;
}

}  // namespace

TEST_CASE("equivalent channel") {
  SUBCASE("unit substitution") {
    DualHopChannel ch;
    ch.h0 = Eigen::VectorXcd::Ones(1);
    ch.h2 = Eigen::VectorXcd::Ones(1);
    ch.h1 = 1.0;
    ch.gain_g = 1.0;
    ch.noise_psd_w_hz = 1.0;
    ch.bandwidth_hz = 1.0;
    const auto eq = build_equivalent(ch);
    CHECK(eq.h(0) == cd(1.0));
    CHECK(eq.h(1) == cd(1.0));
    CHECK(eq.rn(0, 0) == cd(1.0));
    CHECK(eq.rn(1, 1) == cd(2.0));
    CHECK(eq.rn(0, 1) == cd(0.0));
    CHECK(eq.rn(1, 0) == cd(0.0));
  }
  SUBCASE("silent relay") {
    Rng rng(1);
    auto ch = random_channel(rng, 2);
    ch.gain_g = 0.0;
    const auto eq = build_equivalent(ch);
    CHECK(eq.h.tail(2).norm() == 0.0);
    CHECK((eq.rn.bottomRightCorner(2, 2) -
           ch.noise_power_w() * Eigen::MatrixXcd::Identity(2, 2)).norm() == 0.0);
  }
  SUBCASE("mismatched lengths") {
    Rng rng(2);
    auto ch = random_channel(rng, 2);
    ch.h2.resize(3);
    CHECK_THROWS_AS(build_equivalent(ch), std::invalid_argument);
  }
  SUBCASE("noise covariance is positive definite") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      const auto eq = build_equivalent(random_channel(rng, 1 + i % 4));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(eq.rn);
      CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("optimal weights") {
  SUBCASE("white noise gives the matched filter") {
    Eigen::VectorXcd h(3);
    h << cd(1, 2), cd(-0.5, 0.1), cd(0, 3);
    const Eigen::MatrixXcd rn = 2.5 * Eigen::MatrixXcd::Identity(3, 3);
    const auto w = optimal_weights(h, rn);
    CHECK((w - h / 2.5).norm() < 1e-14);
  }
  SUBCASE("degenerate covariance") {
    Eigen::VectorXcd h = Eigen::VectorXcd::Ones(2);
    Eigen::MatrixXcd rn = Eigen::MatrixXcd::Zero(2, 2);
    CHECK_THROWS_AS(optimal_weights(h, rn), DegenerateNoiseError);
  }
  SUBCASE("scale invariance and dominance over random weights") {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const auto ch = random_channel(rng, 1 + trial % 3);
      const auto eq = build_equivalent(ch);
      const auto w = optimal_weights(eq.h, eq.rn);
      const double best = combiner_snr(w, eq.h, eq.rn, 1.0);
      CHECK(combiner_snr(w * cd(-3.0, 0.7), eq.h, eq.rn, 1.0) ==
            doctest::Approx(best).epsilon(1e-12));
      for (int k = 0; k < 1000; ++k) {
        Eigen::VectorXcd v(eq.h.size());
        for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = cn(rng);
        CHECK(combiner_snr(v.normalized(), eq.h, eq.rn, 1.0) <= best * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("closed-form combined SNR") {
  CHECK(mrc_combined_snr(2.0, 8.0, 4.0, 4.0) == 6.0);
  CHECK(mrc_combined_snr(2.0, 8.0, 1e18, 4.0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(mrc_combined_snr(1.5, 7.0, 3.0, 3.0) == doctest::Approx(1.5 + 3.5));
  CHECK(relay_branch_snr(5.0, 0.0, 1.0) == 0.0);

  SUBCASE("matches the weight-vector route") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      const auto ch = random_channel(rng, 1);
      const double p_sat = 0.5 + 10.0 * uniform01(rng);
      const double p_relay = 0.01 + uniform01(rng);
      const double s2 = ch.noise_power_w();
      const double g_is = p_sat * std::norm(ch.h0(0)) / s2;
      const double g_js = p_sat * std::norm(ch.h1) / s2;
      const double g_ij = p_relay * std::norm(ch.h2(0)) / s2;
      const double closed = mrc_combined_snr(g_is, g_js, g_ij, varsigma(p_relay, s2, ch.gain_g));
      const auto out = combine_optimal(ch, p_sat);
      CHECK(std::abs(out.snr_linear / closed - 1.0) < 1e-9);
      CHECK(out.branch_direct == doctest::Approx(g_is).epsilon(1e-9));
      CHECK(out.branch_direct + out.branch_relay == doctest::Approx(out.snr_linear).epsilon(1e-9));
    }
  }
}

TEST_CASE("varsigma") {
  CHECK(varsigma(1.0, 1.0, 1.0) == 1.0);
  CHECK(varsigma(1.0, 1.0, 4.0) == doctest::Approx(1.0 / 16.0));
  CHECK(varsigma(0.1, 3.981e-21 * 20e6, 1e6) ==
        doctest::Approx(1.2559658377292138).epsilon(1e-12));
  CHECK_THROWS_AS(varsigma(0.1, 1.0, 0.0), std::domain_error);
}

TEST_CASE("AF gain from the relay power budget") {
  CHECK(relay_gain_from_power(0.0, 100.0, 1e-12, 1e-13) == 0.0);
  CHECK(relay_gain_from_power(0.4, 100.0, 1e-12, 1e-13) ==
        doctest::Approx(2.0 * relay_gain_from_power(0.1, 100.0, 1e-12, 1e-13)).epsilon(1e-14));

  // E[G^2 (P_s |h1|^2 + sigma^2)] = p_relay.
  const ShadowedRicianParams srf{0.835, 0.126, 10.1};
  const double path = 1e-12;
  const double p_sat = 100.0;
  const double noise = 7.96e-14;
  const double p_relay = 0.1;
  const double g = relay_gain_from_power(p_relay, p_sat, (0.835 + 2 * 0.126) * path, noise);
  Rng rng(6);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double h1 = sample_shadowed_rician(srf, rng).power * path;
    sum += g * g * (p_sat * h1 + noise);
  }
  CHECK(std::abs(sum / n / p_relay - 1.0) < 0.01);
}

TEST_CASE("equal-gain combining") {
  CHECK(egc_combined_snr(0.0, 6.0) == doctest::Approx(3.0));
  CHECK(egc_combined_snr(6.0, 0.0) == doctest::Approx(3.0));
  CHECK(egc_combined_snr(5.0, 5.0) == doctest::Approx(10.0));
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double a = 100.0 * uniform01(rng);
    const double b = 100.0 * uniform01(rng);
    CHECK(egc_combined_snr(a, b) <= (a + b) * (1.0 + 1e-15));
  }
}
