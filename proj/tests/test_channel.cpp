#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sagin/channel.hpp"
#include "sagin/config.hpp"
#include "sagin/rng.hpp"
#include "sagin/units.hpp"

using namespace sagin;

TEST_CASE("LoS probability") {
  CHECK(los_probability(deg_to_rad(9.61), 9.61, 0.16) ==
        doctest::Approx(1.0 / 10.61).epsilon(1e-14));
  CHECK(los_probability(deg_to_rad(9.61), 9.61, 0.16) ==
        doctest::Approx(0.0942507068803016).epsilon(1e-14));
  CHECK(los_probability(std::numbers::pi / 2, 9.61, 0.16) ==
        doctest::Approx(0.999975074537903).epsilon(1e-14));
  // Monotone in elevation.
  double prev = 0.0;
  for (int deg = 0; deg <= 90; ++deg) {
    const double p = los_probability(deg_to_rad(deg), 9.61, 0.16);
    CHECK(p >= prev);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
    prev = p;
  }
}

TEST_CASE("free-space path loss") {
  CHECK(pathloss_db(100.0, 2e9, 1.0) == doctest::Approx(79.46816462347634).epsilon(1e-13));
  CHECK(pathloss_db(200.0, 2e9, 1.0) - pathloss_db(100.0, 2e9, 1.0) ==
        doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
  CHECK(pathloss_db(100.0, 2e9, 20.0) - pathloss_db(100.0, 2e9, 1.0) ==
        doctest::Approx(19.0).epsilon(1e-12));
}

TEST_CASE("average path loss") {
  const auto c = load_defaults();
  CHECK(avg_pathloss_db(deg_to_rad(9.61), 100.0, c) ==
        doctest::Approx(96.67740119275061).epsilon(1e-13));

  SUBCASE("closed form equals the weighted sum") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      const double theta = uniform01(rng) * std::numbers::pi / 2;
      const double d = 1.0 + uniform01(rng) * 2000.0;
      const double p = los_probability(theta, c.a_env, c.b_env);
      const double weighted = p * pathloss_db(d, c.f_c_hz, c.eta_los_db) +
                              (1.0 - p) * pathloss_db(d, c.f_c_hz, c.eta_nlos_db);
      CHECK(std::abs(avg_pathloss_db(theta, d, c) - weighted) < 1e-9);
    }
  }
  SUBCASE("overhead: only the residual NLoS share remains") {
    const double theta = std::numbers::pi / 2;
    const double p = los_probability(theta, c.a_env, c.b_env);
    const double excess =
        avg_pathloss_db(theta, 100.0, c) - pathloss_db(100.0, c.f_c_hz, c.eta_los_db);
    CHECK(excess == doctest::Approx((1.0 - p) * 19.0).epsilon(1e-6));
    CHECK(excess < 5e-4);
    // A steeper sigmoid drives the LoS limit to within 1e-6 dB.
    auto steep = c;
    steep.b_env = 0.5;
    CHECK(std::abs(avg_pathloss_db(theta, 100.0, steep) -
                   pathloss_db(100.0, c.f_c_hz, c.eta_los_db)) < 1e-6);
  }
}

TEST_CASE("air-to-ground gain") {
  const auto c = load_defaults();
  const auto s = atg_channel_gain(104.4, 0.2915, 1.0, c);
  CHECK(s.gain == doctest::Approx(2.228762303344129e-09).epsilon(1e-12));
  CHECK(atg_channel_gain(104.4, 0.2915, 0.0, c).gain == 0.0);
  CHECK(atg_channel_gain(208.8, 0.2915, 1.0, c).gain < s.gain);
  CHECK(s.p_los == doctest::Approx(los_probability(0.2915, c.a_env, c.b_env)));

  const auto pl = atg_pathloss_gain(104.4, 0.2915, 1.0, c);
  CHECK(pl.gain == doctest::Approx(std::pow(10.0, -pl.pl_avg_db / 20.0)).epsilon(1e-14));

  auto alt = c;
  alt.atg_extra_free_space = false;
  CHECK(atg_link_gain(104.4, 0.2915, 1.0, alt).gain == pl.gain);
  CHECK(atg_link_gain(104.4, 0.2915, 1.0, c).gain == s.gain);
}

TEST_CASE("shadowed-Rician moments") {
  auto mean_power = [](const ShadowedRicianParams& p, std::uint64_t seed, int n) {
    Rng rng(seed);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto s = sample_shadowed_rician(p, rng);
      CHECK_EQ(s.power, doctest::Approx(s.amplitude * s.amplitude));
      sum += s.power;
    }
    return sum / n;
  };
  SUBCASE("default parameters") {
    const ShadowedRicianParams p{0.835, 0.126, 10.1};
    const double m = mean_power(p, 1, 1000000);
    CHECK(std::abs(m / 1.087 - 1.0) < 0.01);
  }
  SUBCASE("heavy, average and light shadowing") {
    const ShadowedRicianParams sets[] = {
        {8.97e-4, 0.063, 0.739}, {0.278, 0.251, 5.21}, {1.29, 0.158, 19.4}};
    std::uint64_t seed = 10;
    for (const auto& p : sets) {
      const double m = mean_power(p, seed++, 1000000);
      CHECK(std::abs(m / (p.omega_direct + 2.0 * p.b_scatter) - 1.0) < 0.01);
    }
  }
  SUBCASE("deterministic LoS limit") {
    const ShadowedRicianParams p{0.835, 1e-12, 1e9};
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
      CHECK(sample_shadowed_rician(p, rng).power == doctest::Approx(0.835).epsilon(1e-4));
    }
  }
  SUBCASE("m = 1 gives an exponential LoS power") {
    const ShadowedRicianParams p{0.835, 1e-14, 1.0};
    Rng rng(8);
    const int n = 100000;
    std::vector<double> x(n);
    for (auto& v : x) v = sample_shadowed_rician(p, rng).power;
    std::sort(x.begin(), x.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
      const double f = 1.0 - std::exp(-x[i] / p.omega_direct);
      ks = std::max({ks, std::abs(f - static_cast<double>(i) / n),
                     std::abs(f - static_cast<double>(i + 1) / n)});
    }
    CHECK(ks < 0.01);
  }
}

TEST_CASE("satellite gain") {
  CHECK(sat_channel_gain(1.0, 2.0, {1.0, 1.0}) == 1.0);
  CHECK(sat_channel_gain(100.0, 2.0, {2.0, 4.0}) == doctest::Approx(0.02).epsilon(1e-14));
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const double power = 0.1 + uniform01(rng) * 3.0;
    const double d = 1e5 + uniform01(rng) * 2e6;
    const double g = sat_channel_gain(d, 2.0, {std::sqrt(power), power});
    CHECK(g * g * d * d == doctest::Approx(power).epsilon(1e-12));
  }
}

TEST_CASE("Rayleigh fading") {
  Rng rng(21);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const double g = sample_rayleigh(rng);
    sum += g * g;
  }
  CHECK(std::abs(sum / n - 1.0) < 0.01);

  CHECK(rayleigh_path_gain(0.7, 200.0, 3.0) / rayleigh_path_gain(0.7, 100.0, 3.0) ==
        doctest::Approx(std::pow(2.0, -3.0)).epsilon(1e-14));

  Rng a(99);
  Rng b(99);
  CHECK(rayleigh_gain(50.0, 3.0, a) == rayleigh_gain(50.0, 3.0, b));
}

TEST_CASE("Rician small-scale factor has unit mean power") {
  Rng rng(31);
  const int n = 500000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = sample_rician(10.0, rng);
    sum += a * a;
  }
  CHECK(std::abs(sum / n - 1.0) < 0.01);

  auto c = load_defaults();
  c.atg_fading = AtgFading::kUnit;
  Rng r2(1);
  CHECK(sample_atg_smallscale(c, r2) == 1.0);
}

TEST_CASE("standard normal") {
  Rng rng(41);
  const int n = 400000;
  double s1 = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = standard_normal(rng);
    s1 += z;
    s2 += z * z;
  }
  CHECK(std::abs(s1 / n) < 0.01);
  CHECK(std::abs(s2 / n - 1.0) < 0.01);
}
