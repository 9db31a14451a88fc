#include "eprsim/correlation_model.hpp"

#include <bit>
#include <cmath>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/qm_reference.hpp"
#include "eprsim/rng.hpp"

namespace eprsim {

double ChannelSet::probability(Channel first, Channel second) const {
  if (first == Channel::plus) return second == Channel::plus ? pp : pm;
  return second == Channel::plus ? mp : mm;
}

CorrelationModel make_qm_model() {
  return CorrelationModel("qm", Provenance::closed_form, [](double phi) {
    const SingletPrediction p = singlet_prediction(phi);
    return ChannelSet{p.p_pp, p.p_pm, p.p_mp, p.p_mm, 0.0};
  });
}

CorrelationModel make_naive_model(const QuadratureSpec& spec) {
  return CorrelationModel("naive", Provenance::quadrature, [spec](double phi) {
    // Minus channels substitute analyzer + pi/2 at the respective station.
    const auto channel = [&](double o1, double o2) {
      const auto f = [&](double theta) {
        return naive_coincidence_intensity(theta - o1, phi + o2 - o1);
      };
      Estimate e = integrate_1d(f, spec);
      e.value /= kPi;  // uniform theta average
      e.std_error /= kPi;
      return e;
    };
    // cos^2(theta - o1) cos^2(theta - phi - o2) expressed through the shared
    // intensity: shift theta by o1, widen the relative angle by o2 - o1.
    const Estimate epp = channel(0.0, 0.0);
    const Estimate epm = channel(0.0, kPi / 2);
    const Estimate emp = channel(kPi / 2, 0.0);
    const Estimate emm = channel(kPi / 2, kPi / 2);
    const double err = epp.std_error + epm.std_error + emp.std_error + emm.std_error;
    return ChannelSet{epp.value, epm.value, emp.value, emm.value, err};
  });
}

CorrelationModel make_unpolarized_model(Method method, std::optional<MCConfig> mc,
                                        int mc_group, const QuadratureSpec& spec) {
  if (method == Method::monte_carlo && !mc)
    throw ConfigError("unpolarized model: monte_carlo needs an MCConfig");
  const Provenance prov =
      method == Method::quadrature ? Provenance::quadrature : Provenance::monte_carlo;

  return CorrelationModel("unpolarized", prov, [method, mc, mc_group, spec](double phi) {
    // Channel (s1, s2): station offsets o1, o2 in {0, pi/2} added to the
    // respective analyzer axis.
    const auto channel = [&](double o1, double o2, std::uint64_t tag) {
      const auto integrand = [phi, o1, o2](const HiddenVars& hv) {
        const HiddenVars shifted{hv.theta - o1, hv.gamma_x, hv.gamma_y};
        return amplitude_a(shifted) * amplitude_b(shifted, phi + o1 + o2);
      };
      if (method == Method::quadrature) {
        Estimate e = integrate_3d_nested(
            [&integrand](double th, double gx, double gy) {
              return integrand(HiddenVars{th, gx, gy});
            },
            /*inner_square=*/true, spec);
        e.value *= 2.0;  // pair production rate 1/2
        e.std_error *= 2.0;
        return e;
      }
      MCConfig derived = *mc;
      derived.seed =
          derive_seed(mc->seed, std::bit_cast<std::uint64_t>(reduce_mod_pi(phi)) ^ tag);
      Estimate e = mc_estimate(integrand, derived, mc_group);
      // Report the channel bias-corrected so the four stay normalized in
      // expectation; the raw/bias split remains visible via
      // unpolarized_model_probability.
      e.value = e.unbiased() * 2.0;
      e.std_error *= 2.0;
      e.bias = 0.0;
      return e;
    };
    const Estimate epp = channel(0.0, 0.0, 0x70);
    const Estimate epm = channel(0.0, kPi / 2, 0x71);
    const Estimate emp = channel(kPi / 2, 0.0, 0x72);
    const Estimate emm = channel(kPi / 2, kPi / 2, 0x73);
    const double err =
        method == Method::quadrature
            ? epp.std_error + epm.std_error + emp.std_error + emm.std_error
            : std::sqrt(epp.std_error * epp.std_error + epm.std_error * epm.std_error +
                        emp.std_error * emp.std_error + emm.std_error * emm.std_error);
    return ChannelSet{epp.value, epm.value, emp.value, emm.value, err};
  });
}

CorrelationModel make_sign_model(const MCConfig& mc) {
  if (mc.samples < 1000)
    throw ConfigError("sign model: need at least 1000 samples");
  return CorrelationModel("sign", Provenance::monte_carlo, [mc](double phi) {
    // Outcomes A = sign(cos 2(a - lambda)) at a = 0 and B = -A(b, lambda) at
    // b = phi, shared uniform lambda. Every sample lands in exactly one
    // channel, so the four estimates sum to 1 by construction.
    const CounterRng rng(
        derive_seed(mc.seed, std::bit_cast<std::uint64_t>(reduce_mod_pi(phi))));
    const std::int64_t n = mc.samples;
    std::int64_t npp = 0, npm = 0, nmp = 0, nmm = 0;
    double sum_e = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double lambda = kPi * rng.uniform(0, static_cast<std::uint64_t>(i));
      const int a = sign_model_outcome(0.0, lambda);
      const int b = -sign_model_outcome(phi, lambda);
      if (a > 0)
        (b > 0 ? npp : npm) += 1;
      else
        (b > 0 ? nmp : nmm) += 1;
      sum_e += a * b;
    }
    const double inv = 1.0 / static_cast<double>(n);
    const double e_mean = sum_e * inv;
    // products are +-1: Var = 1 - E^2
    const double se = std::sqrt(std::max(0.0, 1.0 - e_mean * e_mean) /
                                static_cast<double>(n - 1));
    return ChannelSet{npp * inv, npm * inv, nmp * inv, nmm * inv, se};
  });
}

CorrelationModel make_model(const std::string& id, Method method, const MCConfig& mc,
                            int mc_group) {
  if (id == "qm") return make_qm_model();
  if (id == "naive") {
    if (method == Method::monte_carlo) {
      return CorrelationModel("naive", Provenance::monte_carlo, [mc](double phi) {
        MCConfig derived = mc;
        derived.seed = derive_seed(mc.seed, std::bit_cast<std::uint64_t>(reduce_mod_pi(phi)));
        const CounterRng rng(derived.seed);
        const std::int64_t n = derived.samples;
        double spp = 0, spm = 0, smp = 0, smm = 0, se_sum = 0, se_sq = 0;
        for (std::int64_t i = 0; i < n; ++i) {
          const double theta = kPi * rng.uniform(0, static_cast<std::uint64_t>(i));
          const double c1 = std::cos(theta), s1 = std::sin(theta);
          const double c2 = std::cos(theta - phi), s2 = std::sin(theta - phi);
          const double ip = c1 * c1, im = s1 * s1, jp = c2 * c2, jm = s2 * s2;
          spp += ip * jp;
          spm += ip * jm;
          smp += im * jp;
          smm += im * jm;
          const double e = (ip - im) * (jp - jm);
          se_sum += e;
          se_sq += e * e;
        }
        const double inv = 1.0 / static_cast<double>(n);
        const double e_mean = se_sum * inv;
        const double var =
            std::max(0.0, (se_sq - n * e_mean * e_mean) / static_cast<double>(n - 1));
        return ChannelSet{spp * inv, spm * inv, smp * inv, smm * inv,
                          std::sqrt(var * inv)};
      });
    }
    return make_naive_model();
  }
  if (id == "unpolarized") {
    if (method == Method::monte_carlo)
      return make_unpolarized_model(method, mc, mc_group);
    return make_unpolarized_model(Method::quadrature);
  }
  if (id == "sign") return make_sign_model(mc);
  throw ConfigError("unknown model id '" + id + "' (expected qm|naive|unpolarized|sign)");
}

}  // namespace eprsim
