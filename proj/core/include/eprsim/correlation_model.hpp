#pragma once

#include <functional>
#include <string>

#include "eprsim/estimate.hpp"
#include "eprsim/lhv_models.hpp"

namespace eprsim {

enum class Channel { plus, minus };

/// The four joint channel probabilities of a model at one relative analyzer
/// angle. std_error is the uncertainty of the correlation pp+mm-pm-mp
/// (zero for closed forms; residual-based for quadrature; standard error
/// for Monte Carlo) and bounds the per-channel uncertainty as well.
struct ChannelSet {
  double pp = 0.0;
  double pm = 0.0;
  double mp = 0.0;
  double mm = 0.0;
  double std_error = 0.0;

  double sum() const { return pp + pm + mp + mm; }
  double correlation() const { return (pp + mm) - (pm + mp); }
  double probability(Channel first, Channel second) const;
};

/// A source of joint channel probabilities P(s1, s2 | phi). Every model
/// here depends on the two analyzer settings only through their difference
/// and is half-turn periodic. Channel sets sum to 1 within 1e-9 for closed
/// form and quadrature provenance, and within 4 standard errors for Monte
/// Carlo. Monte Carlo models derive their stream from (seed, bits of the
/// reduced angle), so repeated evaluation at the same angle is bit-stable.
class CorrelationModel {
 public:
  CorrelationModel(std::string id, Provenance provenance,
                   std::function<ChannelSet(double)> eval)
      : id_(std::move(id)), provenance_(provenance), eval_(std::move(eval)) {}

  const std::string& id() const { return id_; }
  Provenance provenance() const { return provenance_; }

  /// All four channel probabilities at relative angle phi (radians).
  ChannelSet channels(double phi) const { return eval_(reduce_mod_pi(phi)); }

  /// One channel probability; prefer channels() when several are needed.
  double channel_probability(Channel first, Channel second, double phi) const {
    return channels(phi).probability(first, second);
  }

 private:
  std::string id_;
  Provenance provenance_;
  std::function<ChannelSet(double)> eval_;
};

/// Exact singlet channel probabilities (closed form).
CorrelationModel make_qm_model();

/// Malus-law model channels by quadrature over the shared polarization
/// angle. The minus channel at a station substitutes analyzer + pi/2.
CorrelationModel make_naive_model(const QuadratureSpec& spec = half_turn_spec(1));

/// Unpolarized two-component model channels; quadrature or grouped Monte
/// Carlo per `method` (grouped MC channels are reported bias-corrected so
/// that they stay normalized in expectation).
CorrelationModel make_unpolarized_model(Method method,
                                        std::optional<MCConfig> mc = std::nullopt,
                                        int mc_group = 256,
                                        const QuadratureSpec& spec = half_turn_spec(3));

/// Dichotomic sign model with the anti-correlated pairing B = -A, sampled
/// over the shared hidden angle by Monte Carlo.
CorrelationModel make_sign_model(const MCConfig& mc);

/// Lookup by id: "qm" | "naive" | "unpolarized" | "sign".
/// Throws ConfigError for unknown ids.
CorrelationModel make_model(const std::string& id, Method method, const MCConfig& mc,
                            int mc_group = 256);

}  // namespace eprsim
