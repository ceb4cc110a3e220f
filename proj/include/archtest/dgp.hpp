#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "archtest/rng.hpp"
#include "archtest/time_series.hpp"

namespace archtest {

/// A simulated path left the representable range (explosive draw).
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ARCH(1) error law: u_t = sigma_t eps_t with
/// sigma_t^2 = gamma0 + gamma1 u_{t-1}^2 and eps_t i.i.d. N(0,1).
/// gamma1 = 0 gives homoskedastic errors.
struct ArchErrorSpec {
    double gamma0 = 1.0;
    double gamma1 = 0.0;
};

/// Coefficients (phi1, phi2) of a two-lag linear mean phi1 y_{t-1} + phi2 y_{t-2}.
struct ArCoeffs {
    double phi1 = 0.0;
    double phi2 = 0.0;
};

enum class ThresholdVariable { Level, Difference };
enum class TransitionShape { Exponential, Logistic };

struct ArFamily {
    ArCoeffs coeffs;
};

/// Threshold autoregression: regime_nonneg applies when the threshold
/// variable (y_{t-1} or its first difference) is >= 0, regime_neg otherwise.
struct TarFamily {
    ArCoeffs regime_nonneg;
    ArCoeffs regime_neg;
    ThresholdVariable threshold = ThresholdVariable::Level;
};

/// Smooth transition autoregression: linear part plus deviation part weighted
/// by 1 - exp(-gamma y_{t-1}^2) (exponential) or (1 + exp(-gamma y_{t-1}))^-1
/// (logistic).
struct StarFamily {
    ArCoeffs linear;
    ArCoeffs deviation;
    TransitionShape shape = TransitionShape::Exponential;
    double gamma = 1.0;
};

/// Two-state Markov switching between AR coefficient sets; state 1 applies
/// regime_state1. p00 and p11 are the stay probabilities.
struct MarkovFamily {
    ArCoeffs regime_state1;
    ArCoeffs regime_state0;
    double p00 = 0.5;
    double p11 = 0.5;
};

/// Bilinear mean b1 y_{t-1} u_{t-1} + b2 y_{t-2} u_{t-2} driven by the same
/// shock sequence that enters the error.
struct BilinearFamily {
    double b1 = 0.0;
    double b2 = 0.0;
};

/**
 * Full generative description of one simulated process: mean family plus
 * error law. The intercept is zero throughout. `name` identifies the process
 * in tables and seeds its replication streams; presets use their table label.
 */
struct DgpSpec {
    std::string name;
    std::variant<ArFamily, TarFamily, StarFamily, MarkovFamily, BilinearFamily> family;
    ArchErrorSpec error;
};

/**
 * Simulate T observations. T + 100 values are generated from zero initial
 * conditions (y = u = 0) and the first 100 are discarded as burn-in.
 * Requires T >= 20 and a stationary error spec (gamma1 < 1).
 */
TimeSeries simulate(const DgpSpec& spec, int T, RngStream& rng);

/// Two-state chain of length n started from its stationary distribution;
/// stay probabilities p00 and p11 must lie strictly inside (0, 1).
std::vector<int> markov_state_path(double p00, double p11, std::size_t n, RngStream& rng);

/// Named preset from the simulation study: "1-1".."1-4" (AR), "2-1".."2-6"
/// (TAR/MTAR), "3-1".."3-6" (STAR), "4-1".."4-6" (Markov switching and
/// bilinear). Throws on unknown names.
DgpSpec preset(const std::string& name, ArchErrorSpec error = {});

/// All preset names in table order.
const std::vector<std::string>& preset_names();

}  // namespace archtest
