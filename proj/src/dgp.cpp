#include "archtest/dgp.hpp"

#include <cmath>

namespace archtest {

namespace {

constexpr int kBurnIn = 100;

void validate_error(const ArchErrorSpec& error) {
    if (!(error.gamma0 > 0.0)) {
        throw std::invalid_argument("ArchErrorSpec: gamma0 must be positive");
    }
    if (error.gamma1 < 0.0 || error.gamma1 >= 1.0) {
        throw std::invalid_argument("ArchErrorSpec: gamma1 must lie in [0, 1)");
    }
}

inline double linear_mean(const ArCoeffs& c, double y1, double y2) {
    return c.phi1 * y1 + c.phi2 * y2;
}

}  // namespace

std::vector<int> markov_state_path(double p00, double p11, std::size_t n, RngStream& rng) {
    if (!(p00 > 0.0 && p00 < 1.0) || !(p11 > 0.0 && p11 < 1.0)) {
        throw std::invalid_argument(
            "markov_state_path: stay probabilities must lie strictly inside (0, 1)");
    }
    std::vector<int> states(n);
    if (n == 0) return states;
    // Stationary occupancy of state 1 is p10 / (p10 + p01).
    const double p10 = 1.0 - p00;
    const double p01 = 1.0 - p11;
    states[0] = rng.next_uniform() < p10 / (p10 + p01) ? 1 : 0;
    for (std::size_t t = 1; t < n; ++t) {
        const double stay = states[t - 1] == 1 ? p11 : p00;
        states[t] = rng.next_uniform() < stay ? states[t - 1] : 1 - states[t - 1];
    }
    return states;
}

TimeSeries simulate(const DgpSpec& spec, int T, RngStream& rng) {
    if (T < 20) {
        throw std::invalid_argument("simulate: sample size must be >= 20");
    }
    validate_error(spec.error);
    const int total = T + kBurnIn;

    // State path first, then innovations, so the draw order is fixed.
    std::vector<int> states;
    if (const auto* ms = std::get_if<MarkovFamily>(&spec.family)) {
        states = markov_state_path(ms->p00, ms->p11, static_cast<std::size_t>(total), rng);
    }
    const auto eps = standard_normal_draws(rng, static_cast<std::size_t>(total));

    const double gamma0 = spec.error.gamma0;
    const double gamma1 = spec.error.gamma1;

    TimeSeries path(static_cast<std::size_t>(total));
    double y1 = 0.0, y2 = 0.0;  // y_{t-1}, y_{t-2}
    double u1 = 0.0, u2 = 0.0;  // u_{t-1}, u_{t-2}
    for (int t = 0; t < total; ++t) {
        const double sigma2 = gamma0 + gamma1 * u1 * u1;
        const double u = std::sqrt(sigma2) * eps[static_cast<std::size_t>(t)];

        double mean = 0.0;
        if (const auto* ar = std::get_if<ArFamily>(&spec.family)) {
            mean = linear_mean(ar->coeffs, y1, y2);
        } else if (const auto* tar = std::get_if<TarFamily>(&spec.family)) {
            const double threshold =
                tar->threshold == ThresholdVariable::Level ? y1 : y1 - y2;
            mean = threshold >= 0.0 ? linear_mean(tar->regime_nonneg, y1, y2)
                                    : linear_mean(tar->regime_neg, y1, y2);
        } else if (const auto* star = std::get_if<StarFamily>(&spec.family)) {
            const double weight =
                star->shape == TransitionShape::Exponential
                    ? 1.0 - std::exp(-star->gamma * y1 * y1)
                    : 1.0 / (1.0 + std::exp(-star->gamma * y1));
            mean = linear_mean(star->linear, y1, y2) +
                   weight * linear_mean(star->deviation, y1, y2);
        } else if (const auto* ms = std::get_if<MarkovFamily>(&spec.family)) {
            mean = states[static_cast<std::size_t>(t)] == 1
                       ? linear_mean(ms->regime_state1, y1, y2)
                       : linear_mean(ms->regime_state0, y1, y2);
        } else {
            const auto& bl = std::get<BilinearFamily>(spec.family);
            mean = bl.b1 * y1 * u1 + bl.b2 * y2 * u2;
        }

        const double y = mean + u;
        if (!std::isfinite(y)) {
            throw SimulationError("simulate: non-finite path for " + spec.name +
                                  " at step " + std::to_string(t));
        }
        path[static_cast<std::size_t>(t)] = y;
        y2 = y1;
        y1 = y;
        u2 = u1;
        u1 = u;
    }

    return TimeSeries(path.begin() + kBurnIn, path.end());
}

namespace {

DgpSpec make(std::string name,
             std::variant<ArFamily, TarFamily, StarFamily, MarkovFamily, BilinearFamily> family,
             ArchErrorSpec error) {
    return DgpSpec{std::move(name), std::move(family), error};
}

}  // namespace

DgpSpec preset(const std::string& name, ArchErrorSpec error) {
    validate_error(error);
    using TV = ThresholdVariable;
    using TS = TransitionShape;

    if (name == "1-1") return make(name, ArFamily{{0.2, 0.0}}, error);
    if (name == "1-2") return make(name, ArFamily{{0.7, 0.0}}, error);
    if (name == "1-3") return make(name, ArFamily{{0.7, -0.2}}, error);
    if (name == "1-4") return make(name, ArFamily{{0.7, -0.5}}, error);

    if (name == "2-1")
        return make(name, TarFamily{{0.7, -0.2}, {0.1, -0.2}, TV::Level}, error);
    if (name == "2-2")
        return make(name, TarFamily{{0.7, -0.2}, {-0.5, -0.2}, TV::Level}, error);
    if (name == "2-3")
        return make(name, TarFamily{{0.7, 0.2}, {0.7, -0.7}, TV::Level}, error);
    if (name == "2-4")
        return make(name, TarFamily{{0.7, -0.2}, {0.1, -0.2}, TV::Difference}, error);
    if (name == "2-5")
        return make(name, TarFamily{{0.7, -0.2}, {-0.5, -0.2}, TV::Difference}, error);
    if (name == "2-6")
        return make(name, TarFamily{{0.7, 0.2}, {0.7, -0.7}, TV::Difference}, error);

    if (name == "3-1")
        return make(name, StarFamily{{0.7, -0.2}, {-0.5, -0.2}, TS::Exponential, 0.1}, error);
    if (name == "3-2")
        return make(name, StarFamily{{0.7, -0.2}, {-1.0, -0.2}, TS::Exponential, 0.1}, error);
    if (name == "3-3")
        return make(name, StarFamily{{0.7, -0.2}, {-1.0, -0.2}, TS::Exponential, 1.0}, error);
    if (name == "3-4")
        return make(name, StarFamily{{0.7, -0.2}, {-0.5, -0.2}, TS::Logistic, 0.1}, error);
    if (name == "3-5")
        return make(name, StarFamily{{0.7, -0.2}, {-1.0, -0.2}, TS::Logistic, 0.1}, error);
    if (name == "3-6")
        return make(name, StarFamily{{0.7, -0.2}, {-1.0, -0.2}, TS::Logistic, 1.0}, error);

    if (name == "4-1")
        return make(name, MarkovFamily{{0.7, -0.2}, {0.3, -0.2}, 0.7, 0.7}, error);
    if (name == "4-2")
        return make(name, MarkovFamily{{0.7, -0.2}, {0.3, -0.2}, 0.98, 0.98}, error);
    if (name == "4-3")
        return make(name, MarkovFamily{{0.7, 0.2}, {0.3, -0.2}, 0.98, 0.98}, error);
    if (name == "4-4") return make(name, BilinearFamily{0.1, 0.1}, error);
    if (name == "4-5") return make(name, BilinearFamily{0.3, 0.1}, error);
    if (name == "4-6") return make(name, BilinearFamily{0.1, -0.1}, error);

    throw std::invalid_argument("preset: unknown process name '" + name + "'");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "1-1", "1-2", "1-3", "1-4",
        "2-1", "2-2", "2-3", "2-4", "2-5", "2-6",
        "3-1", "3-2", "3-3", "3-4", "3-5", "3-6",
        "4-1", "4-2", "4-3", "4-4", "4-5", "4-6",
    };
    return names;
}

}  // namespace archtest
