#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopmac/binary_model.hpp"
#include "coopmac/policy.hpp"
#include "coopmac/polynomial.hpp"

namespace coopmac {

/// The three effect classes a transmitting relay is scored against.
enum class EventSet { Assist, Backoff, Collision };

std::string_view event_name(EventSet e) noexcept;  // "A", "B", "C"

/// Per-element Bernoulli parameters: each element carries either an exact
/// probability or the single symbolic variable p.
class BernoulliAssignment {
public:
    /// Every element fixed to the same probability.
    static BernoulliAssignment uniform(const Rational& value);

    /// The flow-separation scenario: the four cross-flow links
    /// (H_S1S2, H_S1D2, H_R1S2, H_R1D2) carry the symbol p, every other
    /// element probability is 1/2.
    static BernoulliAssignment flow_separation_scenario();

    void set(StateElement e, const Rational& probability);  // throws outside [0,1]
    void set_symbolic(StateElement e) noexcept;

    bool is_symbolic(StateElement e) const noexcept;
    bool fully_numeric() const noexcept;

    /// The element's probability as a polynomial in p (constant when fixed).
    Polynomial element_probability(StateElement e) const;

    /// Copy with the symbol substituted by a concrete probability.
    BernoulliAssignment substituted(const Rational& p) const;

private:
    BernoulliAssignment() = default;
    // nullopt marks the symbolic entries
    std::array<std::optional<Rational>, kElementCount> fixed_{};
};

/// Pr{state} as an exact polynomial in p: the product over all eight
/// elements of (param if bit set, else 1 - param).
Polynomial state_probability(NetworkState state, const BernoulliAssignment& params);

/// Pr{relay transmits AND the state lies in the event set}, summed over all
/// 256 states with DontCare bins resolved to Rx.
Polynomial policy_event_probability(const RelayPolicy& policy, EventSet event,
                                    const BernoulliAssignment& params);

struct MonteCarloEstimate {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
};

/// Empirical frequency of (Tx AND event) from i.i.d. element-wise draws with
/// binomial standard error. Deterministic for a fixed seed. Requires a fully
/// numeric assignment and samples >= 1 (std::invalid_argument otherwise).
MonteCarloEstimate monte_carlo_check(const RelayPolicy& policy, EventSet event,
                                     const BernoulliAssignment& params,
                                     std::uint64_t samples, std::uint64_t seed);

struct HopSweepEntry {
    std::string policy;  // "cons0" ... "greed2", "fnsi"
    Rational assist;
    Rational backoff;
    Rational collision;
};

/// Exact event probabilities at a fixed p for the three hop policies of the
/// given viewpoint plus the full-knowledge baseline. p must lie in [0, 1].
std::vector<HopSweepEntry> hop_sweep_report(Viewpoint view, const Rational& p);

}  // namespace coopmac
