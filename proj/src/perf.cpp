#include "coopmac/perf.hpp"

#include <stdexcept>

#include "coopmac/closed_forms.hpp"
#include "coopmac/rng.hpp"

namespace coopmac {

std::string_view event_name(EventSet e) noexcept {
    switch (e) {
        case EventSet::Assist: return "A";
        case EventSet::Backoff: return "B";
        case EventSet::Collision: return "C";
    }
    return "?";
}

namespace {

bool in_event(StateLabel label, EventSet e) {
    switch (e) {
        case EventSet::Assist: return label.in_a;
        case EventSet::Backoff: return label.in_b;
        case EventSet::Collision: return label.in_c;
    }
    return false;
}

void check_probability(const Rational& value) {
    if (value < 0 || value > 1)
        throw std::invalid_argument("probability outside [0, 1]: " + to_string(value));
}

}  // namespace

BernoulliAssignment BernoulliAssignment::uniform(const Rational& value) {
    check_probability(value);
    BernoulliAssignment a;
    a.fixed_.fill(value);
    return a;
}

BernoulliAssignment BernoulliAssignment::flow_separation_scenario() {
    BernoulliAssignment a = uniform(Rational(1, 2));
    a.set_symbolic(StateElement::H_S1S2);
    a.set_symbolic(StateElement::H_S1D2);
    a.set_symbolic(StateElement::H_R1S2);
    a.set_symbolic(StateElement::H_R1D2);
    return a;
}

void BernoulliAssignment::set(StateElement e, const Rational& probability) {
    check_probability(probability);
    fixed_[static_cast<std::size_t>(e)] = probability;
}

void BernoulliAssignment::set_symbolic(StateElement e) noexcept {
    fixed_[static_cast<std::size_t>(e)] = std::nullopt;
}

bool BernoulliAssignment::is_symbolic(StateElement e) const noexcept {
    return !fixed_[static_cast<std::size_t>(e)].has_value();
}

bool BernoulliAssignment::fully_numeric() const noexcept {
    for (const auto& f : fixed_)
        if (!f) return false;
    return true;
}

Polynomial BernoulliAssignment::element_probability(StateElement e) const {
    const auto& f = fixed_[static_cast<std::size_t>(e)];
    return f ? Polynomial::constant(*f) : Polynomial::variable();
}

BernoulliAssignment BernoulliAssignment::substituted(const Rational& p) const {
    check_probability(p);
    BernoulliAssignment out = *this;
    for (auto& f : out.fixed_)
        if (!f) f = p;
    return out;
}

Polynomial state_probability(NetworkState state, const BernoulliAssignment& params) {
    Polynomial product = Polynomial::constant(Rational(1));
    const Polynomial one = Polynomial::constant(Rational(1));
    for (StateElement e : kAllElements) {
        const Polynomial prob = params.element_probability(e);
        product *= state.bit(e) ? prob : one - prob;
    }
    return product;
}

Polynomial policy_event_probability(const RelayPolicy& policy, EventSet event,
                                    const BernoulliAssignment& params) {
    Polynomial total;
    for (NetworkState s : enumerate_states()) {
        if (!policy.transmits(s)) continue;
        if (!in_event(classify(s), event)) continue;
        total += state_probability(s, params);
    }
    return total;
}

MonteCarloEstimate monte_carlo_check(const RelayPolicy& policy, EventSet event,
                                     const BernoulliAssignment& params,
                                     std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
    if (!params.fully_numeric())
        throw std::invalid_argument("Monte-Carlo check requires a fully numeric assignment");

    std::array<double, kElementCount> prob{};
    for (StateElement e : kAllElements)
        prob[static_cast<std::size_t>(e)] = params.element_probability(e).coeff(0).convert_to<double>();

    CounterRng rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint8_t idx = 0;
        for (std::size_t k = 0; k < kElementCount; ++k)
            if (rng.next_unit() < prob[k]) idx = static_cast<std::uint8_t>(idx | (1u << k));
        const NetworkState s(idx);
        if (policy.transmits(s) && in_event(classify(s), event)) ++hits;
    }

    MonteCarloEstimate out;
    out.samples = samples;
    out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
    return out;
}

std::vector<HopSweepEntry> hop_sweep_report(Viewpoint view, const Rational& p) {
    check_probability(p);
    const BernoulliAssignment scenario = BernoulliAssignment::flow_separation_scenario();

    std::vector<HopSweepEntry> rows;
    const auto add = [&](std::string name, const RelayPolicy& policy) {
        HopSweepEntry row;
        row.policy = std::move(name);
        row.assist = policy_event_probability(policy, EventSet::Assist, scenario)(p);
        row.backoff = policy_event_probability(policy, EventSet::Backoff, scenario)(p);
        row.collision = policy_event_probability(policy, EventSet::Collision, scenario)(p);
        rows.push_back(std::move(row));
    };

    const std::string_view stem = view == Viewpoint::Conservative ? "cons" : "greed";
    for (int hops = 0; hops <= 2; ++hops)
        add(std::string(stem) + std::to_string(hops), derive_policy(KnowledgeSubset::hops(hops), view));
    add("fnsi", make_policy(PolicyName::Fnsi));
    return rows;
}

}  // namespace coopmac
