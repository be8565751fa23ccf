#include "doctest.h"

#include <stdexcept>

#include "coopmac/closed_forms.hpp"
#include "coopmac/perf.hpp"

using namespace coopmac;
using E = StateElement;

namespace {

Polynomial one_minus_p_pow4_over_16() {
    const Polynomial one_minus_p({Rational(1), Rational(-1)});
    Polynomial acc = Polynomial::constant(Rational(1, 16));
    for (int i = 0; i < 4; ++i) acc *= one_minus_p;
    return acc;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/8") == Rational(3, 8));
    CHECK(parse_rational("-5/16") == Rational(-5, 16));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(to_string(Rational(3, 8)) == "3/8");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and printing") {
    const Polynomial p = Polynomial::variable();
    const Polynomial q = p * p - p + Polynomial::constant(Rational(1, 2));
    CHECK(q.degree() == 2);
    CHECK(q(Rational(1, 2)) == Rational(1, 4));
    CHECK(q.str() == "(2p^2-2p+1)/2");
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial::constant(Rational(3, 8)).str() == "3/8");
    CHECK(closed_form_event_probability(PolicyName::Fnsi, EventSet::Assist).str() ==
          "(5p^2-5p+6)/16");
    CHECK((p - p).is_zero());
}

TEST_CASE("state probabilities under the flow-separation scenario") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();

    SUBCASE("all-zero state") {
        CHECK(state_probability(NetworkState(0), scenario) == one_minus_p_pow4_over_16());
    }
    SUBCASE("state 2 (only H_R1D1 set) has the same probability") {
        CHECK(state_probability(NetworkState(2), scenario) == one_minus_p_pow4_over_16());
    }
    SUBCASE("probabilities sum to one") {
        Polynomial total;
        for (NetworkState s : enumerate_states()) total += state_probability(s, scenario);
        CHECK(total == Polynomial::constant(Rational(1)));
    }
    SUBCASE("parameters outside [0,1] are rejected") {
        BernoulliAssignment a = BernoulliAssignment::uniform(Rational(1, 2));
        CHECK_THROWS_AS(a.set(E::H_R1D1, Rational(3, 2)), std::invalid_argument);
        CHECK_THROWS_AS(a.set(E::H_R1D1, Rational(-1, 8)), std::invalid_argument);
        CHECK_THROWS_AS(BernoulliAssignment::uniform(Rational(9, 8)), std::invalid_argument);
    }
}

TEST_CASE("all 21 event polynomials match the closed forms coefficient-exactly") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    for (PolicyName name : kAllPolicies) {
        const RelayPolicy policy = make_policy(name);
        for (EventSet ev : {EventSet::Assist, EventSet::Backoff, EventSet::Collision}) {
            INFO("policy ", policy_token(name), " event ", event_name(ev));
            CHECK(policy_event_probability(policy, ev, scenario) ==
                  closed_form_event_probability(name, ev));
        }
    }
}

TEST_CASE("conservative policies and FNSI have identically zero B and C polynomials") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    for (PolicyName name : {PolicyName::Fnsi, PolicyName::Cons0, PolicyName::Cons1, PolicyName::Cons2}) {
        const RelayPolicy policy = make_policy(name);
        CHECK(policy_event_probability(policy, EventSet::Backoff, scenario).is_zero());
        CHECK(policy_event_probability(policy, EventSet::Collision, scenario).is_zero());
    }
}

TEST_CASE("spot values") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    const Polynomial cons1_a =
        policy_event_probability(make_policy(PolicyName::Cons1), EventSet::Assist, scenario);
    CHECK(cons1_a(Rational(1)) == Rational(0));
    CHECK(cons1_a(Rational(1, 2)) == Rational(3, 32));

    const Polynomial greed0_b =
        policy_event_probability(make_policy(PolicyName::Greed0), EventSet::Backoff, scenario);
    CHECK(greed0_b == Polynomial({Rational(0), Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("resolving DontCare bins to Tx changes no event polynomial") {
    // DontCare bins contain only label-D states, which belong to none of the
    // three event sets.
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    for (PolicyName name : kAllPolicies) {
        const RelayPolicy policy = make_policy(name);
        std::vector<Decision> flipped;
        for (std::size_t bin = 0; bin < policy.bin_count(); ++bin) {
            const Decision d = policy.decision(bin);
            flipped.push_back(d == Decision::DontCare ? Decision::Tx : d);
        }
        const RelayPolicy tx_variant(policy.knowledge(), std::move(flipped));
        for (EventSet ev : {EventSet::Assist, EventSet::Backoff, EventSet::Collision}) {
            CHECK(policy_event_probability(tx_variant, ev, scenario) ==
                  closed_form_event_probability(name, ev));
        }
    }
}

TEST_CASE("probability bounds on a 101-point grid") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    for (PolicyName name : kAllPolicies) {
        const RelayPolicy policy = make_policy(name);
        const Polynomial pa = policy_event_probability(policy, EventSet::Assist, scenario);
        const Polynomial pb = policy_event_probability(policy, EventSet::Backoff, scenario);
        const Polynomial pc = policy_event_probability(policy, EventSet::Collision, scenario);
        for (int k = 0; k <= 100; ++k) {
            const Rational p(k, 100);
            const Rational a = pa(p), b = pb(p), c = pc(p);
            CHECK(a >= 0); CHECK(a <= 1);
            CHECK(b >= 0); CHECK(b <= 1);
            CHECK(c >= 0); CHECK(c <= 1);
            CHECK(b + c <= 1);
        }
    }
}

TEST_CASE("greedy assist dominates conservative assist pointwise at equal hops") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    const std::pair<PolicyName, PolicyName> pairs[] = {
        {PolicyName::Greed0, PolicyName::Cons0},
        {PolicyName::Greed1, PolicyName::Cons1},
        {PolicyName::Greed2, PolicyName::Cons2},
    };
    for (const auto& [greedy, cons] : pairs) {
        const Polynomial ga =
            policy_event_probability(make_policy(greedy), EventSet::Assist, scenario);
        const Polynomial ca =
            policy_event_probability(make_policy(cons), EventSet::Assist, scenario);
        for (int k = 0; k <= 100; ++k) {
            const Rational p(k, 100);
            CHECK(ga(p) >= ca(p));
        }
    }
}

TEST_CASE("hop sweep report") {
    const auto greedy = hop_sweep_report(Viewpoint::Greedy, Rational(1, 2));
    REQUIRE(greedy.size() == 4);
    CHECK(greedy[0].policy == "greed0");
    CHECK(greedy[0].assist == Rational(3, 8));
    CHECK(greedy[1].policy == "greed1");
    CHECK(greedy[1].backoff == Rational(1, 16));
    CHECK(greedy[3].policy == "fnsi");

    const auto cons = hop_sweep_report(Viewpoint::Conservative, Rational(1, 2));
    CHECK(cons[0].assist == Rational(0));
    CHECK(cons[0].backoff == Rational(0));
    CHECK(cons[0].collision == Rational(0));

    CHECK_THROWS_AS(hop_sweep_report(Viewpoint::Greedy, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("Monte-Carlo estimates agree with exact values") {
    const auto scenario = BernoulliAssignment::flow_separation_scenario();
    const std::uint64_t n = 1'000'000;
    const std::uint64_t seed = 20240817;

    SUBCASE("greed0 assist at p = 1/2") {
        const auto numeric = scenario.substituted(Rational(1, 2));
        const auto est = monte_carlo_check(make_policy(PolicyName::Greed0), EventSet::Assist,
                                           numeric, n, seed);
        CHECK(std::abs(est.estimate - 0.375) <= 3.0 * est.std_error);
    }
    SUBCASE("cons0 never transmits") {
        const auto numeric = scenario.substituted(Rational(1, 2));
        for (EventSet ev : {EventSet::Assist, EventSet::Backoff, EventSet::Collision}) {
            const auto est =
                monte_carlo_check(make_policy(PolicyName::Cons0), ev, numeric, 10'000, seed);
            CHECK(est.estimate == 0.0);
        }
    }
    SUBCASE("greed2 collision at p = 1/2") {
        const auto numeric = scenario.substituted(Rational(1, 2));
        const Polynomial exact = closed_form_event_probability(PolicyName::Greed2, EventSet::Collision);
        const double expected = to_double(exact(Rational(1, 2)));
        CHECK(expected == doctest::Approx(3.0 / 128.0));
        const auto est = monte_carlo_check(make_policy(PolicyName::Greed2), EventSet::Collision,
                                           numeric, n, seed);
        CHECK(std::abs(est.estimate - expected) <= 3.0 * est.std_error);
    }
    SUBCASE("deterministic for a fixed seed") {
        const auto numeric = scenario.substituted(Rational(1, 10));
        const auto a = monte_carlo_check(make_policy(PolicyName::Greed1), EventSet::Backoff,
                                         numeric, 100'000, 7);
        const auto b = monte_carlo_check(make_policy(PolicyName::Greed1), EventSet::Backoff,
                                         numeric, 100'000, 7);
        CHECK(a.estimate == b.estimate);
        CHECK(a.std_error == b.std_error);
    }
    SUBCASE("input validation") {
        const auto numeric = scenario.substituted(Rational(1, 2));
        CHECK_THROWS_AS(monte_carlo_check(make_policy(PolicyName::Greed0), EventSet::Assist,
                                          numeric, 0, seed),
                        std::invalid_argument);
        CHECK_THROWS_AS(monte_carlo_check(make_policy(PolicyName::Greed0), EventSet::Assist,
                                          scenario, 100, seed),
                        std::invalid_argument);
    }
}
