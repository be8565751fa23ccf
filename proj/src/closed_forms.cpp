#include "coopmac/closed_forms.hpp"

namespace coopmac {

namespace {

using E = StateElement;

Term term(std::initializer_list<Literal> lits) {
    return Term::of(lits);
}

}  // namespace

std::string_view policy_token(PolicyName p) noexcept {
    switch (p) {
        case PolicyName::Fnsi: return "fnsi";
        case PolicyName::Cons2: return "cons2";
        case PolicyName::Cons1: return "cons1";
        case PolicyName::Cons0: return "cons0";
        case PolicyName::Greed2: return "greed2";
        case PolicyName::Greed1: return "greed1";
        case PolicyName::Greed0: return "greed0";
    }
    return "?";
}

std::optional<PolicyName> policy_from_token(std::string_view token) noexcept {
    for (PolicyName p : kAllPolicies)
        if (policy_token(p) == token) return p;
    return std::nullopt;
}

KnowledgeSubset policy_knowledge(PolicyName p) noexcept {
    switch (p) {
        case PolicyName::Fnsi: return KnowledgeSubset::full();
        case PolicyName::Cons2:
        case PolicyName::Greed2: return KnowledgeSubset::hops(2);
        case PolicyName::Cons1:
        case PolicyName::Greed1: return KnowledgeSubset::hops(1);
        case PolicyName::Cons0:
        case PolicyName::Greed0: return KnowledgeSubset::hops(0);
    }
    return KnowledgeSubset::none();
}

Viewpoint policy_viewpoint(PolicyName p) noexcept {
    switch (p) {
        case PolicyName::Greed2:
        case PolicyName::Greed1:
        case PolicyName::Greed0: return Viewpoint::Greedy;
        default: return Viewpoint::Conservative;
    }
}

RelayPolicy make_policy(PolicyName p) {
    return derive_policy(policy_knowledge(p), policy_viewpoint(p));
}

BoolExpr closed_form_rx(PolicyName p) {
    switch (p) {
        case PolicyName::Fnsi:
            return BoolExpr::sum({
                term({{E::X_S2}, {E::H_S2D2}, {E::H_R1D2}, {E::H_S1D2, true}}),
                term({{E::X_S2, true}, {E::H_R1S2}, {E::H_S1S2, true}}),
            });
        case PolicyName::Cons2:
            return BoolExpr::sum({
                term({{E::H_S2D2}, {E::H_R1D2}, {E::H_S1D2, true}}),
                term({{E::H_R1S2}, {E::H_S1S2, true}}),
            });
        case PolicyName::Cons1:
            return BoolExpr::sum({term({{E::H_R1S2}}), term({{E::H_R1D2}})});
        case PolicyName::Cons0:
            return BoolExpr::constant(true);
        case PolicyName::Greed2:
            return BoolExpr::sum({
                term({{E::H_S2D2}, {E::H_R1D2}, {E::H_S1D2, true}, {E::H_R1S2}, {E::H_S1S2, true}}),
                term({{E::H_R1D1, true}}),
            });
        case PolicyName::Greed1:
            return BoolExpr::sum({term({{E::H_R1D1, true}})});
        case PolicyName::Greed0:
            return BoolExpr::constant(false);
    }
    return BoolExpr::constant(false);
}

Polynomial closed_form_event_probability(PolicyName p, EventSet event) {
    const auto poly = [](std::initializer_list<Rational> asc) { return Polynomial(asc); };
    switch (p) {
        case PolicyName::Fnsi:
            if (event == EventSet::Assist)
                return poly({Rational(3, 8), Rational(-5, 16), Rational(5, 16)});
            return Polynomial();
        case PolicyName::Cons2:
            if (event == EventSet::Assist)
                return poly({Rational(3, 8), Rational(-9, 16), Rational(3, 4), Rational(-3, 8),
                             Rational(3, 16)});
            return Polynomial();
        case PolicyName::Cons1:
            if (event == EventSet::Assist)
                return poly({Rational(3, 8), Rational(-3, 4), Rational(3, 8)});
            return Polynomial();
        case PolicyName::Cons0:
            return Polynomial();
        case PolicyName::Greed2:
            switch (event) {
                case EventSet::Assist:
                    return poly({Rational(3, 8), Rational(0), Rational(-3, 16), Rational(3, 8),
                                 Rational(-3, 16)});
                case EventSet::Backoff:
                    return poly({Rational(0), Rational(1, 4), Rational(-3, 8), Rational(1, 4),
                                 Rational(-1, 8)});
                case EventSet::Collision:
                    return poly({Rational(0), Rational(1, 8), Rational(-1, 4), Rational(1, 4),
                                 Rational(-1, 8)});
            }
            return Polynomial();
        case PolicyName::Greed1:
            switch (event) {
                case EventSet::Assist: return poly({Rational(3, 8)});
                case EventSet::Backoff: return poly({Rational(0), Rational(1, 4), Rational(-1, 4)});
                case EventSet::Collision: return poly({Rational(0), Rational(1, 8), Rational(-1, 8)});
            }
            return Polynomial();
        case PolicyName::Greed0:
            switch (event) {
                case EventSet::Assist: return poly({Rational(3, 8)});
                case EventSet::Backoff: return poly({Rational(0), Rational(1, 2), Rational(-1, 2)});
                case EventSet::Collision: return poly({Rational(0), Rational(1, 4), Rational(-1, 4)});
            }
            return Polynomial();
    }
    return Polynomial();
}

}  // namespace coopmac
