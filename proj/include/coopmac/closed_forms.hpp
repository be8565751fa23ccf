#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "coopmac/bool_expr.hpp"
#include "coopmac/perf.hpp"
#include "coopmac/policy.hpp"

namespace coopmac {

/// The seven named policies: the full-information baseline plus the
/// conservative/greedy hop ladder.
enum class PolicyName { Fnsi, Cons2, Cons1, Cons0, Greed2, Greed1, Greed0 };

inline constexpr std::array<PolicyName, 7> kAllPolicies = {
    PolicyName::Fnsi,   PolicyName::Cons2,  PolicyName::Cons1, PolicyName::Cons0,
    PolicyName::Greed2, PolicyName::Greed1, PolicyName::Greed0,
};

std::string_view policy_token(PolicyName p) noexcept;  // "fnsi", "cons2", ...
std::optional<PolicyName> policy_from_token(std::string_view token) noexcept;

KnowledgeSubset policy_knowledge(PolicyName p) noexcept;
Viewpoint policy_viewpoint(PolicyName p) noexcept;

/// Derives the named policy's decision table.
RelayPolicy make_policy(PolicyName p);

/// The known closed-form expression for the relay *disabling* transmission
/// (the Rx set) over the policy's knowledge subset. derive_policy + minimize
/// must reproduce these on every non-DontCare bin.
BoolExpr closed_form_rx(PolicyName p);

/// The known closed-form Pr{Tx AND event} polynomials in p under the
/// flow-separation scenario; policy_event_probability must reproduce them
/// coefficient-exactly.
Polynomial closed_form_event_probability(PolicyName p, EventSet event);

}  // namespace coopmac
