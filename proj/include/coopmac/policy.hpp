#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "coopmac/binary_model.hpp"
#include "coopmac/bool_expr.hpp"

namespace coopmac {

/// The subset of state elements whose values the relay knows. Any subset is
/// allowed; the hop sets and the full set have named constructors.
class KnowledgeSubset {
public:
    constexpr KnowledgeSubset() noexcept = default;

    static constexpr KnowledgeSubset none() noexcept { return KnowledgeSubset(0); }
    static constexpr KnowledgeSubset full() noexcept { return KnowledgeSubset(0xFF); }
    static KnowledgeSubset of(std::initializer_list<StateElement> elements);
    static KnowledgeSubset from_mask(std::uint8_t mask) noexcept { return KnowledgeSubset(mask); }

    /// Elements no further than n hops from the relay: hops(0) is empty,
    /// hops(1) = {H_R1S2, H_R1D2, H_R1D1}, hops(2) = all seven channels
    /// (X_S2 is never in a hop set). Throws std::invalid_argument on n < 0
    /// or n > 2.
    static KnowledgeSubset hops(int n);

    constexpr bool contains(StateElement e) const noexcept {
        return (mask_ >> bit_position(e)) & 1u;
    }
    constexpr std::uint8_t mask() const noexcept { return mask_; }
    int size() const noexcept;
    constexpr bool subset_of(KnowledgeSubset other) const noexcept {
        return (mask_ & ~other.mask_) == 0;
    }

    std::vector<StateElement> elements() const;  // ascending bit order

    std::size_t bin_count() const noexcept;  // 2^size

    /// Projects a full state onto the known elements, giving its bin index.
    /// Bit k of the bin corresponds to the k-th known element in ascending
    /// bit-position order.
    std::size_t bin_of(NetworkState s) const noexcept;

    friend constexpr bool operator==(KnowledgeSubset, KnowledgeSubset) noexcept = default;

private:
    explicit constexpr KnowledgeSubset(std::uint8_t mask) noexcept : mask_(mask) {}
    std::uint8_t mask_ = 0;
};

enum class Viewpoint { Conservative, Greedy };

enum class Decision : std::uint8_t { Tx, Rx, DontCare };

/// Total decision table over the bins of a knowledge subset. Executable
/// semantics resolve DontCare to Rx (transmitting in such bins would be
/// equally harmless; Rx is the energy-neutral choice).
class RelayPolicy {
public:
    RelayPolicy(KnowledgeSubset knowledge, std::vector<Decision> decisions);

    const KnowledgeSubset& knowledge() const noexcept { return knowledge_; }
    std::size_t bin_count() const noexcept { return decisions_.size(); }

    Decision decision(std::size_t bin) const;  // throws std::out_of_range
    Decision decision_for(NetworkState s) const noexcept;
    bool transmits(NetworkState s) const noexcept;

    friend bool operator==(const RelayPolicy&, const RelayPolicy&) = default;

private:
    KnowledgeSubset knowledge_;
    std::vector<Decision> decisions_;
};

/// All full states consistent with one bin: 2^(8-|known|) states.
/// Throws std::out_of_range if bin >= bin_count.
std::vector<NetworkState> conflict_set(const KnowledgeSubset& knowledge, std::size_t bin);

/// Overload taking an explicit assignment of known elements; throws
/// std::invalid_argument unless the assignment covers the knowledge subset
/// exactly.
std::vector<NetworkState> conflict_set(const KnowledgeSubset& knowledge,
                                       const std::map<StateElement, bool>& assignment);

/// Derives the relay policy for a knowledge subset under the given conflict
/// resolution viewpoint:
///   Conservative: Rx if any consistent state is harmful (B or C), else Tx
///     if any assists (A), else DontCare.
///   Greedy: Tx iff some consistent state assists AND some consistent state
///     is harmless; i.e. the relay halts only when it cannot help at all or
///     when every consistent completion is harmful.
RelayPolicy derive_policy(const KnowledgeSubset& knowledge, Viewpoint view);

/// Minimal sum-of-products cover (prime implicants, essential-first with a
/// greedy fallback for cyclic residues) of the bins mapped to `target`,
/// with DontCare bins usable freely. `target` must be Tx or Rx.
BoolExpr minimize(const RelayPolicy& policy, Decision target);

/// True iff a and b evaluate identically on every state in `care`. Both
/// expressions must be supported on `domain`; otherwise throws
/// std::invalid_argument.
bool expr_equivalent(const BoolExpr& a, const BoolExpr& b, const KnowledgeSubset& domain,
                     std::span<const NetworkState> care);

/// The full states whose bin is not DontCare under the policy; the care set
/// for comparisons against closed-form expressions.
std::vector<NetworkState> care_states(const RelayPolicy& policy);

}  // namespace coopmac
