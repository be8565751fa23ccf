#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace coopmac {

/// The eight free elements of the relay-centric binary network snapshot.
/// The enumerator value is the element's bit position in the state index
/// (H_R1D2 -> 2^0 ... X_S2 -> 2^7).
enum class StateElement : std::uint8_t {
    H_R1D2 = 0,
    H_R1D1 = 1,
    H_R1S2 = 2,
    H_S2D1 = 3,
    H_S2D2 = 4,
    H_S1S2 = 5,
    H_S1D2 = 6,
    X_S2   = 7,
};

inline constexpr std::size_t kElementCount = 8;
inline constexpr std::size_t kStateCount = 256;

inline constexpr std::array<StateElement, kElementCount> kAllElements = {
    StateElement::H_R1D2, StateElement::H_R1D1, StateElement::H_R1S2,
    StateElement::H_S2D1, StateElement::H_S2D2, StateElement::H_S1S2,
    StateElement::H_S1D2, StateElement::X_S2,
};

constexpr int bit_position(StateElement e) noexcept {
    return static_cast<int>(e);
}

std::string_view element_name(StateElement e) noexcept;
std::optional<StateElement> element_from_name(std::string_view name) noexcept;

/// Hop distance from the relay for channel elements; X_S2 is a node state
/// and belongs to no hop set.
constexpr std::optional<int> hop_distance(StateElement e) noexcept {
    switch (e) {
        case StateElement::H_R1S2:
        case StateElement::H_R1D2:
        case StateElement::H_R1D1:
            return 1;
        case StateElement::X_S2:
            return std::nullopt;
        default:
            return 2;
    }
}

/// One of the 256 binary network snapshots. The five reduced elements
/// (X_S1=1, X_D1=0, X_D2=0, H_S1D1=0, H_S1R1=1) are model constants and
/// are not stored.
class NetworkState {
public:
    constexpr NetworkState() noexcept = default;
    explicit constexpr NetworkState(std::uint8_t index) noexcept : index_(index) {}

    static constexpr NetworkState from_bits(const std::array<bool, kElementCount>& bits) noexcept {
        std::uint8_t idx = 0;
        for (std::size_t i = 0; i < kElementCount; ++i)
            if (bits[i]) idx = static_cast<std::uint8_t>(idx | (1u << i));
        return NetworkState(idx);
    }

    constexpr std::uint8_t index() const noexcept { return index_; }

    constexpr bool bit(StateElement e) const noexcept {
        return (index_ >> bit_position(e)) & 1u;
    }

    constexpr std::array<bool, kElementCount> bits() const noexcept {
        std::array<bool, kElementCount> out{};
        for (std::size_t i = 0; i < kElementCount; ++i)
            out[i] = (index_ >> i) & 1u;
        return out;
    }

    friend constexpr bool operator==(NetworkState, NetworkState) noexcept = default;
    friend constexpr auto operator<=>(NetworkState, NetworkState) noexcept = default;

private:
    std::uint8_t index_ = 0;
};

/// Membership in the assist / backoff / collision sets. The no-effect case
/// (label D) is all three flags false; B and C are mutually exclusive.
struct StateLabel {
    bool in_a = false;
    bool in_b = false;
    bool in_c = false;

    constexpr bool harmful() const noexcept { return in_b || in_c; }
    constexpr bool is_d() const noexcept { return !in_a && !in_b && !in_c; }

    friend constexpr bool operator==(StateLabel, StateLabel) noexcept = default;
};

std::string to_string(StateLabel label);

/// Classifies a snapshot by the effect a relay transmission would have:
///   A: H_R1D1 & !(X_S2 & H_S2D1)
///   B: !X_S2 & H_R1S2 & !H_S1S2
///   C: X_S2 & H_S2D2 & H_R1D2 & !H_S1D2
constexpr StateLabel classify(NetworkState s) noexcept {
    using E = StateElement;
    StateLabel l;
    l.in_a = s.bit(E::H_R1D1) && !(s.bit(E::X_S2) && s.bit(E::H_S2D1));
    l.in_b = !s.bit(E::X_S2) && s.bit(E::H_R1S2) && !s.bit(E::H_S1S2);
    l.in_c = s.bit(E::X_S2) && s.bit(E::H_S2D2) && s.bit(E::H_R1D2) && !s.bit(E::H_S1D2);
    return l;
}

/// All 256 states in ascending index order.
std::array<NetworkState, kStateCount> enumerate_states() noexcept;

/// The manually transcribed 256-entry label table, kept as independent
/// reference data; classify() is checked against it exhaustively.
const std::array<StateLabel, kStateCount>& classification_reference_table() noexcept;

}  // namespace coopmac
