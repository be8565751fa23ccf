#include "coopmac/binary_model.hpp"

#include <stdexcept>

namespace coopmac {

namespace {

constexpr std::array<std::string_view, kElementCount> kNames = {
    "H_R1D2", "H_R1D1", "H_R1S2", "H_S2D1", "H_S2D2", "H_S1S2", "H_S1D2", "X_S2",
};

}  // namespace

std::string_view element_name(StateElement e) noexcept {
    return kNames[static_cast<std::size_t>(e)];
}

std::optional<StateElement> element_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<StateElement>(i);
    return std::nullopt;
}

std::string to_string(StateLabel label) {
    if (label.in_a && label.in_b) return "A∩B";
    if (label.in_a && label.in_c) return "A∩C";
    if (label.in_a) return "A";
    if (label.in_b) return "B";
    if (label.in_c) return "C";
    return "D";
}

std::array<NetworkState, kStateCount> enumerate_states() noexcept {
    std::array<NetworkState, kStateCount> out;
    for (std::size_t i = 0; i < kStateCount; ++i)
        out[i] = NetworkState(static_cast<std::uint8_t>(i));
    return out;
}

namespace {

// Compact label codes for the transcribed table below.
enum Code : std::uint8_t { D, A, B, C, AB, AC };

constexpr StateLabel expand(Code c) {
    switch (c) {
        case A:  return {true, false, false};
        case B:  return {false, true, false};
        case C:  return {false, false, true};
        case AB: return {true, true, false};
        case AC: return {true, false, true};
        case D:  default: return {false, false, false};
    }
}

// 256 labels in index order, transcribed column by column from the source
// table (each block of 32 covers one column of the published listing).
constexpr Code kLabelCodes[kStateCount] = {
    // 0..31
    D, D, A, A, B, B, AB, AB, D, D, A, A, B, B, AB, AB,
    D, D, A, A, B, B, AB, AB, D, D, A, A, B, B, AB, AB,
    // 32..63
    D, D, A, A, D, D, A, A, D, D, A, A, D, D, A, A,
    D, D, A, A, D, D, A, A, D, D, A, A, D, D, A, A,
    // 64..95
    D, D, A, A, B, B, AB, AB, D, D, A, A, B, B, AB, AB,
    D, D, A, A, B, B, AB, AB, D, D, A, A, B, B, AB, AB,
    // 96..127
    D, D, A, A, D, D, A, A, D, D, A, A, D, D, A, A,
    D, D, A, A, D, D, A, A, D, D, A, A, D, D, A, A,
    // 128..159
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
    D, C, A, AC, D, C, A, AC, D, C, D, C, D, C, D, C,
    // 160..191
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
    D, C, A, AC, D, C, A, AC, D, C, D, C, D, C, D, C,
    // 192..223
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
    // 224..255
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
    D, D, A, A, D, D, A, A, D, D, D, D, D, D, D, D,
};

}  // namespace

const std::array<StateLabel, kStateCount>& classification_reference_table() noexcept {
    static const std::array<StateLabel, kStateCount> table = [] {
        std::array<StateLabel, kStateCount> t{};
        for (std::size_t i = 0; i < kStateCount; ++i)
            t[i] = expand(kLabelCodes[i]);
        return t;
    }();
    return table;
}

}  // namespace coopmac
