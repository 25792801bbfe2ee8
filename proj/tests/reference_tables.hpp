#pragma once

// Reference truth tables for the ten quaternary gates, kept independent
// of the evaluator under test. Dyadic tables list the ten unordered
// operand pairs (a <= b); commutativity supplies the other six ordered
// pairs. Unary tables list outputs for operands 0..3.

#include <array>

namespace mvl::testing {

struct DyadicRow {
    int a;
    int b;
    int out;
};

inline constexpr std::array<std::pair<int, int>, 10> operand_pairs = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
    {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

inline constexpr std::array<int, 10> and_table = {0, 0, 0, 0, 1,
                                                  0, 1, 2, 2, 3};
inline constexpr std::array<int, 10> or_table = {0, 1, 2, 3, 1,
                                                 3, 3, 2, 3, 3};
inline constexpr std::array<int, 10> xor_table = {0, 1, 2, 3, 0,
                                                  3, 2, 0, 1, 0};
inline constexpr std::array<int, 10> eq_table = {3, 0, 0, 0, 3,
                                                 0, 0, 3, 0, 3};
inline constexpr std::array<int, 10> max_table = {0, 1, 2, 3, 1,
                                                  2, 3, 2, 3, 3};
inline constexpr std::array<int, 10> min_table = {0, 0, 0, 0, 1,
                                                  1, 1, 2, 2, 3};

inline constexpr std::array<int, 4> not_table = {3, 2, 1, 0};
inline constexpr std::array<int, 4> bitswap_table = {0, 2, 1, 3};
inline constexpr std::array<int, 4> inward_table = {2, 2, 1, 1};
inline constexpr std::array<int, 4> outward_table = {3, 3, 0, 0};

// The 1-to-4 decoder: S selects which line carries 3.
inline constexpr std::array<std::array<int, 5>, 4> decoder_table = {{
    {0, 3, 0, 0, 0},
    {1, 0, 3, 0, 0},
    {2, 0, 0, 3, 0},
    {3, 0, 0, 0, 3},
}};

// Its binary counterpart: inputs (S.1, S.0), outputs four (msb, lsb)
// pairs, the selected line reading (1, 1).
inline constexpr std::array<std::array<int, 10>, 4> decoder_binary_table = {{
    {0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 1, 1, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 1, 1, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 1, 1},
}};

} // namespace mvl::testing
