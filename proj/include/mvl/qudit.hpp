#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mvl/errors.hpp"

namespace mvl {

/// A single quaternary logic level in {0,1,2,3}. Values 0 and 3 are
/// symmetric (their bit pair survives a swap), 1 and 2 are asymmetric.
class Qudit {
public:
    constexpr Qudit() = default;
    explicit Qudit(int value)
        : value_(static_cast<std::uint8_t>(value)) {
        if (value < 0 || value > 3)
            throw ValueOutOfRange("qudit value must be in {0,1,2,3}, got " +
                                  std::to_string(value));
    }

    constexpr int value() const { return value_; }
    constexpr bool symmetric() const { return value_ == 0 || value_ == 3; }
    constexpr bool asymmetric() const { return !symmetric(); }

    friend constexpr auto operator<=>(Qudit, Qudit) = default;

private:
    std::uint8_t value_ = 0;
};

/// The packed-binary form of a qudit: value = 2*msb + lsb.
struct BitPair {
    bool msb = false;
    bool lsb = false;

    friend constexpr bool operator==(BitPair, BitPair) = default;
};

BitPair qudit_to_bits(Qudit q);
Qudit bits_to_qudit(BitPair b);

/// The ten quaternary gates. AND, OR, NOT and BITSWAP are fundamental
/// (sufficient to define the algebra); the rest are functional.
enum class QGateKind {
    And,
    Or,
    Not,
    Bitswap,
    Xor,
    Inward,
    Outward,
    Eq,
    Max,
    Min,
};

/// Binary gates used by lowered circuits.
enum class BGateKind {
    And2,
    Or2,
    Not,
    Xor2,
    Xnor2,
};

inline constexpr std::array<QGateKind, 10> all_qgate_kinds = {
    QGateKind::And,    QGateKind::Or,      QGateKind::Not, QGateKind::Bitswap,
    QGateKind::Xor,    QGateKind::Inward,  QGateKind::Outward,
    QGateKind::Eq,     QGateKind::Max,     QGateKind::Min,
};

inline constexpr std::array<BGateKind, 5> all_bgate_kinds = {
    BGateKind::And2, BGateKind::Or2, BGateKind::Not, BGateKind::Xor2,
    BGateKind::Xnor2,
};

int arity(QGateKind kind);
int arity(BGateKind kind);

std::string_view to_string(QGateKind kind);
std::string_view to_string(BGateKind kind);
std::optional<QGateKind> qgate_from_string(std::string_view token);
std::optional<BGateKind> bgate_from_string(std::string_view token);

/// Evaluates one quaternary gate. `b` must be present exactly for the
/// dyadic kinds; throws ArityMismatch otherwise.
Qudit eval_qgate(QGateKind kind, Qudit a, std::optional<Qudit> b = std::nullopt);

/// Evaluates one binary gate, same arity contract as eval_qgate.
bool eval_bgate(BGateKind kind, bool a, std::optional<bool> b = std::nullopt);

} // namespace mvl
