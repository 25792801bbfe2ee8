#include "mvl/qudit.hpp"

#include <algorithm>

namespace mvl {

BitPair qudit_to_bits(Qudit q) {
    return {(q.value() & 2) != 0, (q.value() & 1) != 0};
}

Qudit bits_to_qudit(BitPair b) {
    return Qudit(2 * int(b.msb) + int(b.lsb));
}

int arity(QGateKind kind) {
    switch (kind) {
    case QGateKind::Not:
    case QGateKind::Bitswap:
    case QGateKind::Inward:
    case QGateKind::Outward:
        return 1;
    default:
        return 2;
    }
}

int arity(BGateKind kind) {
    return kind == BGateKind::Not ? 1 : 2;
}

std::string_view to_string(QGateKind kind) {
    switch (kind) {
    case QGateKind::And:     return "AND";
    case QGateKind::Or:      return "OR";
    case QGateKind::Not:     return "NOT";
    case QGateKind::Bitswap: return "BITSWAP";
    case QGateKind::Xor:     return "XOR";
    case QGateKind::Inward:  return "INWARD";
    case QGateKind::Outward: return "OUTWARD";
    case QGateKind::Eq:      return "EQ";
    case QGateKind::Max:     return "MAX";
    case QGateKind::Min:     return "MIN";
    }
    return "?";
}

std::string_view to_string(BGateKind kind) {
    switch (kind) {
    case BGateKind::And2:  return "AND2";
    case BGateKind::Or2:   return "OR2";
    case BGateKind::Not:   return "NOT";
    case BGateKind::Xor2:  return "XOR2";
    case BGateKind::Xnor2: return "XNOR2";
    }
    return "?";
}

std::optional<QGateKind> qgate_from_string(std::string_view token) {
    for (QGateKind k : all_qgate_kinds)
        if (to_string(k) == token)
            return k;
    return std::nullopt;
}

std::optional<BGateKind> bgate_from_string(std::string_view token) {
    for (BGateKind k : all_bgate_kinds)
        if (to_string(k) == token)
            return k;
    return std::nullopt;
}

namespace {

void check_arity(int want, bool has_b, std::string_view name) {
    int got = has_b ? 2 : 1;
    if (got != want)
        throw ArityMismatch(std::string(name) + " takes " +
                            std::to_string(want) + " operand(s), got " +
                            std::to_string(got));
}

} // namespace

Qudit eval_qgate(QGateKind kind, Qudit a, std::optional<Qudit> b) {
    check_arity(arity(kind), b.has_value(), to_string(kind));
    int x = a.value();
    int y = b ? b->value() : 0;
    switch (kind) {
    // The fundamental dyadic gates act bitwise on the packed pair.
    case QGateKind::And: return Qudit(x & y);
    case QGateKind::Or:  return Qudit(x | y);
    case QGateKind::Xor: return Qudit(x ^ y);
    case QGateKind::Not: return Qudit(3 ^ x);
    case QGateKind::Bitswap: {
        BitPair p = qudit_to_bits(a);
        return bits_to_qudit({p.lsb, p.msb});
    }
    // The functional inverters depend only on the operand's MSB:
    // inward yields <~x1, x1>, outward <~x1, ~x1>.
    case QGateKind::Inward: {
        bool x1 = qudit_to_bits(a).msb;
        return bits_to_qudit({!x1, x1});
    }
    case QGateKind::Outward: {
        bool x1 = qudit_to_bits(a).msb;
        return bits_to_qudit({!x1, !x1});
    }
    case QGateKind::Eq:  return Qudit(x == y ? 3 : 0);
    case QGateKind::Max: return Qudit(std::max(x, y));
    case QGateKind::Min: return Qudit(std::min(x, y));
    }
    throw Error("unreachable gate kind");
}

bool eval_bgate(BGateKind kind, bool a, std::optional<bool> b) {
    check_arity(arity(kind), b.has_value(), to_string(kind));
    bool y = b.value_or(false);
    switch (kind) {
    case BGateKind::And2:  return a && y;
    case BGateKind::Or2:   return a || y;
    case BGateKind::Not:   return !a;
    case BGateKind::Xor2:  return a != y;
    case BGateKind::Xnor2: return a == y;
    }
    throw Error("unreachable gate kind");
}

} // namespace mvl
