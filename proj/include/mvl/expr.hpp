#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mvl/qudit.hpp"

namespace mvl {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over the quaternary operators.
///
/// Concrete syntax: infix `+` (OR) and `.` (AND, binds tighter), named
/// functions NOT/BITSWAP/INWARD/OUTWARD (unary) and XOR/EQ/MAX/MIN
/// (dyadic), constants 0-3, identifiers as variables, parentheses.
class Expr {
public:
    enum class Tag { Const, Var, Unary, Binary };

    static ExprPtr constant(Qudit value);
    static ExprPtr var(std::string name);
    static ExprPtr unary(QGateKind op, ExprPtr operand);
    static ExprPtr binary(QGateKind op, ExprPtr lhs, ExprPtr rhs);

    Tag tag() const { return tag_; }
    Qudit const_value() const { return value_; }
    const std::string& var_name() const { return name_; }
    QGateKind op() const { return op_; }
    const ExprPtr& left() const { return left_; }
    const ExprPtr& right() const { return right_; }
    const ExprPtr& operand() const { return left_; }

private:
    Expr() = default;

    Tag tag_ = Tag::Const;
    Qudit value_;
    std::string name_;
    QGateKind op_ = QGateKind::And;
    ExprPtr left_;
    ExprPtr right_;
};

using Env = std::map<std::string, Qudit>;

/// Parses the concrete syntax above. Throws SyntaxError (with character
/// offset) or UnknownOperator.
ExprPtr parse_expr(std::string_view text);

/// Canonical infix rendering; parse_expr(to_string(e)) rebuilds e.
std::string to_string(const Expr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

bool structurally_equal(const Expr& a, const Expr& b);
inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    return structurally_equal(*a, *b);
}

/// Bottom-up evaluation; throws UnboundVariable.
Qudit eval_expr(const Expr& e, const Env& env);
inline Qudit eval_expr(const ExprPtr& e, const Env& env) {
    return eval_expr(*e, env);
}

/// Variable names occurring in e, sorted, deduplicated.
std::vector<std::string> variables(const Expr& e);
inline std::vector<std::string> variables(const ExprPtr& e) {
    return variables(*e);
}

} // namespace mvl
