#include "mvl/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mvl {

ExprPtr Expr::constant(Qudit value) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->tag_ = Tag::Const;
    e->value_ = value;
    return e;
}

ExprPtr Expr::var(std::string name) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->tag_ = Tag::Var;
    e->name_ = std::move(name);
    return e;
}

ExprPtr Expr::unary(QGateKind op, ExprPtr operand) {
    if (arity(op) != 1)
        throw ArityMismatch(std::string(to_string(op)) + " is not unary");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->tag_ = Tag::Unary;
    e->op_ = op;
    e->left_ = std::move(operand);
    return e;
}

ExprPtr Expr::binary(QGateKind op, ExprPtr lhs, ExprPtr rhs) {
    if (arity(op) != 2)
        throw ArityMismatch(std::string(to_string(op)) + " is not dyadic");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->tag_ = Tag::Binary;
    e->op_ = op;
    e->left_ = std::move(lhs);
    e->right_ = std::move(rhs);
    return e;
}

namespace {

// Recursive-descent parser:
//   expr   := term ('+' term)*
//   term   := factor ('.' factor)*
//   factor := digit | ident | ident '(' expr (',' expr)? ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_or();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (peek() == '+') {
            ++pos_;
            lhs = Expr::binary(QGateKind::Or, lhs, parse_and());
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_factor();
        while (peek() == '.') {
            ++pos_;
            lhs = Expr::binary(QGateKind::And, lhs, parse_factor());
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("expected expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_or();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            int v = std::stoi(digits);
            if (v > 3)
                throw SyntaxError("constant out of range: " + digits,
                                  static_cast<int>(start));
            return Expr::constant(Qudit(v));
        }
        if (is_ident_start(c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (peek() == '(')
                return parse_call(name, start);
            if (qgate_from_string(name))
                throw SyntaxError("operator " + name +
                                      " needs parenthesized operands",
                                  static_cast<int>(start));
            return Expr::var(std::move(name));
        }
        fail(std::string("unexpected character '") + c + "'");
        return nullptr;
    }

    ExprPtr parse_call(const std::string& name, size_t start) {
        auto kind = qgate_from_string(name);
        if (!kind)
            throw UnknownOperator("unknown operator: " + name);
        expect('(');
        ExprPtr first = parse_or();
        if (arity(*kind) == 1) {
            expect(')');
            return Expr::unary(*kind, first);
        }
        expect(',');
        ExprPtr second = parse_or();
        expect(')');
        (void)start;
        return Expr::binary(*kind, first, second);
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(msg, static_cast<int>(pos_));
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string_view text_;
    size_t pos_ = 0;
};

// Precedence: OR = 1, AND = 2, everything else atomic. The right operand
// of an infix chain keeps its parentheses so serialization is structure-
// preserving (parsing is left-associative).
int precedence(const Expr& e) {
    if (e.tag() != Expr::Tag::Binary)
        return 3;
    if (e.op() == QGateKind::Or)
        return 1;
    if (e.op() == QGateKind::And)
        return 2;
    return 3;
}

void render(const Expr& e, std::string& out, int parent_prec, bool right_child) {
    switch (e.tag()) {
    case Expr::Tag::Const:
        out += std::to_string(e.const_value().value());
        return;
    case Expr::Tag::Var:
        out += e.var_name();
        return;
    case Expr::Tag::Unary:
        out += to_string(e.op());
        out += '(';
        render(*e.operand(), out, 0, false);
        out += ')';
        return;
    case Expr::Tag::Binary:
        if (e.op() == QGateKind::Or || e.op() == QGateKind::And) {
            int prec = precedence(e);
            bool parens =
                prec < parent_prec || (prec == parent_prec && right_child);
            if (parens)
                out += '(';
            render(*e.left(), out, prec, false);
            out += e.op() == QGateKind::Or ? " + " : " . ";
            render(*e.right(), out, prec, true);
            if (parens)
                out += ')';
        } else {
            out += to_string(e.op());
            out += '(';
            render(*e.left(), out, 0, false);
            out += ", ";
            render(*e.right(), out, 0, false);
            out += ')';
        }
        return;
    }
}

void collect_vars(const Expr& e, std::set<std::string>& names) {
    switch (e.tag()) {
    case Expr::Tag::Const:
        return;
    case Expr::Tag::Var:
        names.insert(e.var_name());
        return;
    case Expr::Tag::Unary:
        collect_vars(*e.operand(), names);
        return;
    case Expr::Tag::Binary:
        collect_vars(*e.left(), names);
        collect_vars(*e.right(), names);
        return;
    }
}

} // namespace

ExprPtr parse_expr(std::string_view text) {
    return Parser(text).parse();
}

std::string to_string(const Expr& e) {
    std::string out;
    render(e, out, 0, false);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.tag() != b.tag())
        return false;
    switch (a.tag()) {
    case Expr::Tag::Const:
        return a.const_value() == b.const_value();
    case Expr::Tag::Var:
        return a.var_name() == b.var_name();
    case Expr::Tag::Unary:
        return a.op() == b.op() &&
               structurally_equal(*a.operand(), *b.operand());
    case Expr::Tag::Binary:
        return a.op() == b.op() && structurally_equal(*a.left(), *b.left()) &&
               structurally_equal(*a.right(), *b.right());
    }
    return false;
}

Qudit eval_expr(const Expr& e, const Env& env) {
    switch (e.tag()) {
    case Expr::Tag::Const:
        return e.const_value();
    case Expr::Tag::Var: {
        auto it = env.find(e.var_name());
        if (it == env.end())
            throw UnboundVariable("unbound variable: " + e.var_name());
        return it->second;
    }
    case Expr::Tag::Unary:
        return eval_qgate(e.op(), eval_expr(*e.operand(), env));
    case Expr::Tag::Binary:
        return eval_qgate(e.op(), eval_expr(*e.left(), env),
                          eval_expr(*e.right(), env));
    }
    throw Error("unreachable expr tag");
}

std::vector<std::string> variables(const Expr& e) {
    std::set<std::string> names;
    collect_vars(e, names);
    return {names.begin(), names.end()};
}

} // namespace mvl
