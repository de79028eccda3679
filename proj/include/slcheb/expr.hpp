#pragma once

#include <memory>
#include <string>

#include "slcheb/error.hpp"

namespace slcheb {

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
}  // namespace detail

/// Immutable arithmetic expression in one variable x.
///
/// Grammar: numbers (optional scientific notation), identifiers x, pi, e,
/// functions sin cos tan exp ln sqrt abs, operators + - * / ^ (caret highest,
/// right-associative, then unary minus, then * /, then + -), parentheses.
class Expr {
public:
    /// Default-constructed expression is the literal 0.
    Expr();

    /// Evaluate at x. Throws EvalError on numeric domain violations,
    /// carrying the offending sub-expression and the x value.
    double eval(double x) const;

    /// Symbolic derivative with light simplification. abs differentiates to
    /// the sign-based expression u*u'/abs(u), undefined at u = 0.
    Expr derivative() const;

    /// Source form that re-parses to an evaluation-identical tree.
    std::string to_string() const;

    /// True when the tree references the variable x.
    bool depends_on_x() const;

private:
    explicit Expr(detail::NodePtr node);

    detail::NodePtr node_;

    friend Expr parse(const std::string& source);
    friend Expr parse_number(double value);
};

/// Parse an expression; throws ParseError with position on bad input.
Expr parse(const std::string& source);

/// Expression wrapping a numeric literal.
Expr parse_number(double value);

}  // namespace slcheb
