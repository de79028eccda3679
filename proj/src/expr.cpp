#include "slcheb/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string_view>
#include <utility>

namespace slcheb {
namespace detail {

enum class Func { sin, cos, tan, exp, ln, sqrt, abs };

const char* func_name(Func f) {
    switch (f) {
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::tan: return "tan";
        case Func::exp: return "exp";
        case Func::ln: return "ln";
        case Func::sqrt: return "sqrt";
        case Func::abs: return "abs";
    }
    return "?";
}

struct ExprNode {
    enum class Kind { number, constant, var, neg, add, sub, mul, div, pow, call };

    Kind kind;
    double value = 0.0;      // number, constant
    std::string name;        // constant
    Func func = Func::sin;   // call
    NodePtr lhs;
    NodePtr rhs;
};

using Kind = ExprNode::Kind;

namespace {

NodePtr num(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::number;
    n->value = v;
    return n;
}

NodePtr named_constant(std::string name, double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::constant;
    n->name = std::move(name);
    n->value = v;
    return n;
}

NodePtr variable() {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::var;
    return n;
}

NodePtr binary(Kind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr unary(Kind kind, NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(a);
    return n;
}

NodePtr call(Func f, NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::call;
    n->func = f;
    n->lhs = std::move(a);
    return n;
}

bool is_const_node(const NodePtr& n) {
    return n->kind == Kind::number || n->kind == Kind::constant;
}

bool is_value(const NodePtr& n, double v) { return is_const_node(n) && n->value == v; }

// Simplifying constructors: constant folding plus the identities
// 0*u -> 0, 1*u -> u, u+0 -> u, 0/u -> 0, u^1 -> u, u^0 -> 1.

NodePtr make_neg(NodePtr a) {
    if (is_const_node(a)) return num(-a->value);
    if (a->kind == Kind::neg) return a->lhs;
    return unary(Kind::neg, std::move(a));
}

NodePtr make_add(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0)) return b;
    if (is_value(b, 0.0)) return a;
    if (is_const_node(a) && is_const_node(b)) return num(a->value + b->value);
    return binary(Kind::add, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (is_value(b, 0.0)) return a;
    if (is_value(a, 0.0)) return make_neg(std::move(b));
    if (is_const_node(a) && is_const_node(b)) return num(a->value - b->value);
    return binary(Kind::sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0) || is_value(b, 0.0)) return num(0.0);
    if (is_value(a, 1.0)) return b;
    if (is_value(b, 1.0)) return a;
    if (is_const_node(a) && is_const_node(b)) return num(a->value * b->value);
    return binary(Kind::mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0)) return num(0.0);
    if (is_value(b, 1.0)) return a;
    if (is_const_node(a) && is_const_node(b) && b->value != 0.0)
        return num(a->value / b->value);
    return binary(Kind::div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, NodePtr b) {
    if (is_value(b, 1.0)) return a;
    if (is_value(b, 0.0)) return num(1.0);
    if (is_const_node(a) && is_const_node(b)) {
        const double v = std::pow(a->value, b->value);
        if (std::isfinite(v)) return num(v);
    }
    return binary(Kind::pow, std::move(a), std::move(b));
}

bool depends_on_x_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::number:
        case Kind::constant: return false;
        case Kind::var: return true;
        default:
            if (n->lhs && depends_on_x_node(n->lhs)) return true;
            return n->rhs && depends_on_x_node(n->rhs);
    }
}

std::string to_string_node(const NodePtr& n);

NodePtr differentiate(const NodePtr& n) {
    switch (n->kind) {
        case Kind::number:
        case Kind::constant: return num(0.0);
        case Kind::var: return num(1.0);
        case Kind::neg: return make_neg(differentiate(n->lhs));
        case Kind::add: return make_add(differentiate(n->lhs), differentiate(n->rhs));
        case Kind::sub: return make_sub(differentiate(n->lhs), differentiate(n->rhs));
        case Kind::mul:
            return make_add(make_mul(differentiate(n->lhs), n->rhs),
                            make_mul(n->lhs, differentiate(n->rhs)));
        case Kind::div:
            return make_div(make_sub(make_mul(differentiate(n->lhs), n->rhs),
                                     make_mul(n->lhs, differentiate(n->rhs))),
                            make_pow(n->rhs, num(2.0)));
        case Kind::pow: {
            if (!depends_on_x_node(n->rhs)) {
                // (u^c)' = c u^(c-1) u'
                return make_mul(
                    make_mul(n->rhs, make_pow(n->lhs, make_sub(n->rhs, num(1.0)))),
                    differentiate(n->lhs));
            }
            // General exponent via u^v = exp(v ln u):
            // (u^v)' = u^v (v' ln u + v u' / u)
            return make_mul(
                make_pow(n->lhs, n->rhs),
                make_add(make_mul(differentiate(n->rhs), call(Func::ln, n->lhs)),
                         make_div(make_mul(n->rhs, differentiate(n->lhs)), n->lhs)));
        }
        case Kind::call: {
            const NodePtr& u = n->lhs;
            NodePtr du = differentiate(u);
            switch (n->func) {
                case Func::sin: return make_mul(call(Func::cos, u), std::move(du));
                case Func::cos:
                    return make_neg(make_mul(call(Func::sin, u), std::move(du)));
                case Func::tan:
                    return make_div(std::move(du), make_pow(call(Func::cos, u), num(2.0)));
                case Func::exp: return make_mul(call(Func::exp, u), std::move(du));
                case Func::ln: return make_div(std::move(du), u);
                case Func::sqrt:
                    return make_div(std::move(du),
                                    make_mul(num(2.0), call(Func::sqrt, u)));
                case Func::abs:
                    // sign(u) u' written within the grammar; undefined at u = 0
                    return make_div(make_mul(u, std::move(du)), call(Func::abs, u));
            }
            break;
        }
    }
    throw Error("derivative: malformed expression tree");
}

double eval_node(const NodePtr& n, double x) {
    switch (n->kind) {
        case Kind::number:
        case Kind::constant: return n->value;
        case Kind::var: return x;
        case Kind::neg: return -eval_node(n->lhs, x);
        case Kind::add: return eval_node(n->lhs, x) + eval_node(n->rhs, x);
        case Kind::sub: return eval_node(n->lhs, x) - eval_node(n->rhs, x);
        case Kind::mul: return eval_node(n->lhs, x) * eval_node(n->rhs, x);
        case Kind::div: {
            const double denom = eval_node(n->rhs, x);
            if (denom == 0.0) throw EvalError("division by zero", to_string_node(n), x);
            return eval_node(n->lhs, x) / denom;
        }
        case Kind::pow: {
            const double base = eval_node(n->lhs, x);
            const double exponent = eval_node(n->rhs, x);
            if (base == 0.0 && exponent < 0.0)
                throw EvalError("division by zero", to_string_node(n), x);
            const double v = std::pow(base, exponent);
            if (std::isnan(v)) throw EvalError("invalid power", to_string_node(n), x);
            return v;
        }
        case Kind::call: {
            const double u = eval_node(n->lhs, x);
            switch (n->func) {
                case Func::sin: return std::sin(u);
                case Func::cos: return std::cos(u);
                case Func::tan: return std::tan(u);
                case Func::exp: return std::exp(u);
                case Func::ln:
                    if (u <= 0.0)
                        throw EvalError("ln of nonpositive value", to_string_node(n), x);
                    return std::log(u);
                case Func::sqrt:
                    if (u < 0.0)
                        throw EvalError("sqrt of negative value", to_string_node(n), x);
                    return std::sqrt(u);
                case Func::abs: return std::fabs(u);
            }
            break;
        }
    }
    throw Error("eval: malformed expression tree");
}

// Printing precedence levels; children are parenthesized whenever the
// printed form would not re-parse to the identical tree.
int precedence(const NodePtr& n) {
    switch (n->kind) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::neg: return 3;
        case Kind::pow: return 4;
        default: return 5;
    }
}

std::string child(const NodePtr& n, int min_prec) {
    std::string s = to_string_node(n);
    if (precedence(n) < min_prec) return "(" + s + ")";
    return s;
}

std::string to_string_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n->value);
            return buf;
        }
        case Kind::constant: return n->name;
        case Kind::var: return "x";
        case Kind::neg: return "-" + child(n->lhs, 3);
        case Kind::add: return child(n->lhs, 1) + "+" + child(n->rhs, 2);
        case Kind::sub: return child(n->lhs, 1) + "-" + child(n->rhs, 2);
        case Kind::mul: return child(n->lhs, 2) + "*" + child(n->rhs, 3);
        case Kind::div: return child(n->lhs, 2) + "/" + child(n->rhs, 3);
        case Kind::pow: return child(n->lhs, 5) + "^" + child(n->rhs, 3);
        case Kind::call:
            return std::string(func_name(n->func)) + "(" + to_string_node(n->lhs) + ")";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse_all() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("empty expression", 0);
        NodePtr e = expression();
        skip_ws();
        if (pos_ < src_.size())
            throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr expression() {
        NodePtr e = term();
        for (;;) {
            if (accept('+'))
                e = binary(Kind::add, std::move(e), term());
            else if (accept('-'))
                e = binary(Kind::sub, std::move(e), term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary_expr();
        for (;;) {
            if (accept('*'))
                e = binary(Kind::mul, std::move(e), unary_expr());
            else if (accept('/'))
                e = binary(Kind::div, std::move(e), unary_expr());
            else
                return e;
        }
    }

    NodePtr unary_expr() {
        if (accept('-')) return unary(Kind::neg, unary_expr());
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return binary(Kind::pow, std::move(base), unary_expr());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expression();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && src_[start] == '.'))
            throw ParseError("malformed number", start);
        // exponent part only when digits actually follow
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        return num(std::strtod(std::string(src_.substr(start, pos_ - start)).c_str(),
                               nullptr));
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name(src_.substr(start, pos_ - start));
        if (name == "x") return variable();
        if (name == "pi") return named_constant("pi", M_PI);
        if (name == "e") return named_constant("e", M_E);
        static const std::pair<const char*, Func> funcs[] = {
            {"sin", Func::sin}, {"cos", Func::cos},   {"tan", Func::tan},
            {"exp", Func::exp}, {"ln", Func::ln},     {"sqrt", Func::sqrt},
            {"abs", Func::abs}};
        for (const auto& [fname, f] : funcs) {
            if (name == fname) {
                if (!accept('(')) throw ParseError("expected '(' after " + name, pos_);
                NodePtr arg = expression();
                if (!accept(')')) throw ParseError("expected ')'", pos_);
                return call(f, std::move(arg));
            }
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace
}  // namespace detail

Expr::Expr() : node_(detail::num(0.0)) {}

Expr::Expr(detail::NodePtr node) : node_(std::move(node)) {}

double Expr::eval(double x) const { return detail::eval_node(node_, x); }

Expr Expr::derivative() const { return Expr(detail::differentiate(node_)); }

std::string Expr::to_string() const { return detail::to_string_node(node_); }

bool Expr::depends_on_x() const { return detail::depends_on_x_node(node_); }

Expr parse(const std::string& source) {
    return Expr(detail::Parser(source).parse_all());
}

Expr parse_number(double value) { return Expr(detail::num(value)); }

}  // namespace slcheb
