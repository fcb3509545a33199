#include "pcent/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "pcent/detail/parser.hpp"
#include "pcent/error.hpp"
#include "pcent/format.hpp"

namespace pcent {

struct Expr::Node {
    Kind kind = Kind::constant;
    double value = 0;
    int exponent = 0;
    std::vector<std::pair<double, double>> nodes;  // pwl only
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    bool has_x = false;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Kind;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->has_x = (a && a->has_x) || (b && b->has_x);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double pwl_eval(const std::vector<std::pair<double, double>>& nodes, double t) {
    std::size_t k = 0;
    if (nodes.size() > 2) {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), t,
                                   [](double v, const std::pair<double, double>& p) { return v < p.first; });
        std::size_t idx = static_cast<std::size_t>(it - nodes.begin());
        k = idx == 0 ? 0 : std::min(idx - 1, nodes.size() - 2);
    }
    const auto& [x0, y0] = nodes[k];
    const auto& [x1, y1] = nodes[k + 1];
    return y0 + (y1 - y0) / (x1 - x0) * (t - x0);
}

double eval_node(const Expr::Node& n, double x) {
    switch (n.kind) {
        case Kind::constant: return n.value;
        case Kind::var: return x;
        case Kind::add: return eval_node(*n.a, x) + eval_node(*n.b, x);
        case Kind::sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
        case Kind::mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
        case Kind::div: return eval_node(*n.a, x) / eval_node(*n.b, x);
        case Kind::neg: return -eval_node(*n.a, x);
        case Kind::abs: return std::abs(eval_node(*n.a, x));
        case Kind::min: return std::min(eval_node(*n.a, x), eval_node(*n.b, x));
        case Kind::max: return std::max(eval_node(*n.a, x), eval_node(*n.b, x));
        case Kind::pow: {
            double base = eval_node(*n.a, x);
            int e = n.exponent;
            double r = 1;
            double p = base;
            unsigned u = static_cast<unsigned>(e < 0 ? -e : e);
            while (u) {
                if (u & 1u) r *= p;
                p *= p;
                u >>= 1;
            }
            return e < 0 ? 1.0 / r : r;
        }
        case Kind::pwl: return pwl_eval(n.nodes, eval_node(*n.a, x));
    }
    return 0;
}

NodePtr compose_node(const NodePtr& n, const NodePtr& inner) {
    if (!n->has_x) return n;
    if (n->kind == Kind::var) return inner;
    auto copy = std::make_shared<Expr::Node>(*n);
    if (n->a) copy->a = compose_node(n->a, inner);
    if (n->b) copy->b = compose_node(n->b, inner);
    copy->has_x = (copy->a && copy->a->has_x) || (copy->b && copy->b->has_x);
    return copy;
}

std::optional<Expr::Affine> affine_node(const Expr::Node& n) {
    if (!n.has_x) return Expr::Affine{0.0, eval_node(n, 0.0)};
    switch (n.kind) {
        case Kind::var: return Expr::Affine{1.0, 0.0};
        case Kind::add:
        case Kind::sub: {
            auto l = affine_node(*n.a);
            auto r = affine_node(*n.b);
            if (!l || !r) return std::nullopt;
            double s = n.kind == Kind::add ? 1.0 : -1.0;
            return Expr::Affine{l->slope + s * r->slope, l->intercept + s * r->intercept};
        }
        case Kind::mul: {
            auto l = affine_node(*n.a);
            auto r = affine_node(*n.b);
            if (!l || !r) return std::nullopt;
            if (l->slope == 0) return Expr::Affine{l->intercept * r->slope, l->intercept * r->intercept};
            if (r->slope == 0) return Expr::Affine{r->intercept * l->slope, r->intercept * l->intercept};
            return std::nullopt;
        }
        case Kind::div: {
            auto l = affine_node(*n.a);
            auto r = affine_node(*n.b);
            if (!l || !r || r->slope != 0 || r->intercept == 0) return std::nullopt;
            return Expr::Affine{l->slope / r->intercept, l->intercept / r->intercept};
        }
        case Kind::neg: {
            auto l = affine_node(*n.a);
            if (!l) return std::nullopt;
            return Expr::Affine{-l->slope, -l->intercept};
        }
        case Kind::pow:
            if (n.exponent == 1) return affine_node(*n.a);
            return std::nullopt;
        case Kind::pwl:
            if (n.nodes.size() == 2) {
                auto l = affine_node(*n.a);
                if (!l) return std::nullopt;
                const auto& [x0, y0] = n.nodes[0];
                const auto& [x1, y1] = n.nodes[1];
                double m = (y1 - y0) / (x1 - x0);
                return Expr::Affine{m * l->slope, y0 + m * (l->intercept - x0)};
            }
            return std::nullopt;
        default: return std::nullopt;
    }
}

// Binding strength used for parenthesisation.
int precedence(const Expr::Node& n) {
    switch (n.kind) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::neg: return 3;
        case Kind::pow: return 4;
        case Kind::constant: return n.value < 0 || std::signbit(n.value) ? 3 : 5;
        default: return 5;
    }
}

std::string print_node(const Expr::Node& n);

std::string wrap(const Expr::Node& n, int min_prec) {
    std::string s = print_node(n);
    return precedence(n) < min_prec ? "(" + s + ")" : s;
}

std::string print_node(const Expr::Node& n) {
    switch (n.kind) {
        case Kind::constant: return format_real(n.value);
        case Kind::var: return "x";
        case Kind::add: return wrap(*n.a, 1) + " + " + wrap(*n.b, 2);
        case Kind::sub: return wrap(*n.a, 1) + " - " + wrap(*n.b, 2);
        case Kind::mul: return wrap(*n.a, 2) + "*" + wrap(*n.b, 3);
        case Kind::div: return wrap(*n.a, 2) + "/" + wrap(*n.b, 3);
        case Kind::neg: return "-" + wrap(*n.a, 3);
        case Kind::abs: return "abs(" + print_node(*n.a) + ")";
        case Kind::min: return "min(" + print_node(*n.a) + ", " + print_node(*n.b) + ")";
        case Kind::max: return "max(" + print_node(*n.a) + ", " + print_node(*n.b) + ")";
        case Kind::pow: return wrap(*n.a, 5) + "^" + std::to_string(n.exponent);
        case Kind::pwl: {
            // y0 + s0*(t - x0) + sum_k (s_k - s_{k-1})*max(0, t - x_k)
            const std::string t = "(" + print_node(*n.a) + ")";
            const auto& nodes = n.nodes;
            std::vector<double> slopes;
            for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
                slopes.push_back((nodes[k + 1].second - nodes[k].second) / (nodes[k + 1].first - nodes[k].first));
            }
            std::string s = "(" + format_real(nodes[0].second) + " + " + format_real(slopes[0]) + "*(" + t + " - " +
                            format_real(nodes[0].first) + ")";
            for (std::size_t k = 1; k < slopes.size(); ++k) {
                s += " + " + format_real(slopes[k] - slopes[k - 1]) + "*max(0, " + t + " - " +
                     format_real(nodes[k].first) + ")";
            }
            return s + ")";
        }
    }
    return {};
}

}  // namespace

Expr::Expr() : node_(make(Kind::var)) { std::const_pointer_cast<Node>(node_)->has_x = true; }

Expr Expr::constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::variable() { return Expr(); }

Expr Expr::pwl(std::vector<std::pair<double, double>> nodes, Expr arg) {
    if (nodes.size() < 2) throw std::invalid_argument("piecewise-affine expression needs at least two nodes");
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        if (!(nodes[k].first > nodes[k - 1].first)) throw std::invalid_argument("piecewise-affine nodes must be sorted");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::pwl;
    n->nodes = std::move(nodes);
    n->has_x = arg.node_->has_x;
    n->a = arg.node_;
    return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(Kind::add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(Kind::sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(Kind::mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make(Kind::div, a.node_, b.node_)); }
Expr operator-(const Expr& a) { return Expr(make(Kind::neg, a.node_)); }
Expr Expr::abs(const Expr& a) { return Expr(make(Kind::abs, a.node_)); }
Expr Expr::min(const Expr& a, const Expr& b) { return Expr(make(Kind::min, a.node_, b.node_)); }
Expr Expr::max(const Expr& a, const Expr& b) { return Expr(make(Kind::max, a.node_, b.node_)); }

Expr Expr::pow(const Expr& a, int exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::pow;
    n->exponent = exponent;
    n->has_x = a.node_->has_x;
    n->a = a.node_;
    return Expr(std::move(n));
}

double Expr::eval(double x) const { return eval_node(*node_, x); }
Expr::Kind Expr::kind() const { return node_->kind; }
bool Expr::depends_on_x() const { return node_->has_x; }
Expr Expr::compose(const Expr& inner) const { return Expr(compose_node(node_, inner.node_)); }
std::optional<Expr::Affine> Expr::as_affine() const { return affine_node(*node_); }
std::string Expr::to_string() const { return print_node(*node_); }

// ---------------------------------------------------------------------------

namespace detail {

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.column = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            std::size_t j = i;
            while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
            if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
                if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
                    j = k;
                    while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
                }
            }
            t.kind = Token::Kind::number;
            t.text = std::string(line.substr(i, j - i));
            auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
            if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
                throw ParseError("malformed number '" + t.text + "'", line_no, t.column);
            }
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
            t.kind = Token::Kind::ident;
            t.text = std::string(line.substr(i, j - i));
            i = j;
        } else if (std::string_view("+-*/^(),[]=:|{}").find(c) != std::string_view::npos) {
            t.kind = Token::Kind::punct;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_no, t.column);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::end;
    end.column = static_cast<int>(line.size()) + 1;
    out.push_back(end);
    return out;
}

void Cursor::fail(const std::string& what) const { throw ParseError(what, line_, peek().column); }

void Cursor::expect_punct(char c) {
    if (!is_punct(c)) {
        fail(std::string("expected '") + c + "'" + (at_end() ? " at end of line" : " before '" + peek().text + "'"));
    }
    next();
}

std::string Cursor::expect_ident() {
    if (peek().kind != Token::Kind::ident) fail("expected a name");
    return next().text;
}

Expr Cursor::expr() {
    Expr lhs = term();
    while (is_punct('+') || is_punct('-')) {
        char op = next().text[0];
        Expr rhs = term();
        lhs = op == '+' ? lhs + rhs : lhs - rhs;
    }
    return lhs;
}

Expr Cursor::term() {
    Expr lhs = factor();
    while (is_punct('*') || is_punct('/')) {
        char op = next().text[0];
        Expr rhs = factor();
        lhs = op == '*' ? lhs * rhs : lhs / rhs;
    }
    return lhs;
}

Expr Cursor::factor() {
    if (is_punct('-')) {
        next();
        Expr inner = factor();
        if (!inner.depends_on_x() && inner.kind() == Expr::Kind::constant) return Expr::constant(-inner.eval(0));
        return -inner;
    }
    return power();
}

Expr Cursor::power() {
    Expr base = primary();
    while (is_punct('^')) {
        next();
        bool negative = false;
        if (is_punct('-')) {
            next();
            negative = true;
        }
        if (peek().kind != Token::Kind::number) fail("expected an integer exponent");
        const Token& t = next();
        double v = t.value;
        if (v != std::floor(v) || std::abs(v) > 1e6) throw ParseError("exponent must be an integer", line_, t.column);
        int e = static_cast<int>(v);
        base = Expr::pow(base, negative ? -e : e);
    }
    return base;
}

Expr Cursor::primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
        next();
        return Expr::constant(t.value);
    }
    if (t.kind == Token::Kind::ident) {
        std::string name = t.text;
        int col = t.column;
        next();
        if (name == "x") return Expr::variable();
        if (name != "abs" && name != "min" && name != "max") throw ParseError("unknown name '" + name + "'", line_, col);
        expect_punct('(');
        std::vector<Expr> args{expr()};
        while (is_punct(',')) {
            next();
            args.push_back(expr());
        }
        expect_punct(')');
        if (name == "abs") {
            if (args.size() != 1) throw ParseError("abs takes one argument", line_, col);
            return Expr::abs(args[0]);
        }
        if (args.size() < 2) throw ParseError(name + " takes at least two arguments", line_, col);
        Expr acc = args[0];
        for (std::size_t k = 1; k < args.size(); ++k) acc = name == "min" ? Expr::min(acc, args[k]) : Expr::max(acc, args[k]);
        return acc;
    }
    if (is_punct('(')) {
        next();
        Expr e = expr();
        expect_punct(')');
        return e;
    }
    if (at_end()) fail("unexpected end of expression");
    fail("unexpected '" + t.text + "'");
}

double Cursor::constant() {
    int col = peek().column;
    Expr e = expr();
    if (e.depends_on_x()) throw ParseError("expected a constant", line_, col);
    double v = e.eval(0);
    if (!std::isfinite(v)) throw ParseError("constant is not finite", line_, col);
    return v;
}

}  // namespace detail

Expr parse_expr(std::string_view text, int line) {
    detail::Cursor cur(detail::tokenize(text, line), line);
    Expr e = cur.expr();
    if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "' after expression");
    return e;
}

double parse_constant(std::string_view text, int line) {
    detail::Cursor cur(detail::tokenize(text, line), line);
    double v = cur.constant();
    if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "' after constant");
    return v;
}

}  // namespace pcent
