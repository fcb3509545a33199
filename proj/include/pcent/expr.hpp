#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcent {

/// Immutable expression in one variable `x`.
///
/// Nodes are shared, so composing expressions never copies subtrees.
class Expr {
public:
    enum class Kind { constant, var, add, sub, mul, div, neg, abs, min, max, pow, pwl };

    struct Node;

    /// Slope and intercept of an expression that is exactly affine in x.
    struct Affine {
        double slope;
        double intercept;
    };

    Expr();  // the variable x

    static Expr constant(double v);
    static Expr variable();
    /// Continuous piecewise-affine interpolant through sorted (x, y) nodes,
    /// extended linearly beyond the outer nodes, applied to `arg`.
    static Expr pwl(std::vector<std::pair<double, double>> nodes, Expr arg);

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    static Expr abs(const Expr& a);
    static Expr min(const Expr& a, const Expr& b);
    static Expr max(const Expr& a, const Expr& b);
    static Expr pow(const Expr& a, int exponent);

    double eval(double x) const;
    Kind kind() const;
    bool depends_on_x() const;

    /// This expression with x replaced by `inner`, i.e. this ∘ inner.
    Expr compose(const Expr& inner) const;

    /// Exact affine form when the tree only combines x linearly with constants.
    std::optional<Affine> as_affine() const;

    /// Text accepted by parse_expr. Piecewise-affine nodes print in hinge form.
    std::string to_string() const;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the branch expression grammar:
///   expr := term (('+'|'-') term)*
///   term := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power := primary ('^' INTEGER)*
///   primary := NUMBER | 'x' | '(' expr ')' | func '(' expr (',' expr)* ')'
/// with func in {abs, min, max}. Errors carry line and column.
Expr parse_expr(std::string_view text, int line = 1);

/// Parses a constant expression (no `x`).
double parse_constant(std::string_view text, int line = 1);

}  // namespace pcent
