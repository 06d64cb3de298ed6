#pragma once

#include "contact_forge/symcalc/polynomial.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace contact_forge::sym {

enum class NodeKind { Const, Symbol, Sin, Cos, Exp, Func, Add, Mul, Pow };

class Expr;
struct Node;

/// Immutable scalar expression tree.
///
/// Trees built with the arithmetic operators are not simplified; `canon`
/// rewrites any tree into the unique canonical tree of its normal form
/// (see polynomial.hpp). Canonical trees remember their normal form so
/// repeated canonicalization is cheap.
class Expr {
public:
    Expr();  // 0
    Expr(int v);
    Expr(const Rational& v);

    static Expr rational(long num, long den = 1);
    static Expr symbol(const std::string& name);
    static Expr sin(const std::string& angle);
    static Expr cos(const std::string& angle);
    static Expr exp(const Expr& arg);
    /// The k-th formal derivative of an abstract univariate function.
    static Expr func(const std::string& name, const std::string& arg, int order = 0);
    static Expr pow(const Expr& base, int k);

    NodeKind kind() const;
    const Node& node() const { return *node_; }
    const std::vector<Expr>& children() const;

    bool is_zero() const;   // canonical test
    bool is_canonical() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    /// Structural equality of trees (use `equivalent` for mathematical equality).
    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend Expr make_node(Node n);
    friend Expr from_poly(const Poly& p);
    friend const Poly* cached_poly(const Expr& e);
};

struct Node {
    NodeKind kind = NodeKind::Const;
    Rational value;               // Const
    std::string name;             // Symbol, Sin, Cos, Func
    std::string arg;              // Func
    int order = 0;                // Func
    int exponent = 1;             // Pow
    std::vector<Expr> children;   // Add, Mul, Exp (1), Pow (1)
    std::shared_ptr<const Poly> normal;  // set on canonical roots only
};

Expr make_node(Node n);

/// Deep copy with all cached normal forms dropped.
Expr uncached(const Expr& e);

Poly to_poly(const Expr& e);
Expr from_poly(const Poly& p);

Expr canon(const Expr& e);
bool equivalent(const Expr& a, const Expr& b);

enum class SymbolKind { Linear, Angular };

/// Formal partial derivative with respect to a symbol of the given kind.
/// Abstract functions advance their derivative order when differentiated in
/// their own argument and are constant otherwise.
Expr diff(const Expr& e, const std::string& symbol, SymbolKind kind);

/// Free symbols by role.
struct SymbolSet {
    std::set<std::string> linear;     // bare symbols and exp exponents
    std::set<std::string> angular;    // under sin/cos
    std::set<std::string> functions;  // abstract function names
    std::set<std::string> function_args;
};
SymbolSet free_symbols(const Expr& e);

/// Images used by `substitute`: linear symbols map to expressions; angular
/// symbols map to a (sin, cos) pair; functions map to closed forms in their
/// argument, with derivative jets produced by differentiation.
struct Substitution {
    std::map<std::string, Expr> linear;
    std::map<std::string, std::pair<Expr, Expr>> trig;
    struct FunctionImage {
        Expr closed_form;
    };
    std::map<std::string, FunctionImage> functions;
};

Expr substitute(const Expr& e, const Substitution& s);

/// sin and cos of an integer combination of angles, expanded into the
/// (sin, cos) generators of the individual angles.
std::pair<Expr, Expr> trig_of_angle_sum(const std::map<std::string, long>& turns);

}  // namespace contact_forge::sym
