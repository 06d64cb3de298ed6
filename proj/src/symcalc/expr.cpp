#include "contact_forge/symcalc/expr.hpp"

#include <stdexcept>

namespace contact_forge::sym {

Expr make_node(Node n)
{
    return Expr(std::make_shared<const Node>(std::move(n)));
}

const Poly* cached_poly(const Expr& e)
{
    return e.node_->normal.get();
}

namespace {

Expr leaf(NodeKind kind, std::string name, std::string arg = {}, int order = 0)
{
    Node n;
    n.kind = kind;
    n.name = std::move(name);
    n.arg = std::move(arg);
    n.order = order;
    return make_node(std::move(n));
}

Expr constant(const Rational& v)
{
    Node n;
    n.kind = NodeKind::Const;
    n.value = v;
    return make_node(std::move(n));
}

Expr nary(NodeKind kind, const Expr& a, const Expr& b)
{
    Node n;
    n.kind = kind;
    auto push = [&](const Expr& x) {
        if (x.kind() == kind && !x.is_canonical())
            n.children.insert(n.children.end(), x.children().begin(), x.children().end());
        else
            n.children.push_back(x);
    };
    push(a);
    push(b);
    return make_node(std::move(n));
}

// e^{L} for an affine L; throws if L is not affine in linear symbols.
Monomial exp_monomial(const Poly& arg)
{
    Monomial m;
    for (const auto& [mono, c] : arg.terms()) {
        if (mono.is_one()) {
            m.exp_const += c;
            continue;
        }
        if (mono.has_exp() || mono.powers.size() != 1)
            throw std::domain_error("exp argument must be affine in linear symbols");
        const auto& [atom, k] = *mono.powers.begin();
        if (atom.kind != AtomKind::Var || k != 1)
            throw std::domain_error("exp argument must be affine in linear symbols");
        m.exp_linear[atom.name] += c;
    }
    return m;
}

Expr atom_tree(const Atom& a)
{
    switch (a.kind) {
    case AtomKind::Var: return leaf(NodeKind::Symbol, a.name);
    case AtomKind::Sin: return leaf(NodeKind::Sin, a.name);
    case AtomKind::Cos: return leaf(NodeKind::Cos, a.name);
    case AtomKind::Func: return leaf(NodeKind::Func, a.name, a.arg, a.order);
    }
    return {};
}

Expr power_tree(const Expr& base, int k)
{
    if (k == 1) return base;
    Node n;
    n.kind = NodeKind::Pow;
    n.exponent = k;
    n.children.push_back(base);
    return make_node(std::move(n));
}

Poly affine_exponent(const Monomial& m)
{
    Poly p(m.exp_const);
    for (const auto& [name, c] : m.exp_linear) p += Poly(Monomial{{{Atom::var(name), 1}}, {}, 0}, c);
    return p;
}

}  // namespace

Expr::Expr() : Expr(constant(0)) {}
Expr::Expr(int v) : Expr(constant(Rational(v))) {}
Expr::Expr(const Rational& v) : Expr(constant(v)) {}

Expr Expr::rational(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return constant(q);
}

Expr Expr::symbol(const std::string& name) { return leaf(NodeKind::Symbol, name); }
Expr Expr::sin(const std::string& angle) { return leaf(NodeKind::Sin, angle); }
Expr Expr::cos(const std::string& angle) { return leaf(NodeKind::Cos, angle); }

Expr Expr::exp(const Expr& arg)
{
    Node n;
    n.kind = NodeKind::Exp;
    n.children.push_back(arg);
    return make_node(std::move(n));
}

Expr Expr::func(const std::string& name, const std::string& arg, int order)
{
    if (order < 0) throw std::invalid_argument("negative derivative order");
    return leaf(NodeKind::Func, name, arg, order);
}

Expr Expr::pow(const Expr& base, int k)
{
    Node n;
    n.kind = NodeKind::Pow;
    n.exponent = k;
    n.children.push_back(base);
    return make_node(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
bool Expr::is_canonical() const { return node_->normal != nullptr; }
bool Expr::is_zero() const { return to_poly(*this).is_zero(); }

Expr operator+(const Expr& a, const Expr& b) { return nary(NodeKind::Add, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return nary(NodeKind::Mul, a, b); }
Expr operator-(const Expr& a) { return nary(NodeKind::Mul, constant(-1), a); }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
    case NodeKind::Const: return x.value == y.value;
    case NodeKind::Symbol:
    case NodeKind::Sin:
    case NodeKind::Cos: return x.name == y.name;
    case NodeKind::Func: return x.name == y.name && x.arg == y.arg && x.order == y.order;
    case NodeKind::Pow:
        if (x.exponent != y.exponent) return false;
        [[fallthrough]];
    case NodeKind::Exp:
    case NodeKind::Add:
    case NodeKind::Mul: return x.children == y.children;
    }
    return false;
}

Poly to_poly(const Expr& e)
{
    if (const Poly* p = cached_poly(e)) return *p;
    const Node& n = e.node();
    switch (n.kind) {
    case NodeKind::Const: return Poly(n.value);
    case NodeKind::Symbol: return Poly::atom(Atom::var(n.name));
    case NodeKind::Sin: return Poly::atom(Atom::sin(n.name));
    case NodeKind::Cos: return Poly::atom(Atom::cos(n.name));
    case NodeKind::Func: return Poly::atom(Atom::func(n.name, n.arg, n.order));
    case NodeKind::Exp: return Poly(exp_monomial(to_poly(n.children.at(0))), 1);
    case NodeKind::Add: {
        Poly r;
        for (const auto& c : n.children) r += to_poly(c);
        return r;
    }
    case NodeKind::Mul: {
        Poly r(1);
        for (const auto& c : n.children) {
            r = r * to_poly(c);
            if (r.is_zero()) break;
        }
        return r;
    }
    case NodeKind::Pow: return to_poly(n.children.at(0)).pow(n.exponent);
    }
    throw std::logic_error("unknown node kind");
}

Expr from_poly(const Poly& p)
{
    std::vector<Expr> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Expr> factors;
        for (const auto& [atom, k] : m.powers) factors.push_back(power_tree(atom_tree(atom), k));
        if (m.has_exp()) factors.push_back(Expr::exp(from_poly(affine_exponent(m))));
        if (c != 1 || factors.empty()) factors.insert(factors.begin(), constant(c));
        if (factors.size() == 1) {
            terms.push_back(factors.front());
        } else {
            Node n;
            n.kind = NodeKind::Mul;
            n.children = std::move(factors);
            terms.push_back(make_node(std::move(n)));
        }
    }
    Node root;
    if (terms.empty()) {
        root.kind = NodeKind::Const;
        root.value = 0;
    } else if (terms.size() == 1) {
        root = terms.front().node();
    } else {
        root.kind = NodeKind::Add;
        root.children = std::move(terms);
    }
    root.normal = std::make_shared<const Poly>(p);
    return make_node(std::move(root));
}

Expr uncached(const Expr& e)
{
    Node n = e.node();
    n.normal.reset();
    for (auto& c : n.children) c = uncached(c);
    return make_node(std::move(n));
}

Expr canon(const Expr& e)
{
    if (e.is_canonical()) return e;
    return from_poly(to_poly(e));
}

bool equivalent(const Expr& a, const Expr& b)
{
    return to_poly(a) == to_poly(b);
}

namespace {

Poly diff_poly(const Poly& p, const std::string& x, SymbolKind kind)
{
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (kind == SymbolKind::Linear) {
            if (auto it = m.exp_linear.find(x); it != m.exp_linear.end()) r.add_term(m, c * it->second);
        }
        for (const auto& [atom, k] : m.powers) {
            auto lowered = [&](Monomial base) {
                if (k == 1)
                    base.powers.erase(atom);
                else
                    base.powers[atom] = k - 1;
                return base;
            };
            switch (atom.kind) {
            case AtomKind::Var:
                if (kind == SymbolKind::Linear && atom.name == x) r.add_term(lowered(m), c * k);
                break;
            case AtomKind::Sin:
                if (kind == SymbolKind::Angular && atom.name == x) {
                    Monomial d = lowered(m);
                    d = d * Monomial{{{Atom::cos(x), 1}}, {}, 0};
                    r.add_term(d, c * k);
                }
                break;
            case AtomKind::Cos:
                if (kind == SymbolKind::Angular && atom.name == x) {
                    Monomial d = lowered(m);
                    d = d * Monomial{{{Atom::sin(x), 1}}, {}, 0};
                    r.add_term(d, -c * k);
                }
                break;
            case AtomKind::Func:
                if (kind == SymbolKind::Linear && atom.arg == x) {
                    Monomial d = lowered(m);
                    d = d * Monomial{{{Atom::func(atom.name, atom.arg, atom.order + 1), 1}}, {}, 0};
                    r.add_term(d, c * k);
                }
                break;
            }
        }
    }
    return r;
}

Poly substitute_poly(const Poly& p, const Substitution& s);

Poly image_of_atom(const Atom& atom, const Substitution& s)
{
    switch (atom.kind) {
    case AtomKind::Var:
        if (auto it = s.linear.find(atom.name); it != s.linear.end()) return to_poly(it->second);
        break;
    case AtomKind::Sin:
        if (auto it = s.trig.find(atom.name); it != s.trig.end()) return to_poly(it->second.first);
        break;
    case AtomKind::Cos:
        if (auto it = s.trig.find(atom.name); it != s.trig.end()) return to_poly(it->second.second);
        break;
    case AtomKind::Func: {
        auto arg_it = s.linear.find(atom.arg);
        if (auto it = s.functions.find(atom.name); it != s.functions.end()) {
            Poly jet = to_poly(it->second.closed_form);
            for (int i = 0; i < atom.order; ++i) jet = diff_poly(jet, atom.arg, SymbolKind::Linear);
            if (arg_it == s.linear.end()) return jet;
            Substitution only_arg;
            only_arg.linear.emplace(atom.arg, arg_it->second);
            return substitute_poly(jet, only_arg);
        }
        if (arg_it != s.linear.end() && !equivalent(arg_it->second, Expr::symbol(atom.arg)))
            throw std::domain_error("cannot substitute the argument of abstract function " + atom.name);
        break;
    }
    }
    return Poly::atom(atom);
}

Poly substitute_poly(const Poly& p, const Substitution& s)
{
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Poly term(c);
        for (const auto& [atom, k] : m.powers) {
            term = term * image_of_atom(atom, s).pow(k);
            if (term.is_zero()) break;
        }
        if (term.is_zero() || !m.has_exp()) {
            r += term;
            continue;
        }
        Poly exponent(m.exp_const);
        for (const auto& [name, a] : m.exp_linear) {
            Poly img = image_of_atom(Atom::var(name), s);
            img *= a;
            exponent += img;
        }
        r += term * Poly(exp_monomial(exponent), 1);
    }
    return r;
}

}  // namespace

Expr diff(const Expr& e, const std::string& symbol, SymbolKind kind)
{
    return from_poly(diff_poly(to_poly(e), symbol, kind));
}

SymbolSet free_symbols(const Expr& e)
{
    SymbolSet s;
    const Poly p = to_poly(e);
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [atom, k] : m.powers) {
            switch (atom.kind) {
            case AtomKind::Var: s.linear.insert(atom.name); break;
            case AtomKind::Sin:
            case AtomKind::Cos: s.angular.insert(atom.name); break;
            case AtomKind::Func:
                s.functions.insert(atom.name);
                s.function_args.insert(atom.arg);
                break;
            }
        }
        for (const auto& kv : m.exp_linear) s.linear.insert(kv.first);
    }
    return s;
}

Expr substitute(const Expr& e, const Substitution& s)
{
    return from_poly(substitute_poly(to_poly(e), s));
}

std::pair<Expr, Expr> trig_of_angle_sum(const std::map<std::string, long>& turns)
{
    Poly sin_acc(0);
    Poly cos_acc(1);
    for (const auto& [angle, n] : turns) {
        const Poly s1 = Poly::atom(Atom::sin(angle));
        const Poly c1 = Poly::atom(Atom::cos(angle));
        Poly sn(0);
        Poly cn(1);
        const long reps = n < 0 ? -n : n;
        for (long i = 0; i < reps; ++i) {
            Poly next_s = sn * c1 + cn * s1;
            Poly next_c = cn * c1 - sn * s1;
            sn = std::move(next_s);
            cn = std::move(next_c);
        }
        if (n < 0) sn = -sn;
        Poly next_s = sin_acc * cn + cos_acc * sn;
        Poly next_c = cos_acc * cn - sin_acc * sn;
        sin_acc = std::move(next_s);
        cos_acc = std::move(next_c);
    }
    return {from_poly(sin_acc), from_poly(cos_acc)};
}

}  // namespace contact_forge::sym
