#include "contact_forge/symcalc/sexpr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace contact_forge::sym {

namespace {

void print(std::ostream& os, const Expr& e)
{
    const Node& n = e.node();
    switch (n.kind) {
    case NodeKind::Const: os << n.value.get_str(); return;
    case NodeKind::Symbol: os << n.name; return;
    case NodeKind::Sin: os << "(sin " << n.name << ')'; return;
    case NodeKind::Cos: os << "(cos " << n.name << ')'; return;
    case NodeKind::Func: os << "(fn " << n.name << ' ' << n.order << ' ' << n.arg << ')'; return;
    case NodeKind::Exp:
        os << "(exp ";
        print(os, n.children.at(0));
        os << ')';
        return;
    case NodeKind::Pow:
        os << "(^ ";
        print(os, n.children.at(0));
        os << ' ' << n.exponent << ')';
        return;
    case NodeKind::Add:
    case NodeKind::Mul:
        os << '(' << (n.kind == NodeKind::Add ? '+' : '*');
        for (const auto& c : n.children) {
            os << ' ';
            print(os, c);
        }
        os << ')';
        return;
    }
}

class Parser {
public:
    explicit Parser(std::string_view s) : src_(s) {}

    Expr parse_all()
    {
        Expr e = parse();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string token()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '(' && src_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected token");
        return std::string(src_.substr(start, pos_ - start));
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    static bool is_number(const std::string& t)
    {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        bool slash = false;
        for (; i < t.size(); ++i) {
            if (t[i] == '/' && !slash) {
                slash = true;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    }

    int integer()
    {
        const std::string t = token();
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) fail("expected integer");
            return v;
        } catch (const std::logic_error&) {
            fail("expected integer");
        }
    }

    std::string symbol()
    {
        std::string t = token();
        if (is_number(t)) fail("expected symbol");
        return t;
    }

    Expr parse()
    {
        if (!peek('(')) {
            std::string t = token();
            if (is_number(t)) {
                Rational q;
                if (q.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) fail("bad number");
                if (q.get_den() == 0) fail("zero denominator");
                q.canonicalize();
                return Expr(q);
            }
            return Expr::symbol(t);
        }
        expect('(');
        const std::string head = token();
        Expr result;
        if (head == "+" || head == "*") {
            std::vector<Expr> args;
            while (!peek(')')) args.push_back(parse());
            if (args.empty()) fail("empty " + head);
            result = args.front();
            for (std::size_t i = 1; i < args.size(); ++i)
                result = head == "+" ? result + args[i] : result * args[i];
        } else if (head == "-") {
            Expr a = parse();
            result = peek(')') ? -a : a - parse();
        } else if (head == "^") {
            Expr base = parse();
            result = Expr::pow(base, integer());
        } else if (head == "sin") {
            result = Expr::sin(symbol());
        } else if (head == "cos") {
            result = Expr::cos(symbol());
        } else if (head == "exp") {
            result = Expr::exp(parse());
        } else if (head == "fn") {
            std::string name = symbol();
            int order = integer();
            if (order < 0) fail("negative derivative order");
            result = Expr::func(name, symbol(), order);
        } else {
            fail("unknown head '" + head + "'");
        }
        expect(')');
        return result;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Expr& e)
{
    std::ostringstream os;
    print(os, canon(e));
    return os.str();
}

Expr parse_sexpr(std::string_view text)
{
    return Parser(text).parse_all();
}

}  // namespace contact_forge::sym
