#include "rcperiod/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "rcperiod/error.hpp"
#include "rcperiod/root5.hpp"

namespace rcp {

enum class Kind { Number, VarX, VarS, VarT, VarZeta, Neg, Add, Sub, Mul, Div, Pow, Root5 };

struct Expr::Node {
    Kind kind;
    Complex value{};
    int index = 0; // x index or integer exponent
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr, int index = 0, Complex value = {})
{
    return std::make_shared<const Expr::Node>(Expr::Node{k, value, index, std::move(a), std::move(b)});
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run()
    {
        skip();
        if (pos_ >= src_.size())
            throw ParseError(pos_, "empty expression");
        NodePtr e = expr();
        skip();
        if (pos_ < src_.size())
            throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return e;
    }

private:
    void skip()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make(Kind::Add, lhs, term());
            else if (accept('-'))
                lhs = make(Kind::Sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = make(Kind::Mul, lhs, unary());
            else if (accept('/'))
                lhs = make(Kind::Div, lhs, unary());
            else
                return lhs;
        }
    }

    NodePtr unary()
    {
        if (accept('-'))
            return make(Kind::Neg, unary());
        return power();
    }

    int integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError(start, "expected integer exponent");
        int v = 0;
        auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc{})
            throw ParseError(start, "exponent out of range");
        return v;
    }

    NodePtr power()
    {
        NodePtr base = primary();
        if (!accept('^'))
            return base;
        skip();
        if (accept('(')) {
            const bool neg = accept('-');
            int p = integer();
            if (neg)
                p = -p;
            int q = 1;
            std::size_t qpos = pos_;
            if (accept('/')) {
                skip();
                qpos = pos_;
                q = integer();
            }
            expect(')');
            if (q == 1)
                return make(Kind::Pow, base, nullptr, p);
            if (q != 5)
                throw ParseError(qpos, "only fifth-root exponents are supported");
            NodePtr r = make(Kind::Root5, base);
            return p == 1 ? r : make(Kind::Pow, r, nullptr, p);
        }
        const bool neg = accept('-');
        skip();
        const int p = integer();
        return make(Kind::Pow, base, nullptr, neg ? -p : p);
    }

    NodePtr primary()
    {
        skip();
        if (pos_ >= src_.size())
            throw ParseError(pos_, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    NodePtr number()
    {
        const std::size_t start = pos_;
        double v = 0.0;
        auto [p, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
        if (ec != std::errc{})
            throw ParseError(start, "malformed number");
        pos_ = static_cast<std::size_t>(p - src_.data());
        if (pos_ < src_.size() && src_[pos_] == 'i'
            && !(pos_ + 1 < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])) || src_[pos_ + 1] == '_'))) {
            ++pos_;
            return make(Kind::Number, nullptr, nullptr, 0, Complex(0.0, v));
        }
        return make(Kind::Number, nullptr, nullptr, 0, Complex(v, 0.0));
    }

    NodePtr identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view id = src_.substr(start, pos_ - start);
        if (id == "s")
            return make(Kind::VarS);
        if (id == "t")
            return make(Kind::VarT);
        if (id == "zeta")
            return make(Kind::VarZeta);
        if (id == "i")
            return make(Kind::Number, nullptr, nullptr, 0, Complex(0.0, 1.0));
        if (id.size() == 2 && id[0] == 'x' && std::isdigit(static_cast<unsigned char>(id[1])))
            return make(Kind::VarX, nullptr, nullptr, id[1] - '0');
        if (id == "root5") {
            expect('(');
            NodePtr arg = expr();
            expect(')');
            return make(Kind::Root5, arg);
        }
        throw ParseError(start, "unknown identifier '" + std::string(id) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

int precedence(const Expr::Node& n)
{
    switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
    }
}

std::string shortest(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string print(const Expr::Node& n);

std::string wrap(const Expr::Node& n, int min_prec)
{
    std::string s = print(n);
    return precedence(n) < min_prec ? "(" + s + ")" : s;
}

std::string print(const Expr::Node& n)
{
    switch (n.kind) {
    case Kind::Number:
        if (n.value.imag() != 0.0)
            return shortest(n.value.imag()) + "i";
        return shortest(n.value.real());
    case Kind::VarX: return "x" + std::to_string(n.index);
    case Kind::VarS: return "s";
    case Kind::VarT: return "t";
    case Kind::VarZeta: return "zeta";
    case Kind::Neg: return "-" + wrap(*n.a, 3);
    case Kind::Add: return wrap(*n.a, 1) + "+" + wrap(*n.b, 2);
    case Kind::Sub: return wrap(*n.a, 1) + "-" + wrap(*n.b, 2);
    case Kind::Mul: return wrap(*n.a, 2) + "*" + wrap(*n.b, 3);
    case Kind::Div: return wrap(*n.a, 2) + "/" + wrap(*n.b, 3);
    case Kind::Pow:
        return wrap(*n.a, 5) + "^" + (n.index < 0 ? "(" + std::to_string(n.index) + ")" : std::to_string(n.index));
    case Kind::Root5: return "root5(" + print(*n.a) + ")";
    }
    return {};
}

bool depends(const Expr::Node& n, Kind k)
{
    if (n.kind == k)
        return true;
    return (n.a && depends(*n.a, k)) || (n.b && depends(*n.b, k));
}

template <class V>
V ipow(const V& base, int k, V one)
{
    V r = one;
    for (int i = 0; i < k; ++i)
        r = r * base;
    return r;
}

// Scalar evaluation. anchor == nullptr selects principal roots.
Complex eval_scalar(const Expr::Node& n, const Env& env, const Complex* anchor)
{
    switch (n.kind) {
    case Kind::Number: return n.value;
    case Kind::VarX: return env.x[static_cast<std::size_t>(n.index)];
    case Kind::VarS: return env.s;
    case Kind::VarT: return env.t;
    case Kind::VarZeta: return env.zeta;
    case Kind::Neg: return -eval_scalar(*n.a, env, anchor);
    case Kind::Add: return eval_scalar(*n.a, env, anchor) + eval_scalar(*n.b, env, anchor);
    case Kind::Sub: return eval_scalar(*n.a, env, anchor) - eval_scalar(*n.b, env, anchor);
    case Kind::Mul: return eval_scalar(*n.a, env, anchor) * eval_scalar(*n.b, env, anchor);
    case Kind::Div: return eval_scalar(*n.a, env, anchor) / eval_scalar(*n.b, env, anchor);
    case Kind::Pow: {
        const Complex b = eval_scalar(*n.a, env, anchor);
        const Complex r = ipow(b, std::abs(n.index), Complex(1.0));
        return n.index < 0 ? 1.0 / r : r;
    }
    case Kind::Root5: {
        if (!anchor || !depends(*n.a, Kind::VarS))
            return principal_root5(eval_scalar(*n.a, env, anchor));
        const Expr::Node& child = *n.a;
        return continue_root5(
            [&](Complex sv) {
                Env e = env;
                e.s = sv;
                return eval_scalar(child, e, anchor);
            },
            env.s, *anchor);
    }
    }
    return {};
}

UniPoly eval_unipoly(const Expr::Node& n, const Env& env, Complex anchor)
{
    auto constant_in_t = [&](const Expr::Node& c, const char* what) {
        if (depends(c, Kind::VarT))
            throw Error(Errc::InputError, std::string(what) + " must not depend on t");
        return eval_scalar(c, env, &anchor);
    };
    switch (n.kind) {
    case Kind::VarT: return UniPoly{0.0, 1.0};
    case Kind::VarX: throw Error(Errc::InputError, "coordinate variables are not allowed in a curve expression");
    case Kind::Neg: return -eval_unipoly(*n.a, env, anchor);
    case Kind::Add: return eval_unipoly(*n.a, env, anchor) + eval_unipoly(*n.b, env, anchor);
    case Kind::Sub: return eval_unipoly(*n.a, env, anchor) - eval_unipoly(*n.b, env, anchor);
    case Kind::Mul: return eval_unipoly(*n.a, env, anchor) * eval_unipoly(*n.b, env, anchor);
    case Kind::Div: return eval_unipoly(*n.a, env, anchor) * (1.0 / constant_in_t(*n.b, "divisor"));
    case Kind::Pow:
        if (n.index < 0)
            return UniPoly::constant(1.0 / ipow(constant_in_t(*n.a, "base of a negative power"), -n.index, Complex(1.0)));
        return eval_unipoly(*n.a, env, anchor).pow(n.index);
    case Kind::Root5: return UniPoly::constant(eval_scalar(n, env, &anchor));
    default: return UniPoly::constant(eval_scalar(n, env, &anchor));
    }
}

MultiPoly eval_multipoly(const Expr::Node& n, int nvars, const Env& env)
{
    auto constant = [&](const Expr::Node& c, const char* what) {
        if (depends(c, Kind::VarX))
            throw Error(Errc::InputError, std::string(what) + " must not depend on x variables");
        return eval_scalar(c, env, nullptr);
    };
    switch (n.kind) {
    case Kind::VarX:
        if (n.index >= nvars)
            throw Error(Errc::IndexError, "x" + std::to_string(n.index) + " exceeds " + std::to_string(nvars)
                                              + " variables");
        return MultiPoly::variable(nvars, n.index);
    case Kind::Neg: return eval_multipoly(*n.a, nvars, env) * Complex(-1.0);
    case Kind::Add: return eval_multipoly(*n.a, nvars, env) + eval_multipoly(*n.b, nvars, env);
    case Kind::Sub: return eval_multipoly(*n.a, nvars, env) - eval_multipoly(*n.b, nvars, env);
    case Kind::Mul: return eval_multipoly(*n.a, nvars, env) * eval_multipoly(*n.b, nvars, env);
    case Kind::Div: return eval_multipoly(*n.a, nvars, env) * (1.0 / constant(*n.b, "divisor"));
    case Kind::Pow:
        if (n.index < 0)
            return MultiPoly::constant(nvars, 1.0 / ipow(constant(*n.a, "base of a negative power"), -n.index,
                                                          Complex(1.0)));
        return eval_multipoly(*n.a, nvars, env).pow(n.index);
    case Kind::Root5: return MultiPoly::constant(nvars, principal_root5(constant(*n.a, "root5 argument")));
    default: return MultiPoly::constant(nvars, eval_scalar(n, env, nullptr));
    }
}

} // namespace

Expr Expr::parse(std::string_view src) { return Expr(Parser(src).run()); }

std::string Expr::to_string() const { return print(*root_); }

Complex Expr::eval(const Env& env) const { return eval_scalar(*root_, env, nullptr); }

Complex Expr::eval_continued(const Env& env, Complex anchor) const { return eval_scalar(*root_, env, &anchor); }

UniPoly Expr::to_unipoly_in_t(const Env& env, Complex anchor) const { return eval_unipoly(*root_, env, anchor); }

MultiPoly Expr::to_multipoly(int nvars, const Env& consts) const { return eval_multipoly(*root_, nvars, consts); }

bool Expr::uses_symbol(std::string_view name) const
{
    if (name == "s")
        return depends(*root_, Kind::VarS);
    if (name == "t")
        return depends(*root_, Kind::VarT);
    if (name == "zeta")
        return depends(*root_, Kind::VarZeta);
    if (name == "root5")
        return depends(*root_, Kind::Root5);
    if (name.size() == 2 && name[0] == 'x') {
        const int idx = name[1] - '0';
        auto rec = [idx](auto&& self, const Node& n) -> bool {
            if (n.kind == Kind::VarX && n.index == idx)
                return true;
            return (n.a && self(self, *n.a)) || (n.b && self(self, *n.b));
        };
        return rec(rec, *root_);
    }
    return false;
}

} // namespace rcp
