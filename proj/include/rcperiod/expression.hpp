#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include "rcperiod/multipoly.hpp"
#include "rcperiod/unipoly.hpp"

namespace rcp {

struct Env {
    std::array<Complex, 10> x{};
    Complex s{};
    Complex t{};
    Complex zeta{1.0};
};

// Parsed arithmetic expression over the complex numbers.
//
// Grammar (whitespace ignored):
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ['^' exponent]
//   exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'      denominator 1 or 5
//   primary  := NUMBER ['i'] | 'i' | x0..x9 | s | t | zeta | root5 '(' expr ')' | '(' expr ')'
//
// e^(p/5) is read as root5(e)^p. root5 evaluates to the principal fifth root,
// or, in the continued evaluators, to the root continued in s from an anchor.
class Expr {
public:
    struct Node;

    static Expr parse(std::string_view src);

    // canonical form; parse(to_string()) reproduces the same tree
    std::string to_string() const;

    Complex eval(const Env& env) const;
    Complex eval_continued(const Env& env, Complex anchor = 0.0) const;
    // polynomial in t with coefficients evaluated at env.s (root5 continued from anchor)
    UniPoly to_unipoly_in_t(const Env& env, Complex anchor = 0.0) const;
    // exact polynomial in x0..x_{nvars-1}; s, t, zeta are taken from consts
    MultiPoly to_multipoly(int nvars, const Env& consts = {}) const;

    bool uses_symbol(std::string_view name) const;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

} // namespace rcp
