#pragma once

// Random expression trees with their own direct evaluator, independent of
// the library's parser and codelist executor, so they can serve as an
// oracle for both.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hessbound/bench.hpp"  // SplitMix64

namespace gen {

using hb::SplitMix64;

struct Node {
    enum Kind { Const, Var, Add, Sub, Mul, Div, Square, Cube, Pow5, Sqrt, Exp, Ln };
    Kind kind = Const;
    double c = 0.0;
    int var = 1;  // 1-based
    std::vector<Node> kids;
};

// safe_ops excludes Div/Sqrt/Ln (whose domains depend on the point), so the
// resulting function is defined on every box; used by evaluation tests.
inline Node random_tree(SplitMix64& rng, int n, int depth, bool safe_ops) {
    const auto pick = [&rng](int m) { return static_cast<int>(rng.next() % static_cast<std::uint64_t>(m)); };
    if (depth <= 0 || pick(4) == 0) {
        Node leaf;
        if (pick(3) == 0) {
            leaf.kind = Node::Const;
            leaf.c = -2.0 + 4.0 * rng.uniform();
        } else {
            leaf.kind = Node::Var;
            leaf.var = 1 + pick(n);
        }
        return leaf;
    }
    static constexpr Node::Kind safe[] = {Node::Add, Node::Sub, Node::Mul,
                                          Node::Square, Node::Cube, Node::Exp};
    static constexpr Node::Kind full[] = {Node::Add,  Node::Sub,  Node::Mul,
                                          Node::Div,  Node::Square, Node::Cube,
                                          Node::Pow5, Node::Sqrt, Node::Exp,
                                          Node::Ln};
    Node node;
    node.kind = safe_ops ? safe[pick(6)] : full[pick(10)];
    const int arity =
        (node.kind == Node::Add || node.kind == Node::Sub || node.kind == Node::Mul ||
         node.kind == Node::Div)
            ? 2
            : 1;
    for (int i = 0; i < arity; ++i)
        node.kids.push_back(random_tree(rng, n, depth - 1, safe_ops));
    // avoid constant-only trees at the root of each subtree
    if (node.kids[0].kind == Node::Const &&
        (arity == 1 || node.kids[arity - 1].kind == Node::Const))
        node.kids[0] = Node{Node::Var, 0.0, 1 + pick(n), {}};
    return node;
}

// retries until the tree actually depends on some variable
inline Node random_function(SplitMix64& rng, int n, int depth, bool safe_ops) {
    for (;;) {
        Node t = random_tree(rng, n, depth, safe_ops);
        if (t.kind != Node::Const) return t;
    }
}

inline std::string render(const Node& t) {
    char buf[40];
    switch (t.kind) {
        case Node::Const:
            std::snprintf(buf, sizeof buf, "(%.17g)", t.c);
            return buf;
        case Node::Var: return "x" + std::to_string(t.var);
        case Node::Add: return "(" + render(t.kids[0]) + " + " + render(t.kids[1]) + ")";
        case Node::Sub: return "(" + render(t.kids[0]) + " - " + render(t.kids[1]) + ")";
        case Node::Mul: return "(" + render(t.kids[0]) + " * " + render(t.kids[1]) + ")";
        case Node::Div: return "(" + render(t.kids[0]) + " / " + render(t.kids[1]) + ")";
        case Node::Square: return "(" + render(t.kids[0]) + ")^2";
        case Node::Cube: return "(" + render(t.kids[0]) + ")^3";
        case Node::Pow5: return "(" + render(t.kids[0]) + ")^5";
        case Node::Sqrt: return "sqrt(" + render(t.kids[0]) + ")";
        case Node::Exp: return "exp(" + render(t.kids[0]) + ")";
        case Node::Ln: return "ln(" + render(t.kids[0]) + ")";
    }
    return "";
}

// Direct evaluation; NaN marks a domain violation. Tracks the largest
// intermediate magnitude for tolerance scaling.
inline double eval(const Node& t, const std::vector<double>& x, double& maxabs) {
    double v = 0.0;
    switch (t.kind) {
        case Node::Const: v = t.c; break;
        case Node::Var: v = x[static_cast<std::size_t>(t.var - 1)]; break;
        case Node::Add: v = eval(t.kids[0], x, maxabs) + eval(t.kids[1], x, maxabs); break;
        case Node::Sub: v = eval(t.kids[0], x, maxabs) - eval(t.kids[1], x, maxabs); break;
        case Node::Mul: v = eval(t.kids[0], x, maxabs) * eval(t.kids[1], x, maxabs); break;
        case Node::Div: {
            const double d = eval(t.kids[1], x, maxabs);
            v = d == 0.0 ? std::nan("") : eval(t.kids[0], x, maxabs) / d;
            break;
        }
        case Node::Square: {
            const double a = eval(t.kids[0], x, maxabs);
            v = a * a;
            break;
        }
        case Node::Cube: {
            const double a = eval(t.kids[0], x, maxabs);
            v = a * a * a;
            break;
        }
        case Node::Pow5: v = std::pow(eval(t.kids[0], x, maxabs), 5); break;
        case Node::Sqrt: {
            const double a = eval(t.kids[0], x, maxabs);
            v = a < 0.0 ? std::nan("") : std::sqrt(a);
            break;
        }
        case Node::Exp: v = std::exp(eval(t.kids[0], x, maxabs)); break;
        case Node::Ln: {
            const double a = eval(t.kids[0], x, maxabs);
            v = a <= 0.0 ? std::nan("") : std::log(a);
            break;
        }
    }
    maxabs = std::fmax(maxabs, std::fabs(v));
    return v;
}

}  // namespace gen
