#include "hessbound/codelist.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>

namespace hb {

const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::Var: return "var";
        case OpKind::AddConst: return "addConst";
        case OpKind::MulByConst: return "mulByConst";
        case OpKind::Add: return "add";
        case OpKind::Mul: return "mul";
        case OpKind::OneOver: return "oneOver";
        case OpKind::Square: return "square";
        case OpKind::Cube: return "cube";
        case OpKind::PowNat: return "powNat";
        case OpKind::Sqrt: return "sqrt";
        case OpKind::Exp: return "exp";
        case OpKind::Ln: return "ln";
    }
    return "?";
}

namespace {

// ---- expression AST ----------------------------------------------------
// Constants only survive parsing inside AddC/MulC; everything else maps
// one-to-one onto codelist ops.

struct Node {
    enum Tag { Const, Var, Add, Mul, AddC, MulC, OneOver, Square, Cube, PowNat, Sqrt, Exp, Ln };
    Tag tag;
    double c = 0.0;  // Const value / AddC / MulC constant
    int var = 0;     // Var index, 1-based
    int m = 0;       // PowNat exponent
    std::unique_ptr<Node> l, r;

    // filled in before emission
    int height = 0;
    int disc = 0;
    int line = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Tag t) {
    auto n = std::make_unique<Node>();
    n->tag = t;
    return n;
}

NodePtr mk_const(double v) {
    auto n = leaf(Node::Const);
    n->c = v;
    return n;
}

NodePtr mk_addc(NodePtr x, double c, std::size_t pos) {
    if (x->tag == Node::Const) return mk_const(x->c + c);
    if (x->tag == Node::AddC) {
        x->c += c;
        if (x->c == 0.0) return std::move(x->l);
        return x;
    }
    if (c == 0.0) return x;
    auto n = leaf(Node::AddC);
    n->c = c;
    n->l = std::move(x);
    (void)pos;
    return n;
}

NodePtr mk_mulc(NodePtr x, double c, std::size_t pos) {
    if (x->tag == Node::Const) return mk_const(x->c * c);
    if (x->tag == Node::MulC) {
        x->c *= c;
        c = x->c;
        x = std::move(x->l);
    }
    if (c == 1.0) return x;
    if (c == 0.0) return mk_const(0.0);
    auto n = leaf(Node::MulC);
    n->c = c;
    n->l = std::move(x);
    (void)pos;
    return n;
}

NodePtr mk_add(NodePtr a, NodePtr b, std::size_t pos) {
    if (a->tag == Node::Const) return mk_addc(std::move(b), a->c, pos);
    if (b->tag == Node::Const) return mk_addc(std::move(a), b->c, pos);
    auto n = leaf(Node::Add);
    n->l = std::move(a);
    n->r = std::move(b);
    return n;
}

NodePtr mk_mul(NodePtr a, NodePtr b, std::size_t pos) {
    if (a->tag == Node::Const) return mk_mulc(std::move(b), a->c, pos);
    if (b->tag == Node::Const) return mk_mulc(std::move(a), b->c, pos);
    auto n = leaf(Node::Mul);
    n->l = std::move(a);
    n->r = std::move(b);
    return n;
}

NodePtr mk_unary(Node::Tag t, NodePtr x, std::size_t pos) {
    if (x->tag == Node::Const) {
        double v = 0.0;
        switch (t) {
            case Node::OneOver:
                if (x->c == 0.0) throw ParseError("division by zero constant", pos);
                v = 1.0 / x->c;
                break;
            case Node::Sqrt: v = std::sqrt(x->c); break;
            case Node::Exp: v = std::exp(x->c); break;
            case Node::Ln: v = std::log(x->c); break;
            default: v = 0.0; break;
        }
        if (!std::isfinite(v)) throw ParseError("constant argument out of domain", pos);
        return mk_const(v);
    }
    auto n = leaf(t);
    n->l = std::move(x);
    return n;
}

NodePtr mk_pow(NodePtr base, int m, std::size_t pos) {
    if (m < 1) throw ParseError("exponent must be a positive integer", pos);
    if (base->tag == Node::Const) {
        const double v = std::pow(base->c, m);
        if (!std::isfinite(v)) throw ParseError("constant power overflows", pos);
        return mk_const(v);
    }
    if (m == 1) return base;
    auto n = leaf(m == 2 ? Node::Square : m == 3 ? Node::Cube : Node::PowNat);
    n->m = m;
    n->l = std::move(base);
    return n;
}

// ---- recursive-descent parser ------------------------------------------

class Parser {
public:
    Parser(const std::string& s, int num_vars) : s_(s), n_(num_vars) {}

    NodePtr run() {
        auto e = expr();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        auto a = term();
        for (;;) {
            const std::size_t at = pos_;
            if (eat('+')) {
                a = mk_add(std::move(a), term(), at);
            } else if (eat('-')) {
                a = mk_add(std::move(a), mk_mulc(term(), -1.0, at), at);
            } else {
                return a;
            }
        }
    }

    NodePtr term() {
        auto a = unary();
        for (;;) {
            const std::size_t at = pos_;
            if (eat('*')) {
                a = mk_mul(std::move(a), unary(), at);
            } else if (eat('/')) {
                auto b = unary();
                if (b->tag == Node::Const) {
                    if (b->c == 0.0) throw ParseError("division by zero constant", at);
                    a = mk_mulc(std::move(a), 1.0 / b->c, at);
                } else {
                    a = mk_mul(std::move(a), mk_unary(Node::OneOver, std::move(b), at), at);
                }
            } else {
                return a;
            }
        }
    }

    NodePtr unary() {
        const std::size_t at = pos_;
        if (eat('-')) return mk_mulc(unary(), -1.0, at);
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = atom();
        const std::size_t at = pos_;
        if (eat('^')) return mk_pow(std::move(base), exponent(), at);
        return base;
    }

    int exponent() {
        skip_ws();
        const std::size_t at = pos_;
        bool neg = false;
        if (eat('-')) neg = true;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("exponent must be an integer literal", at);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    NodePtr atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", at);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!eat(')')) throw ParseError("missing ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    NodePtr number() {
        const std::size_t at = pos_;
        const char* start = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start || !std::isfinite(v)) throw ParseError("bad number", at);
        pos_ += static_cast<std::size_t>(end - start);
        return mk_const(v);
    }

    NodePtr ident() {
        const std::size_t at = pos_;
        std::size_t e = pos_;
        while (e < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_'))
            ++e;
        const std::string name = s_.substr(pos_, e - pos_);
        pos_ = e;
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            const int k = std::atoi(name.c_str() + 1);
            if (k < 1 || k > n_)
                throw ParseError("variable " + name + " outside x1..x" + std::to_string(n_), at);
            auto v = leaf(Node::Var);
            v->var = k;
            return v;
        }
        Node::Tag tag;
        if (name == "sqrt") tag = Node::Sqrt;
        else if (name == "exp") tag = Node::Exp;
        else if (name == "ln" || name == "log") tag = Node::Ln;
        else throw ParseError("unknown identifier '" + name + "'", at);
        if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
        auto arg = expr();
        if (!eat(')')) throw ParseError("missing ')'", pos_);
        return mk_unary(tag, std::move(arg), at);
    }
};

// ---- emission ----------------------------------------------------------

void annotate(Node* n, int& disc) {
    n->disc = disc++;
    if (n->l) annotate(n->l.get(), disc);
    if (n->r) annotate(n->r.get(), disc);
    int h = 0;
    if (n->l) h = std::max(h, n->l->height + 1);
    if (n->r) h = std::max(h, n->r->height + 1);
    n->height = n->tag == Node::Var ? 0 : h;
}

void collect(Node* n, std::vector<Node*>& interior) {
    if (n->tag != Node::Var) interior.push_back(n);
    if (n->l) collect(n->l.get(), interior);
    if (n->r) collect(n->r.get(), interior);
}

}  // namespace

Codelist Codelist::parse(const std::string& expr, int num_vars) {
    if (num_vars < 1) throw ParseError("need at least one variable", 0);
    auto root = Parser(expr, num_vars).run();
    if (root->tag == Node::Const)
        throw ParseError("expression is constant (no variables)", 0);

    int disc = 0;
    annotate(root.get(), disc);
    std::vector<Node*> interior;
    collect(root.get(), interior);
    // variables occupy lines 1..n; interior ops follow ordered by height
    // (inner first), ties in first-visit order
    std::stable_sort(interior.begin(), interior.end(), [](const Node* a, const Node* b) {
        return a->height != b->height ? a->height < b->height : a->disc < b->disc;
    });

    Codelist cl;
    cl.n_ = num_vars;
    cl.lines_.reserve(static_cast<std::size_t>(num_vars) + interior.size());
    for (int k = 0; k < num_vars; ++k) cl.lines_.push_back({OpKind::Var});

    const auto line_of = [](const Node* n) {
        return n->tag == Node::Var ? n->var : n->line;
    };
    int next = num_vars + 1;
    for (Node* n : interior) {
        n->line = next++;
        CodeLine out{};
        switch (n->tag) {
            case Node::AddC:
                out = {OpKind::AddConst, line_of(n->l.get()), -1, n->c, 0};
                break;
            case Node::MulC:
                out = {OpKind::MulByConst, line_of(n->l.get()), -1, n->c, 0};
                break;
            case Node::Add:
            case Node::Mul: {
                int a = line_of(n->l.get()), b = line_of(n->r.get());
                if (a > b) std::swap(a, b);
                out = {n->tag == Node::Add ? OpKind::Add : OpKind::Mul, a, b, 0.0, 0};
                break;
            }
            case Node::OneOver: out = {OpKind::OneOver, line_of(n->l.get())}; break;
            case Node::Square: out = {OpKind::Square, line_of(n->l.get())}; break;
            case Node::Cube: out = {OpKind::Cube, line_of(n->l.get())}; break;
            case Node::PowNat:
                out = {OpKind::PowNat, line_of(n->l.get()), -1, 0.0, n->m};
                break;
            case Node::Sqrt: out = {OpKind::Sqrt, line_of(n->l.get())}; break;
            case Node::Exp: out = {OpKind::Exp, line_of(n->l.get())}; break;
            case Node::Ln: out = {OpKind::Ln, line_of(n->l.get())}; break;
            default: throw std::logic_error("unreachable op tag");
        }
        cl.lines_.push_back(out);
    }
    cl.result_ = line_of(root.get());
    return cl;
}

double Codelist::eval_point(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("point dimension mismatch");
    std::vector<double> y(lines_.size());
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        const CodeLine& ln = lines_[i];
        const int at = static_cast<int>(i) + 1;
        const auto arg = [&](int l) { return y[static_cast<std::size_t>(l - 1)]; };
        switch (ln.kind) {
            case OpKind::Var: y[i] = x[i]; break;
            case OpKind::AddConst: y[i] = arg(ln.a) + ln.c; break;
            case OpKind::MulByConst: y[i] = ln.c * arg(ln.a); break;
            case OpKind::Add: y[i] = arg(ln.a) + arg(ln.b); break;
            case OpKind::Mul: y[i] = arg(ln.a) * arg(ln.b); break;
            case OpKind::OneOver:
                if (arg(ln.a) == 0.0) throw DomainViolation("1/0", at);
                y[i] = 1.0 / arg(ln.a);
                break;
            case OpKind::Square: y[i] = arg(ln.a) * arg(ln.a); break;
            case OpKind::Cube: y[i] = arg(ln.a) * arg(ln.a) * arg(ln.a); break;
            case OpKind::PowNat: y[i] = std::pow(arg(ln.a), ln.m); break;
            case OpKind::Sqrt:
                if (arg(ln.a) < 0.0) throw DomainViolation("sqrt of negative", at);
                y[i] = std::sqrt(arg(ln.a));
                break;
            case OpKind::Exp: y[i] = std::exp(arg(ln.a)); break;
            case OpKind::Ln:
                if (arg(ln.a) <= 0.0) throw DomainViolation("ln of nonpositive", at);
                y[i] = std::log(arg(ln.a));
                break;
        }
    }
    return y[static_cast<std::size_t>(result_ - 1)];
}

namespace {

// shortest decimal that round-trips
std::string fmt_const(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace

std::string Codelist::dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        const CodeLine& ln = lines_[i];
        os << 'y' << i + 1 << " = ";
        switch (ln.kind) {
            case OpKind::Var: os << 'x' << i + 1; break;
            case OpKind::AddConst: os << 'y' << ln.a << " + " << fmt_const(ln.c); break;
            case OpKind::MulByConst: os << fmt_const(ln.c) << " * y" << ln.a; break;
            case OpKind::Add: os << 'y' << ln.a << " + y" << ln.b; break;
            case OpKind::Mul: os << 'y' << ln.a << " * y" << ln.b; break;
            case OpKind::OneOver: os << "1 / y" << ln.a; break;
            case OpKind::Square: os << "square(y" << ln.a << ')'; break;
            case OpKind::Cube: os << "cube(y" << ln.a << ')'; break;
            case OpKind::PowNat: os << "pow(y" << ln.a << ", " << ln.m << ')'; break;
            case OpKind::Sqrt: os << "sqrt(y" << ln.a << ')'; break;
            case OpKind::Exp: os << "exp(y" << ln.a << ')'; break;
            case OpKind::Ln: os << "ln(y" << ln.a << ')'; break;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hb
