#include "hessbound/costmodel.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hb {

CostTable CostTable::defaults() {
    CostTable t;
    const auto set = [&t](OpKind k, CostPoly val, CostPoly grad, CostPoly eig,
                          CostPoly hess) {
        t.of(k) = {val, grad, eig, hess};
    };
    // {a2, a1, a0}
    set(OpKind::Var, {}, {}, {}, {});
    set(OpKind::AddConst, {0, 0, 2}, {}, {}, {});
    set(OpKind::MulByConst, {0, 0, 2}, {0, 2, -2}, {0, 0, 2}, {1, -1, 0});
    set(OpKind::Add, {0, 0, 2}, {0, 2, -2}, {0, 0, 2}, {1, -1, 0});
    set(OpKind::Mul, {0, 0, 14}, {0, 18, -18}, {0, 18, 2}, {19, -19, 0});
    set(OpKind::OneOver, {0, 0, 4}, {0, 8, -1}, {0, 4, 22}, {14, -14, 7});
    set(OpKind::Square, {0, 0, 5}, {0, 8, -6}, {0, 4, 7}, {10, -10, 0});
    set(OpKind::Cube, {0, 0, 2}, {0, 8, -1}, {0, 4, 17}, {14, -14, 2});
    set(OpKind::PowNat, {0, 0, 5}, {0, 8, -1}, {0, 4, 22}, {14, -14, 7});
    set(OpKind::Sqrt, {0, 0, 3}, {0, 8, -2}, {0, 4, 25}, {13, -13, 8});
    set(OpKind::Exp, {0, 0, 2}, {0, 8, -8}, {0, 4, 5}, {9, -9, 0});
    set(OpKind::Ln, {0, 0, 3}, {0, 8, -4}, {0, 4, 19}, {13, -13, 4});
    t.gersh_ = {1, 1, 0};
    return t;
}

namespace {

constexpr OpKind kAllOps[] = {
    OpKind::Var,    OpKind::AddConst, OpKind::MulByConst, OpKind::Add,
    OpKind::Mul,    OpKind::OneOver,  OpKind::Square,     OpKind::Cube,
    OpKind::PowNat, OpKind::Sqrt,     OpKind::Exp,        OpKind::Ln,
};

constexpr const char* kQuantities[] = {"val", "grad", "eig", "hess"};

}  // namespace

void CostTable::save(std::ostream& os) const {
    os << "# op quantity a2 a1 a0  (cost = a2*n^2 + a1*n + a0)\n";
    for (OpKind k : kAllOps) {
        const OpCost& c = of(k);
        const CostPoly* polys[] = {&c.val, &c.grad, &c.eig, &c.hess};
        for (int q = 0; q < 4; ++q)
            os << op_name(k) << ' ' << kQuantities[q] << ' ' << polys[q]->a2 << ' '
               << polys[q]->a1 << ' ' << polys[q]->a0 << '\n';
    }
    os << "gershgorin overhead " << gersh_.a2 << ' ' << gersh_.a1 << ' ' << gersh_.a0
       << '\n';
}

CostTable CostTable::load(std::istream& is) {
    std::map<std::string, OpKind> by_name;
    for (OpKind k : kAllOps) by_name[op_name(k)] = k;

    CostTable t = defaults();
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string op, quantity;
        CostPoly p;
        if (!(ls >> op)) continue;  // blank line
        if (!(ls >> quantity >> p.a2 >> p.a1 >> p.a0))
            throw std::runtime_error("cost table line " + std::to_string(lineno) +
                                     ": expected 'op quantity a2 a1 a0'");
        if (op == "gershgorin" && quantity == "overhead") {
            t.gersh_ = p;
            continue;
        }
        const auto it = by_name.find(op);
        if (it == by_name.end())
            throw std::runtime_error("cost table line " + std::to_string(lineno) +
                                     ": unknown op '" + op + "'");
        OpCost& c = t.of(it->second);
        if (quantity == "val") c.val = p;
        else if (quantity == "grad") c.grad = p;
        else if (quantity == "eig") c.eig = p;
        else if (quantity == "hess") c.hess = p;
        else
            throw std::runtime_error("cost table line " + std::to_string(lineno) +
                                     ": unknown quantity '" + quantity + "'");
    }
    return t;
}

CountReport count(const Codelist& cl, const CostTable& table) {
    const int n = cl.num_vars();
    CountReport r;
    for (const CodeLine& ln : cl.lines()) {
        const OpCost& c = table.of(ln.kind);
        r.val += c.val.eval(n);
        r.grad += c.grad.eval(n);
        r.eig += c.eig.eval(n);
        r.hess += c.hess.eval(n);
    }
    r.delta_a = r.eig;
    r.n_a = r.val + r.grad + r.eig;
    r.n_g = r.val + r.grad + r.hess + table.gershgorin_overhead().eval(n);
    return r;
}

}  // namespace hb
