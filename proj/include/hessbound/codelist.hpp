#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hessbound/interval.hpp"

namespace hb {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos_)
        : std::runtime_error(msg), pos(pos_) {}
    std::size_t pos;  // character offset into the expression
};

enum class OpKind {
    Var,
    AddConst,
    MulByConst,
    Add,
    Mul,
    OneOver,
    Square,
    Cube,
    PowNat,
    Sqrt,
    Exp,
    Ln,
};

const char* op_name(OpKind k);

// One line y_l = op(...). Operands `a`, `b` are 1-based line indices of
// earlier lines; `c` is the constant of AddConst/MulByConst, `m` the
// exponent of PowNat (m >= 4; squares and cubes are their own ops).
struct CodeLine {
    OpKind kind;
    int a = -1;
    int b = -1;
    double c = 0.0;
    int m = 0;
};

// Straight-line program for one scalar function of x1..xn. The first n
// lines are the variables; every later line consumes earlier lines only.
// Built from an infix expression; the tree is kept as written (no common
// subexpression merging), so each interior AST node is one line.
class Codelist {
public:
    static Codelist parse(const std::string& expr, int num_vars);

    int num_vars() const { return n_; }
    int num_lines() const { return static_cast<int>(lines_.size()); }
    const std::vector<CodeLine>& lines() const { return lines_; }
    // 1-based, mirroring the operand indices
    const CodeLine& line(int l) const { return lines_[static_cast<std::size_t>(l - 1)]; }
    // line holding the function value; equals num_lines() except for a bare
    // variable expression like "x2", whose result is that variable's line
    int result_line() const { return result_; }

    // Plain double evaluation with domain checks; throws DomainViolation
    // carrying the offending line.
    double eval_point(const std::vector<double>& x) const;

    // One line per op: "y4 = square(y2)".
    std::string dump() const;

private:
    int n_ = 0;
    int result_ = 0;
    std::vector<CodeLine> lines_;
};

}  // namespace hb
