#include "hessbound/propagate.hpp"

namespace hb {

namespace {

// [a][a]^T with the diagonal tightened through the interval square rule
// (a_i^2 >= 0 even when 0 is interior); off-diagonal uses the generic
// product, mirrored so the matrix is exactly symmetric.
IntervalMatrix outer_self(const IntervalVector& a) {
    const std::size_t n = a.size();
    IntervalMatrix M(n);
    for (std::size_t i = 0; i < n; ++i) {
        M.at(i, i) = pow_nat(a[i], 2);
        for (std::size_t j = i + 1; j < n; ++j) M.set_sym(i, j, a[i] * a[j]);
    }
    return M;
}

// [a][b]^T + [b][a]^T
IntervalMatrix outer_mixed(const IntervalVector& a, const IntervalVector& b) {
    const std::size_t n = a.size();
    IntervalMatrix M(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            M.set_sym(i, j, a[i] * b[j] + b[i] * a[j]);
    return M;
}

struct LineState {
    Interval val;
    IntervalVector grad;
    IntervalMatrix hess;
    Interval eig;
};

}  // namespace

EvalTrace propagate(const Codelist& cl, const Box& box, const PropagateOptions& opt) {
    const std::size_t n = static_cast<std::size_t>(cl.num_vars());
    if (box.size() != n) throw std::invalid_argument("box dimension mismatch");
    const bool want_h = opt.mode != Mode::Eigen;
    const bool want_e = opt.mode != Mode::Hessian;

    std::vector<LineState> st(static_cast<std::size_t>(cl.num_lines()));
    for (int l = 1; l <= cl.num_lines(); ++l) {
        const CodeLine& ln = cl.line(l);
        LineState& out = st[static_cast<std::size_t>(l - 1)];
        static const LineState none{};
        const auto& A = ln.a > 0 ? st[static_cast<std::size_t>(ln.a - 1)] : none;
        const auto& B = ln.b > 0 ? st[static_cast<std::size_t>(ln.b - 1)] : none;

        switch (ln.kind) {
            case OpKind::Var: {
                const std::size_t k = static_cast<std::size_t>(l - 1);
                out.val = box[k];
                out.grad = IntervalVector::unit(k, n);
                if (want_h) out.hess = IntervalMatrix(n);
                break;
            }
            case OpKind::AddConst:
                out.val = add_const(A.val, ln.c);
                out.grad = A.grad;
                if (want_h) out.hess = A.hess;
                if (want_e) out.eig = A.eig;
                break;
            case OpKind::MulByConst:
                out.val = mul_by_const(A.val, ln.c);
                out.grad = scale(A.grad, ln.c);
                if (want_h) out.hess = scale(A.hess, ln.c);
                if (want_e) out.eig = mul_by_const(A.eig, ln.c);
                break;
            case OpKind::Add:
                out.val = A.val + B.val;
                out.grad = A.grad + B.grad;
                if (want_h) out.hess = A.hess + B.hess;
                if (want_e) out.eig = A.eig + B.eig;
                break;
            case OpKind::Mul:
                out.val = A.val * B.val;
                out.grad = scale(B.grad, A.val) + scale(A.grad, B.val);
                if (want_h)
                    out.hess = scale(B.hess, A.val) + scale(A.hess, B.val) +
                               outer_mixed(A.grad, B.grad);
                if (want_e)
                    out.eig = A.val * B.eig + B.val * A.eig + lambda_abba(A.grad, B.grad);
                break;
            case OpKind::OneOver: {
                if (A.val.contains_zero())
                    throw DomainViolation("1/[y] with 0 in [y]", l);
                const Interval yk = one_over(A.val);
                const Interval yk2 = pow_nat(yk, 2);
                out.val = yk;
                out.grad = scale(A.grad, mul_by_const(yk2, -1.0));
                if (want_h)
                    out.hess = scale(scale(outer_self(A.grad), mul_by_const(yk, 2.0)) +
                                         scale(A.hess, -1.0),
                                     yk2);
                if (want_e)
                    out.eig = yk2 * (mul_by_const(yk, 2.0) * lambda_aat(A.grad) +
                                     mul_by_const(A.eig, -1.0));
                break;
            }
            case OpKind::Square:
                out.val = pow_nat(A.val, 2);
                out.grad = scale(A.grad, mul_by_const(A.val, 2.0));
                if (want_h)
                    out.hess = scale(outer_self(A.grad) + scale(A.hess, A.val), 2.0);
                if (want_e)
                    out.eig = mul_by_const(lambda_aat(A.grad) + A.val * A.eig, 2.0);
                break;
            case OpKind::Cube:
                out.val = pow_nat(A.val, 3);
                out.grad = scale(A.grad, mul_by_const(pow_nat(A.val, 2), 3.0));
                if (want_h)
                    out.hess = scale(scale(outer_self(A.grad), 2.0) + scale(A.hess, A.val),
                                     mul_by_const(A.val, 3.0));
                if (want_e)
                    out.eig = mul_by_const(A.val, 3.0) *
                              (mul_by_const(lambda_aat(A.grad), 2.0) + A.val * A.eig);
                break;
            case OpKind::PowNat: {
                const int m = ln.m;
                const Interval f = mul_by_const(pow_nat(A.val, m - 2), static_cast<double>(m));
                out.val = pow_nat(A.val, m);
                out.grad = scale(A.grad, mul_by_const(pow_nat(A.val, m - 1),
                                                      static_cast<double>(m)));
                if (want_h)
                    out.hess = scale(scale(outer_self(A.grad), static_cast<double>(m - 1)) +
                                         scale(A.hess, A.val),
                                     f);
                if (want_e)
                    out.eig = f * (mul_by_const(lambda_aat(A.grad),
                                                static_cast<double>(m - 1)) +
                                   A.val * A.eig);
                break;
            }
            case OpKind::Sqrt: {
                // derivatives blow up at 0, so the strict inequality is needed
                if (A.val.lo <= 0.0)
                    throw DomainViolation("sqrt needs a strictly positive interval", l);
                const Interval yk = sqrt_i(A.val);
                const Interval f = mul_by_const(one_over(yk), 0.5);
                const Interval c = mul_by_const(one_over(A.val), -0.5);
                out.val = yk;
                out.grad = scale(A.grad, f);
                if (want_h)
                    out.hess = scale(A.hess + scale(outer_self(A.grad), c), f);
                if (want_e) out.eig = f * (A.eig + c * lambda_aat(A.grad));
                break;
            }
            case OpKind::Exp: {
                const Interval yk = exp_i(A.val);
                out.val = yk;
                out.grad = scale(A.grad, yk);
                if (want_h) out.hess = scale(outer_self(A.grad) + A.hess, yk);
                if (want_e) out.eig = yk * (lambda_aat(A.grad) + A.eig);
                break;
            }
            case OpKind::Ln: {
                if (A.val.lo <= 0.0)
                    throw DomainViolation("ln of interval reaching 0 or below", l);
                const Interval w = one_over(A.val);
                const Interval w2 = pow_nat(w, 2);
                out.val = ln_i(A.val);
                out.grad = scale(A.grad, w);
                if (want_h)
                    out.hess = scale(A.hess, w) +
                               scale(outer_self(A.grad), mul_by_const(w2, -1.0));
                if (want_e)
                    out.eig = w * A.eig + mul_by_const(w2, -1.0) * lambda_aat(A.grad);
                break;
            }
        }

        if (opt.inflation_eps > 0.0) {
            const double eps = opt.inflation_eps;
            out.val = inflate(out.val, eps);
            for (std::size_t i = 0; i < out.grad.size(); ++i)
                out.grad[i] = inflate(out.grad[i], eps);
            if (want_h)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i; j < n; ++j)
                        out.hess.set_sym(i, j, inflate(out.hess.at(i, j), eps));
            if (want_e) out.eig = inflate(out.eig, eps);
        }
    }

    const LineState& last = st[static_cast<std::size_t>(cl.result_line() - 1)];
    EvalTrace t;
    t.value = last.val;
    t.gradient = last.grad;
    if (want_h) {
        t.hessian = last.hess;
        t.has_hessian = true;
    }
    if (want_e) {
        t.eig = last.eig;
        t.has_eig = true;
    }
    return t;
}

std::vector<std::vector<double>> hessian_at_point(const Codelist& cl,
                                                  const std::vector<double>& x) {
    Box b;
    b.dims.reserve(x.size());
    for (double v : x) b.dims.emplace_back(v);
    PropagateOptions opt;
    opt.mode = Mode::Hessian;
    const EvalTrace t = propagate(cl, b, opt);
    const std::size_t n = x.size();
    std::vector<std::vector<double>> H(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H[i][j] = t.hessian.at(i, j).mid();
    return H;
}

}  // namespace hb
