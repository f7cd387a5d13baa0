#pragma once

#include <iosfwd>
#include <string>

#include "hessbound/codelist.hpp"

namespace hb {

// Quadratic-in-dimension operation count a2*n^2 + a1*n + a0.
struct CostPoly {
    long long a2 = 0;
    long long a1 = 0;
    long long a0 = 0;
    long long eval(int n) const {
        const long long m = n;
        return a2 * m * m + a1 * m + a0;
    }
    bool operator==(const CostPoly&) const = default;
};

// Per-op cost of the four propagated quantities.
struct OpCost {
    CostPoly val, grad, eig, hess;
};

class CostTable {
public:
    // calibrated counts for the reference propagation rules
    static CostTable defaults();

    const OpCost& of(OpKind k) const { return ops_[static_cast<std::size_t>(k)]; }
    OpCost& of(OpKind k) { return ops_[static_cast<std::size_t>(k)]; }
    const CostPoly& gershgorin_overhead() const { return gersh_; }
    CostPoly& gershgorin_overhead() { return gersh_; }

    void save(std::ostream& os) const;
    static CostTable load(std::istream& is);  // format produced by save()

private:
    OpCost ops_[12]{};
    CostPoly gersh_{};
};

struct CountReport {
    long long val = 0;
    long long grad = 0;
    long long eig = 0;
    long long hess = 0;
    // eigenvalue route: value + gradient + eigenvalue columns
    long long n_a = 0;
    // Hessian route: value + gradient + Hessian columns + Gershgorin overhead
    long long n_g = 0;
    // marginal cost of the eigenvalue enclosure on top of value + gradient
    long long delta_a = 0;
};

CountReport count(const Codelist& cl, const CostTable& table);
inline CountReport count(const Codelist& cl) { return count(cl, CostTable::defaults()); }

// worst-case complexity of the vertex-enumeration bound
inline const char* hertz_complexity() { return "O(2^n n^3)"; }

}  // namespace hb
