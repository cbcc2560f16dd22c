#pragma once

#include <map>
#include <string>
#include <vector>

#include "tableaux/arith.hpp"
#include "tableaux/shape.hpp"

namespace tableaux {

/// Sign-imbalance of a shape: the sum of tableau signs over all its standard
/// Young tableaux. The default route sums over chess tableaux only, which
/// gives the same value with a far smaller search tree; imbalance_full keeps
/// the direct enumeration as an independent oracle. Accumulation is checked
/// 64-bit and throws OverflowError on wraparound.
long long imbalance(const Shape& s);
long long imbalance_chess(const Shape& s);
long long imbalance_full(const Shape& s);

/// Per-shape result bundle used by tables and identity sums.
struct ImbalanceRecord {
    Shape shape;
    long long imbalance = 0;
    int v = 0;
    int h = 0;
    int d = 0;
    int vs = 0;
    int hs = 0;
    int black = 0;
    int white = 0;

    bool operator==(const ImbalanceRecord&) const = default;
};

ImbalanceRecord imbalance_record(const Shape& s);

/// One record per partition of n, in decreasing lexicographic order.
/// Shapes are processed on `jobs` workers; the order is fixed regardless.
std::vector<ImbalanceRecord> imbalance_table(int n, int jobs = 1);

/// Exponent triple of q^a t^b x^c.
struct Monomial {
    int q = 0;
    int t = 0;
    int x = 0;
    auto operator<=>(const Monomial&) const = default;
};

/// Sparse exact polynomial in q, t, x. Zero coefficients are never stored,
/// so operator== is polynomial identity; no evaluation at sample points.
class MonomialMap {
public:
    /// Accumulates with checked arithmetic; erases the term if it cancels.
    void add(Monomial m, long long coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }
    bool operator==(const MonomialMap&) const = default;

    std::string str() const;  ///< canonical, deterministic rendering

private:
    std::map<Monomial, long long> terms_;
};

/// Sum over partitions of n of I * q^v t^d x^h.
MonomialMap stanley_polynomial(int n, int jobs = 1);

/// Binomial expansion of (q+x)^floor(n/2).
MonomialMap expected_polynomial(int n);

}  // namespace tableaux
