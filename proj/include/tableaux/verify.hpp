#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tableaux/imbalance.hpp"

namespace tableaux {

/// Outcome of one identity check. pass is exactly computed == expected; both
/// sides are canonical renderings of exact values.
struct VerificationReport {
    std::string claim;
    std::string parameters;
    std::string computed;
    std::string expected;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// Sum of all imbalances of the partitions of n against 2^floor(n/2).
VerificationReport verify_total(int n, int jobs = 1);

/// The weighted imbalance polynomial of n against (q+x)^floor(n/2).
VerificationReport verify_conj_a(int n, int jobs = 1);

/// The alternating squared-imbalance t-polynomial of n against zero.
/// Rejects n congruent to 1 mod 4. For n = 0 the single empty shape makes
/// the sum 1; that value is reported without being asserted.
VerificationReport verify_conj_b(int n, int jobs = 1);

/// The hook-only weighted imbalance polynomial of n against (q+x)^floor(n/2).
/// Requires n >= 1.
VerificationReport verify_hooks(int n, int jobs = 1);

/// Sum of imbalances over the shapes with the given non-empty fourling body,
/// strip size, and strip domino counts, against zero.
VerificationReport verify_jonas(const Shape& body, int hs, int vs, int strip_size,
                                int jobs = 1);

/// Alternating squared-imbalance sum over the shapes of even n with the given
/// fourling body (possibly empty), against zero.
VerificationReport verify_betterb(const Shape& body, int n, int jobs = 1);

/// Alternating squared-imbalance sum over the shapes of even n with the given
/// black-square set, against zero.
VerificationReport verify_bettererb(const CellSet& blacks, int n, int jobs = 1);

/// For n congruent to 2 or 3 mod 4: every shape of n has zero imbalance or
/// v and h of different parity, and the alternating sum of t^d * I^2
/// vanishes as a polynomial.
VerificationReport verify_special23(int n, int jobs = 1);

/// Pluggable variant: f must satisfy f(shape) == f(conjugate) and vanish
/// wherever the imbalance does; both hypotheses are checked on the shapes of
/// n and violations throw. Verifies that the alternating sum of f vanishes.
using ShapeFunction = std::function<MonomialMap(const Shape&)>;
VerificationReport verify_special23_with(int n, const std::string& f_name,
                                         const ShapeFunction& f, int jobs = 1);

/// Alternating squared-imbalance sum over all shapes of n >= 2, against zero.
/// For n <= 7 the same sum is recomputed permutation-side through the
/// correspondence and must also vanish.
VerificationReport verify_special(int n, int jobs = 1);

/// Insertion-growth identity: for a base shape whose strip is a disjoint
/// union of vertical dominoes, the imbalance sum over its admissible
/// extensions by `added` squares equals a binomial multiple of its own
/// imbalance.
VerificationReport verify_horizontal(const Shape& base, int added, int jobs = 1);

/// Signed sum over sorted words of the given length over [alphabet] against
/// the closed form.
VerificationReport verify_sigma(int alphabet, int length);

/// Conjugation law: the imbalance of the conjugate equals (-1)^d times the
/// imbalance, for every shape of n.
VerificationReport verify_transpose(int n, int jobs = 1);

/// Every non-empty fourling shape with at most max_cells squares has zero
/// imbalance (by direct enumeration) and admits no chess tableau.
VerificationReport verify_fourling(int max_cells, int jobs = 1);

/// Per-class sweeps: one report per class realized among the partitions of n.
std::vector<VerificationReport> sweep_jonas(int n, int jobs = 1);
std::vector<VerificationReport> sweep_betterb(int n, int jobs = 1);
std::vector<VerificationReport> sweep_bettererb(int n, int jobs = 1);
std::vector<VerificationReport> sweep_horizontal(int n, int max_total, int jobs = 1);

/// Claim identifiers accepted by run_claim, excluding "all".
const std::vector<std::string>& claim_names();
bool is_known_claim(const std::string& claim);

/// Runs a claim (or "all") for every applicable n in [lo, hi]. Inapplicable
/// n are skipped rather than rejected, so ranges can be uniform.
std::vector<VerificationReport> run_claim(const std::string& claim, int lo, int hi,
                                          int jobs = 1);

}  // namespace tableaux
