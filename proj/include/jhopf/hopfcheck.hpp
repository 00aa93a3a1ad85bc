#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jhopf/cohen.hpp"
#include "jhopf/freealg.hpp"

namespace jhopf::hopfcheck {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

/* Outcome of one verification.  witness is present exactly when the check
   failed and prints the differing elements in canonical text form.  note
   carries optional extra detail for the human-readable renderer and is not
   part of the serialized report. */
struct CheckReport {
    std::string check;
    std::map<std::string, std::int64_t> params;
    CheckStatus status = CheckStatus::pass;
    std::optional<std::string> witness;
    double elapsed_ms = 0.0;
    std::string note;
};

/* The target algebra of the k-th homological James-Hopf map: one generator
   per k-letter block over the source alphabet, degree bound scaled down by
   k, same coefficient ring. */
freealg::AlgebraContext block_context(const freealg::AlgebraContext& src, int k);

// Bijection between k-letter blocks over g generators and the 1-based
// letters of the block alphabet (lexicographic block order).
int block_letter(const freealg::Word& block, int generator_count);
freealg::Word block_of_letter(int letter, int generator_count, int k);

// Canonical text form of an element of a block context, with each block
// letter decoded: "{x1|x2}.{x4|x3} - {x4|x3}.{x1|x2}".
std::string format_block_element(const freealg::TensorElement& e, int generator_count, int k);

/* The k-th homological James-Hopf map on a basis word of length l: zero
   unless k divides l, otherwise the sum over partitions of the l positions
   into blocks of size k, each block read in increasing position order and
   the blocks concatenated ascending by their last position (right-to-left
   lexicographic on position tuples).  The empty word maps to the unit. */
freealg::TensorElement homology_james_hopf(const freealg::AlgebraContext& src,
                                           const freealg::Word& w, int k);
// Linear extension to elements of the source context.
freealg::TensorElement homology_james_hopf(const freealg::TensorElement& e, int k);

/* Vanishing of the k-th James-Hopf map on the n-fold left-normed bracket
   when k does not divide n: the homological route always, plus the
   combinatorial group route for n <= 4, k in {2, 3}.  Requires
   1 < k < n and k not dividing n; n > 7 reports skipped. */
CheckReport check_hopf_whitehead_vanishing(int n, int k);

/* Three independent expansions of the second James-Hopf map on the 4-fold
   left-normed bracket, compared bit-exactly over the integers: the
   partition formula, the four-bracket block expression, and the composite
   of the group-algebra element Phi with the half-split block bracket. */
CheckReport check_h2_beta4();

/* Over Z/p^r, the p^(r+t)-th convolution power of the identity agrees with
   the convolution unit on every word of length 1..p^(t+1)-1, and the
   previous power p^(r+t-1) already fails this on some word when t >= 1 or
   r >= 2.  Requires dim >= p^(t+1)-1 generators; p^(t+1) > 5 reports
   skipped (checked before the dim requirement). */
CheckReport check_power_map_triviality(std::int64_t p, std::int64_t r, std::int64_t t, int dim);

/* On the word x1..xn of length n = p^(t+1) over Z/p^r, the deviation of
   the p^(r+t)-th convolution power of the identity from the unit is
   supported on multilinear words and equals c * trace = c * lie_trace for
   a scalar c of p-valuation r-1, matching the valuation of the binomial
   C(p^(r+t), p^(t+1)).  p^(t+1) > 5 reports skipped. */
CheckReport check_obstruction_formula(std::int64_t p, std::int64_t r, std::int64_t t);

/* lie_trace = trace mod p in degree n = p^t, and lie_trace is invariant
   mod p under every position permutation.  Requires t >= 1; p^t > 5
   reports skipped. */
CheckReport check_cmn_congruence(std::int64_t p, std::int64_t t);

/* Absorption of the full symmetrizer: for seeded random group-algebra
   elements alpha (a coefficient in [-3, 3] for every permutation), both
   products phi_n * alpha and alpha * phi_n equal augmentation(alpha) *
   phi_n, and the same holds for the action on tensor words; includes the
   fixed arity-3 element f = c + c^2 + c^3 (c the forward 3-cycle) with
   augmentation 3.  Requires 1 <= n <= 5. */
CheckReport check_trace_lemmas(int n, int trials, std::uint64_t seed);

// The full desk-scale grid, reports in canonical order.
std::vector<CheckReport> run_all_checks();

// Canonical report order: by check name, then by parameter record.
void sort_reports(std::vector<CheckReport>& reports);

}  // namespace jhopf::hopfcheck
