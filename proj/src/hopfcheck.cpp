#include "jhopf/hopfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "jhopf/modarith.hpp"

namespace jhopf::hopfcheck {

namespace {

using cohen::GroupWord;
using freealg::AlgebraContext;
using freealg::EndoMap;
using freealg::Permutation;
using freealg::SymGroupAlgebraElement;
using freealg::TensorElement;
using freealg::Word;
using modarith::checked_pow;
using modarith::CoefficientRing;

template <typename Body>
CheckReport timed(std::string name, std::map<std::string, std::int64_t> params, Body body) {
    CheckReport report;
    report.check = std::move(name);
    report.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    body(report);
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (report.status == CheckStatus::fail && !report.witness) report.witness = "no witness recorded";
    if (report.status != CheckStatus::fail) report.witness.reset();
    return report;
}

// Records the first failure; later ones would only repeat the story.
void fail(CheckReport& report, std::string witness) {
    if (report.status == CheckStatus::fail) return;
    report.status = CheckStatus::fail;
    report.witness = std::move(witness);
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int i = 1; i <= w.length(); ++i) {
        if (i > 1) out += ".";
        out += "x" + std::to_string(w.letter(i));
    }
    return out;
}

std::string format_permutation(const Permutation& s) {
    std::string out = "[";
    for (int i = 1; i <= s.arity(); ++i) {
        if (i > 1) out += " ";
        out += std::to_string(s(i));
    }
    return out + "]";
}

// All partitions of the sorted position list into blocks of size k, each
// block ascending.  Recursion anchors the smallest remaining position and
// chooses its k-1 partners, so every partition appears exactly once.
template <typename Visit>
void for_each_partition(std::vector<int>& remaining, int k,
                        std::vector<std::vector<int>>& blocks, const Visit& visit) {
    if (remaining.empty()) {
        visit(blocks);
        return;
    }
    const int first = remaining.front();
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    const int r = static_cast<int>(rest.size());
    const int c = k - 1;
    std::vector<int> pick(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> block{first};
        std::vector<bool> taken(static_cast<std::size_t>(r), false);
        for (int i : pick) {
            block.push_back(rest[static_cast<std::size_t>(i)]);
            taken[static_cast<std::size_t>(i)] = true;
        }
        std::vector<int> next;
        next.reserve(static_cast<std::size_t>(r - c));
        for (int i = 0; i < r; ++i)
            if (!taken[static_cast<std::size_t>(i)]) next.push_back(rest[static_cast<std::size_t>(i)]);
        blocks.push_back(std::move(block));
        for_each_partition(next, k, blocks, visit);
        blocks.pop_back();
        if (c == 0) break;
        int i = c - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == r - c + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

AlgebraContext block_context(const AlgebraContext& src, int k) {
    if (k < 1) throw std::invalid_argument("block_context: k must be >= 1");
    std::int64_t count = checked_pow(src.generator_count, k);
    if (count > std::numeric_limits<int>::max())
        throw std::invalid_argument("block_context: block alphabet too large");
    return freealg::make_context(static_cast<int>(count), std::max(1, src.degree_bound / k),
                                 src.ring);
}

int block_letter(const Word& block, int generator_count) {
    if (block.empty()) throw std::invalid_argument("block_letter: empty block");
    std::int64_t acc = 0;
    for (int i = 1; i <= block.length(); ++i) {
        const int a = block.letter(i);
        if (a < 1 || a > generator_count)
            throw std::invalid_argument("block_letter: letter out of range");
        acc = acc * generator_count + (a - 1);
    }
    if (acc + 1 > std::numeric_limits<int>::max())
        throw std::invalid_argument("block_letter: letter does not fit");
    return static_cast<int>(acc + 1);
}

Word block_of_letter(int letter, int generator_count, int k) {
    if (k < 1) throw std::invalid_argument("block_of_letter: k must be >= 1");
    std::int64_t top = checked_pow(generator_count, k);
    if (letter < 1 || letter > top)
        throw std::invalid_argument("block_of_letter: letter out of range");
    std::vector<int> letters(static_cast<std::size_t>(k));
    std::int64_t v = letter - 1;
    for (int i = k - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(v % generator_count) + 1;
        v /= generator_count;
    }
    return Word(std::move(letters));
}

std::string format_block_element(const TensorElement& e, int generator_count, int k) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        const bool neg = c < 0;
        std::uint64_t mag = static_cast<std::uint64_t>(c);
        if (neg) mag = ~mag + 1;
        std::string body;
        if (w.empty()) {
            body = (mag == 1) ? "1" : std::to_string(mag) + "*1";
        } else {
            if (mag != 1) body = std::to_string(mag) + "*";
            for (int i = 1; i <= w.length(); ++i) {
                if (i > 1) body += ".";
                const Word block = block_of_letter(w.letter(i), generator_count, k);
                if (block.length() == 1) {
                    body += "x" + std::to_string(block.letter(1));
                } else {
                    body += "{";
                    for (int j = 1; j <= block.length(); ++j) {
                        if (j > 1) body += "|";
                        body += "x" + std::to_string(block.letter(j));
                    }
                    body += "}";
                }
            }
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

TensorElement homology_james_hopf(const AlgebraContext& src, const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("homology_james_hopf: k must be >= 1");
    for (int x : w.letters())
        if (x > src.generator_count)
            throw std::invalid_argument("homology_james_hopf: letter out of range");
    const AlgebraContext tgt = block_context(src, k);
    TensorElement out(tgt);
    const int l = w.length();
    if (l % k != 0) return out;
    std::vector<int> positions(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) positions[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> blocks;
    for_each_partition(positions, k, blocks, [&](const std::vector<std::vector<int>>& part) {
        std::vector<std::vector<int>> ordered = part;
        // Blocks concatenate ascending by last position (right-to-left
        // lexicographic on the position tuples).
        std::sort(ordered.begin(), ordered.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                                          b.rend());
                  });
        std::vector<int> letters;
        letters.reserve(ordered.size());
        for (const auto& block : ordered)
            letters.push_back(block_letter(w.subword(block), src.generator_count));
        out.add_term(Word(std::move(letters)), 1);
    });
    return out;
}

TensorElement homology_james_hopf(const TensorElement& e, int k) {
    TensorElement out(block_context(e.context(), k));
    for (const auto& [w, c] : e.terms()) out += c * homology_james_hopf(e.context(), w, k);
    return out;
}

CheckReport check_hopf_whitehead_vanishing(int n, int k) {
    if (!(1 < k && k < n))
        throw std::invalid_argument("hopf-whitehead check: requires 1 < k < n");
    if (n % k == 0)
        throw std::invalid_argument("hopf-whitehead check: k divides n, outside the vanishing hypothesis");
    return timed("hopf-whitehead", {{"k", k}, {"n", n}}, [&](CheckReport& report) {
        if (n > 7) {
            report.status = CheckStatus::skipped;
            report.note = "n exceeds the desk-scale bound 7";
            return;
        }
        const AlgebraContext ctx = freealg::make_context(n, n);
        std::vector<int> indices(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) indices[static_cast<std::size_t>(i)] = i + 1;
        const TensorElement image = homology_james_hopf(freealg::left_normed_bracket(ctx, indices), k);
        if (!image.is_zero()) {
            fail(report, "homological image: " + format_block_element(image, n, k));
            return;
        }
        if (n <= 4 && (k == 2 || k == 3)) {
            GroupWord w = GroupWord::generator_power(n, 1, 1);
            for (int i = 2; i <= n; ++i)
                w = cohen::commutator(w, GroupWord::generator_power(n, i, 1));
            const GroupWord image_word = cohen::combinatorial_james_hopf(w, k);
            if (!cohen::equal_in_group(image_word, GroupWord::identity(n, k))) {
                fail(report, "combinatorial image represents to: " +
                                 cohen::to_string(cohen::represent(image_word)));
                return;
            }
            report.note = "both routes vanish";
        } else {
            report.note = "homological route vanishes";
        }
    });
}

CheckReport check_h2_beta4() {
    return timed("h2-beta4", {}, [&](CheckReport& report) {
        const AlgebraContext ctx = freealg::make_context(4, 4);
        const AlgebraContext tgt = block_context(ctx, 2);
        const auto block_mon = [&](int a, int b) {
            return TensorElement::monomial(tgt, Word::single(block_letter(Word({a, b}), 4)));
        };
        const auto bracket = [](const TensorElement& u, const TensorElement& v) {
            return u * v - v * u;
        };

        const TensorElement partition_route =
            homology_james_hopf(freealg::left_normed_bracket(ctx, {1, 2, 3, 4}), 2);

        const TensorElement bracket_route = bracket(block_mon(1, 2), block_mon(4, 3))
                                          - bracket(block_mon(2, 1), block_mon(4, 3))
                                          + bracket(block_mon(4, 1), block_mon(3, 2))
                                          + bracket(block_mon(3, 1), block_mon(4, 2));

        const auto tau = [](int a, int b) {
            return SymGroupAlgebraElement::basis(Permutation::transposition(4, a, b));
        };
        const SymGroupAlgebraElement phi =
            tau(3, 4) - tau(1, 2) * tau(3, 4) + tau(1, 4) * tau(2, 3) + tau(1, 3) * tau(2, 4);
        const TensorElement twisted =
            freealg::apply_group_algebra(phi, TensorElement::monomial(ctx, Word({1, 2, 3, 4})));
        TensorElement twist_route(tgt);
        for (const auto& [w, c] : twisted.terms())
            twist_route += c * bracket(block_mon(w.letter(1), w.letter(2)),
                                       block_mon(w.letter(3), w.letter(4)));

        if (partition_route == bracket_route && partition_route == twist_route) {
            report.note = "common value: " + format_block_element(partition_route, 4, 2);
        } else {
            fail(report,
                 "partition formula: " + format_block_element(partition_route, 4, 2) +
                     "; four-bracket expression: " + format_block_element(bracket_route, 4, 2) +
                     "; symmetrized twist composite: " + format_block_element(twist_route, 4, 2));
        }
    });
}

CheckReport check_power_map_triviality(std::int64_t p, std::int64_t r, std::int64_t t, int dim) {
    if (!modarith::is_prime(p)) throw std::invalid_argument("power check: p must be prime");
    if (r < 1) throw std::invalid_argument("power check: r must be >= 1");
    if (t < 0) throw std::invalid_argument("power check: t must be >= 0");
    if (dim < 1) throw std::invalid_argument("power check: dim must be >= 1");
    return timed("power", {{"dim", dim}, {"p", p}, {"r", r}, {"t", t}}, [&](CheckReport& report) {
        const std::int64_t top = checked_pow(p, t + 1);
        if (top > 5) {
            report.status = CheckStatus::skipped;
            report.note = "p^(t+1) exceeds the desk-scale bound 5";
            return;
        }
        if (dim < top - 1)
            throw std::invalid_argument("power check: dim must be at least p^(t+1)-1");
        const CoefficientRing ring(checked_pow(p, r));
        const AlgebraContext ctx = freealg::make_context(dim, static_cast<int>(top - 1), ring);
        const std::int64_t m = checked_pow(p, r + t);
        const EndoMap id_power = freealg::identity_convolution_power(ctx, m);
        for (int len = 1; len <= top - 1; ++len) {
            for (const Word& w : freealg::all_words(ctx, len)) {
                const TensorElement value = id_power(w);
                if (!value.is_zero()) {
                    fail(report, "word " + format_word(w) + ": convolution power " +
                                     std::to_string(m) + " gives " + freealg::to_string(value) +
                                     ", expected 0");
                    return;
                }
            }
        }
        if (t >= 1 || r >= 2) {
            const std::int64_t m_prev = m / p;
            const EndoMap prev_power = freealg::identity_convolution_power(ctx, m_prev);
            for (int len = 1; len <= top - 1; ++len) {
                for (const Word& w : freealg::all_words(ctx, len)) {
                    const TensorElement value = prev_power(w);
                    if (!value.is_zero()) {
                        report.note = "sharpness witness: word " + format_word(w) +
                                      " at convolution power " + std::to_string(m_prev) +
                                      " gives " + freealg::to_string(value);
                        return;
                    }
                }
            }
            fail(report, "convolution power " + std::to_string(m_prev) +
                             " is already trivial on all words up to length " +
                             std::to_string(top - 1));
        } else {
            report.note = "trivial at convolution power " + std::to_string(m) +
                          "; no sharpness clause for r = 1, t = 0";
        }
    });
}

CheckReport check_obstruction_formula(std::int64_t p, std::int64_t r, std::int64_t t) {
    if (!modarith::is_prime(p)) throw std::invalid_argument("obstruction check: p must be prime");
    if (r < 1) throw std::invalid_argument("obstruction check: r must be >= 1");
    if (t < 0) throw std::invalid_argument("obstruction check: t must be >= 0");
    return timed("obstruction", {{"p", p}, {"r", r}, {"t", t}}, [&](CheckReport& report) {
        const std::int64_t n64 = checked_pow(p, t + 1);
        if (n64 > 5) {
            report.status = CheckStatus::skipped;
            report.note = "p^(t+1) exceeds the desk-scale bound 5";
            return;
        }
        const int n = static_cast<int>(n64);
        const CoefficientRing ring(checked_pow(p, r));
        const AlgebraContext ctx = freealg::make_context(n, n, ring);
        const std::int64_t m = checked_pow(p, r + t);
        std::vector<int> letters(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
        const Word id_word(letters);
        // The convolution unit vanishes on any nonempty word, so on the
        // length-n word the deviation from the unit is the power itself.
        const TensorElement deviation = freealg::identity_convolution_power(ctx, m)(id_word);
        for (const auto& [w, c] : deviation.terms()) {
            std::vector<int> sorted = w.letters();
            std::sort(sorted.begin(), sorted.end());
            if (sorted != letters) {
                fail(report, "non-multilinear term " + format_word(w) + " with coefficient " +
                                 std::to_string(c));
                return;
            }
        }
        const std::int64_t c = deviation.coefficient(id_word);
        const TensorElement trace = freealg::trace_element(ctx, n);
        const TensorElement lie_trace = freealg::lie_trace_element(ctx, n);
        if (!(deviation == c * trace)) {
            fail(report, "deviation " + freealg::to_string(deviation) +
                             " differs from c*trace with c = " + std::to_string(c));
            return;
        }
        if (!(c * trace == c * lie_trace)) {
            fail(report, "c*trace = " + freealg::to_string(c * trace) +
                             " differs from c*lie_trace = " + freealg::to_string(c * lie_trace));
            return;
        }
        const modarith::Valuation v = modarith::p_valuation(c, p);
        const std::int64_t expected = modarith::binomial_prime_power_valuation(p, r + t, n64);
        if (v.is_infinite || v.value != r - 1 || expected != r - 1) {
            fail(report, "scalar " + std::to_string(c) + " has p-valuation " +
                             (v.is_infinite ? std::string("infinity") : std::to_string(v.value)) +
                             ", expected r-1 = " + std::to_string(r - 1) +
                             " (binomial valuation " + std::to_string(expected) + ")");
            return;
        }
        report.note = "deviation = " + std::to_string(c) + "*trace, p-valuation " +
                      std::to_string(r - 1);
    });
}

CheckReport check_cmn_congruence(std::int64_t p, std::int64_t t) {
    if (!modarith::is_prime(p)) throw std::invalid_argument("cmn check: p must be prime");
    if (t < 1) throw std::invalid_argument("cmn check: t must be >= 1");
    return timed("cmn", {{"p", p}, {"t", t}}, [&](CheckReport& report) {
        const std::int64_t n64 = checked_pow(p, t);
        if (n64 > 5) {
            report.status = CheckStatus::skipped;
            report.note = "p^t exceeds the desk-scale bound 5";
            return;
        }
        const int n = static_cast<int>(n64);
        const AlgebraContext ctx = freealg::make_context(n, n, CoefficientRing(p));
        const TensorElement trace = freealg::trace_element(ctx, n);
        const TensorElement lie_trace = freealg::lie_trace_element(ctx, n);
        if (!(lie_trace == trace)) {
            fail(report, "difference: " + freealg::to_string(lie_trace - trace));
            return;
        }
        for (const Permutation& s : freealg::all_permutations(n)) {
            const TensorElement moved = freealg::permute_positions(s, lie_trace);
            if (!(moved == lie_trace)) {
                fail(report, "permutation " + format_permutation(s) +
                                 " moves lie_trace to " + freealg::to_string(moved));
                return;
            }
        }
    });
}

CheckReport check_trace_lemmas(int n, int trials, std::uint64_t seed) {
    if (n < 1 || n > 5) throw std::invalid_argument("trace check: n must be in [1, 5]");
    if (trials < 1) throw std::invalid_argument("trace check: trials must be >= 1");
    return timed("trace",
                 {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}, {"trials", trials}},
                 [&](CheckReport& report) {
        // Fixed instance first: f = c + c^2 + c^3 for the forward 3-cycle.
        const Permutation c3 = Permutation::forward_cycle(3);
        SymGroupAlgebraElement f = SymGroupAlgebraElement::basis(c3);
        f += SymGroupAlgebraElement::basis(c3 * c3);
        f += SymGroupAlgebraElement::basis(c3 * c3 * c3);
        const SymGroupAlgebraElement phi3 = SymGroupAlgebraElement::symmetrizer(3);
        if (f.augmentation() != 3) {
            fail(report, "augmentation of f is " + std::to_string(f.augmentation()) +
                             ", expected 3");
            return;
        }
        if (!(phi3 * f == 3 * phi3) || !(f * phi3 == 3 * phi3)) {
            fail(report, "fixed element f: phi3*f = " + freealg::to_string(phi3 * f) +
                             ", f*phi3 = " + freealg::to_string(f * phi3) +
                             ", expected 3*phi3");
            return;
        }
        const AlgebraContext ctx3 = freealg::make_context(3, 3);
        for (const Word& w : freealg::all_words(ctx3, 3)) {
            const TensorElement e = TensorElement::monomial(ctx3, w);
            const TensorElement expected = 3 * freealg::apply_group_algebra(phi3, e);
            if (!(freealg::apply_group_algebra(phi3, freealg::apply_group_algebra(f, e)) == expected) ||
                !(freealg::apply_group_algebra(f, freealg::apply_group_algebra(phi3, e)) == expected)) {
                fail(report, "fixed element f acts wrongly on " + format_word(w));
                return;
            }
        }

        const SymGroupAlgebraElement phi = SymGroupAlgebraElement::symmetrizer(n);
        const std::vector<Permutation> perms = freealg::all_permutations(n);
        const AlgebraContext ctx = freealg::make_context(n, n);
        std::vector<Word> sample_words;
        if (n <= 4)
            sample_words = freealg::all_words(ctx, n);
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < trials; ++trial) {
            SymGroupAlgebraElement alpha(n);
            for (const Permutation& s : perms)
                alpha.add_term(s, static_cast<std::int64_t>(rng() % 7) - 3);
            const std::int64_t chi = alpha.augmentation();
            const SymGroupAlgebraElement expected = chi * phi;
            if (!(phi * alpha == expected) || !(alpha * phi == expected)) {
                fail(report, "trial " + std::to_string(trial) + ": products of phi with alpha = " +
                                 freealg::to_string(alpha) + " differ from chi*phi, chi = " +
                                 std::to_string(chi));
                return;
            }
            std::vector<Word> words;
            if (n <= 4) {
                words = sample_words;
            } else {
                for (int i = 0; i < 20; ++i) {
                    std::vector<int> letters(static_cast<std::size_t>(n));
                    for (int j = 0; j < n; ++j)
                        letters[static_cast<std::size_t>(j)] =
                            static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
                    words.push_back(Word(std::move(letters)));
                }
            }
            for (const Word& w : words) {
                const TensorElement e = TensorElement::monomial(ctx, w);
                const TensorElement target = chi * freealg::apply_group_algebra(phi, e);
                if (!(freealg::apply_group_algebra(phi, freealg::apply_group_algebra(alpha, e)) ==
                      target) ||
                    !(freealg::apply_group_algebra(alpha, freealg::apply_group_algebra(phi, e)) ==
                      target)) {
                    fail(report, "trial " + std::to_string(trial) + ": alpha = " +
                                     freealg::to_string(alpha) + " does not absorb on " +
                                     format_word(w));
                    return;
                }
            }
        }
    });
}

std::vector<CheckReport> run_all_checks() {
    std::vector<CheckReport> reports;
    reports.push_back(check_h2_beta4());
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {7, 2}})
        reports.push_back(check_hopf_whitehead_vanishing(n, k));
    reports.push_back(check_power_map_triviality(2, 1, 1, 3));
    reports.push_back(check_power_map_triviality(3, 1, 0, 2));
    reports.push_back(check_power_map_triviality(2, 2, 0, 1));
    reports.push_back(check_power_map_triviality(2, 1, 2, 5));
    reports.push_back(check_obstruction_formula(2, 1, 0));
    reports.push_back(check_obstruction_formula(2, 2, 0));
    reports.push_back(check_obstruction_formula(2, 1, 1));
    reports.push_back(check_cmn_congruence(2, 1));
    reports.push_back(check_cmn_congruence(3, 1));
    reports.push_back(check_cmn_congruence(2, 2));
    reports.push_back(check_cmn_congruence(5, 1));
    reports.push_back(check_trace_lemmas(5, 200, 0));
    sort_reports(reports);
    return reports;
}

void sort_reports(std::vector<CheckReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.check != b.check) return a.check < b.check;
                         return a.params < b.params;
                     });
}

}  // namespace jhopf::hopfcheck
