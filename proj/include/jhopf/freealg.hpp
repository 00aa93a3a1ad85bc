#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jhopf/errors.hpp"
#include "jhopf/modarith.hpp"

namespace jhopf::freealg {

using modarith::CoefficientRing;

/* Shared parameters for elements of a truncated free tensor algebra: the
   number of free generators x1..x{generator_count}, the degree bound past
   which products truncate to zero, and the coefficient ring.  Elements carry
   their context and binary operations require equal contexts. */
struct AlgebraContext {
    int generator_count = 0;
    int degree_bound = 0;
    CoefficientRing ring;

    friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

// Validating constructor: generator_count >= 1, degree_bound >= 1.
AlgebraContext make_context(int generator_count, int degree_bound,
                            CoefficientRing ring = CoefficientRing());

/* A basis word: a sequence of generator indices (1-based), the empty
   sequence being the algebra unit.  Words order by length first and then
   lexicographically, which is the canonical term order used for element
   storage and printing. */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    static Word single(int letter) { return Word({letter}); }

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(int position) const { return letters_[static_cast<std::size_t>(position - 1)]; }

    Word concat(const Word& other) const;
    // The subword picked out by 1-based positions (in the order given).
    Word subword(const std::vector<int>& positions) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;
};

// All words of the given length over the context's generators, in canonical
// order.  Length 0 yields the single empty word.
std::vector<Word> all_words(const AlgebraContext& ctx, int length);

/* An element of the truncated tensor algebra: a finite integer combination
   of basis words, stored sparsely in canonical word order with coefficients
   kept in canonical ring form and zero terms erased. */
class TensorElement {
public:
    explicit TensorElement(AlgebraContext ctx) : ctx_(std::move(ctx)) {}

    static TensorElement zero(const AlgebraContext& ctx) { return TensorElement(ctx); }
    static TensorElement unit(const AlgebraContext& ctx);
    // coefficient * word; words longer than the degree bound give zero,
    // out-of-range letters are rejected.
    static TensorElement monomial(const AlgebraContext& ctx, const Word& w,
                                  std::int64_t coefficient = 1);
    static TensorElement generator(const AlgebraContext& ctx, int index);

    const AlgebraContext& context() const { return ctx_; }
    const std::map<Word, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const Word& w) const;

    void add_term(const Word& w, std::int64_t coefficient);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(std::int64_t scalar, const TensorElement& e);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    AlgebraContext ctx_;
    std::map<Word, std::int64_t> terms_;
};

/* A formal combination of ordered block sequences of words, the result of
   (iterated) coproducts.  arity is the number of blocks in every key. */
class TensorSplitElement {
public:
    TensorSplitElement(AlgebraContext ctx, int arity);

    const AlgebraContext& context() const { return ctx_; }
    int arity() const { return arity_; }
    const std::map<std::vector<Word>, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const std::vector<Word>& blocks) const;

    void add_term(const std::vector<Word>& blocks, std::int64_t coefficient);

    friend bool operator==(const TensorSplitElement&, const TensorSplitElement&) = default;

private:
    AlgebraContext ctx_;
    int arity_;
    std::map<std::vector<Word>, std::int64_t> terms_;
};

/* Coproduct on which the generators are primitive: a word of length l maps
   to the sum of its 2^l ordered two-block splits by subsets of positions
   (each block keeps the original letter order). */
TensorSplitElement coproduct(const AlgebraContext& ctx, const Word& w);

// k-fold version: all k^l assignments of positions to k ordered blocks.
// arity 1 is the word itself.
TensorSplitElement iterated_coproduct(const AlgebraContext& ctx, const Word& w, int arity);

/* A linear endomorphism of the truncated algebra, given by its values on
   basis words.  These are the maps the convolution product acts on. */
class EndoMap {
public:
    using Rule = std::function<TensorElement(const Word&)>;

    EndoMap(AlgebraContext ctx, Rule rule);

    // The identity map.
    static EndoMap identity(const AlgebraContext& ctx);
    // The convolution unit: the composite of counit and unit (1 on the empty
    // word, 0 on every other basis word).
    static EndoMap convolution_unit(const AlgebraContext& ctx);
    // identity minus convolution_unit.
    static EndoMap reduced_identity(const AlgebraContext& ctx);

    const AlgebraContext& context() const { return ctx_; }

    TensorElement operator()(const Word& w) const;
    TensorElement operator()(const TensorElement& e) const;

    friend EndoMap operator+(const EndoMap& f, const EndoMap& g);
    friend EndoMap operator-(const EndoMap& f, const EndoMap& g);
    friend EndoMap operator*(std::int64_t scalar, const EndoMap& f);

private:
    AlgebraContext ctx_;
    Rule rule_;
};

/* Convolution product of two endomorphisms: split the word by the
   coproduct, apply f to the first block and g to the second, multiply.
   Associative, with convolution_unit as two-sided unit. */
EndoMap convolve(const EndoMap& f, const EndoMap& g);

/* The m-th convolution power of the identity, computed directly: a word of
   length l maps to the sum over all m^l assignments of its positions to m
   ordered blocks of the concatenation of the blocks.  m = 0 gives the
   convolution unit. */
EndoMap identity_convolution_power(const AlgebraContext& ctx, std::int64_t m);

/* The k-th convolution power of reduced_identity, computed directly: same
   sum restricted to assignments in which every block is nonempty. */
EndoMap reduced_identity_power(const AlgebraContext& ctx, std::int64_t k);

/* The left-normed commutator [[...[x_{i1}, x_{i2}], ...], x_{il}] expanded
   in the algebra, [a, b] = ab - ba.  Needs l <= degree_bound. */
TensorElement left_normed_bracket(const AlgebraContext& ctx, const std::vector<int>& indices);

// Sum of all n! permutation words x_{s(1)} ... x_{s(n)}.
TensorElement trace_element(const AlgebraContext& ctx, int n);

// Sum over permutations s of {2..n} of [[x1, x_{s(2)}], ..., x_{s(n)}].
TensorElement lie_trace_element(const AlgebraContext& ctx, int n);

/* A permutation of {1..n} in one-line notation: images[i-1] is the image of
   i.  Products compose right factor first, so (s * t)(i) = s(t(i)). */
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // 1 -> 2 -> ... -> n -> 1.
    static Permutation forward_cycle(int n);

    int arity() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& s, const Permutation& t);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/* Position action on a word of length n: the letter in position i moves to
   position s(i), so the result has b_j = a_{s^{-1}(j)}. */
Word permute_positions(const Permutation& s, const Word& w);
// Linear extension; every word of e must have length equal to the arity.
TensorElement permute_positions(const Permutation& s, const TensorElement& e);

/* An integer group-algebra element of the symmetric group on {1..n}.
   Coefficients are plain integers; they meet a coefficient ring only when
   the element acts on a TensorElement. */
class SymGroupAlgebraElement {
public:
    explicit SymGroupAlgebraElement(int arity) : arity_(arity) {}

    static SymGroupAlgebraElement basis(const Permutation& s, std::int64_t coefficient = 1);
    // Sum of all n! permutations.
    static SymGroupAlgebraElement symmetrizer(int n);

    int arity() const { return arity_; }
    const std::map<Permutation, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Sum of coefficients (the augmentation character).
    std::int64_t augmentation() const;

    void add_term(const Permutation& s, std::int64_t coefficient);

    SymGroupAlgebraElement& operator+=(const SymGroupAlgebraElement& other);
    SymGroupAlgebraElement& operator-=(const SymGroupAlgebraElement& other);
    friend SymGroupAlgebraElement operator+(SymGroupAlgebraElement a,
                                            const SymGroupAlgebraElement& b) { return a += b; }
    friend SymGroupAlgebraElement operator-(SymGroupAlgebraElement a,
                                            const SymGroupAlgebraElement& b) { return a -= b; }
    // Group-algebra product (convolution over the group).
    friend SymGroupAlgebraElement operator*(const SymGroupAlgebraElement& a,
                                            const SymGroupAlgebraElement& b);
    friend SymGroupAlgebraElement operator*(std::int64_t scalar, const SymGroupAlgebraElement& a);

    friend bool operator==(const SymGroupAlgebraElement&, const SymGroupAlgebraElement&) = default;

private:
    int arity_;
    std::map<Permutation, std::int64_t> terms_;
};

std::string to_string(const SymGroupAlgebraElement& a);

// Linear action through permute_positions; e must be concentrated in degree
// equal to the element's arity.
TensorElement apply_group_algebra(const SymGroupAlgebraElement& a, const TensorElement& e);

/* Canonical text form.  Terms in canonical word order, atoms "x<i>" joined
   by ".", the empty word printed "1", unit coefficients left implicit,
   " + " and " - " between terms, "0" for the zero element.  Examples:
   "3*x1.x2 + x2.x1", "1 - 2*x1", "0". */
std::string to_string(const TensorElement& e);

/* Inverse of to_string, whitespace-tolerant.  Accepts any term order and
   repeated words (coefficients accumulate).  Letters beyond the context's
   generators are an error; words longer than the degree bound truncate to
   zero, matching product truncation.  Throws ParseError on malformed
   input. */
TensorElement parse_element(std::string_view text, const AlgebraContext& ctx);

}  // namespace jhopf::freealg
