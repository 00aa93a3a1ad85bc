#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jhopf/errors.hpp"
#include "jhopf/modarith.hpp"

namespace jhopf::cohen {

using modarith::CoefficientRing;

/* A generator of a combinatorial group: an ordered block of base indices.
   Block size 1 gives the generators x_i of the free-group quotient K_n;
   block size k gives the generators {x_{i1}|...|x_{ik}} of the target
   K_n(k) of the k-th James-Hopf map.  Indices may repeat inside a block. */
class GroupGenerator {
public:
    explicit GroupGenerator(std::vector<int> indices);

    static GroupGenerator simple(int index) { return GroupGenerator({index}); }

    int block_size() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }
    bool has_repeated_index() const;

    friend bool operator==(const GroupGenerator&, const GroupGenerator&) = default;
    friend bool operator<(const GroupGenerator& a, const GroupGenerator& b) {
        return a.indices_ < b.indices_;
    }

private:
    std::vector<int> indices_;
};

/* A word in the group with base indices 1..rank and generator blocks of a
   fixed size, kept freely reduced: adjacent syllables with equal generators
   merge (cascading) and zero exponents drop.  All group operations preserve
   this normal form; genuine group equality is equal_in_group below. */
class GroupWord {
public:
    using Syllable = std::pair<GroupGenerator, std::int64_t>;

    // The identity word.
    GroupWord(int rank, int block_size);

    static GroupWord identity(int rank, int block_size) { return GroupWord(rank, block_size); }
    static GroupWord from_syllables(int rank, int block_size, std::vector<Syllable> syllables);
    // Convenience for block size 1: the generator x_index to the given power.
    static GroupWord generator_power(int rank, int index, std::int64_t exponent);

    int rank() const { return rank_; }
    int block_size() const { return block_size_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity_word() const { return syllables_.empty(); }
    // Sum of absolute exponents.
    std::int64_t length() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend GroupWord inverse(const GroupWord& w);

private:
    int rank_;
    int block_size_;
    std::vector<Syllable> syllables_;

    void push_reduced(const GroupGenerator& g, std::int64_t exponent);
};

GroupWord operator*(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& w);
// a^-1 b^-1 a b.
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& w, std::int64_t exponent);

/* An element of the square-zero multilinear target algebra: integer
   combinations of sequences y_{B1}...y_{Bm} of block generators whose base
   indices are pairwise disjoint across the whole sequence (any product that
   would repeat a base index is zero). */
class MultilinearElement {
public:
    MultilinearElement(int rank, int block_size, CoefficientRing ring);

    static MultilinearElement zero(int rank, int block_size,
                                   CoefficientRing ring = CoefficientRing());
    static MultilinearElement one(int rank, int block_size,
                                  CoefficientRing ring = CoefficientRing());

    int rank() const { return rank_; }
    int block_size() const { return block_size_; }
    const CoefficientRing& ring() const { return ring_; }
    const std::map<std::vector<GroupGenerator>, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::int64_t coefficient(const std::vector<GroupGenerator>& key) const;

    void add_term(const std::vector<GroupGenerator>& key, std::int64_t coefficient);

    MultilinearElement& operator+=(const MultilinearElement& other);
    MultilinearElement& operator-=(const MultilinearElement& other);
    friend MultilinearElement operator+(MultilinearElement a, const MultilinearElement& b) {
        return a += b;
    }
    friend MultilinearElement operator-(MultilinearElement a, const MultilinearElement& b) {
        return a -= b;
    }
    friend MultilinearElement operator*(const MultilinearElement& a, const MultilinearElement& b);
    friend MultilinearElement operator*(std::int64_t scalar, const MultilinearElement& e);

    friend bool operator==(const MultilinearElement&, const MultilinearElement&) = default;

private:
    int rank_;
    int block_size_;
    CoefficientRing ring_;
    std::map<std::vector<GroupGenerator>, std::int64_t> terms_;
};

/* The square-zero representation: each syllable g^e maps to 1 + e*y_g, a
   generator block with a repeated base index maps to 1, and the word maps
   to the ordered product of its syllable images.  This is the operational
   meaning of equality for the combinatorial groups: two words are declared
   equal exactly when their representations agree. */
MultilinearElement represent(const GroupWord& w, CoefficientRing ring = CoefficientRing());

bool equal_in_group(const GroupWord& a, const GroupWord& b,
                    CoefficientRing ring = CoefficientRing());

/* The combinatorial James-Hopf map H_k on a word with simple generators:
   the product, over all k-element subsets of syllable positions taken in
   ascending right-to-left lexicographic order (last position varies
   slowest), of the chosen generator blocks raised to the product of their
   exponents.  k = 1 is the identity. */
GroupWord combinatorial_james_hopf(const GroupWord& w, int k);

/* The j-th face projection K_n -> K_{n-1}: kill x_j, renumber the
   remaining generators in order.  1 <= j <= rank, simple generators. */
GroupWord face_projection(const GroupWord& w, int j);

// Whether all rank face projections of w agree (the equalizer subgroup).
bool is_in_H_n(const GroupWord& w, CoefficientRing ring = CoefficientRing());

// Representation of (x1 x2 ... xn)^m; m >= 1.
MultilinearElement group_power_expansion(int n, std::int64_t m,
                                         CoefficientRing ring = CoefficientRing());

/* Text form: syllables separated by spaces, "^e" for exponents other than
   1, identity printed "1".  Simple generators print "x<i>"; blocks print
   "{x<i1>|...|x<ik>}".  Example: "x1^-1 {x2|x3}^2". */
std::string to_string(const GroupWord& w);

/* Parser for the same form plus the commutator shorthand "[a, b]" for
   a^-1 b^-1 a b (nestable, may carry an exponent).  Generators must match
   the expected block size and use indices in [1, rank].  Throws ParseError
   on malformed input. */
GroupWord parse_group_word(std::string_view text, int rank, int block_size);

/* Text form of a multilinear element, same coefficient conventions as the
   tensor-algebra printer with atoms "y<i>" or "{y<i1>|...|y<ik>}" joined by
   ".".  Example: "1 + 2*y1 + 3*y1.y2 - y2.y1". */
std::string to_string(const MultilinearElement& e);

}  // namespace jhopf::cohen
