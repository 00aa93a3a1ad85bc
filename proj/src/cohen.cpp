#include "jhopf/cohen.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "jhopf/modarith.hpp"

namespace jhopf::cohen {

namespace {

using modarith::checked_add;
using modarith::checked_mul;

std::string unsigned_magnitude(std::int64_t c) {
    std::uint64_t u = static_cast<std::uint64_t>(c);
    if (c < 0) u = ~u + 1;
    return std::to_string(u);
}

std::string format_block(const std::vector<int>& indices, char letter) {
    if (indices.size() == 1) return std::string(1, letter) + std::to_string(indices[0]);
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out += "|";
        out += std::string(1, letter) + std::to_string(indices[i]);
    }
    out += "}";
    return out;
}

}  // namespace

GroupGenerator::GroupGenerator(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("GroupGenerator: empty block");
    for (int i : indices_)
        if (i < 1) throw std::invalid_argument("GroupGenerator: indices are 1-based");
}

bool GroupGenerator::has_repeated_index() const {
    std::set<int> seen(indices_.begin(), indices_.end());
    return seen.size() != indices_.size();
}

GroupWord::GroupWord(int rank, int block_size) : rank_(rank), block_size_(block_size) {
    if (rank < 0) throw std::invalid_argument("GroupWord: rank must be >= 0");
    if (block_size < 1) throw std::invalid_argument("GroupWord: block size must be >= 1");
}

void GroupWord::push_reduced(const GroupGenerator& g, std::int64_t exponent) {
    if (exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().first == g) {
        std::int64_t merged = checked_add(syllables_.back().second, exponent);
        syllables_.pop_back();
        if (merged != 0) syllables_.emplace_back(g, merged);
        return;
    }
    syllables_.emplace_back(g, exponent);
}

GroupWord GroupWord::from_syllables(int rank, int block_size, std::vector<Syllable> syllables) {
    GroupWord w(rank, block_size);
    for (const auto& [g, e] : syllables) {
        if (g.block_size() != block_size)
            throw std::invalid_argument("GroupWord: generator block size mismatch");
        for (int i : g.indices())
            if (i > rank) throw std::invalid_argument("GroupWord: generator index exceeds rank");
        w.push_reduced(g, e);
    }
    return w;
}

GroupWord GroupWord::generator_power(int rank, int index, std::int64_t exponent) {
    return from_syllables(rank, 1, {{GroupGenerator::simple(index), exponent}});
}

std::int64_t GroupWord::length() const {
    std::int64_t total = 0;
    for (const auto& [g, e] : syllables_) total = checked_add(total, e < 0 ? -e : e);
    return total;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    if (a.rank() != b.rank() || a.block_size() != b.block_size())
        throw std::invalid_argument("GroupWord::operator*: group mismatch");
    GroupWord out = a;
    for (const auto& [g, e] : b.syllables()) out.push_reduced(g, e);
    return out;
}

GroupWord inverse(const GroupWord& w) {
    GroupWord out(w.rank(), w.block_size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        out.push_reduced(it->first, -it->second);
    return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return inverse(a) * inverse(b) * a * b;
}

GroupWord power(const GroupWord& w, std::int64_t exponent) {
    if (w.is_identity_word()) return w;
    if (w.syllables().size() == 1) {
        const auto& [g, e] = w.syllables().front();
        return GroupWord::from_syllables(w.rank(), w.block_size(), {{g, checked_mul(e, exponent)}});
    }
    std::int64_t reps = exponent < 0 ? -exponent : exponent;
    if (reps > 1'000'000) throw std::invalid_argument("power: exponent too large to expand");
    const GroupWord base = exponent < 0 ? inverse(w) : w;
    GroupWord out(w.rank(), w.block_size());
    for (std::int64_t i = 0; i < reps; ++i) out = out * base;
    return out;
}

MultilinearElement::MultilinearElement(int rank, int block_size, CoefficientRing ring)
    : rank_(rank), block_size_(block_size), ring_(ring) {
    if (rank < 0) throw std::invalid_argument("MultilinearElement: rank must be >= 0");
    if (block_size < 1) throw std::invalid_argument("MultilinearElement: block size must be >= 1");
}

MultilinearElement MultilinearElement::zero(int rank, int block_size, CoefficientRing ring) {
    return MultilinearElement(rank, block_size, ring);
}

MultilinearElement MultilinearElement::one(int rank, int block_size, CoefficientRing ring) {
    MultilinearElement e(rank, block_size, ring);
    e.add_term({}, 1);
    return e;
}

bool MultilinearElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

std::int64_t MultilinearElement::coefficient(const std::vector<GroupGenerator>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void MultilinearElement::add_term(const std::vector<GroupGenerator>& key, std::int64_t coefficient) {
    std::set<int> seen;
    for (const GroupGenerator& g : key) {
        if (g.block_size() != block_size_)
            throw std::invalid_argument("MultilinearElement::add_term: block size mismatch");
        for (int i : g.indices()) {
            if (i > rank_)
                throw std::invalid_argument("MultilinearElement::add_term: index exceeds rank");
            // A repeated base index anywhere in the monomial makes it zero.
            if (!seen.insert(i).second) return;
        }
    }
    auto it = terms_.find(key);
    std::int64_t c = ring_.add(it == terms_.end() ? 0 : it->second, coefficient);
    if (c == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = c;
    }
}

namespace {

void require_same_algebra(const MultilinearElement& a, const MultilinearElement& b,
                          const char* where) {
    if (a.rank() != b.rank() || a.block_size() != b.block_size() || !(a.ring() == b.ring()))
        throw std::invalid_argument(std::string(where) + ": algebra mismatch");
}

}  // namespace

MultilinearElement& MultilinearElement::operator+=(const MultilinearElement& other) {
    require_same_algebra(*this, other, "MultilinearElement::operator+=");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

MultilinearElement& MultilinearElement::operator-=(const MultilinearElement& other) {
    require_same_algebra(*this, other, "MultilinearElement::operator-=");
    for (const auto& [key, c] : other.terms_) add_term(key, ring_.negate(c));
    return *this;
}

MultilinearElement operator*(const MultilinearElement& a, const MultilinearElement& b) {
    require_same_algebra(a, b, "MultilinearElement::operator*");
    MultilinearElement out(a.rank_, a.block_size_, a.ring_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            std::vector<GroupGenerator> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.add_term(key, a.ring_.mul(ca, cb));
        }
    }
    return out;
}

MultilinearElement operator*(std::int64_t scalar, const MultilinearElement& e) {
    MultilinearElement out(e.rank_, e.block_size_, e.ring_);
    for (const auto& [key, c] : e.terms_) out.add_term(key, e.ring_.mul(scalar, c));
    return out;
}

MultilinearElement represent(const GroupWord& w, CoefficientRing ring) {
    MultilinearElement acc = MultilinearElement::one(w.rank(), w.block_size(), ring);
    for (const auto& [g, e] : w.syllables()) {
        MultilinearElement factor = MultilinearElement::one(w.rank(), w.block_size(), ring);
        factor.add_term({g}, ring.reduce(e));
        acc = acc * factor;
    }
    return acc;
}

bool equal_in_group(const GroupWord& a, const GroupWord& b, CoefficientRing ring) {
    if (a.rank() != b.rank() || a.block_size() != b.block_size())
        throw std::invalid_argument("equal_in_group: group mismatch");
    return represent(a, ring) == represent(b, ring);
}

GroupWord combinatorial_james_hopf(const GroupWord& w, int k) {
    if (w.block_size() != 1)
        throw std::invalid_argument("combinatorial_james_hopf: word must use simple generators");
    if (k < 1) throw std::invalid_argument("combinatorial_james_hopf: k must be >= 1");
    const auto& sylls = w.syllables();
    const int l = static_cast<int>(sylls.size());
    GroupWord out(w.rank(), k);
    if (k > l) return out;

    std::vector<std::vector<int>> combos;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        combos.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == l - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    // Ascending right-to-left lexicographic order: the last chosen position
    // varies slowest, so compare reversed tuples.
    std::sort(combos.begin(), combos.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
              });

    std::vector<GroupWord::Syllable> result;
    result.reserve(combos.size());
    for (const auto& combo : combos) {
        std::vector<int> block;
        block.reserve(static_cast<std::size_t>(k));
        std::int64_t exponent = 1;
        for (int pos : combo) {
            const auto& [g, e] = sylls[static_cast<std::size_t>(pos)];
            block.push_back(g.indices()[0]);
            exponent = checked_mul(exponent, e);
        }
        result.emplace_back(GroupGenerator(std::move(block)), exponent);
    }
    return GroupWord::from_syllables(w.rank(), k, std::move(result));
}

GroupWord face_projection(const GroupWord& w, int j) {
    if (w.block_size() != 1)
        throw std::invalid_argument("face_projection: word must use simple generators");
    if (j < 1 || j > w.rank()) throw std::invalid_argument("face_projection: index out of range");
    std::vector<GroupWord::Syllable> mapped;
    for (const auto& [g, e] : w.syllables()) {
        int idx = g.indices()[0];
        if (idx == j) continue;
        mapped.emplace_back(GroupGenerator::simple(idx > j ? idx - 1 : idx), e);
    }
    return GroupWord::from_syllables(w.rank() - 1, 1, std::move(mapped));
}

bool is_in_H_n(const GroupWord& w, CoefficientRing ring) {
    if (w.block_size() != 1)
        throw std::invalid_argument("is_in_H_n: word must use simple generators");
    const int n = w.rank();
    if (n <= 1) return true;
    const GroupWord first = face_projection(w, 1);
    for (int j = 2; j <= n; ++j)
        if (!equal_in_group(first, face_projection(w, j), ring)) return false;
    return true;
}

MultilinearElement group_power_expansion(int n, std::int64_t m, CoefficientRing ring) {
    if (n < 1) throw std::invalid_argument("group_power_expansion: n must be >= 1");
    if (m < 1) throw std::invalid_argument("group_power_expansion: m must be >= 1");
    std::vector<GroupWord::Syllable> sylls;
    sylls.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) sylls.emplace_back(GroupGenerator::simple(i), 1);
    GroupWord base = GroupWord::from_syllables(n, 1, std::move(sylls));
    return represent(power(base, m), ring);
}

std::string to_string(const GroupWord& w) {
    if (w.is_identity_word()) return "1";
    std::string out;
    for (const auto& [g, e] : w.syllables()) {
        if (!out.empty()) out += " ";
        out += format_block(g.indices(), 'x');
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

class WordScanner {
public:
    explicit WordScanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void advance() { ++pos_; }

    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    std::int64_t read_unsigned() {
        std::size_t start = pos_;
        while (at_digit()) advance();
        if (pos_ == start) throw ParseError("expected a number at offset " + std::to_string(start));
        std::int64_t value = 0;
        auto res = std::from_chars(s_.data() + start, s_.data() + pos_, value);
        if (res.ec != std::errc())
            throw ParseError("number out of range at offset " + std::to_string(start));
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

struct WordParser {
    WordScanner sc;
    int rank;
    int block_size;

    int read_index() {
        if (sc.eof() || sc.peek() != 'x') sc.fail("expected a generator");
        sc.advance();
        if (!sc.at_digit()) sc.fail("expected a generator index after 'x'");
        std::int64_t idx = sc.read_unsigned();
        if (idx < 1) sc.fail("generator indices are 1-based");
        if (idx > rank) sc.fail("generator index exceeds the rank");
        return static_cast<int>(idx);
    }

    GroupGenerator read_generator() {
        if (sc.peek() == '{') {
            sc.advance();
            std::vector<int> indices;
            sc.skip_ws();
            indices.push_back(read_index());
            sc.skip_ws();
            while (!sc.eof() && sc.peek() == '|') {
                sc.advance();
                sc.skip_ws();
                indices.push_back(read_index());
                sc.skip_ws();
            }
            if (sc.eof() || sc.peek() != '}') sc.fail("expected '}'");
            sc.advance();
            if (static_cast<int>(indices.size()) != block_size)
                sc.fail("generator block size does not match the group");
            return GroupGenerator(std::move(indices));
        }
        int idx = read_index();
        if (block_size != 1) sc.fail("simple generators need block size 1");
        return GroupGenerator::simple(idx);
    }

    std::int64_t read_exponent() {
        sc.advance();  // consume '^'
        sc.skip_ws();
        bool neg = false;
        if (!sc.eof() && sc.peek() == '-') {
            neg = true;
            sc.advance();
        }
        std::int64_t value = sc.read_unsigned();
        return neg ? -value : value;
    }

    // Parses items until end of input (depth 0) or until ',' or ']' (inside
    // a commutator).
    GroupWord parse_word(bool nested) {
        GroupWord out(rank, block_size);
        while (true) {
            sc.skip_ws();
            if (sc.eof()) {
                if (nested) sc.fail("unterminated commutator");
                break;
            }
            if (nested && (sc.peek() == ',' || sc.peek() == ']')) break;
            out = out * parse_item();
        }
        return out;
    }

    GroupWord parse_item() {
        GroupWord body(rank, block_size);
        if (sc.peek() == '1') {
            sc.advance();
        } else if (sc.peek() == '[') {
            sc.advance();
            GroupWord a = parse_word(true);
            if (sc.eof() || sc.peek() != ',') sc.fail("expected ',' in commutator");
            sc.advance();
            GroupWord b = parse_word(true);
            if (sc.eof() || sc.peek() != ']') sc.fail("expected ']' in commutator");
            sc.advance();
            body = commutator(a, b);
        } else {
            GroupGenerator g = read_generator();
            body = GroupWord::from_syllables(rank, block_size, {{g, 1}});
        }
        sc.skip_ws();
        if (!sc.eof() && sc.peek() == '^') return power(body, read_exponent());
        return body;
    }
};

}  // namespace

GroupWord parse_group_word(std::string_view text, int rank, int block_size) {
    if (rank < 0) throw std::invalid_argument("parse_group_word: rank must be >= 0");
    if (block_size < 1) throw std::invalid_argument("parse_group_word: block size must be >= 1");
    WordParser parser{WordScanner(text), rank, block_size};
    parser.sc.skip_ws();
    if (parser.sc.eof()) throw ParseError("empty group word");
    return parser.parse_word(false);
}

std::string to_string(const MultilinearElement& e) {
    if (e.is_zero()) return "0";
    std::vector<std::pair<std::vector<GroupGenerator>, std::int64_t>> terms(e.terms().begin(),
                                                                            e.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        const bool neg = c < 0;
        const std::string mag = unsigned_magnitude(c);
        std::string body;
        if (key.empty()) {
            body = (mag == "1") ? "1" : mag + "*1";
        } else {
            if (mag != "1") body = mag + "*";
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i > 0) body += ".";
                body += format_block(key[i].indices(), 'y');
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

}  // namespace jhopf::cohen
