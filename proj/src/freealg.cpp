#include "jhopf/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "jhopf/errors.hpp"

namespace jhopf::freealg {

namespace {

using modarith::checked_mul;

void require_same_context(const AlgebraContext& a, const AlgebraContext& b, const char* where) {
    if (!(a == b)) throw std::invalid_argument(std::string(where) + ": context mismatch");
}

std::string unsigned_magnitude(std::int64_t c) {
    std::uint64_t u = static_cast<std::uint64_t>(c);
    if (c < 0) u = ~u + 1;
    return std::to_string(u);
}

}  // namespace

AlgebraContext make_context(int generator_count, int degree_bound, CoefficientRing ring) {
    if (generator_count < 1) throw std::invalid_argument("make_context: generator_count must be >= 1");
    // Split enumerations index word positions through 32-bit masks, so the
    // bound doubles as a hard cap on word length.
    if (degree_bound < 1 || degree_bound > 31)
        throw std::invalid_argument("make_context: degree_bound must be between 1 and 31");
    return AlgebraContext{generator_count, degree_bound, ring};
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_)
        if (x < 1) throw std::invalid_argument("Word: generator indices are 1-based");
}

Word Word::concat(const Word& other) const {
    std::vector<int> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(joined));
}

Word Word::subword(const std::vector<int>& positions) const {
    std::vector<int> picked;
    picked.reserve(positions.size());
    for (int p : positions) {
        if (p < 1 || p > length()) throw std::invalid_argument("Word::subword: position out of range");
        picked.push_back(letters_[static_cast<std::size_t>(p - 1)]);
    }
    return Word(std::move(picked));
}

std::vector<Word> all_words(const AlgebraContext& ctx, int length) {
    if (length < 0) throw std::invalid_argument("all_words: negative length");
    std::vector<Word> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> letters(static_cast<std::size_t>(length), 1);
    while (true) {
        out.push_back(Word(letters));
        int i = length - 1;
        while (i >= 0 && letters[static_cast<std::size_t>(i)] == ctx.generator_count) {
            letters[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++letters[static_cast<std::size_t>(i)];
    }
    return out;
}

TensorElement TensorElement::unit(const AlgebraContext& ctx) {
    return monomial(ctx, Word());
}

TensorElement TensorElement::monomial(const AlgebraContext& ctx, const Word& w,
                                      std::int64_t coefficient) {
    for (int x : w.letters())
        if (x > ctx.generator_count)
            throw std::invalid_argument("TensorElement::monomial: generator index out of range");
    TensorElement e(ctx);
    e.add_term(w, coefficient);
    return e;
}

TensorElement TensorElement::generator(const AlgebraContext& ctx, int index) {
    return monomial(ctx, Word::single(index));
}

std::int64_t TensorElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add_term(const Word& w, std::int64_t coefficient) {
    if (w.length() > ctx_.degree_bound) return;
    auto it = terms_.find(w);
    std::int64_t c = ctx_.ring.add(it == terms_.end() ? 0 : it->second, coefficient);
    if (c == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = c;
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    require_same_context(ctx_, other.ctx_, "TensorElement::operator+=");
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    require_same_context(ctx_, other.ctx_, "TensorElement::operator-=");
    for (const auto& [w, c] : other.terms_) add_term(w, ctx_.ring.negate(c));
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    require_same_context(a.ctx_, b.ctx_, "TensorElement::operator*");
    TensorElement out(a.ctx_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            if (wa.length() + wb.length() > a.ctx_.degree_bound) continue;
            out.add_term(wa.concat(wb), a.ctx_.ring.mul(ca, cb));
        }
    }
    return out;
}

TensorElement operator*(std::int64_t scalar, const TensorElement& e) {
    TensorElement out(e.ctx_);
    for (const auto& [w, c] : e.terms_) out.add_term(w, e.ctx_.ring.mul(scalar, c));
    return out;
}

TensorSplitElement::TensorSplitElement(AlgebraContext ctx, int arity)
    : ctx_(std::move(ctx)), arity_(arity) {
    if (arity < 1) throw std::invalid_argument("TensorSplitElement: arity must be >= 1");
}

std::int64_t TensorSplitElement::coefficient(const std::vector<Word>& blocks) const {
    auto it = terms_.find(blocks);
    return it == terms_.end() ? 0 : it->second;
}

void TensorSplitElement::add_term(const std::vector<Word>& blocks, std::int64_t coefficient) {
    if (static_cast<int>(blocks.size()) != arity_)
        throw std::invalid_argument("TensorSplitElement::add_term: wrong number of blocks");
    auto it = terms_.find(blocks);
    std::int64_t c = ctx_.ring.add(it == terms_.end() ? 0 : it->second, coefficient);
    if (c == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(blocks, c);
    } else {
        it->second = c;
    }
}

TensorSplitElement coproduct(const AlgebraContext& ctx, const Word& w) {
    return iterated_coproduct(ctx, w, 2);
}

TensorSplitElement iterated_coproduct(const AlgebraContext& ctx, const Word& w, int arity) {
    for (int x : w.letters())
        if (x > ctx.generator_count)
            throw std::invalid_argument("iterated_coproduct: generator index out of range");
    if (w.length() > ctx.degree_bound)
        throw std::invalid_argument("iterated_coproduct: word exceeds degree bound");
    TensorSplitElement out(ctx, arity);
    const int l = w.length();
    std::vector<int> assign(static_cast<std::size_t>(l), 0);
    while (true) {
        std::vector<Word> blocks;
        blocks.reserve(static_cast<std::size_t>(arity));
        for (int b = 0; b < arity; ++b) {
            std::vector<int> letters;
            for (int i = 0; i < l; ++i)
                if (assign[static_cast<std::size_t>(i)] == b)
                    letters.push_back(w.letter(i + 1));
            blocks.push_back(Word(std::move(letters)));
        }
        out.add_term(blocks, 1);
        int i = l - 1;
        while (i >= 0 && assign[static_cast<std::size_t>(i)] == arity - 1) {
            assign[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++assign[static_cast<std::size_t>(i)];
    }
    return out;
}

EndoMap::EndoMap(AlgebraContext ctx, Rule rule) : ctx_(std::move(ctx)), rule_(std::move(rule)) {
    if (!rule_) throw std::invalid_argument("EndoMap: empty rule");
}

EndoMap EndoMap::identity(const AlgebraContext& ctx) {
    return EndoMap(ctx, [ctx](const Word& w) { return TensorElement::monomial(ctx, w); });
}

EndoMap EndoMap::convolution_unit(const AlgebraContext& ctx) {
    return EndoMap(ctx, [ctx](const Word& w) {
        return w.empty() ? TensorElement::unit(ctx) : TensorElement::zero(ctx);
    });
}

EndoMap EndoMap::reduced_identity(const AlgebraContext& ctx) {
    return identity(ctx) - convolution_unit(ctx);
}

TensorElement EndoMap::operator()(const Word& w) const {
    return rule_(w);
}

TensorElement EndoMap::operator()(const TensorElement& e) const {
    require_same_context(ctx_, e.context(), "EndoMap::operator()");
    TensorElement out(ctx_);
    for (const auto& [w, c] : e.terms()) out += c * rule_(w);
    return out;
}

EndoMap operator+(const EndoMap& f, const EndoMap& g) {
    require_same_context(f.ctx_, g.ctx_, "EndoMap::operator+");
    auto fr = f.rule_;
    auto gr = g.rule_;
    return EndoMap(f.ctx_, [fr, gr](const Word& w) { return fr(w) + gr(w); });
}

EndoMap operator-(const EndoMap& f, const EndoMap& g) {
    require_same_context(f.ctx_, g.ctx_, "EndoMap::operator-");
    auto fr = f.rule_;
    auto gr = g.rule_;
    return EndoMap(f.ctx_, [fr, gr](const Word& w) { return fr(w) - gr(w); });
}

EndoMap operator*(std::int64_t scalar, const EndoMap& f) {
    auto fr = f.rule_;
    return EndoMap(f.ctx_, [scalar, fr](const Word& w) { return scalar * fr(w); });
}

EndoMap convolve(const EndoMap& f, const EndoMap& g) {
    require_same_context(f.context(), g.context(), "convolve");
    const AlgebraContext ctx = f.context();
    return EndoMap(ctx, [ctx, f, g](const Word& w) {
        TensorElement out(ctx);
        const int l = w.length();
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            std::vector<int> left, right;
            for (int i = 0; i < l; ++i) {
                if (mask & (1u << i))
                    left.push_back(w.letter(i + 1));
                else
                    right.push_back(w.letter(i + 1));
            }
            out += f(Word(std::move(left))) * g(Word(std::move(right)));
        }
        return out;
    });
}

EndoMap identity_convolution_power(const AlgebraContext& ctx, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("identity_convolution_power: m must be >= 0");
    if (m == 0) return EndoMap::convolution_unit(ctx);
    return EndoMap(ctx, [ctx, m](const Word& w) {
        TensorElement out(ctx);
        const int l = w.length();
        std::vector<std::int64_t> assign(static_cast<std::size_t>(l), 0);
        while (true) {
            std::vector<int> letters;
            letters.reserve(static_cast<std::size_t>(l));
            for (std::int64_t b = 0; b < m; ++b)
                for (int i = 0; i < l; ++i)
                    if (assign[static_cast<std::size_t>(i)] == b)
                        letters.push_back(w.letter(i + 1));
            out.add_term(Word(std::move(letters)), 1);
            int i = l - 1;
            while (i >= 0 && assign[static_cast<std::size_t>(i)] == m - 1) {
                assign[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++assign[static_cast<std::size_t>(i)];
        }
        return out;
    });
}

EndoMap reduced_identity_power(const AlgebraContext& ctx, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("reduced_identity_power: k must be >= 0");
    if (k == 0) return EndoMap::convolution_unit(ctx);
    return EndoMap(ctx, [ctx, k](const Word& w) {
        TensorElement out(ctx);
        const int l = w.length();
        if (l < k) return out;
        std::vector<std::int64_t> assign(static_cast<std::size_t>(l), 0);
        while (true) {
            std::uint32_t used = 0;
            for (int i = 0; i < l; ++i) used |= 1u << assign[static_cast<std::size_t>(i)];
            if (used == (1u << k) - 1u) {
                std::vector<int> letters;
                letters.reserve(static_cast<std::size_t>(l));
                for (std::int64_t b = 0; b < k; ++b)
                    for (int i = 0; i < l; ++i)
                        if (assign[static_cast<std::size_t>(i)] == b)
                            letters.push_back(w.letter(i + 1));
                out.add_term(Word(std::move(letters)), 1);
            }
            int i = l - 1;
            while (i >= 0 && assign[static_cast<std::size_t>(i)] == k - 1) {
                assign[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++assign[static_cast<std::size_t>(i)];
        }
        return out;
    });
}

TensorElement left_normed_bracket(const AlgebraContext& ctx, const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("left_normed_bracket: needs at least one index");
    if (static_cast<int>(indices.size()) > ctx.degree_bound)
        throw std::invalid_argument("left_normed_bracket: bracket length exceeds degree bound");
    TensorElement acc = TensorElement::generator(ctx, indices[0]);
    for (std::size_t i = 1; i < indices.size(); ++i) {
        TensorElement xi = TensorElement::generator(ctx, indices[i]);
        acc = acc * xi - xi * acc;
    }
    return acc;
}

TensorElement trace_element(const AlgebraContext& ctx, int n) {
    if (n < 1 || n > ctx.generator_count)
        throw std::invalid_argument("trace_element: n out of range");
    if (n > ctx.degree_bound)
        throw std::invalid_argument("trace_element: n exceeds degree bound");
    TensorElement out(ctx);
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
    do {
        out.add_term(Word(letters), 1);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

TensorElement lie_trace_element(const AlgebraContext& ctx, int n) {
    if (n < 1 || n > ctx.generator_count)
        throw std::invalid_argument("lie_trace_element: n out of range");
    if (n > ctx.degree_bound)
        throw std::invalid_argument("lie_trace_element: n exceeds degree bound");
    if (n == 1) return TensorElement::generator(ctx, 1);
    TensorElement out(ctx);
    std::vector<int> tail(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) tail[static_cast<std::size_t>(i)] = i + 2;
    do {
        std::vector<int> indices;
        indices.reserve(static_cast<std::size_t>(n));
        indices.push_back(1);
        indices.insert(indices.end(), tail.begin(), tail.end());
        out += left_normed_bracket(ctx, indices);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("Permutation::transposition: bad points");
    Permutation s = identity(n);
    std::swap(s.images_[static_cast<std::size_t>(a - 1)], s.images_[static_cast<std::size_t>(b - 1)]);
    return s;
}

Permutation Permutation::forward_cycle(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) images[static_cast<std::size_t>(i - 1)] = i + 1;
    images[static_cast<std::size_t>(n - 1)] = 1;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int i = 1; i <= arity(); ++i)
        images[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(images));
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.arity() != t.arity())
        throw std::invalid_argument("Permutation::operator*: arity mismatch");
    std::vector<int> images(static_cast<std::size_t>(s.arity()));
    for (int i = 1; i <= s.arity(); ++i)
        images[static_cast<std::size_t>(i - 1)] = s(t(i));
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0) throw std::invalid_argument("all_permutations: negative arity");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Word permute_positions(const Permutation& s, const Word& w) {
    if (w.length() != s.arity())
        throw std::invalid_argument("permute_positions: word length must equal the arity");
    std::vector<int> letters(static_cast<std::size_t>(w.length()));
    for (int i = 1; i <= w.length(); ++i)
        letters[static_cast<std::size_t>(s(i) - 1)] = w.letter(i);
    return Word(std::move(letters));
}

TensorElement permute_positions(const Permutation& s, const TensorElement& e) {
    TensorElement out(e.context());
    for (const auto& [w, c] : e.terms()) out.add_term(permute_positions(s, w), c);
    return out;
}

SymGroupAlgebraElement SymGroupAlgebraElement::basis(const Permutation& s, std::int64_t coefficient) {
    SymGroupAlgebraElement a(s.arity());
    a.add_term(s, coefficient);
    return a;
}

SymGroupAlgebraElement SymGroupAlgebraElement::symmetrizer(int n) {
    SymGroupAlgebraElement a(n);
    for (const Permutation& s : all_permutations(n)) a.add_term(s, 1);
    return a;
}

std::int64_t SymGroupAlgebraElement::augmentation() const {
    std::int64_t total = 0;
    for (const auto& [s, c] : terms_) total = modarith::checked_add(total, c);
    return total;
}

void SymGroupAlgebraElement::add_term(const Permutation& s, std::int64_t coefficient) {
    if (s.arity() != arity_)
        throw std::invalid_argument("SymGroupAlgebraElement::add_term: arity mismatch");
    auto it = terms_.find(s);
    std::int64_t c = modarith::checked_add(it == terms_.end() ? 0 : it->second, coefficient);
    if (c == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second = c;
    }
}

SymGroupAlgebraElement& SymGroupAlgebraElement::operator+=(const SymGroupAlgebraElement& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("SymGroupAlgebraElement::operator+=: arity mismatch");
    for (const auto& [s, c] : other.terms_) add_term(s, c);
    return *this;
}

SymGroupAlgebraElement& SymGroupAlgebraElement::operator-=(const SymGroupAlgebraElement& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("SymGroupAlgebraElement::operator-=: arity mismatch");
    for (const auto& [s, c] : other.terms_) add_term(s, modarith::checked_sub(0, c));
    return *this;
}

SymGroupAlgebraElement operator*(const SymGroupAlgebraElement& a, const SymGroupAlgebraElement& b) {
    if (a.arity_ != b.arity_)
        throw std::invalid_argument("SymGroupAlgebraElement::operator*: arity mismatch");
    SymGroupAlgebraElement out(a.arity_);
    for (const auto& [s, cs] : a.terms_)
        for (const auto& [t, ct] : b.terms_)
            out.add_term(s * t, checked_mul(cs, ct));
    return out;
}

SymGroupAlgebraElement operator*(std::int64_t scalar, const SymGroupAlgebraElement& a) {
    SymGroupAlgebraElement out(a.arity_);
    for (const auto& [s, c] : a.terms_) out.add_term(s, checked_mul(scalar, c));
    return out;
}

std::string to_string(const SymGroupAlgebraElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : a.terms()) {
        const bool neg = c < 0;
        std::string body;
        if (c != 1 && c != -1) body = unsigned_magnitude(c) + "*";
        body += "[";
        for (int i = 1; i <= s.arity(); ++i) {
            if (i > 1) body += " ";
            body += std::to_string(s(i));
        }
        body += "]";
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

TensorElement apply_group_algebra(const SymGroupAlgebraElement& a, const TensorElement& e) {
    for (const auto& [w, c] : e.terms())
        if (w.length() != a.arity())
            throw std::invalid_argument(
                "apply_group_algebra: element must be concentrated in degree equal to the arity");
    TensorElement out(e.context());
    const CoefficientRing& ring = e.context().ring;
    for (const auto& [s, cs] : a.terms())
        for (const auto& [w, cw] : e.terms())
            out.add_term(permute_positions(s, w), ring.mul(ring.reduce(cs), cw));
    return out;
}

std::string to_string(const TensorElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        const bool neg = c < 0;
        const std::string mag = unsigned_magnitude(c);
        std::string body;
        if (w.empty()) {
            body = (mag == "1") ? "1" : mag + "*1";
        } else {
            if (mag != "1") body = mag + "*";
            for (int i = 1; i <= w.length(); ++i) {
                if (i > 1) body += ".";
                body += "x" + std::to_string(w.letter(i));
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

namespace {

class ElementScanner {
public:
    explicit ElementScanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void advance() { ++pos_; }

    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    std::int64_t read_int() {
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

int read_generator_index(ElementScanner& sc, const AlgebraContext& ctx) {
    if (sc.eof() || sc.peek() != 'x') sc.fail("expected a generator");
    sc.advance();
    if (!sc.at_digit()) sc.fail("expected a generator index after 'x'");
    std::int64_t idx = sc.read_int();
    if (idx < 1) sc.fail("generator indices are 1-based");
    if (idx > ctx.generator_count) sc.fail("generator index out of range");
    return static_cast<int>(idx);
}

// word := "1" | atom ("." atom)*; returns the letters.
std::vector<int> read_word(ElementScanner& sc, const AlgebraContext& ctx) {
    std::vector<int> letters;
    if (!sc.eof() && sc.peek() == '1') {
        sc.advance();
        return letters;
    }
    letters.push_back(read_generator_index(sc, ctx));
    while (true) {
        sc.skip_ws();
        if (sc.eof() || sc.peek() != '.') break;
        sc.advance();
        sc.skip_ws();
        letters.push_back(read_generator_index(sc, ctx));
    }
    return letters;
}

}  // namespace

TensorElement parse_element(std::string_view text, const AlgebraContext& ctx) {
    ElementScanner sc(text);
    TensorElement out(ctx);
    sc.skip_ws();
    if (sc.eof()) throw ParseError("empty element");
    bool first = true;
    while (true) {
        std::int64_t sign = 1;
        sc.skip_ws();
        if (!first) {
            if (sc.eof()) break;
            if (sc.peek() == '+') {
                sc.advance();
            } else if (sc.peek() == '-') {
                sign = -1;
                sc.advance();
            } else {
                sc.fail("expected '+' or '-' between terms");
            }
            sc.skip_ws();
        } else if (!sc.eof() && (sc.peek() == '+' || sc.peek() == '-')) {
            if (sc.peek() == '-') sign = -1;
            sc.advance();
            sc.skip_ws();
        }
        std::int64_t coefficient = 1;
        std::vector<int> letters;
        bool have_word = false;
        if (sc.at_digit()) {
            std::int64_t n = sc.read_int();
            sc.skip_ws();
            if (!sc.eof() && sc.peek() == '*') {
                sc.advance();
                sc.skip_ws();
                coefficient = n;
                letters = read_word(sc, ctx);
                have_word = true;
            } else if (n == 1) {
                have_word = true;  // the empty word literal
            } else if (n == 0) {
                have_word = true;  // a zero term, contributes nothing
                coefficient = 0;
            } else {
                sc.fail("expected '*' after a coefficient");
            }
        } else {
            letters = read_word(sc, ctx);
            have_word = true;
        }
        if (!have_word) sc.fail("expected a term");
        if (static_cast<int>(letters.size()) <= ctx.degree_bound && coefficient != 0)
            out.add_term(Word(std::move(letters)),
                         ctx.ring.mul(ctx.ring.reduce(sign), ctx.ring.reduce(coefficient)));
        first = false;
        sc.skip_ws();
        if (sc.eof()) break;
    }
    return out;
}

}  // namespace jhopf::freealg
