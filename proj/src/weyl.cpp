#include "schubvan/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "schubvan/rootsys.hpp"

namespace schubvan {

char to_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    return '?';
}

LieType parse_lie_type(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'A': case 'a': return LieType::A;
            case 'B': case 'b': return LieType::B;
            case 'C': case 'c': return LieType::C;
            case 'D': case 'd': return LieType::D;
            default: break;
        }
    }
    throw InputError("unknown Lie type '" + std::string(text) + "' (expected A, B, C or D)");
}

WeylElement::WeylElement(LieType type, std::vector<int> word) : type_(type), word_(std::move(word)) {
    const int n = rank();
    if (n < 1) throw InputError("Weyl group element must have rank >= 1");
    std::vector<bool> seen(n + 1, false);
    int negatives = 0;
    for (int v : word_) {
        const int a = std::abs(v);
        if (v == 0 || a > n || seen[a])
            throw InputError("word " + to_string() + " is not a signed permutation of 1.." +
                             std::to_string(n));
        seen[a] = true;
        if (v < 0) ++negatives;
    }
    if (type_ == LieType::A && negatives > 0)
        throw InputError("type A word " + to_string() + " has negative entries");
    if (type_ == LieType::D && negatives % 2 != 0)
        throw InputError("type D word " + to_string() + " has an odd number of sign changes");
}

int WeylElement::apply(int i) const {
    const int v = word_.at(static_cast<std::size_t>(std::abs(i) - 1));
    return i > 0 ? v : -v;
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (word_[i] != i + 1) return false;
    return true;
}

std::string WeylElement::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

WeylElement WeylElement::relabel(LieType type) const { return WeylElement(type, word_); }

WeylElement parse_word(std::string_view text, LieType type, int rank) {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (!token.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last)
            throw InputError("cannot parse word entry '" + std::string(token) + "' in '" +
                             std::string(text) + "'");
        word.push_back(value);
        pos = end + 1;
    }
    if (static_cast<int>(word.size()) != rank)
        throw InputError("word '" + std::string(text) + "' has length " +
                         std::to_string(word.size()) + ", expected rank " + std::to_string(rank));
    return WeylElement(type, std::move(word));
}

WeylElement identity(LieType type, int rank) {
    std::vector<int> word(rank);
    std::iota(word.begin(), word.end(), 1);
    return WeylElement(type, std::move(word));
}

int num_positive_roots(LieType type, int rank) {
    switch (type) {
        case LieType::A: return rank * (rank - 1) / 2;
        case LieType::B:
        case LieType::C: return rank * rank;
        case LieType::D: return rank * (rank - 1);
    }
    return 0;
}

WeylElement long_word(LieType type, int rank) {
    if (rank < 1) throw InputError("rank must be >= 1");
    std::vector<int> word(rank);
    if (type == LieType::A) {
        for (int i = 0; i < rank; ++i) word[i] = rank - i;
        return WeylElement(type, std::move(word));
    }
    if (type == LieType::D && rank <= 4) {
        const int d = num_positive_roots(type, rank);
        for (const auto& w : enumerate_group(type, rank))
            if (length(w) == d) return w;
        throw std::logic_error("no longest element found");
    }
    for (int i = 0; i < rank; ++i) word[i] = -(i + 1);
    // Odd rank D: -id is not in the group, the longest element fixes 1.
    if (type == LieType::D && rank % 2 == 1) word[0] = 1;
    WeylElement w0(type, std::move(word));
    if (length(w0) != num_positive_roots(type, rank))
        throw std::logic_error("closed-form longest element has the wrong length");
    return w0;
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
    if (w1.rank() != w2.rank())
        throw InputError("compose: rank mismatch (" + std::to_string(w1.rank()) + " vs " +
                         std::to_string(w2.rank()) + ")");
    const bool compatible = w1.type() == w2.type() ||
                            ((w1.type() == LieType::B || w1.type() == LieType::C) &&
                             (w2.type() == LieType::B || w2.type() == LieType::C));
    if (!compatible) throw InputError("compose: Lie type mismatch");
    std::vector<int> word(w1.rank());
    for (int i = 0; i < w1.rank(); ++i) word[i] = w1.apply(w2[i]);
    return WeylElement(w1.type(), std::move(word));
}

WeylElement invert(const WeylElement& w) {
    std::vector<int> word(w.rank());
    for (int i = 0; i < w.rank(); ++i) {
        const int v = w[i];
        word[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
    }
    return WeylElement(w.type(), std::move(word));
}

int zeta(const WeylElement& w) {
    if (w.type() == LieType::A) throw InputError("zeta is defined for types B, C, D only");
    return static_cast<int>(std::count_if(w.word().begin(), w.word().end(), [](int v) { return v < 0; }));
}

int length(const WeylElement& w) { return static_cast<int>(inversion_set(w).size()); }

std::vector<WeylElement> enumerate_group(LieType type, int rank) {
    std::vector<int> perm(rank);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    const bool signed_group = type != LieType::A;
    do {
        const unsigned masks = signed_group ? (1u << rank) : 1u;
        for (unsigned mask = 0; mask < masks; ++mask) {
            if (type == LieType::D && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> word = perm;
            for (int i = 0; i < rank; ++i)
                if (mask & (1u << i)) word[i] = -word[i];
            out.emplace_back(type, std::move(word));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace schubvan
