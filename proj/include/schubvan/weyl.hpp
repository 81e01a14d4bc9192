#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubvan {

/// Thrown for malformed user input (bad words, partitions, flags).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class LieType { A, B, C, D };

char to_char(LieType t);
LieType parse_lie_type(std::string_view text);

/// Element of a classical Weyl group in one-line notation.
///
/// Type A words are permutations of 1..n. Types B, C and D are signed
/// permutations, a negative entry standing for a barred value; type D
/// additionally requires an even number of negative entries. B and C share
/// the same representation.
class WeylElement {
public:
    /// Validates the word; throws InputError on violation.
    WeylElement(LieType type, std::vector<int> word);

    LieType type() const { return type_; }
    int rank() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator[](std::size_t i) const { return word_[i]; }

    /// Image of a signed index, w(-i) = -w(i). `i` is 1-based and nonzero.
    int apply(int i) const;

    bool is_identity() const;
    std::string to_string() const;

    /// Same element relabelled under another type sharing its group (B <-> C).
    WeylElement relabel(LieType type) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.type_ == b.type_ && a.word_ == b.word_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

private:
    LieType type_;
    std::vector<int> word_;
};

/// Parses a comma-separated word such as "3,2,1,4" or "-2,1,3".
WeylElement parse_word(std::string_view text, LieType type, int rank);

WeylElement identity(LieType type, int rank);

/// The longest element. Ranks up to 4 are found by exhaustive search in type
/// D; otherwise closed forms are used. Always satisfies length == |Phi+|.
WeylElement long_word(LieType type, int rank);

/// (w1 * w2)(i) = w1(w2(i)).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);
WeylElement invert(const WeylElement& w);

/// Number of negative entries. Types B, C, D only.
int zeta(const WeylElement& w);

/// Coxeter length, computed as the size of the inversion-root set.
int length(const WeylElement& w);

/// Number of positive roots of the given type and rank.
int num_positive_roots(LieType type, int rank);

/// Every element of the group, in a fixed order. Intended for small ranks.
std::vector<WeylElement> enumerate_group(LieType type, int rank);

}  // namespace schubvan
