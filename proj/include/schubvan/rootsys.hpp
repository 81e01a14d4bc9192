#pragma once

#include <utility>
#include <vector>

#include "schubvan/matrix.hpp"
#include "schubvan/weyl.hpp"

namespace schubvan {

/// A root as an integer coefficient vector over e_1..e_n.
///
/// Sign convention: in type A a root is positive when its first nonzero
/// coefficient is +1 (so e_i - e_j, i < j). In types B, C and D the positive
/// system is the one in which e_1 (type B) or e_1 + e_2 (type D) is simple,
/// i.e. a root is positive when its last nonzero coefficient is +1. This is
/// the system under which the usual one-line length formulas hold.
struct Root {
    std::vector<int> coeffs;

    int rank() const { return static_cast<int>(coeffs.size()); }
    Root operator-() const;
    std::string to_string() const;

    friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }
};

/// e_i (1-based) with the given coefficient.
Root unit_root(int rank, int i, int sign = 1);
/// s1 * e_i + s2 * e_j (1-based, i != j).
Root pair_root(int rank, int i, int s1, int j, int s2);

bool is_root(LieType type, const Root& r);
bool is_positive(LieType type, const Root& r);

/// Phi+ for a Weyl type, in a fixed canonical order. Works for any rank >= 1
/// and for type C (same roots as B up to lengths, which do not matter here).
std::vector<Root> positive_roots(LieType type, int rank);

/// Signed-permutation action e_i -> sgn(w(i)) e_{|w(i)|}, extended linearly.
Root act(const WeylElement& w, const Root& beta);

/// Matrix position (1-based row, column).
using Position = std::pair<int, int>;

/// Per (type, rank) data: Phi+, the index set in lexicographic order and the
/// bijection between them. Immutable after build().
struct RootSystemData {
    LieType type;
    int rank;
    int m;  // matrix size: n, 2n+1, 2n
    int d;  // |Phi+|
    /// positive_roots[t] = phi(index_set[t]).
    std::vector<Root> positive_roots;
    std::vector<Position> index_set;

    /// Row-major index of `root` in positive_roots; throws if not positive.
    int root_index(const Root& root) const;
    /// Index of a position in index_set, or -1.
    int position_index(Position pos) const;
    const Position& position_of(const Root& root) const;
    const Root& phi(Position pos) const;

private:
    friend RootSystemData build(LieType, int);
    std::vector<int> pos_lookup_;  // m*m -> index or -1
};

/// Types A, B, D with rank >= 2. Type C must be relabelled to B first.
RootSystemData build(LieType type, int rank);

/// E_gamma: a single 1 at phi^{-1}(gamma) in type A; in types B/D also a -1
/// at the mirrored position (m+1-j, m+1-i).
IntMatrix basis_matrix(const Root& gamma, const RootSystemData& data);

/// Phi+(w) = { beta in Phi+ : w.beta not in Phi+ }, in positive_roots order.
std::vector<Root> inversion_set(const WeylElement& w, const RootSystemData& data);
/// Same, for any type/rank (no RootSystemData needed), canonical root order.
std::vector<Root> inversion_set(const WeylElement& w);

/// Entries of an m x m matrix at the index-set positions, in order.
std::vector<BigInt> tau(const IntMatrix& mat, const RootSystemData& data);

/// D_m, the antidiagonal permutation matrix.
IntMatrix antidiagonal(int m);

}  // namespace schubvan
