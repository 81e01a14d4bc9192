#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubvan/generic.hpp"
#include "schubvan/matrix.hpp"
#include "schubvan/rootsys.hpp"
#include "schubvan/weyl.hpp"

namespace schubvan {

/// A query c(u_1, ..., u_k): k Weyl group elements of a common type and rank.
struct Instance {
    LieType type;
    int rank;
    std::vector<WeylElement> words;

    /// Validates that all words share type and rank. An empty word list is
    /// the empty product (used after stripping identities).
    Instance(LieType type, int rank, std::vector<WeylElement> words);

    int k() const { return static_cast<int>(words.size()); }
};

/// Parses "w1;w2;...;wk" with comma-separated words; requires k >= 1.
Instance parse_instance(LieType type, int rank, std::string_view words);

enum class Verdict { Zero, Positive };
enum class Arithmetic { Exact, Modular };

std::string to_string(Verdict v);

/// Evaluation point reproducing a nonzero determinant.
struct Witness {
    /// Free parameters per non-identity word, in index-set order.
    std::vector<std::vector<BigInt>> alpha;
    /// One value per column of M (block, then root order).
    std::vector<BigInt> x;
    /// Exact determinant, or its residue modulo `modulus` in modular mode.
    BigInt det;
    std::uint64_t modulus = 0;
};

struct Decision {
    Verdict verdict = Verdict::Zero;
    bool certain = false;
    int rounds_run = 0;
    long p = 0;
    /// Which rule produced the verdict: "dimension", "duality", "sampling".
    std::string rule;
    std::optional<Witness> witness;
};

struct DecideOptions {
    Arithmetic arithmetic = Arithmetic::Exact;
    /// When positive, overrides the number of rounds derived from epsilon.
    int rounds = 0;
};

/// Relabels a type C instance as type B. Vanishing is unchanged.
Instance reduce_type_c(const Instance& inst);

/// Exponent a with c_B = 2^a c_C, for k >= 2:
/// zeta(w0 u_k) - zeta(u_1) - ... - zeta(u_{k-1}).
int type_c_exponent(const Instance& inst);

/// Drops identity words; they are the unit of the cohomology ring.
Instance strip_identities(const Instance& inst);

/// sum of lengths == |Phi+|.
bool dimension_check(const Instance& inst);

/// Sampling range p: (3/2) n (n^2 - 1) + 1 for SL_n and
/// 3 floor(m/2)^2 (2m + 1) + 1 for SO_m. Type C uses the type B value.
long threshold_p(LieType type, int rank);

/// Smallest s >= 1 with 3^{-s} <= epsilon.
int rounds_for_epsilon(double epsilon);

/// Column c_{gamma,i} of M is tau(K_i (x E_gamma) K_i^{-1}). Columns are
/// ordered by word, then by the positive-root order inside the inversion set.
/// Rows follow the lexicographic index set.
template <class T>
DenseMatrix<T> assemble_matrix_generic(const RootSystemData& data,
                                       const std::vector<WeylElement>& words,
                                       const std::vector<Unipotent<T>>& samples,
                                       const std::vector<T>& x) {
    if (samples.size() != words.size())
        throw std::invalid_argument("assemble_matrix: need one unipotent sample per word");
    std::vector<std::vector<Root>> blocks;
    std::size_t columns = 0;
    for (const auto& w : words) {
        blocks.push_back(inversion_set(w, data));
        columns += blocks.back().size();
    }
    if (x.size() != columns)
        throw std::invalid_argument("assemble_matrix: need exactly one x value per column");
    const int m = data.m;
    const bool mirrored = data.type != LieType::A;
    DenseMatrix<T> out(data.d, static_cast<int>(columns));
    int col = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& K = samples[b].K;
        const auto& Kinv = samples[b].K_inv;
        for (const auto& gamma : blocks[b]) {
            const auto [i, j] = data.position_of(gamma);
            const int mi = m + 1 - j, mj = m + 1 - i;
            for (int t = 0; t < data.d; ++t) {
                const auto [r, c] = data.index_set[t];
                T value = K(r - 1, i - 1) * Kinv(j - 1, c - 1);
                if (mirrored) value -= T(K(r - 1, mi - 1) * Kinv(mj - 1, c - 1));
                if (!(value == T(0))) out(t, col) = T(value * x[col]);
            }
            ++col;
        }
    }
    return out;
}

/// Numeric assembly; rows/columns as in assemble_matrix_generic.
IntMatrix assemble_matrix(const Instance& inst, const std::vector<UnipotentSample>& samples,
                          const std::vector<BigInt>& x);

struct RoundResult {
    bool nonzero = false;
    Witness witness;
};

/// One randomized evaluation of det(M) with all parameters uniform in [p].
/// Precondition: type A, B or D (C already reduced), dimension check holds.
RoundResult single_round(const Instance& inst, Rng& rng, Arithmetic arithmetic = Arithmetic::Exact);

/// Rebuilds M from a witness and returns its exact determinant.
BigInt replay_witness(const Instance& inst, const Witness& witness);

/// True iff the replayed determinant is nonzero and matches the recorded
/// value (exactly, or modulo the recorded prime).
bool verify_witness(const Instance& inst, const Witness& witness);

/// Decides c(u_1..u_k) =? 0. A positive verdict is always certain; a zero
/// verdict from sampling is wrong with probability at most epsilon.
/// Each round draws its own seed from `rng`.
Decision vanishing(const Instance& inst, double epsilon, Rng& rng, const DecideOptions& options = {});

// ---------------------------------------------------------------------------
// Grassmannian / Littlewood-Richardson front end

using Partition = std::vector<int>;

struct PartitionTriple {
    Partition lambda, mu, nu;
};

/// Shape parameters: the k x (n-k) box in type A (uses k and n), rank n
/// otherwise (k ignored).
struct GrassmannianShape {
    int k = 0;
    int n = 0;
};

/// Parses "3,2,1" (empty string -> empty partition).
Partition parse_partition(std::string_view text);
int partition_size(const Partition& p);

/// The Grassmannian element w_lambda with length |lambda|.
WeylElement grassmannian_element(const Partition& lambda, LieType type, GrassmannianShape shape);

/// Smallest shape that fits all three partitions.
GrassmannianShape minimal_shape(const PartitionTriple& triple, LieType type);

/// Decides c_{lambda mu}^nu =? 0 in the Grassmannian of the given type,
/// via c(w_lambda, w_mu, w0 w_nu).
Decision lr_vanishing(const PartitionTriple& triple, LieType type, double epsilon, Rng& rng,
                      const DecideOptions& options = {});

/// Instance c(w_lambda, w_mu, w0 w_nu) for the minimal shape.
Instance lr_instance(const PartitionTriple& triple, LieType type);

}  // namespace schubvan
