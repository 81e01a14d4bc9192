#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "schubvan/matrix.hpp"
#include "schubvan/rootsys.hpp"

namespace schubvan {

using Rng = std::mt19937_64;

/// Uniform integer in {1, ..., p}.
long draw_uniform(Rng& rng, long p);

/// A unipotent element K of the group together with its parameter matrix
/// kappa and its inverse.
template <class T>
struct Unipotent {
    DenseMatrix<T> kappa;  // strictly upper triangular
    DenseMatrix<T> K;
    DenseMatrix<T> K_inv;
};

using UnipotentSample = Unipotent<BigInt>;

/// kappa from the free parameters alpha (one per index-set position, in
/// index-set order): kappa_ij = alpha_ij on the index set; on the remaining
/// strictly upper positions off the antidiagonal kappa_ij is
/// -alpha_{(m+1-j)(m+1-i)}; zero elsewhere.
template <class T>
DenseMatrix<T> kappa_from_alpha(const RootSystemData& data, const std::vector<T>& alpha) {
    if (static_cast<int>(alpha.size()) != data.d)
        throw std::invalid_argument("kappa_from_alpha: expected one parameter per index position");
    const int m = data.m;
    DenseMatrix<T> kappa(m, m);
    for (int t = 0; t < data.d; ++t) {
        const auto [i, j] = data.index_set[t];
        kappa(i - 1, j - 1) = alpha[t];
    }
    if (data.type == LieType::A) return kappa;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            if (i + j == m + 1 || data.position_index({i, j}) >= 0) continue;
            const int src = data.position_index({m + 1 - j, m + 1 - i});
            if (src < 0) throw std::logic_error("kappa_from_alpha: mirrored position not free");
            kappa(i - 1, j - 1) = T(0) - alpha[src];
        }
    return kappa;
}

/// Type A: K = I + kappa. Types B/D: the Cayley transform
/// K = (I + kappa)^{-1} (I - kappa) and K^{-1} = (I - kappa)^{-1} (I + kappa).
template <class T>
Unipotent<T> to_group(const DenseMatrix<T>& kappa, const RootSystemData& data) {
    if (kappa.rows() != data.m || kappa.cols() != data.m)
        throw std::invalid_argument("to_group: kappa has the wrong size");
    const auto id = DenseMatrix<T>::identity(data.m);
    Unipotent<T> out;
    out.kappa = kappa;
    if (data.type == LieType::A) {
        out.K = id + kappa;
        out.K_inv = unitriangular_inverse(out.K);
    } else {
        const auto plus = id + kappa;
        const auto minus = id - kappa;
        out.K = unitriangular_solve(plus, minus);
        out.K_inv = unitriangular_solve(minus, plus);
    }
    return out;
}

std::vector<BigInt> sample_alpha(const RootSystemData& data, Rng& rng, long p);

IntMatrix sample_kappa(const RootSystemData& data, Rng& rng, long p);

}  // namespace schubvan
