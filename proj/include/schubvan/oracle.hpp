#pragma once

#include <map>
#include <vector>

#include "schubvan/decide.hpp"
#include "schubvan/polynomial.hpp"

namespace schubvan {

/// Divided difference d_i = (P - s_i P) / (x_i - x_{i+1}), 1-based i.
Polynomial divided_difference(const Polynomial& p, int i);

/// Lehmer code: c_i = #{j > i : w(j) < w(i)}.
std::vector<int> lehmer_code(const WeylElement& w);
/// The permutation with the given code, in the smallest S_N containing it
/// (at least `min_rank`).
WeylElement permutation_from_code(const std::vector<int>& code, int min_rank = 1);

/// Schubert polynomial of a permutation, from the top class
/// x1^{n-1} x2^{n-2} ... by divided differences.
Polynomial schubert_poly(const WeylElement& w);

/// Coefficients of a polynomial in the Schubert basis, keyed by the
/// one-line word of the permutation (stable: trailing fixed points dropped).
std::map<std::vector<int>, BigInt> schubert_expand(Polynomial p);

/// c_{u,v}^w for permutations of equal rank.
BigInt schubert_coeff_A(const WeylElement& u, const WeylElement& v, const WeylElement& w);

/// Schur polynomial s_lambda(x_1..x_N) by the Jacobi-Trudi determinant.
Polynomial schur_poly(const Partition& lambda, int num_vars);
/// Coefficient of s_nu in s_lambda s_mu.
BigInt schur_lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);
/// Same coefficient by counting Littlewood-Richardson skew tableaux of
/// shape nu/lambda and content mu.
BigInt lr_tableau_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Schur Q-function Q_lambda(x_1..x_N) for a strict partition (Pfaffian of
/// two-row functions).
Polynomial q_function(const Partition& lambda, int num_vars);
/// Coefficient of Q_nu in Q_lambda Q_mu.
BigInt qschur_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);
/// Coefficient of P_nu in P_lambda P_mu, P = 2^{-l} Q.
BigInt pschur_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Largest |Phi+| accepted by symbolic_vanishing.
inline constexpr int kSymbolicMaxD = 9;

/// Decides c(u_1..u_k) = 0 exactly by expanding det(M) with formal
/// parameters. Throws InputError above kSymbolicMaxD.
bool symbolic_vanishing(const Instance& inst);

/// M with formal entries; parameters of block b (after dropping identity
/// words) are variables b*d .. b*d+d-1, the x values follow after all blocks.
DenseMatrix<Polynomial> symbolic_matrix(const Instance& inst);

/// det(M) as a polynomial, variables as in symbolic_matrix.
/// With `reduced`, x is set to 1 and the largest block's parameters to 0.
Polynomial symbolic_determinant(const Instance& inst, bool reduced = true);

}  // namespace schubvan
