#include "schubvan/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace schubvan {

Root Root::operator-() const {
    Root out = *this;
    for (int& c : out.coeffs) c = -c;
    return out;
}

std::string Root::to_string() const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
        const int c = coeffs[i];
        if (c == 0) continue;
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Root unit_root(int rank, int i, int sign) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs.at(i - 1) = sign;
    return r;
}

Root pair_root(int rank, int i, int s1, int j, int s2) {
    if (i == j) throw std::invalid_argument("pair_root: indices must differ");
    Root r{std::vector<int>(rank, 0)};
    r.coeffs.at(i - 1) = s1;
    r.coeffs.at(j - 1) = s2;
    return r;
}

bool is_root(LieType type, const Root& r) {
    int nonzero = 0, sum = 0;
    for (int c : r.coeffs) {
        if (c < -1 || c > 1) return false;
        if (c != 0) ++nonzero;
        sum += c;
    }
    switch (type) {
        case LieType::A: return nonzero == 2 && sum == 0;
        case LieType::B:
        case LieType::C: return nonzero == 1 || nonzero == 2;
        case LieType::D: return nonzero == 2;
    }
    return false;
}

bool is_positive(LieType type, const Root& r) {
    if (type == LieType::A) {
        for (int c : r.coeffs)
            if (c != 0) return c > 0;
        return false;
    }
    for (auto it = r.coeffs.rbegin(); it != r.coeffs.rend(); ++it)
        if (*it != 0) return *it > 0;
    return false;
}

std::vector<Root> positive_roots(LieType type, int rank) {
    std::vector<Root> out;
    if (type == LieType::A) {
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) out.push_back(pair_root(rank, i, 1, j, -1));
        return out;
    }
    for (int j = 1; j <= rank; ++j) {
        if (type != LieType::D) out.push_back(unit_root(rank, j));
        for (int i = 1; i < j; ++i) {
            out.push_back(pair_root(rank, i, -1, j, 1));
            out.push_back(pair_root(rank, i, 1, j, 1));
        }
    }
    return out;
}

Root act(const WeylElement& w, const Root& beta) {
    if (beta.rank() != w.rank()) throw std::invalid_argument("act: rank mismatch");
    Root out{std::vector<int>(w.rank(), 0)};
    for (int i = 0; i < w.rank(); ++i) {
        if (beta.coeffs[i] == 0) continue;
        const int image = w[i];
        out.coeffs[std::abs(image) - 1] += image > 0 ? beta.coeffs[i] : -beta.coeffs[i];
    }
    return out;
}

namespace {

// Weight of the i-th diagonal entry (1-based) of the maximal torus, in the
// coordinates used for roots. Types B/D index the torus in reverse, so that
// the simple roots (i, i+1) of the upper-triangular Borel match the positive
// system of is_positive().
Root diagonal_weight(LieType type, int n, int i) {
    Root w{std::vector<int>(n, 0)};
    switch (type) {
        case LieType::A:
            w.coeffs[i - 1] = 1;
            break;
        case LieType::B:
            if (i <= n) w.coeffs[n - i] = 1;
            else if (i > n + 1) w.coeffs[i - n - 2] = -1;
            break;
        case LieType::D:
            if (i <= n) w.coeffs[n - i] = 1;
            else w.coeffs[i - n - 1] = -1;
            break;
        case LieType::C:
            throw std::invalid_argument("type C has no matrix model here; relabel as B");
    }
    return w;
}

}  // namespace

RootSystemData build(LieType type, int rank) {
    if (type == LieType::C)
        throw std::invalid_argument("build: type C must be reduced to type B first");
    if (rank < 2) throw std::invalid_argument("build: rank must be >= 2");
    RootSystemData data;
    data.type = type;
    data.rank = rank;
    data.m = type == LieType::A ? rank : type == LieType::B ? 2 * rank + 1 : 2 * rank;
    data.d = num_positive_roots(type, rank);
    const int m = data.m;
    data.pos_lookup_.assign(static_cast<std::size_t>(m) * m, -1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const bool in_set = type == LieType::A || j <= m - i;
            if (!in_set) continue;
            Root r = diagonal_weight(type, rank, i);
            const Root wj = diagonal_weight(type, rank, j);
            for (int t = 0; t < rank; ++t) r.coeffs[t] -= wj.coeffs[t];
            data.pos_lookup_[static_cast<std::size_t>(i - 1) * m + (j - 1)] =
                static_cast<int>(data.index_set.size());
            data.index_set.emplace_back(i, j);
            data.positive_roots.push_back(std::move(r));
        }
    if (static_cast<int>(data.index_set.size()) != data.d)
        throw std::logic_error("build: index set size differs from |Phi+|");
    for (const auto& r : data.positive_roots)
        if (!is_root(type, r) || !is_positive(type, r))
            throw std::logic_error("build: phi produced a non-positive root " + r.to_string());
    return data;
}

int RootSystemData::root_index(const Root& root) const {
    auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
    if (it == positive_roots.end())
        throw std::invalid_argument("root " + root.to_string() + " is not a positive root");
    return static_cast<int>(it - positive_roots.begin());
}

int RootSystemData::position_index(Position pos) const {
    const auto [i, j] = pos;
    if (i < 1 || j < 1 || i > m || j > m) return -1;
    return pos_lookup_[static_cast<std::size_t>(i - 1) * m + (j - 1)];
}

const Position& RootSystemData::position_of(const Root& root) const {
    return index_set[root_index(root)];
}

const Root& RootSystemData::phi(Position pos) const {
    const int t = position_index(pos);
    if (t < 0) throw std::invalid_argument("position outside the index set");
    return positive_roots[t];
}

IntMatrix antidiagonal(int m) {
    IntMatrix out(m, m);
    for (int i = 0; i < m; ++i) out(i, m - 1 - i) = 1;
    return out;
}

IntMatrix basis_matrix(const Root& gamma, const RootSystemData& data) {
    const auto [i, j] = data.position_of(gamma);
    IntMatrix out(data.m, data.m);
    out(i - 1, j - 1) = 1;
    if (data.type != LieType::A) out(data.m - j, data.m - i) -= 1;
    return out;
}

std::vector<Root> inversion_set(const WeylElement& w, const RootSystemData& data) {
    if (w.rank() != data.rank) throw std::invalid_argument("inversion_set: rank mismatch");
    const LieType t = w.type() == LieType::C ? LieType::B : w.type();
    if (t != data.type) throw std::invalid_argument("inversion_set: Lie type mismatch");
    std::vector<Root> out;
    for (const auto& beta : data.positive_roots)
        if (!is_positive(t, act(w, beta))) out.push_back(beta);
    return out;
}

std::vector<Root> inversion_set(const WeylElement& w) {
    std::vector<Root> out;
    for (auto& beta : positive_roots(w.type(), w.rank()))
        if (!is_positive(w.type(), act(w, beta))) out.push_back(std::move(beta));
    return out;
}

std::vector<BigInt> tau(const IntMatrix& mat, const RootSystemData& data) {
    if (mat.rows() != data.m || mat.cols() != data.m)
        throw std::invalid_argument("tau: matrix must be m x m");
    std::vector<BigInt> out;
    out.reserve(data.index_set.size());
    for (const auto& [i, j] : data.index_set) out.push_back(mat(i - 1, j - 1));
    return out;
}

}  // namespace schubvan
