#include "schubvan/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace schubvan {

Polynomial divided_difference(const Polynomial& p, int i) {
    if (i < 1) throw std::invalid_argument("divided_difference: index must be >= 1");
    const int a = i - 1, b = i;
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        const int ea = a < static_cast<int>(e.size()) ? e[a] : 0;
        const int eb = b < static_cast<int>(e.size()) ? e[b] : 0;
        if (ea == eb) continue;
        // (x^p y^q - x^q y^p) / (x - y) = (xy)^q (x^{p-q-1} + ... + y^{p-q-1}) for p > q.
        const int hi = std::max(ea, eb), lo = std::min(ea, eb);
        const BigInt sign = ea > eb ? c : BigInt(-c);
        for (int t = 0; t < hi - lo; ++t) {
            Exponent f = e;
            if (f.size() < static_cast<std::size_t>(b + 1)) f.resize(b + 1, 0);
            f[a] = lo + (hi - lo - 1 - t);
            f[b] = lo + t;
            out += Polynomial::monomial(std::move(f), sign);
        }
    }
    return out;
}

std::vector<int> lehmer_code(const WeylElement& w) {
    if (w.type() != LieType::A) throw InputError("lehmer_code: type A permutation expected");
    std::vector<int> code(w.rank(), 0);
    for (int i = 0; i < w.rank(); ++i)
        for (int j = i + 1; j < w.rank(); ++j)
            if (w[j] < w[i]) ++code[i];
    return code;
}

WeylElement permutation_from_code(const std::vector<int>& code, int min_rank) {
    int n = std::max(min_rank, static_cast<int>(code.size()));
    for (int i = 0; i < static_cast<int>(code.size()); ++i) n = std::max(n, i + 1 + code[i]);
    std::vector<int> available(n);
    std::iota(available.begin(), available.end(), 1);
    std::vector<int> word;
    for (int i = 0; i < n; ++i) {
        const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
        if (c >= static_cast<int>(available.size()))
            throw std::invalid_argument("permutation_from_code: not a Lehmer code");
        word.push_back(available[c]);
        available.erase(available.begin() + c);
    }
    return WeylElement(LieType::A, std::move(word));
}

namespace {

std::vector<int> stable_word(const std::vector<int>& word) {
    std::vector<int> w = word;
    while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
    return w;
}

}  // namespace

Polynomial schubert_poly(const WeylElement& w) {
    if (w.type() != LieType::A) throw InputError("schubert_poly: type A permutation expected");
    const int n = w.rank();
    static std::mutex mutex;
    static std::map<std::vector<int>, Polynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(w.word());
        if (it != cache.end()) return it->second;
    }
    Polynomial result;
    int ascent = -1;
    for (int i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) {
            ascent = i;
            break;
        }
    if (ascent < 0) {
        Exponent e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
        result = Polynomial::monomial(std::move(e));
    } else {
        std::vector<int> up = w.word();
        std::swap(up[ascent], up[ascent + 1]);
        result = divided_difference(schubert_poly(WeylElement(LieType::A, std::move(up))), ascent + 1);
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(w.word(), result);
    return result;
}

std::map<std::vector<int>, BigInt> schubert_expand(Polynomial p) {
    // The lex-smallest monomial of S_w is x^{code(w)}, with coefficient 1.
    std::map<std::vector<int>, BigInt> out;
    while (!p.is_zero()) {
        const auto& [e, c] = *p.terms().begin();
        const BigInt coeff = c;
        const WeylElement w = permutation_from_code(e);
        out[stable_word(w.word())] += coeff;
        Polynomial s = schubert_poly(w);
        p -= s * Polynomial(coeff);
    }
    return out;
}

BigInt schubert_coeff_A(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
    if (u.type() != LieType::A || v.type() != LieType::A || w.type() != LieType::A)
        throw InputError("schubert_coeff_A: type A permutations expected");
    if (length(u) + length(v) != length(w)) return 0;
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::map<std::vector<int>, BigInt>>
        cache;
    const auto key = std::make_pair(u.word(), v.word());
    std::map<std::vector<int>, BigInt> expansion;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) expansion = it->second;
    }
    if (expansion.empty()) {
        expansion = schubert_expand(schubert_poly(u) * schubert_poly(v));
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(key, expansion);
    }
    auto it = expansion.find(stable_word(w.word()));
    return it == expansion.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------

namespace {

// Complete homogeneous h_r and elementary e_r in N variables.
Polynomial complete_h(int r, int n) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    Polynomial out;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == n - 1) {
            e[var] = left;
            out += Polynomial::monomial(e);
            e[var] = 0;
            return;
        }
        for (int t = 0; t <= left; ++t) {
            e[var] = t;
            rec(var + 1, left - t);
        }
        e[var] = 0;
    };
    if (n > 0) rec(0, r);
    return out;
}

Polynomial elementary_e(int r, int n) {
    if (r < 0 || r > n) return 0;
    if (r == 0) return 1;
    Polynomial out;
    std::vector<int> mask(n, 0);
    std::fill(mask.end() - r, mask.end(), 1);
    do {
        out += Polynomial::monomial(mask);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

Polynomial det_by_expansion(const DenseMatrix<Polynomial>& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    std::unordered_map<unsigned, Polynomial> memo;
    // minor over the last (n - col) columns and the rows in `mask`.
    std::function<Polynomial(int, unsigned)> minor = [&](int col, unsigned mask) -> Polynomial {
        if (col == n) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial total;
        int position = 0;
        for (int r = 0; r < n; ++r) {
            if (!(mask & (1u << r))) continue;
            if (!m(r, col).is_zero()) {
                Polynomial sub = minor(col + 1, mask & ~(1u << r));
                if (!sub.is_zero()) {
                    Polynomial term = m(r, col) * sub;
                    if (position % 2) total -= term;
                    else total += term;
                }
            }
            ++position;
        }
        memo.emplace(mask, total);
        return total;
    };
    return minor(0, (n >= 32 ? 0u : (1u << n)) - 1u);
}

bool is_strict(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] >= p[i - 1]) return false;
    return true;
}

}  // namespace

Polynomial schur_poly(const Partition& lambda, int num_vars) {
    const int l = static_cast<int>(lambda.size());
    if (l > num_vars) return 0;
    DenseMatrix<Polynomial> jt(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) jt(i, j) = complete_h(lambda[i] - i + j, num_vars);
    return det_by_expansion(jt);
}

namespace {

// Expands a symmetric polynomial in a basis whose element for a partition
// has lex-largest monomial x^nu with coefficient `lead(nu)`.
std::map<Partition, BigInt> expand_lex_max(Polynomial p, const std::function<Polynomial(const Partition&)>& basis,
                                           const std::function<BigInt(const Partition&)>& lead) {
    std::map<Partition, BigInt> out;
    while (!p.is_zero()) {
        const auto& [e, c] = *p.terms().rbegin();
        Partition nu(e.begin(), e.end());
        if (!std::is_sorted(nu.rbegin(), nu.rend()))
            throw std::logic_error("expand_lex_max: leading exponent is not a partition");
        const BigInt l = lead(nu);
        if (!mpz_divisible_p(c.get_mpz_t(), l.get_mpz_t()))
            throw std::logic_error("expand_lex_max: leading coefficient not divisible");
        BigInt coeff;
        mpz_divexact(coeff.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
        out[nu] = coeff;
        p -= basis(nu) * Polynomial(coeff);
    }
    return out;
}

}  // namespace

BigInt schur_lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
    const int n = std::max<int>(1, static_cast<int>(lambda.size() + mu.size()));
    if (static_cast<int>(nu.size()) > n) return 0;
    const auto expansion =
        expand_lex_max(schur_poly(lambda, n) * schur_poly(mu, n),
                       [n](const Partition& p) { return schur_poly(p, n); },
                       [](const Partition&) { return BigInt(1); });
    auto it = expansion.find(nu);
    return it == expansion.end() ? BigInt(0) : it->second;
}

BigInt lr_tableau_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
    for (int r = 0; r < static_cast<int>(nu.size()); ++r) {
        const int start = r < static_cast<int>(lambda.size()) ? lambda[r] : 0;
        if (start > nu[r]) return 0;
        for (int c = nu[r] - 1; c >= start; --c) cells.emplace_back(r, c);
    }
    std::map<std::pair<int, int>, int> filling;
    std::vector<int> content(mu.size() + 1, 0);
    BigInt count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int upper = static_cast<int>(mu.size());
        auto right = filling.find({r, c + 1});
        if (right != filling.end()) upper = std::min(upper, right->second);
        int lower = 1;
        auto above = filling.find({r - 1, c});
        if (above != filling.end()) lower = above->second + 1;
        for (int v = lower; v <= upper; ++v) {
            if (content[v] >= mu[v - 1]) continue;
            if (v > 1 && content[v] + 1 > content[v - 1]) continue;
            ++content[v];
            filling[{r, c}] = v;
            rec(idx + 1);
            filling.erase({r, c});
            --content[v];
        }
    };
    rec(0);
    return count;
}

// ---------------------------------------------------------------------------

namespace {

// q_r: coefficient of t^r in prod (1 + x_i t) / (1 - x_i t) = sum e_a h_b.
Polynomial q_one_row(int r, int n) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    Polynomial out;
    for (int a = 0; a <= std::min(r, n); ++a) out += elementary_e(a, n) * complete_h(r - a, n);
    return out;
}

Polynomial q_two_row(int r, int s, int n) {
    Polynomial out = q_one_row(r, n) * q_one_row(s, n);
    for (int i = 1; i <= s; ++i) {
        Polynomial term = q_one_row(r + i, n) * q_one_row(s - i, n) * Polynomial(2);
        if (i % 2) out -= term;
        else out += term;
    }
    return out;
}

}  // namespace

Polynomial q_function(const Partition& lambda, int num_vars) {
    if (!is_strict(lambda)) throw InputError("q_function: strict partition expected");
    if (static_cast<int>(lambda.size()) > num_vars) return 0;
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, Polynomial> cache;
    const auto key = std::make_pair(lambda, num_vars);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Partition parts = lambda;
    if (parts.size() % 2) parts.push_back(0);
    const int l = static_cast<int>(parts.size());
    std::function<Polynomial(std::vector<int>)> pfaffian = [&](std::vector<int> idx) -> Polynomial {
        if (idx.empty()) return 1;
        Polynomial out;
        for (std::size_t j = 1; j < idx.size(); ++j) {
            const int a = parts[idx[0]], b = parts[idx[j]];
            Polynomial entry = b == 0 ? q_one_row(a, num_vars) : q_two_row(a, b, num_vars);
            std::vector<int> rest;
            for (std::size_t t = 1; t < idx.size(); ++t)
                if (t != j) rest.push_back(idx[t]);
            Polynomial term = entry * pfaffian(rest);
            if (j % 2) out += term;
            else out -= term;
        }
        return out;
    };
    std::vector<int> all(l);
    std::iota(all.begin(), all.end(), 0);
    Polynomial result = pfaffian(all);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, result);
    return result;
}

BigInt qschur_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!is_strict(lambda) || !is_strict(mu) || !is_strict(nu))
        throw InputError("qschur_coeff: strict partitions expected");
    if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
    const int n = std::max<int>(1, static_cast<int>(lambda.size() + mu.size()));
    if (static_cast<int>(nu.size()) > n) return 0;
    const auto expansion = expand_lex_max(
        q_function(lambda, n) * q_function(mu, n), [n](const Partition& p) { return q_function(p, n); },
        [](const Partition& p) {
            BigInt l = 1;
            mpz_mul_2exp(l.get_mpz_t(), l.get_mpz_t(), p.size());
            return l;
        });
    auto it = expansion.find(nu);
    return it == expansion.end() ? BigInt(0) : it->second;
}

BigInt pschur_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    // P_l P_m = 2^{-l(l)-l(m)} sum_n g 2^{l(n)} P_n.
    BigInt g = qschur_coeff(lambda, mu, nu);
    const long shift = static_cast<long>(nu.size()) - static_cast<long>(lambda.size() + mu.size());
    if (g == 0) return 0;
    if (shift >= 0) {
        mpz_mul_2exp(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(shift));
        return g;
    }
    BigInt d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-shift));
    if (!mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("pschur_coeff: non-integral P coefficient");
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    return g;
}

// ---------------------------------------------------------------------------

namespace {

Instance oracle_core(const Instance& inst) {
    return strip_identities(inst.type == LieType::C ? reduce_type_c(inst) : inst);
}

DenseMatrix<Polynomial> formal_matrix(const Instance& core, const RootSystemData& data, int fixed_block,
                                      bool unit_x) {
    std::vector<Unipotent<Polynomial>> samples;
    for (int b = 0; b < core.k(); ++b) {
        std::vector<Polynomial> alpha;
        for (int t = 0; t < data.d; ++t)
            alpha.push_back(b == fixed_block ? Polynomial(0) : Polynomial::variable(b * data.d + t));
        samples.push_back(to_group(kappa_from_alpha(data, alpha), data));
    }
    int columns = 0;
    for (const auto& w : core.words) columns += length(w);
    std::vector<Polynomial> x;
    for (int c = 0; c < columns; ++c)
        x.push_back(unit_x ? Polynomial(1) : Polynomial::variable(core.k() * data.d + c));
    return assemble_matrix_generic(data, core.words, samples, x);
}

}  // namespace

DenseMatrix<Polynomial> symbolic_matrix(const Instance& inst) {
    const Instance core = oracle_core(inst);
    const RootSystemData data = build(core.type, core.rank);
    return formal_matrix(core, data, -1, false);
}

Polynomial symbolic_determinant(const Instance& inst, bool reduced) {
    const Instance core = oracle_core(inst);
    const RootSystemData data = build(core.type, core.rank);
    if (data.d > kSymbolicMaxD)
        throw InputError("symbolic determinant is limited to |Phi+| <= " + std::to_string(kSymbolicMaxD));
    int fixed = -1;
    if (reduced) {
        // det(M) is multilinear in x, and invariant under a common
        // conjugation of all blocks, so one block may be pinned to K = I.
        int best = -1;
        for (int b = 0; b < core.k(); ++b)
            if (length(core.words[b]) > best) {
                best = length(core.words[b]);
                fixed = b;
            }
    }
    DenseMatrix<Polynomial> m = formal_matrix(core, data, fixed, reduced);
    if (m.rows() != m.cols()) return 0;
    return det_by_expansion(m);
}

bool symbolic_vanishing(const Instance& inst) {
    const Instance core = oracle_core(inst);
    if (num_positive_roots(core.type, core.rank) > kSymbolicMaxD)
        throw InputError("symbolic oracle is limited to |Phi+| <= " + std::to_string(kSymbolicMaxD));
    if (!dimension_check(core)) return true;
    if (core.k() == 0) return false;
    return symbolic_determinant(core, true).is_zero();
}

}  // namespace schubvan
