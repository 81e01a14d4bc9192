#include "schubvan/matrix.hpp"

#include <utility>

namespace schubvan {

std::string to_string(const IntMatrix& a) {
    std::string out;
    for (int r = 0; r < a.rows(); ++r) {
        out += '[';
        for (int c = 0; c < a.cols(); ++c) {
            if (c) out += ", ";
            out += a(r, c).get_str();
        }
        out += "]\n";
    }
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) { return a * b; }

BigInt max_abs(const IntMatrix& a) {
    BigInt best = 0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (abs(a(r, c)) > best) best = abs(a(r, c));
    return best;
}

BigInt det_exact(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("det_exact: matrix is not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            sign = -sign;
        }
        const BigInt& pivot = m(k, k);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                // m(r,c) = (pivot * m(r,c) - m(r,k) * m(k,c)) / prev, exact.
                m(r, c) *= pivot;
                m(r, c) -= m(r, k) * m(k, c);
                mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), prev.get_mpz_t());
            }
            m(r, k) = 0;
        }
        prev = pivot;
    }
    BigInt det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 pow_mod(u64 base, u64 exp, u64 q) {
    u64 result = 1 % q;
    base %= q;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return result;
}

u64 reduce(const BigInt& v, u64 q) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), BigInt(std::to_string(q)).get_mpz_t());
    return std::stoull(r.get_str());
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime_62(std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(1ull << 61, (1ull << 62) - 1);
    for (;;) {
        const u64 candidate = dist(rng) | 1ull;
        if (is_prime_u64(candidate)) return candidate;
    }
}

u64 det_mod(const IntMatrix& a, u64 q) {
    if (!a.square()) throw std::invalid_argument("det_mod: matrix is not square");
    if (q >= (1ull << 63) || !is_prime_u64(q))
        throw std::invalid_argument("det_mod: modulus must be a prime below 2^63");
    const int n = a.rows();
    std::vector<u64> m(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r) * n + c] = reduce(a(r, c), q);
    auto at = [&](int r, int c) -> u64& { return m[static_cast<std::size_t>(r) * n + c]; };
    u64 det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            det = det == 0 ? 0 : q - det;
        }
        det = mul_mod(det, at(k, k), q);
        const u64 inv = pow_mod(at(k, k), q - 2, q);
        for (int r = k + 1; r < n; ++r) {
            if (at(r, k) == 0) continue;
            const u64 factor = mul_mod(at(r, k), inv, q);
            for (int c = k; c < n; ++c) {
                const u64 sub = mul_mod(factor, at(k, c), q);
                at(r, c) = at(r, c) >= sub ? at(r, c) - sub : at(r, c) + q - sub;
            }
        }
    }
    return det;
}

BigInt hadamard_bound(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("hadamard_bound: matrix is not square");
    const unsigned long s = static_cast<unsigned long>(a.rows());
    // (sqrt(s) * M)^s = s^(s/2) * M^s; round s^(s/2) up via sqrt of s^s.
    BigInt s_pow, root, mx_pow;
    mpz_ui_pow_ui(s_pow.get_mpz_t(), s, s);
    mpz_sqrt(root.get_mpz_t(), s_pow.get_mpz_t());
    if (root * root < s_pow) root += 1;
    const BigInt mx = max_abs(a);
    mpz_pow_ui(mx_pow.get_mpz_t(), mx.get_mpz_t(), s);
    return root * mx_pow;
}

}  // namespace schubvan
