#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubvan/matrix.hpp"

namespace schubvan {

/// Exponent vector with trailing zeros trimmed, so that std::vector's
/// lexicographic order is the lexicographic order on monomials.
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over the integers. No zero coefficients
/// are stored, so the zero test is an emptiness check.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int constant);  // NOLINT: implicit, needed by DenseMatrix<Polynomial>
    Polynomial(const BigInt& constant);  // NOLINT

    static Polynomial variable(int index);
    static Polynomial monomial(Exponent e, const BigInt& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Exponent& e) const;
    int num_vars() const;
    int degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Swaps variables i and i+1 (0-based).
    Polynomial swap_vars(int i) const;
    /// Exact division of every coefficient; throws if not divisible.
    Polynomial divexact(const BigInt& d) const;

    std::string to_string() const;

private:
    void add_term(Exponent e, const BigInt& c);
    std::map<Exponent, BigInt> terms_;
};

Exponent trim(Exponent e);

}  // namespace schubvan
