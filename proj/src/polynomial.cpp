#include "schubvan/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubvan {

Exponent trim(Exponent e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

Polynomial::Polynomial(int constant) {
    if (constant != 0) terms_.emplace(Exponent{}, BigInt(constant));
}

Polynomial::Polynomial(const BigInt& constant) {
    if (constant != 0) terms_.emplace(Exponent{}, constant);
}

Polynomial Polynomial::variable(int index) {
    Exponent e(index + 1, 0);
    e[index] = 1;
    return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponent e, const BigInt& coeff) {
    Polynomial p;
    p.add_term(trim(std::move(e)), coeff);
    return p;
}

BigInt Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(trim(e));
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

int Polynomial::degree() const {
    int best = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int v : e) total += v;
        best = std::max(best, total);
    }
    return best;
}

void Polynomial::add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

Polynomial Polynomial::swap_vars(int i) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        if (f.size() < static_cast<std::size_t>(i + 2)) f.resize(i + 2, 0);
        std::swap(f[i], f[i + 1]);
        out.add_term(trim(std::move(f)), c);
    }
    return out;
}

Polynomial Polynomial::divexact(const BigInt& d) const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::invalid_argument("Polynomial::divexact: coefficient not divisible");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool neg = c < 0;
        const BigInt mag = abs(c);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (mono.empty()) out += mag.get_str();
        else if (mag == 1) out += mono;
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace schubvan
