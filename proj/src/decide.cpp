#include "schubvan/decide.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>

namespace schubvan {

Instance::Instance(LieType type_, int rank_, std::vector<WeylElement> words_)
    : type(type_), rank(rank_), words(std::move(words_)) {
    if (rank < 1) throw InputError("rank must be >= 1");
    for (const auto& w : words) {
        if (w.rank() != rank)
            throw InputError("word " + w.to_string() + " has rank " + std::to_string(w.rank()) +
                             ", instance rank is " + std::to_string(rank));
        if (w.type() != type)
            throw InputError("word " + w.to_string() + " has type " + to_char(w.type()) +
                             ", instance type is " + to_char(type));
    }
}

Instance parse_instance(LieType type, int rank, std::string_view text) {
    std::vector<WeylElement> words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        if (token.empty()) throw InputError("empty word in '" + std::string(text) + "'");
        words.push_back(parse_word(token, type, rank));
        pos = end + 1;
    }
    return Instance(type, rank, std::move(words));
}

std::string to_string(Verdict v) { return v == Verdict::Zero ? "zero" : "positive"; }

Instance reduce_type_c(const Instance& inst) {
    if (inst.type != LieType::C) throw std::invalid_argument("reduce_type_c: instance is not type C");
    std::vector<WeylElement> words;
    for (const auto& w : inst.words) words.push_back(w.relabel(LieType::B));
    return Instance(LieType::B, inst.rank, std::move(words));
}

int type_c_exponent(const Instance& inst) {
    if (inst.type != LieType::B && inst.type != LieType::C)
        throw std::invalid_argument("type_c_exponent: instance is not type B or C");
    if (inst.k() < 2) throw std::invalid_argument("type_c_exponent: needs k >= 2");
    const auto w0 = long_word(inst.type, inst.rank);
    int a = zeta(compose(w0, inst.words.back()));
    for (int i = 0; i + 1 < inst.k(); ++i) a -= zeta(inst.words[i]);
    return a;
}

Instance strip_identities(const Instance& inst) {
    std::vector<WeylElement> words;
    for (const auto& w : inst.words)
        if (!w.is_identity()) words.push_back(w);
    return Instance(inst.type, inst.rank, std::move(words));
}

bool dimension_check(const Instance& inst) {
    int total = 0;
    for (const auto& w : inst.words) total += length(w);
    return total == num_positive_roots(inst.type, inst.rank);
}

long threshold_p(LieType type, int rank) {
    const long n = rank;
    switch (type) {
        case LieType::A: return 3 * n * (n * n - 1) / 2 + 1;
        case LieType::B:
        case LieType::C: {
            const long m = 2 * n + 1;
            return 3 * n * n * (2 * m + 1) + 1;
        }
        case LieType::D: {
            const long m = 2 * n;
            return 3 * n * n * (2 * m + 1) + 1;
        }
    }
    return 0;
}

int rounds_for_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
    int s = 1;
    double bound = 1.0 / 3.0;
    while (bound > epsilon) {
        bound /= 3.0;
        ++s;
    }
    return s;
}

namespace {

// Type C shares the matrix model of type B.
Instance core_instance(const Instance& inst) {
    return strip_identities(inst.type == LieType::C ? reduce_type_c(inst) : inst);
}

int column_count(const Instance& inst) {
    int total = 0;
    for (const auto& w : inst.words) total += length(w);
    return total;
}

RoundResult round_with(const Instance& inst, const RootSystemData& data, long p, Rng& rng,
                       Arithmetic arithmetic) {
    RoundResult out;
    std::vector<UnipotentSample> samples;
    for (std::size_t b = 0; b < inst.words.size(); ++b) {
        out.witness.alpha.push_back(sample_alpha(data, rng, p));
        samples.push_back(to_group(kappa_from_alpha(data, out.witness.alpha.back()), data));
    }
    const int cols = column_count(inst);
    for (int c = 0; c < cols; ++c) out.witness.x.emplace_back(draw_uniform(rng, p));
    const IntMatrix M = assemble_matrix_generic(data, inst.words, samples, out.witness.x);
    if (arithmetic == Arithmetic::Modular) {
        const std::uint64_t q = random_prime_62(rng);
        const std::uint64_t r = det_mod(M, q);
        out.witness.modulus = q;
        out.witness.det = BigInt(std::to_string(r));
        out.nonzero = r != 0;
    } else {
        out.witness.det = det_exact(M);
        out.nonzero = out.witness.det != 0;
    }
    return out;
}

}  // namespace

IntMatrix assemble_matrix(const Instance& inst, const std::vector<UnipotentSample>& samples,
                          const std::vector<BigInt>& x) {
    const Instance core = inst.type == LieType::C ? reduce_type_c(inst) : inst;
    const RootSystemData data = build(core.type, core.rank);
    return assemble_matrix_generic(data, core.words, samples, x);
}

RoundResult single_round(const Instance& inst, Rng& rng, Arithmetic arithmetic) {
    const Instance core = core_instance(inst);
    const RootSystemData data = build(core.type, core.rank);
    return round_with(core, data, threshold_p(core.type, core.rank), rng, arithmetic);
}

BigInt replay_witness(const Instance& inst, const Witness& witness) {
    const Instance core = core_instance(inst);
    const RootSystemData data = build(core.type, core.rank);
    if (witness.alpha.size() != core.words.size())
        throw InputError("witness has " + std::to_string(witness.alpha.size()) +
                         " parameter blocks, instance has " + std::to_string(core.words.size()) +
                         " non-identity words");
    std::vector<UnipotentSample> samples;
    for (const auto& alpha : witness.alpha) {
        if (static_cast<int>(alpha.size()) != data.d)
            throw InputError("witness parameter block has the wrong size");
        samples.push_back(to_group(kappa_from_alpha(data, alpha), data));
    }
    if (static_cast<int>(witness.x.size()) != column_count(core))
        throw InputError("witness has the wrong number of x values");
    return det_exact(assemble_matrix_generic(data, core.words, samples, witness.x));
}

bool verify_witness(const Instance& inst, const Witness& witness) {
    const BigInt det = replay_witness(inst, witness);
    if (det == 0) return false;
    if (witness.modulus == 0) return det == witness.det;
    BigInt r;
    const BigInt q(std::to_string(witness.modulus));
    mpz_fdiv_r(r.get_mpz_t(), det.get_mpz_t(), q.get_mpz_t());
    return r == witness.det;
}

Decision vanishing(const Instance& inst, double epsilon, Rng& rng, const DecideOptions& options) {
    const int s = options.rounds > 0 ? options.rounds : rounds_for_epsilon(epsilon);
    if (options.rounds <= 0 && !(epsilon > 0.0 && epsilon < 1.0))
        throw InputError("epsilon must lie in (0, 1)");
    const Instance core = core_instance(inst);
    Decision out;
    out.p = threshold_p(core.type, core.rank);
    if (!dimension_check(core)) {
        out.verdict = Verdict::Zero;
        out.certain = true;
        out.rule = "dimension";
        return out;
    }
    if (core.k() <= 2) {
        // k = 0 only passes the dimension check when d = 0.
        const auto w0 = long_word(core.type, core.rank);
        bool positive = true;
        if (core.k() == 1) positive = core.words[0] == w0;
        if (core.k() == 2) positive = core.words[1] == compose(w0, core.words[0]);
        out.verdict = positive ? Verdict::Positive : Verdict::Zero;
        out.certain = true;
        out.rule = "duality";
        return out;
    }
    const RootSystemData data = build(core.type, core.rank);
    out.rule = "sampling";
    for (int round = 0; round < s; ++round) {
        Rng round_rng(rng());
        RoundResult r = round_with(core, data, out.p, round_rng, options.arithmetic);
        out.rounds_run = round + 1;
        if (r.nonzero) {
            out.verdict = Verdict::Positive;
            out.certain = true;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    out.verdict = Verdict::Zero;
    out.certain = false;
    return out;
}

// ---------------------------------------------------------------------------

Partition parse_partition(std::string_view text) {
    Partition out;
    if (text.find_first_not_of(" ") == std::string_view::npos) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
            throw InputError("cannot parse partition part '" + std::string(token) + "'");
        if (value > 0) out.push_back(value);
        pos = end + 1;
    }
    if (!std::is_sorted(out.rbegin(), out.rend()))
        throw InputError("partition '" + std::string(text) + "' is not weakly decreasing");
    return out;
}

int partition_size(const Partition& p) {
    int total = 0;
    for (int part : p) total += part;
    return total;
}

namespace {

std::string partition_string(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

void require_valid(const Partition& p, LieType type) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw InputError("partition " + partition_string(p) + " has a nonpositive part");
        if (i && p[i] > p[i - 1])
            throw InputError("partition " + partition_string(p) + " is not weakly decreasing");
        if (i && type != LieType::A && p[i] == p[i - 1])
            throw InputError("partition " + partition_string(p) + " is not strict");
    }
}

// Fills the remaining absolute values in ascending order.
std::vector<int> complete_ascending(std::vector<int> head, int n) {
    std::vector<bool> used(n + 1, false);
    for (int v : head) used[std::abs(v)] = true;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) head.push_back(v);
    return head;
}

}  // namespace

WeylElement grassmannian_element(const Partition& lambda, LieType type, GrassmannianShape shape) {
    require_valid(lambda, type);
    const int r = static_cast<int>(lambda.size());
    std::vector<int> word;
    if (type == LieType::A) {
        const int k = shape.k, n = shape.n;
        if (k < 1 || k >= n) throw InputError("Grassmannian shape needs 1 <= k < n");
        if (r > k || (r > 0 && lambda[0] > n - k))
            throw InputError("partition " + partition_string(lambda) + " does not fit in a " +
                             std::to_string(k) + " x " + std::to_string(n - k) + " box");
        for (int i = 1; i <= k; ++i) {
            const int part = k + 1 - i <= r ? lambda[k - i] : 0;
            word.push_back(part + i);
        }
        word = complete_ascending(std::move(word), n);
    } else {
        const int n = shape.n;
        const int cap = type == LieType::D ? n - 1 : n;
        if (r > 0 && lambda[0] > cap)
            throw InputError("partition " + partition_string(lambda) + " has a part above " +
                             std::to_string(cap) + " for rank " + std::to_string(n));
        if (type == LieType::D) {
            for (int part : lambda) word.push_back(-(part + 1));
            if (r % 2 == 1) word.push_back(-1);
        } else {
            for (int part : lambda) word.push_back(-part);
        }
        word = complete_ascending(std::move(word), n);
    }
    WeylElement w(type, std::move(word));
    if (length(w) != partition_size(lambda))
        throw std::logic_error("grassmannian_element: length differs from |lambda|");
    return w;
}

GrassmannianShape minimal_shape(const PartitionTriple& t, LieType type) {
    int rows = 1, cols = 1;
    for (const Partition* p : {&t.lambda, &t.mu, &t.nu}) {
        rows = std::max(rows, static_cast<int>(p->size()));
        if (!p->empty()) cols = std::max(cols, p->front());
    }
    GrassmannianShape shape;
    if (type == LieType::A) {
        shape.k = rows;
        shape.n = rows + cols;
    } else if (type == LieType::D) {
        shape.n = std::max(cols + 1, 2);
    } else {
        shape.n = std::max(cols, 2);
    }
    return shape;
}

Instance lr_instance(const PartitionTriple& t, LieType type) {
    const GrassmannianShape shape = minimal_shape(t, type);
    const int rank = shape.n;
    std::vector<WeylElement> words;
    words.push_back(grassmannian_element(t.lambda, type, shape));
    words.push_back(grassmannian_element(t.mu, type, shape));
    words.push_back(compose(long_word(type, rank), grassmannian_element(t.nu, type, shape)));
    return Instance(type, rank, std::move(words));
}

Decision lr_vanishing(const PartitionTriple& t, LieType type, double epsilon, Rng& rng,
                      const DecideOptions& options) {
    return vanishing(lr_instance(t, type), epsilon, rng, options);
}

}  // namespace schubvan
