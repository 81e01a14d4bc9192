#include "schubvan/generic.hpp"

namespace schubvan {

long draw_uniform(Rng& rng, long p) {
    if (p < 1) throw std::invalid_argument("draw_uniform: p must be >= 1");
    std::uniform_int_distribution<long> dist(1, p);
    return dist(rng);
}

std::vector<BigInt> sample_alpha(const RootSystemData& data, Rng& rng, long p) {
    std::vector<BigInt> alpha;
    alpha.reserve(data.d);
    for (int t = 0; t < data.d; ++t) alpha.emplace_back(draw_uniform(rng, p));
    return alpha;
}

IntMatrix sample_kappa(const RootSystemData& data, Rng& rng, long p) {
    return kappa_from_alpha(data, sample_alpha(data, rng, p));
}

}  // namespace schubvan
