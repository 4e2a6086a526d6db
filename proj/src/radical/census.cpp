#include "htlab/radical/census.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace htlab {

std::vector<RadicalCoord> census_values(const std::vector<RadicalScalar>& generators, const CensusOptions& opts) {
    std::vector<RadicalCoord> out{RadicalCoord::zero()};
    std::set<std::pair<int, RadicalScalar>> seen;
    const long K = opts.exponent_bound;
    std::vector<long> k(generators.size(), -K);
    while (true) {
        RadicalScalar mono;
        for (std::size_t j = 0; j < generators.size(); ++j) mono = mono * generators[j].pow(mpq_class(k[j]));
        for (unsigned u = 1; u <= opts.coefficient_bound; ++u) {
            for (unsigned v = 1; v <= opts.coefficient_bound; ++v) {
                if (std::gcd(u, v) != 1) continue;
                RadicalScalar value = mono * RadicalScalar::from_rational(mpq_class(u, v));
                for (int s : {1, -1}) {
                    if (seen.emplace(s, value).second) out.push_back(RadicalCoord::of(s, value));
                }
            }
        }
        std::size_t j = generators.size();
        while (j > 0 && k[j - 1] == K) k[--j] = -K;
        if (j == 0) break;
        ++k[j - 1];
    }
    return out;
}

Census projective_northcott_experiment(const std::vector<RadicalScalar>& generators, std::size_t N, double gamma,
                                       const HeightValue& threshold, std::uint64_t budget,
                                       const CensusOptions& opts) {
    if (N < 1) throw std::invalid_argument("census needs N >= 1");
    Census census;
    std::vector<RadicalCoord> values = census_values(generators, opts);
    const std::size_t m = values.size();

    for (std::size_t lead = 0; lead <= N; ++lead) {
        const std::size_t free = N - lead;
        std::vector<std::size_t> idx(free, 0);
        while (true) {
            if (census.examined >= budget) {
                census.truncated = true;
                return census;
            }
            std::vector<RadicalCoord> coords(N + 1, RadicalCoord::zero());
            coords[lead] = RadicalCoord::positive(RadicalScalar());
            for (std::size_t t = 0; t < free; ++t) coords[lead + 1 + t] = values[idx[t]];
            RadicalPoint P(std::move(coords));
            ++census.examined;

            HeightValue h = projective_height(P);
            mpz_class deg = point_degree(P);
            HeightValue w = weight_height(h, deg, gamma, opts.digits);
            Ordering o = height_value_compare(w, threshold);
            if (o == Ordering::less) {
                census.below.push_back({P, deg, h, w});
            } else if (o == Ordering::inconclusive) {
                census.undecided.push_back({P, deg, h, w});
            }

            std::size_t t = free;
            while (t > 0 && idx[t - 1] + 1 == m) idx[--t] = 0;
            if (t == 0) break;
            ++idx[t - 1];
        }
    }
    return census;
}

}  // namespace htlab
