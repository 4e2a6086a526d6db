#include "htlab/radical/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace htlab {

std::string to_string(ChainVerdict v) {
    switch (v) {
        case ChainVerdict::holds: return "holds";
        case ChainVerdict::degenerate: return "degenerate";
        case ChainVerdict::violated: return "violated";
        case ChainVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

BigFloat power_of(const mpz_class& base, double exponent, Precision bits) {
    return pow(BigFloat(Real(base, bits)), Real(exponent, bits));
}

// (prod x_k)^(1/n) for positive balls.
BigFloat geometric_mean(const std::vector<BigFloat>& xs, Precision bits) {
    BigFloat s(bits);
    for (const auto& x : xs) s = s + log(x);
    return exp(s / BigFloat::exact(static_cast<long>(xs.size()), bits));
}

}  // namespace

ChainReport lemma_chain_check(const RadicalPoint& P, double gamma, std::size_t N, int digits) {
    if (!(gamma < 0)) throw std::invalid_argument("lemma_chain_check needs gamma < 0");
    if (P.dimension() != N) throw std::invalid_argument("point dimension does not match N");
    Precision bits = bits_for_digits(digits);

    ChainReport report;
    std::vector<RadicalCoord> affine = affine_coordinates(P);
    HeightValue hP = projective_height(P);
    mpz_class field_degree = point_degree(P);

    std::vector<HeightValue> hs;
    std::vector<mpz_class> degs;
    for (std::size_t i = 0; i < affine.size(); ++i) {
        if (affine[i].is_zero()) continue;
        HeightValue h = radical_height(affine[i].magnitude);
        if (h.is_zero()) continue;
        report.index_set.push_back(i + 1);
        hs.push_back(h);
        degs.push_back(radical_degree(affine[i].magnitude));
    }

    report.lhs = HeightValue(power_of(field_degree, gamma, bits) * hP.ball(digits));
    if (report.index_set.empty()) {
        report.verdict = ChainVerdict::degenerate;
        report.method = "none";
        return report;
    }

    std::vector<BigFloat> h_balls, hng_balls;
    BigFloat deg_factor = BigFloat::exact(1, bits);
    mpz_class deg_product = 1;
    for (std::size_t k = 0; k < hs.size(); ++k) {
        BigFloat hb = hs[k].ball(digits);
        h_balls.push_back(hb);
        hng_balls.push_back(power_of(degs[k], static_cast<double>(N) * gamma, bits) * hb);
        deg_factor = deg_factor * power_of(degs[k], gamma, bits);
        deg_product *= degs[k];
    }
    BigFloat middle = deg_factor * geometric_mean(h_balls, bits);
    BigFloat rhs = geometric_mean(hng_balls, bits);
    report.middle = HeightValue(middle);
    report.rhs = HeightValue(rhs);

    Ordering first = compare(report.lhs.numeric(), middle);
    Ordering second = compare(middle, rhs);
    if (first == Ordering::less || second == Ordering::less) {
        report.verdict = ChainVerdict::violated;
        report.method = "numeric";
        return report;
    }
    if (first == Ordering::greater && second == Ordering::greater) {
        report.verdict = ChainVerdict::holds;
        report.method = "numeric";
        return report;
    }

    // Ties: compare factor by factor. [K:Q] <= prod deg_i and g < 0 give the
    // degree factor; h(P) >= h(a_i) for each i bounds the geometric mean;
    // middle / rhs = (prod deg_i)^(g (1 - N/#I)) >= 1 since #I <= N.
    bool degree_ok = field_degree <= deg_product;
    bool heights_ok = true;
    for (const auto& h : hs) {
        Ordering o = height_value_compare(hP, h);
        if (o != Ordering::greater && o != Ordering::equal) heights_ok = false;
    }
    bool tail_ok = hs.size() <= N && deg_product >= 1;
    report.method = "exact";
    report.verdict = (degree_ok && heights_ok && tail_ok) ? ChainVerdict::holds : ChainVerdict::inconclusive;
    return report;
}

}  // namespace htlab
