#include "htlab/towers/tower.hpp"

#include "htlab/numeric/primes.hpp"
#include "htlab/radical/projective.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace htlab {

RadicalScalar TowerLevel::generator() const { return RadicalScalar::power(mpq_class(p, q), mpq_class(1, d)); }

void TowerSpec::validate() const {
    if (!(gamma < 0) || !std::isfinite(gamma)) throw std::invalid_argument("tower gamma must be negative");
    if (!std::isfinite(C)) throw std::invalid_argument("tower C must be finite");
    std::set<mpz_class> seen;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        std::string where = "level " + std::to_string(i + 1) + ": ";
        if (l.d < 2) throw std::invalid_argument(where + "degree must be at least 2");
        if (!is_prime(l.p) || !is_prime(l.q)) throw std::invalid_argument(where + "p and q must be primes");
        if (l.p == l.q) throw std::invalid_argument(where + "p equals q");
        if (!seen.insert(l.p).second || !seen.insert(l.q).second)
            throw std::invalid_argument(where + "prime reused across levels");
    }
}

mpz_class TowerSpec::degree_product(std::size_t i) const {
    if (i > levels.size()) throw std::out_of_range("tower level out of range");
    mpz_class D = 1;
    for (std::size_t j = 0; j < i; ++j) D *= levels[j].d;
    return D;
}

BigFloat remark_bound(const TowerSpec& t, std::size_t i, int digits) {
    if (i < 1 || i > t.levels.size()) throw std::out_of_range("tower level out of range");
    Precision bits = bits_for_digits(digits);
    const long d = t.levels[i - 1].d;
    BigFloat D(Real(t.degree_product(i), bits));
    BigFloat Dg = pow(D, Real(t.gamma, bits));
    BigFloat denom = BigFloat::exact(2 * (d - 1), bits) * Dg;
    BigFloat term = log(BigFloat::exact(d, bits)) / denom;
    return BigFloat(Real(t.C, bits)) - term;
}

namespace {

// C * d * D^(-gamma), the required value of log p.
BigFloat required_log(double C, long d, const mpz_class& D, double gamma, Precision bits) {
    BigFloat Dpow = pow(BigFloat(Real(D, bits)), Real(-gamma, bits));
    return BigFloat(Real(C, bits)) * BigFloat::exact(d, bits) * Dpow;
}

}  // namespace

TowerSpec build_tower(double gamma, double C, std::size_t num_levels, const std::vector<unsigned>& degree_schedule,
                      unsigned long seed, const TowerOptions& opts) {
    if (!(gamma < 0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be negative");
    if (!(C > 0) || !std::isfinite(C)) throw std::invalid_argument("C must be positive");
    if (degree_schedule.size() != num_levels)
        throw std::invalid_argument("degree schedule length must equal the number of levels");
    for (unsigned d : degree_schedule)
        if (d < 2) throw std::invalid_argument("degrees must be at least 2");

    TowerSpec t;
    t.gamma = gamma;
    t.C = C;
    std::set<mpz_class> used;
    mpz_class D = 1;
    const Precision bits = opts.magnitude_cap_bits + 128;
    const Real cap_log = Real(static_cast<long>(opts.magnitude_cap_bits), bits) * log(Real(2L, bits));

    for (std::size_t i = 0; i < num_levels; ++i) {
        const unsigned d = degree_schedule[i];
        D *= d;
        mpz_class q = 2;
        while (used.count(q)) q = next_prime(q);

        BigFloat need = required_log(C, d, D, gamma, bits);
        if (need.lower() > cap_log) {
            throw TowerError("level " + std::to_string(i + 1) + " needs log p >= " + need.to_string(6) +
                             ", beyond the " + std::to_string(opts.magnitude_cap_bits) +
                             "-bit prime cap; use a smaller C or smaller degrees");
        }
        // Start just below exp(need) and let the certified check decide.
        Real start = exp(need.lower());
        mpz_class p;
        mpfr_get_z(p.get_mpz_t(), start.get(), MPFR_RNDD);
        if (p < q) p = q;
        unsigned long skipped = 0;
        while (true) {
            p = next_prime(p);
            if (mpz_sizeinbase(p.get_mpz_t(), 2) > opts.magnitude_cap_bits)
                throw TowerError("level " + std::to_string(i + 1) + ": prime search exceeded the " +
                                 std::to_string(opts.magnitude_cap_bits) + "-bit cap");
            if (used.count(p) || p == q) continue;
            BigFloat lp = log(BigFloat(Real(p, bits)));
            if (compare(lp, need) != Ordering::greater) continue;
            if (skipped++ < seed) continue;
            break;
        }
        used.insert(p);
        used.insert(q);
        t.levels.push_back({p, q, d});
    }
    return t;
}

namespace {

HeightValue hgamma_of(const RadicalScalar& a, double gamma) {
    return weight_height(radical_height(a), radical_degree(a), gamma, 40);
}

}  // namespace

LevelCertificate certify_level(const TowerSpec& t, std::size_t i, std::size_t sample_budget) {
    if (i < 1 || i > t.levels.size()) throw std::out_of_range("tower level out of range");
    LevelCertificate cert;
    cert.level = i;
    cert.remark_bound = remark_bound(t, i);
    HeightValue bound(cert.remark_bound);

    std::vector<RadicalScalar> gens;
    for (std::size_t j = 0; j < i; ++j) gens.push_back(t.levels[j].generator());
    cert.generator_hgamma = hgamma_of(gens.back(), t.gamma);
    Precision bits = bits_for_digits(40);
    cert.generator_clears_C =
        height_value_compare(cert.generator_hgamma, HeightValue(BigFloat(Real(t.C, bits)))) == Ordering::greater;

    const long d_i = t.levels[i - 1].d;
    std::vector<long> k(i);
    for (long r = 1; cert.samples.size() < sample_budget; ++r) {
        // all vectors in [-r, r]^i with some |k_j| = r, lexicographic
        std::fill(k.begin(), k.end(), -r);
        while (cert.samples.size() < sample_budget) {
            bool on_shell = std::any_of(k.begin(), k.end(), [r](long v) { return std::labs(v) == r; });
            if (on_shell && k.back() % d_i != 0) {
                RadicalScalar a;
                for (std::size_t j = 0; j < i; ++j) a = a * gens[j].pow(mpq_class(k[j]));
                SampledElement s{a, k, hgamma_of(a, t.gamma), false};
                s.pass = height_value_compare(s.hgamma, bound) == Ordering::greater;
                if (!s.pass) ++cert.failures;
                cert.samples.push_back(std::move(s));
            }
            std::size_t j = i;
            while (j > 0 && k[j - 1] == r) k[--j] = -r;
            if (j == 0) break;
            ++k[j - 1];
        }
    }
    return cert;
}

std::vector<LevelCertificate> certify_tower(const TowerSpec& t, std::size_t sample_budget, unsigned workers) {
    const std::size_t n = t.levels.size();
    std::vector<LevelCertificate> out(n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) out[i] = certify_level(t, i + 1, sample_budget);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

bool distinct_fields_check(const TowerSpec& a, const TowerSpec& b) {
    auto primes = [](const TowerSpec& t) {
        std::multiset<mpz_class> s;
        for (const auto& l : t.levels) {
            s.insert(l.p);
            s.insert(l.q);
        }
        return s;
    };
    return primes(a) != primes(b);
}

std::string tower_to_json(const TowerSpec& t, int indent) {
    nlohmann::ordered_json j;
    j["gamma"] = t.gamma;
    j["C"] = t.C;
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& l : t.levels) {
        nlohmann::ordered_json level;
        level["p"] = l.p.get_str();
        level["q"] = l.q.get_str();
        level["d"] = l.d;
        j["levels"].push_back(level);
    }
    return j.dump(indent);
}

TowerSpec tower_from_json(const std::string& text) {
    TowerSpec t;
    try {
        auto j = nlohmann::json::parse(text);
        t.gamma = j.at("gamma").get<double>();
        t.C = j.at("C").get<double>();
        for (const auto& level : j.at("levels")) {
            TowerLevel l;
            l.p = mpz_class(level.at("p").get<std::string>());
            l.q = mpz_class(level.at("q").get<std::string>());
            int d = level.at("d").get<int>();
            if (d < 0) throw std::invalid_argument("negative degree");
            l.d = static_cast<unsigned>(d);
            t.levels.push_back(l);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed tower JSON: ") + e.what());
    }
    t.validate();
    return t;
}

}  // namespace htlab
