#include "htlab/radical/projective.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace htlab {

std::string RadicalCoord::to_string() const {
    if (sign == 0) return "0";
    return (sign < 0 ? "-" : "") + magnitude.to_string();
}

RadicalPoint::RadicalPoint(std::vector<RadicalCoord> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("a projective point needs at least two coordinates");
    bool any = false;
    for (auto& c : coords_) {
        if (c.sign == 0) {
            c.magnitude = RadicalScalar();
        } else {
            c.sign = c.sign > 0 ? 1 : -1;
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("a projective point needs a nonzero coordinate");
}

std::size_t RadicalPoint::first_nonzero() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return i;
    return 0;  // unreachable by the class invariant
}

RadicalPoint RadicalPoint::normalized() const {
    const RadicalCoord& pivot = coords_[first_nonzero()];
    std::vector<RadicalCoord> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        if (c.is_zero()) {
            out.push_back(RadicalCoord::zero());
        } else {
            out.push_back(RadicalCoord::of(c.sign * pivot.sign, c.magnitude / pivot.magnitude));
        }
    }
    return RadicalPoint(std::move(out));
}

RadicalPoint RadicalPoint::scaled(const RadicalCoord& lambda) const {
    if (lambda.is_zero()) throw std::invalid_argument("cannot scale a projective point by zero");
    std::vector<RadicalCoord> out;
    for (const auto& c : coords_) {
        if (c.is_zero()) {
            out.push_back(RadicalCoord::zero());
        } else {
            out.push_back(RadicalCoord::of(c.sign * lambda.sign, c.magnitude * lambda.magnitude));
        }
    }
    return RadicalPoint(std::move(out));
}

std::string RadicalPoint::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? " : " : "") << coords_[i].to_string();
    out << "]";
    return out.str();
}

RadicalPoint parse_point(const std::string& text) {
    std::size_t open = text.find('[');
    std::size_t close = text.rfind(']');
    if (open == std::string::npos) throw ParseError("expected '['", 0);
    if (close == std::string::npos || close < open) throw ParseError("expected ']'", text.size());
    std::vector<RadicalCoord> coords;
    std::size_t start = open + 1;
    while (start <= close) {
        std::size_t end = text.find(':', start);
        if (end == std::string::npos || end > close) end = close;
        std::string piece = text.substr(start, end - start);
        std::size_t lead = piece.find_first_not_of(" \t");
        if (lead == std::string::npos) throw ParseError("empty coordinate", start);
        std::size_t trail = piece.find_last_not_of(" \t");
        std::string item = piece.substr(lead, trail - lead + 1);
        int s = 1;
        if (item[0] == '-') {
            s = -1;
            item.erase(0, 1);
        }
        if (item == "0") {
            coords.push_back(RadicalCoord::zero());
        } else {
            try {
                coords.push_back(RadicalCoord::of(s, parse_radical(item)));
            } catch (const ParseError& e) {
                throw ParseError(std::string("in coordinate: ") + e.what(), start + lead + e.position());
            }
        }
        start = end + 1;
    }
    try {
        return RadicalPoint(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), open);
    }
}

namespace {

LogTerms finite_part(const RadicalPoint& P) {
    // Primes appearing anywhere; coordinates lacking a prime have exponent 0.
    std::map<mpz_class, mpq_class> best;
    std::size_t nonzero = 0;
    for (const auto& c : P.coords())
        if (!c.is_zero()) ++nonzero;
    std::map<mpz_class, std::size_t> seen;
    for (const auto& c : P.coords()) {
        if (c.is_zero()) continue;
        for (const auto& [p, e] : c.magnitude.exponents()) {
            mpq_class v = -e;
            auto [it, inserted] = best.try_emplace(p, v);
            if (!inserted && v > it->second) it->second = v;
            ++seen[p];
        }
    }
    LogTerms out;
    for (auto& [p, v] : best) {
        if (seen[p] < nonzero && v < 0) v = 0;  // some coordinate has exponent 0
        if (v != 0) out.emplace(p, v);
    }
    return out;
}

const RadicalScalar& archimedean_max(const RadicalPoint& P) {
    const RadicalScalar* best = nullptr;
    for (const auto& c : P.coords()) {
        if (c.is_zero()) continue;
        if (best == nullptr || compare_values(c.magnitude, *best) > 0) best = &c.magnitude;
    }
    return *best;
}

}  // namespace

HeightValue projective_height(const RadicalPoint& P) {
    return HeightValue(finite_part(P)) + archimedean_max(P).log_value();
}

HeightValue projective_height_l2(const RadicalPoint& P, int digits) {
    const RadicalScalar& top = archimedean_max(P);
    Precision bits = bits_for_digits(digits);
    BigFloat sum(bits);
    for (const auto& c : P.coords()) {
        if (c.is_zero()) continue;
        BigFloat ratio_log = (c.magnitude / top).log_value().ball(digits);
        BigFloat ratio = exp(ratio_log);
        sum = sum + ratio * ratio;
    }
    BigFloat correction = log(sum) / BigFloat::exact(2, bits);
    return HeightValue(projective_height(P).ball(digits) + correction);
}

std::vector<RadicalCoord> affine_coordinates(const RadicalPoint& P) {
    RadicalPoint n = P.normalized();
    std::vector<RadicalCoord> out;
    std::size_t pivot = n.first_nonzero();
    for (std::size_t i = 0; i < n.coords().size(); ++i)
        if (i != pivot) out.push_back(n.coords()[i]);
    return out;
}

mpz_class point_degree(const RadicalPoint& P) {
    std::vector<RadicalScalar> mags;
    for (const auto& c : affine_coordinates(P))
        if (!c.is_zero()) mags.push_back(c.magnitude);
    return compositum_degree(mags);
}

HeightValue weight_height(const HeightValue& h, const mpz_class& degree, double gamma, int digits) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
    if (gamma == std::trunc(gamma) && std::fabs(gamma) < 64) {
        long g = static_cast<long>(gamma);
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), degree.get_mpz_t(), static_cast<unsigned long>(std::labs(g)));
        mpq_class factor = g >= 0 ? mpq_class(pw) : mpq_class(mpz_class(1), pw);
        return h.scaled(factor);
    }
    Precision bits = bits_for_digits(digits);
    Real w = pow(Real(degree, bits), Real(gamma, bits));
    return h.scaled(BigFloat(w, ulp_bound(w) * 4L), digits);
}

HeightValue weighted_projective_height(const RadicalPoint& P, double gamma, int digits) {
    return weight_height(projective_height(P), point_degree(P), gamma, digits);
}

}  // namespace htlab
