#include "htlab/radical/radical.hpp"

#include "htlab/numeric/primes.hpp"
#include "htlab/numeric/smith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace htlab {

namespace {

void accumulate(RadicalScalar::Exponents& e, const mpz_class& p, const mpq_class& r) {
    if (r == 0) return;
    auto [it, inserted] = e.try_emplace(p, r);
    if (!inserted) {
        it->second += r;
        if (it->second == 0) e.erase(it);
    }
}

// Factors n > 0 into primes: trial division below 10^6, cofactor must be prime.
void factor_into(RadicalScalar::Exponents& e, mpz_class n, const mpq_class& scale) {
    if (n <= 0) throw std::invalid_argument("radicals need positive rational bases");
    for (unsigned long p = 2; p < 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        unsigned long k = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++k;
        }
        if (k > 0) accumulate(e, mpz_class(p), scale * k);
    }
    if (n > 1) {
        if (!is_prime(n)) throw std::invalid_argument("cannot factor " + n.get_str() + " by trial division");
        accumulate(e, n, scale);
    }
}

}  // namespace

RadicalScalar::RadicalScalar(const Exponents& exponents) {
    for (const auto& [p, r] : exponents) {
        if (!is_prime(p)) throw std::invalid_argument("radical base " + p.get_str() + " is not prime");
        mpq_class c = r;
        c.canonicalize();
        accumulate(exponents_, p, c);
    }
}

RadicalScalar RadicalScalar::from_rational(const mpq_class& r) { return power(r, mpq_class(1)); }

RadicalScalar RadicalScalar::power(const mpq_class& base, const mpq_class& exponent) {
    mpq_class b = base;
    b.canonicalize();
    if (b <= 0) throw std::invalid_argument("radicals need positive rational bases");
    mpq_class e = exponent;
    e.canonicalize();
    RadicalScalar out;
    factor_into(out.exponents_, b.get_num(), e);
    factor_into(out.exponents_, b.get_den(), -e);
    return out;
}

RadicalScalar RadicalScalar::prime_power(const mpz_class& p, const mpq_class& e) {
    return RadicalScalar(Exponents{{p, e}});
}

bool RadicalScalar::is_rational() const {
    for (const auto& [p, r] : exponents_)
        if (r.get_den() != 1) return false;
    return true;
}

mpq_class RadicalScalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("radical is not rational");
    mpz_class num = 1, den = 1;
    for (const auto& [p, r] : exponents_) {
        mpz_class pw;
        unsigned long k = mpz_class(abs(r.get_num())).get_ui();
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), k);
        (r > 0 ? num : den) *= pw;
    }
    return mpq_class(num, den);
}

RadicalScalar RadicalScalar::pow(const mpq_class& r) const {
    RadicalScalar out;
    if (r == 0) return out;
    for (const auto& [p, e] : exponents_) out.exponents_.emplace(p, mpq_class(e * r));
    return out;
}

HeightValue RadicalScalar::log_value() const {
    LogTerms t;
    for (const auto& [p, e] : exponents_) t.emplace(p, e);
    return HeightValue(std::move(t));
}

Real RadicalScalar::value(Precision bits) const {
    BigFloat l = log_value().ball(static_cast<int>(bits / 3.3) + 10);
    Real v = exp(l.mid());
    v.set_precision(bits);
    return v;
}

IntPoly RadicalScalar::minimal_polynomial() const {
    mpz_class d = radical_degree(*this);
    mpq_class r = pow(mpq_class(d)).rational_value();
    return IntPoly::binomial(static_cast<unsigned>(d.get_ui()), r.get_den(), r.get_num());
}

std::string RadicalScalar::to_string() const {
    if (exponents_.empty()) return "1";
    if (is_rational()) return rational_value().get_str();
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, e] : exponents_) {
        if (!first) out << "*";
        first = false;
        out << p.get_str();
        if (e != 1) {
            if (e.get_den() == 1) {
                out << "^" << e.get_str();
            } else {
                out << "^(" << e.get_str() << ")";
            }
        }
    }
    return out.str();
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar out = a;
    for (const auto& [p, e] : b.exponents_) accumulate(out.exponents_, p, e);
    return out;
}

RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) { return a * b.inverse(); }

namespace {

class RadicalParser {
  public:
    explicit RadicalParser(const std::string& text) : text_(text) {}

    RadicalScalar parse() {
        RadicalScalar out;
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty radical", pos_);
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            mpq_class base = read_rational(false);
            mpq_class exponent = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                bool paren = pos_ < text_.size() && text_[pos_] == '(';
                if (paren) ++pos_;
                skip_ws();
                exponent = read_rational(true);
                skip_ws();
                if (paren) {
                    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
                    ++pos_;
                }
            }
            if (base <= 0) throw ParseError("base must be positive", at);
            try {
                out = out * RadicalScalar::power(base, exponent);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), at);
            }
            skip_ws();
            if (pos_ == text_.size()) break;
            if (text_[pos_] != '*') throw ParseError("expected '*'", pos_);
            ++pos_;
        }
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    mpz_class read_integer(bool allow_sign) {
        std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) throw ParseError("expected integer", pos_);
        std::string s = text_.substr(start, pos_ - start);
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return mpz_class(s);
    }
    mpq_class read_rational(bool allow_sign) {
        mpz_class num = read_integer(allow_sign);
        mpz_class den = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            den = read_integer(false);
            if (den == 0) throw ParseError("zero denominator", at);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

RadicalScalar parse_radical(const std::string& text) { return RadicalParser(text).parse(); }

mpz_class radical_degree(const RadicalScalar& a) {
    mpz_class l = 1;
    for (const auto& [p, e] : a.exponents()) l = lcm(l, mpz_class(e.get_den()));
    return l;
}

mpz_class compositum_degree(const std::vector<RadicalScalar>& as) {
    std::vector<mpz_class> primes;
    mpz_class big_l = 1;
    for (const auto& a : as) {
        for (const auto& [p, e] : a.exponents()) {
            if (e.get_den() == 1) continue;
            primes.push_back(p);
            big_l = lcm(big_l, mpz_class(e.get_den()));
        }
    }
    if (big_l == 1) return 1;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    IntMatrix m(as.size(), primes.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            auto it = as[i].exponents().find(primes[j]);
            if (it == as[i].exponents().end()) continue;
            mpq_class scaled = it->second * big_l;
            // Entries only matter modulo L.
            mpz_class v = scaled.get_num();
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), big_l.get_mpz_t());
            m(i, j) = v;
        }
    }
    mpz_class order = 1;
    for (const auto& d : smith_normal_form(m).diagonal()) order *= big_l / gcd(d, big_l);
    return order;
}

int compare_values(const RadicalScalar& a, const RadicalScalar& b) {
    LogTerms t;
    for (const auto& [p, e] : a.exponents()) t[p] += e;
    for (const auto& [p, e] : b.exponents()) {
        t[p] -= e;
        if (t[p] == 0) t.erase(p);
    }
    return sign(t);
}

HeightValue radical_height(const RadicalScalar& a) {
    LogTerms finite;
    for (const auto& [p, e] : a.exponents())
        if (e < 0) finite.emplace(p, mpq_class(-e));
    HeightValue h(std::move(finite));
    HeightValue arch = a.log_value();
    if (sign(arch.terms()) > 0) h = h + arch;
    return h;
}

}  // namespace htlab
