#include "htlab/numeric/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace htlab {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::binomial(unsigned n, const mpz_class& lead, const mpz_class& constant) {
    std::vector<mpz_class> c(n + 1);
    c[0] = -constant;
    c[n] += lead;
    return IntPoly(std::move(c));
}

namespace {

class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        std::vector<mpz_class> coeffs;
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            mpz_class coeff = 1;
            bool have_number = false;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = read_integer();
                have_number = true;
                skip_ws();
                if (pos_ < text_.size() && peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (pos_ >= text_.size() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
                }
            }
            unsigned long power = 0;
            if (pos_ < text_.size() && peek() == 'x') {
                ++pos_;
                power = 1;
                skip_ws();
                if (pos_ < text_.size() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
                        throw ParseError("expected exponent", pos_);
                    mpz_class e = read_integer();
                    if (e > 100000) throw ParseError("exponent too large", pos_);
                    power = e.get_ui();
                }
            } else if (!have_number) {
                throw ParseError("expected coefficient or 'x'", pos_);
            }
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += sign * coeff;
        }
        return IntPoly(std::move(coeffs));
    }

  private:
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    mpz_class read_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Positive divisors of |n| for |n| below 10^12; empty when out of range.
std::vector<mpz_class> small_divisors(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0 || m > mpz_class("1000000000000")) return {};
    unsigned long long v = m.get_ui();
    std::vector<mpz_class> out;
    for (unsigned long long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.emplace_back(static_cast<unsigned long>(d));
            if (d * d != v) out.emplace_back(static_cast<unsigned long>(v / d));
        }
    }
    return out;
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> c = coeffs_;
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

std::vector<mpq_class> IntPoly::rational_roots() const {
    std::vector<mpq_class> roots;
    if (degree() < 1) return roots;
    std::size_t low = 0;
    while (coeffs_[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    auto nums = small_divisors(coeffs_[low]);
    auto dens = small_divisors(leading());
    std::set<mpq_class> seen;
    for (const auto& p : nums) {
        for (const auto& q : dens) {
            for (int s : {1, -1}) {
                mpq_class r(s * p, q);
                r.canonicalize();
                if (!seen.insert(r).second) continue;
                // q^n p(r/q) == sum c_i p^i q^(n-i)
                mpz_class acc = 0;
                mpz_class num = r.get_num(), den = r.get_den();
                mpz_class den_pow = 1;
                std::vector<mpz_class> num_pow(coeffs_.size());
                num_pow[0] = 1;
                for (std::size_t i = 1; i < coeffs_.size(); ++i) num_pow[i] = num_pow[i - 1] * num;
                for (std::size_t k = coeffs_.size(); k-- > 0;) {
                    acc += coeffs_[k] * num_pow[k] * den_pow;
                    den_pow *= den;
                }
                if (acc == 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Complex IntPoly::eval(const Complex& z) const {
    Precision bits = z.precision();
    Complex acc(bits);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * z;
        acc.re() += Real(coeffs_[k], bits);
    }
    return acc;
}

void IntPoly::eval_with_derivative(const Complex& z, Complex& value, Complex& deriv) const {
    Precision bits = z.precision();
    value = Complex(bits);
    deriv = Complex(bits);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z;
        value.re() += Real(coeffs_[k], bits);
    }
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << "x";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b[i];
    return IntPoly(std::move(c));
}

}  // namespace htlab
