#include "htlab/heights/height_value.hpp"

#include "htlab/numeric/int_poly.hpp"
#include "htlab/numeric/primes.hpp"

#include <cctype>
#include <sstream>

namespace htlab {

namespace {

void add_term(LogTerms& terms, const mpz_class& p, const mpq_class& r) {
    if (r == 0) return;
    auto [it, inserted] = terms.try_emplace(p, r);
    if (!inserted) {
        it->second += r;
        if (it->second == 0) terms.erase(it);
    }
}

BigFloat evaluate(const LogTerms& terms, int digits) {
    Precision bits = bits_for_digits(digits);
    BigFloat total(bits);
    for (const auto& [p, r] : terms) {
        Real lp = log_of(p, bits);
        BigFloat lp_ball(lp, ulp_bound(lp));
        total = total + lp_ball * BigFloat::from_rational(r, bits);
    }
    return total;
}

std::string rational_prefix(const mpq_class& r) {
    if (r == 1) return "";
    return r.get_str() + "*";
}

}  // namespace

HeightValue::HeightValue(LogTerms terms) {
    LogTerms clean;
    for (auto& [p, r] : terms) {
        mpq_class c = r;
        c.canonicalize();
        add_term(clean, p, c);
    }
    value_ = std::move(clean);
}

HeightValue::HeightValue(BigFloat value) : value_(std::move(value)) {}

HeightValue HeightValue::log_prime(const mpz_class& p, const mpq_class& r) {
    LogTerms t;
    add_term(t, p, r);
    return HeightValue(std::move(t));
}

HeightValue HeightValue::log_integer(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("log of zero");
    LogTerms t;
    for (const auto& [p, e] : factor_small(n)) add_term(t, mpz_class(static_cast<unsigned long>(p)), mpq_class(e));
    return HeightValue(std::move(t));
}

bool HeightValue::is_zero() const {
    if (is_exact()) return terms().empty();
    return numeric().mid().is_zero() && numeric().radius().is_zero();
}

BigFloat HeightValue::ball(int digits) const {
    if (is_exact()) return evaluate(terms(), digits);
    return numeric();
}

HeightValue HeightValue::scaled(const mpq_class& r) const {
    if (is_exact()) {
        LogTerms t;
        for (const auto& [p, c] : terms()) add_term(t, p, c * r);
        return HeightValue(std::move(t));
    }
    return HeightValue(numeric() * BigFloat::from_rational(r, numeric().precision()));
}

HeightValue HeightValue::scaled(const BigFloat& r, int digits) const { return HeightValue(ball(digits) * r); }

std::string HeightValue::symbolic() const {
    if (!is_exact()) return numeric().mid().to_string(15);
    if (terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, r] : terms()) {
        mpq_class mag = abs(r);
        if (first) {
            if (r < 0) out << "-";
        } else {
            out << (r < 0 ? " - " : " + ");
        }
        first = false;
        out << rational_prefix(mag) << "log(" << p.get_str() << ")";
    }
    return out.str();
}

std::string HeightValue::to_string(int significant) const {
    if (!is_exact()) return "≈ " + numeric().mid().to_string(significant);
    if (terms().empty()) return "0";
    return symbolic() + " ≈ " + ball(significant + 10).mid().to_string(significant);
}

HeightValue operator+(const HeightValue& a, const HeightValue& b) {
    if (a.is_exact() && b.is_exact()) {
        LogTerms t = a.terms();
        for (const auto& [p, r] : b.terms()) add_term(t, p, r);
        return HeightValue(std::move(t));
    }
    int digits = kDefaultDigits;
    return HeightValue(a.ball(digits) + b.ball(digits));
}

HeightValue operator-(const HeightValue& a, const HeightValue& b) { return a + b.scaled(mpq_class(-1)); }

int sign(const LogTerms& terms) {
    if (terms.empty()) return 0;
    for (int digits = 30;; digits *= 2) {
        BigFloat v = evaluate(terms, digits);
        if (v.is_positive()) return 1;
        if (v.is_negative()) return -1;
        if (digits > (1 << 20)) throw PrecisionError("sign of a log combination did not resolve");
    }
}

Ordering height_value_compare(const HeightValue& x, const HeightValue& y) {
    if (x.is_exact() && y.is_exact()) {
        int s = sign((x - y).terms());
        return s < 0 ? Ordering::less : s > 0 ? Ordering::greater : Ordering::equal;
    }
    // Evaluate exact operands finely enough that the numeric radius dominates.
    int digits = kDefaultDigits;
    if (!x.is_exact()) digits = std::max<int>(digits, static_cast<int>(x.numeric().precision() / 3.3) + 8);
    if (!y.is_exact()) digits = std::max<int>(digits, static_cast<int>(y.numeric().precision() / 3.3) + 8);
    return compare(x.ball(digits), y.ball(digits));
}

namespace {

class HeightParser {
  public:
    explicit HeightParser(const std::string& text) : text_(text) {}

    HeightValue parse() {
        skip_ws();
        if (looks_numeric()) return parse_decimal();
        LogTerms terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) break;
            int s = 1;
            if (peek() == '+' || peek() == '-') {
                s = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            mpq_class coeff = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = read_rational();
                skip_ws();
                if (pos_ == text_.size() || peek() == '+' || peek() == '-') {
                    if (coeff != 0) throw ParseError("bare rational term (only 0 allowed)", pos_);
                    continue;
                }
                expect('*');
                skip_ws();
            }
            expect_word("log");
            skip_ws();
            expect('(');
            skip_ws();
            std::size_t arg_pos = pos_;
            mpz_class n = read_integer();
            skip_ws();
            expect(')');
            if (n <= 0) throw ParseError("log argument must be positive", arg_pos);
            HeightValue term = n <= mpz_class("18446744073709551615")
                                   ? HeightValue::log_integer(std::stoull(n.get_str()))
                                   : (is_prime(n) ? HeightValue::log_prime(n)
                                                  : throw ParseError("large log argument must be prime", arg_pos));
            for (const auto& [p, r] : term.terms()) add_term(terms, p, r * coeff * s);
        }
        if (first) throw ParseError("empty height expression", pos_);
        return HeightValue(std::move(terms));
    }

  private:
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void expect_word(const std::string& w) {
        if (text_.compare(pos_, w.size(), w) != 0) throw ParseError("expected '" + w + "'", pos_);
        pos_ += w.size();
    }
    mpz_class read_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return mpz_class(text_.substr(start, pos_ - start));
    }
    mpq_class read_rational() {
        mpz_class num = read_integer();
        mpz_class den = 1;
        if (pos_ < text_.size() && peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            den = read_integer();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    bool looks_numeric() const {
        if (text_.find("log") != std::string::npos) return false;
        return text_.find('.') != std::string::npos || text_.find('e') != std::string::npos;
    }
    HeightValue parse_decimal() {
        std::size_t idx = 0;
        double v = 0;
        try {
            v = std::stod(text_.substr(pos_), &idx);
        } catch (const std::exception&) {
            throw ParseError("malformed number", pos_);
        }
        std::size_t end = pos_ + idx;
        while (end < text_.size() && std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
        if (end != text_.size()) throw ParseError("trailing characters", end);
        return HeightValue(BigFloat(Real(v, 64)));
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

HeightValue parse_height_value(const std::string& text) { return HeightParser(text).parse(); }

}  // namespace htlab
