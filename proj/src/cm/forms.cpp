#include "htlab/cm/forms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace htlab {

namespace {

bool squarefree(long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

long mod4(long D) { return ((D % 4) + 4) % 4; }

}  // namespace

Discriminant Discriminant::make(long D) {
    if (D >= 0) throw std::invalid_argument("discriminant must be negative");
    if (mod4(D) != 0 && mod4(D) != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    return {D, is_fundamental(D)};
}

bool is_fundamental(long D) {
    if (D >= 0) return false;
    if (mod4(D) == 1) return squarefree(D);
    if (mod4(D) != 0) return false;
    long m = D / 4;
    long r = mod4(m);
    return (r == 2 || r == 3) && squarefree(m);
}

std::vector<long> fundamental_discriminants(long D_max) {
    std::vector<long> out;
    for (long n = 3; n <= D_max; ++n)
        if (is_fundamental(-n)) out.push_back(-n);
    return out;
}

std::string ReducedForm::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<ReducedForm> reduced_forms(long D) {
    Discriminant::make(D);
    std::vector<ReducedForm> out;
    const long n = -D;
    for (long a = 1; 3 * a * a <= n; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b % 2) + 2) % 2 != n % 2) continue;
            long num = b * b + n;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

long class_number(long D) { return static_cast<long>(reduced_forms(D).size()); }

}  // namespace htlab
