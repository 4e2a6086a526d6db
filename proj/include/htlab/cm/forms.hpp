#pragma once

#include <string>
#include <vector>

namespace htlab {

/// An imaginary quadratic discriminant D < 0, D = 0 or 1 mod 4.
struct Discriminant {
    long D = -3;
    bool fundamental = true;

    /// Throws std::invalid_argument unless D < 0 and D = 0, 1 mod 4.
    static Discriminant make(long D);
};

/// Fundamental: D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4
/// squarefree.
bool is_fundamental(long D);

/// Fundamental discriminants -3, -4, -7, ... down to -D_max, by |D|.
std::vector<long> fundamental_discriminants(long D_max);

/// Primitive positive definite form a x^2 + b xy + c y^2.
struct ReducedForm {
    long a = 1;
    long b = 0;
    long c = 1;

    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
    std::string to_string() const;
};

/// All reduced primitive forms of discriminant D: |b| <= a <= c,
/// b >= 0 when |b| = a or a = c. Sorted by a, then b.
std::vector<ReducedForm> reduced_forms(long D);

long class_number(long D);

}  // namespace htlab
