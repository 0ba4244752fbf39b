#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qc/rational.hpp"
#include "qc/real_basis.hpp"

namespace qc {

// A real number sum_i q_i * b_i with rational q_i over a declared basis.
// Equality, rationality and integrality are decidable coefficientwise; this is
// what makes tests like <theta, m> in Z exact.
class ExactReal {
public:
    ExactReal() = default;
    explicit ExactReal(BasisPtr basis);                          // zero
    ExactReal(BasisPtr basis, Rational rational_value);          // q * 1
    ExactReal(BasisPtr basis, std::vector<Rational> coeffs);

    static ExactReal generator(BasisPtr basis, int index, Rational scale = Rational(1));

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(i); }

    bool is_zero() const;
    bool is_rational() const;   // all coeffs beyond index 0 vanish
    bool is_integer() const;    // rational with denominator 1

    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator-() const;
    ExactReal scaled(const Rational& q) const;
    ExactReal operator*(const ExactReal& o) const;  // requires multiplication table
    ExactReal inverse() const;                      // requires table; throws on 0 / zero divisor
    bool operator==(const ExactReal& o) const;
    bool operator!=(const ExactReal& o) const { return !(*this == o); }

    // Rational / purely irrational parts: x = coeff(0)*1 + rest.
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }
    ExactReal irrational_part() const;

    BigFloat evaluate() const;          // kNumericPrecision bits
    double to_double() const;
    // Sign of the exact value: -1, 0, +1. Exact 0 is decided coefficientwise;
    // otherwise the high-precision evaluation decides (throws if it cannot).
    int sign() const;
    bool operator<(const ExactReal& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const ExactReal& o) const { return (*this - o).sign() <= 0; }

    // Fractional part of the value in [0,1), computed exactly on the rational
    // coefficient and in high precision on the rest. Phases of e^{2pi i x}
    // computed from this stay accurate for arbitrarily large x.
    double fractional_part_double() const;
    // True and sets frac to the exact fraction when the value is rational.
    bool rational_fraction(Rational& frac) const;

    std::string to_string() const;

private:
    void check_same_basis(const ExactReal& o) const;

    BasisPtr basis_;
    std::vector<Rational> coeffs_;
};

// Vector with ExactReal entries sharing one basis.
class ExactVector {
public:
    ExactVector() = default;
    ExactVector(BasisPtr basis, int dimension);  // zero vector
    explicit ExactVector(std::vector<ExactReal> entries);

    int dimension() const { return static_cast<int>(entries_.size()); }
    const BasisPtr& basis() const { return entries_.at(0).basis(); }
    const ExactReal& operator[](int i) const { return entries_.at(i); }
    ExactReal& operator[](int i) { return entries_.at(i); }
    const std::vector<ExactReal>& entries() const { return entries_; }

    ExactVector operator+(const ExactVector& o) const;
    ExactVector operator-(const ExactVector& o) const;
    ExactVector operator-() const;
    ExactVector scaled(const Rational& q) const;
    bool operator==(const ExactVector& o) const;
    bool operator!=(const ExactVector& o) const { return !(*this == o); }
    bool is_zero() const;

    // <v, m> for integer m, exact.
    ExactReal inner(const std::vector<long>& m) const;
    // <v, o> exact; entrywise products may need the multiplication table.
    ExactReal inner(const ExactVector& o) const;
    // Euclidean norm, numeric.
    double norm() const;
    std::vector<double> to_doubles() const;

    std::string to_string() const;

    // Deterministic total order (coefficientwise lexicographic); used for
    // dedup maps and stable enumeration output.
    static bool lex_less(const ExactVector& a, const ExactVector& b);

private:
    std::vector<ExactReal> entries_;
};

// inner_is_integer of the spec: exact <theta, m> and its integrality.
struct InnerIntegerResult {
    ExactReal value;
    bool is_integer = false;
};
InnerIntegerResult inner_is_integer(const ExactVector& theta, const std::vector<long>& m);

// e^{2 pi i x} from the exact fractional part. Quarter-turn rational phases
// (denominator dividing 4) come out bit-exact, so modulations like (-1)^n
// cancel exactly in sums.
std::complex<double> cis_2pi(const ExactReal& x);

// Re-expresses a value over another basis by matching generator tags; throws
// if a nonzero coefficient has no counterpart tag in the target basis.
ExactReal rebase(const ExactReal& x, const BasisPtr& target);
ExactVector rebase(const ExactVector& v, const BasisPtr& target);

}  // namespace qc
