#include "qc/exact_real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qc {

ExactReal::ExactReal(BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw std::invalid_argument("null basis");
    coeffs_.assign(basis_->size(), Rational(0));
}

ExactReal::ExactReal(BasisPtr basis, Rational rational_value) : ExactReal(std::move(basis)) {
    coeffs_[0] = std::move(rational_value);
}

ExactReal::ExactReal(BasisPtr basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (!basis_) throw std::invalid_argument("null basis");
    if (static_cast<int>(coeffs_.size()) != basis_->size())
        throw std::invalid_argument("coefficient count does not match basis size");
}

ExactReal ExactReal::generator(BasisPtr basis, int index, Rational scale) {
    ExactReal x(std::move(basis));
    x.coeffs_.at(index) = std::move(scale);
    return x;
}

void ExactReal::check_same_basis(const ExactReal& o) const {
    if (basis_.get() != o.basis_.get())
        throw std::invalid_argument("operands use different real bases");
}

bool ExactReal::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool ExactReal::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool ExactReal::is_integer() const {
    return is_rational() && qc::is_integer(coeffs_[0]);
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    check_same_basis(o);
    ExactReal r(basis_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

ExactReal ExactReal::operator-(const ExactReal& o) const {
    check_same_basis(o);
    ExactReal r(basis_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

ExactReal ExactReal::operator-() const {
    ExactReal r(basis_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

ExactReal ExactReal::scaled(const Rational& q) const {
    ExactReal r(basis_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * q;
    return r;
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
    check_same_basis(o);
    // Products with a rational operand stay in the span with no table.
    if (o.is_rational()) return scaled(o.rational_part());
    if (is_rational()) return o.scaled(rational_part());
    if (!basis_->has_multiplication_table())
        throw std::logic_error("basis '" + basis_->name() +
                               "' has no multiplication table; use numeric evaluation instead");
    const int n = basis_->size();
    ExactReal r(basis_);
    for (int i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            const Rational w = coeffs_[i] * o.coeffs_[j];
            if (i == 0) {
                r.coeffs_[j] += w;
            } else if (j == 0) {
                r.coeffs_[i] += w;
            } else {
                const auto& prod = basis_->product(i, j);
                for (int k = 0; k < n; ++k)
                    if (prod[k] != 0) r.coeffs_[k] += w * prod[k];
            }
        }
    }
    return r;
}

ExactReal ExactReal::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return ExactReal(basis_, Rational(1) / rational_part());
    if (!basis_->has_multiplication_table())
        throw std::logic_error("exact inverse needs a multiplication table");
    const int n = basis_->size();

    // Multiplication-by-x matrix M over Q: (x * y)_k = sum_j M[k][j] y_j.
    // Solve M y = e_0 by Gaussian elimination.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int j = 0; j < n; ++j) {
        ExactReal col = *this * generator(basis_, j);
        for (int k = 0; k < n; ++k) m[k][j] = col.coeffs_[k];
    }
    m[0][n] = 1;

    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("element is a zero divisor; no exact inverse");
        std::swap(m[c], m[pivot]);
        const Rational p = m[c][c];
        for (int k = c; k <= n; ++k) m[c][k] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> y(n);
    for (int k = 0; k < n; ++k) y[k] = m[k][n];
    return ExactReal(basis_, std::move(y));
}

bool ExactReal::operator==(const ExactReal& o) const {
    return basis_.get() == o.basis_.get() && coeffs_ == o.coeffs_;
}

ExactReal ExactReal::irrational_part() const {
    ExactReal r = *this;
    if (!r.coeffs_.empty()) r.coeffs_[0] = 0;
    return r;
}

BigFloat ExactReal::evaluate() const {
    BigFloat acc(0, kNumericPrecision);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        BigFloat term(0, kNumericPrecision);
        term = to_bigfloat(coeffs_[i]) * basis_->generator(static_cast<int>(i)).value;
        acc += term;
    }
    return acc;
}

double ExactReal::to_double() const { return evaluate().get_d(); }

int ExactReal::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coeffs_[0]);
    BigFloat v = evaluate();
    // Scale of the coefficients involved; a nonzero value this far below it
    // would defeat 256-bit evaluation, which desk-scale inputs never do.
    BigFloat scale(1, kNumericPrecision);
    for (const auto& c : coeffs_) {
        BigFloat a = abs(to_bigfloat(c));
        if (a > scale) scale = a;
    }
    BigFloat threshold(0, kNumericPrecision);
    mpf_div_2exp(threshold.get_mpf_t(), scale.get_mpf_t(), 180);
    if (abs(v) <= threshold)
        throw std::runtime_error("sign(): value too close to zero for numeric precision");
    return v > 0 ? 1 : -1;
}

double ExactReal::fractional_part_double() const {
    // Rational coefficient reduced mod 1 exactly; the rest at high precision.
    BigFloat acc(0, kNumericPrecision);
    acc = to_bigfloat(rational_mod1(rational_part()));
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        acc += to_bigfloat(coeffs_[i]) * basis_->generator(static_cast<int>(i)).value;
    }
    BigFloat fl(0, kNumericPrecision);
    mpf_floor(fl.get_mpf_t(), acc.get_mpf_t());
    acc -= fl;
    return acc.get_d();
}

bool ExactReal::rational_fraction(Rational& frac) const {
    if (!is_rational()) return false;
    frac = rational_mod1(coeffs_[0]);
    return true;
}

std::string ExactReal::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*" << basis_->generator(static_cast<int>(i)).tag;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// --- ExactVector -------------------------------------------------------------

ExactVector::ExactVector(BasisPtr basis, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    entries_.assign(dimension, ExactReal(basis));
}

ExactVector::ExactVector(std::vector<ExactReal> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("empty vector");
    for (const auto& e : entries_)
        if (e.basis().get() != entries_[0].basis().get())
            throw std::invalid_argument("vector entries use different bases");
}

ExactVector ExactVector::operator+(const ExactVector& o) const {
    if (dimension() != o.dimension()) throw std::invalid_argument("dimension mismatch");
    std::vector<ExactReal> e;
    e.reserve(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] + o.entries_[i]);
    return ExactVector(std::move(e));
}

ExactVector ExactVector::operator-(const ExactVector& o) const {
    if (dimension() != o.dimension()) throw std::invalid_argument("dimension mismatch");
    std::vector<ExactReal> e;
    e.reserve(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] - o.entries_[i]);
    return ExactVector(std::move(e));
}

ExactVector ExactVector::operator-() const {
    std::vector<ExactReal> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(-x);
    return ExactVector(std::move(e));
}

ExactVector ExactVector::scaled(const Rational& q) const {
    std::vector<ExactReal> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(x.scaled(q));
    return ExactVector(std::move(e));
}

bool ExactVector::operator==(const ExactVector& o) const { return entries_ == o.entries_; }

bool ExactVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ExactReal ExactVector::inner(const std::vector<long>& m) const {
    if (m.size() != entries_.size()) throw std::invalid_argument("dimension mismatch");
    ExactReal acc(basis());
    for (size_t i = 0; i < entries_.size(); ++i)
        if (m[i] != 0) acc = acc + entries_[i].scaled(Rational(m[i]));
    return acc;
}

ExactReal ExactVector::inner(const ExactVector& o) const {
    if (o.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");
    ExactReal acc(basis());
    for (size_t i = 0; i < entries_.size(); ++i) acc = acc + entries_[i] * o.entries_[i];
    return acc;
}

double ExactVector::norm() const {
    double s = 0;
    for (const auto& e : entries_) {
        double v = e.to_double();
        s += v * v;
    }
    return std::sqrt(s);
}

std::vector<double> ExactVector::to_doubles() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.to_double());
    return out;
}

std::string ExactVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].to_string();
    }
    os << ")";
    return os.str();
}

bool ExactVector::lex_less(const ExactVector& a, const ExactVector& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    for (int i = 0; i < a.dimension(); ++i) {
        const auto& ca = a[i].coeffs();
        const auto& cb = b[i].coeffs();
        for (size_t k = 0; k < ca.size(); ++k) {
            const int c = cmp(ca[k], cb[k]);
            if (c != 0) return c < 0;
        }
    }
    return false;
}

InnerIntegerResult inner_is_integer(const ExactVector& theta, const std::vector<long>& m) {
    InnerIntegerResult r{theta.inner(m), false};
    r.is_integer = r.value.is_integer();
    return r;
}

ExactReal rebase(const ExactReal& x, const BasisPtr& target) {
    if (x.basis().get() == target.get()) return x;
    ExactReal out(target);
    const auto target_tags = target->tags();
    for (int i = 0; i < x.basis()->size(); ++i) {
        if (x.coeff(i) == 0) continue;
        const std::string& tag = x.basis()->generator(i).tag;
        int j = -1;
        for (size_t k = 0; k < target_tags.size(); ++k)
            if (target_tags[k] == tag) { j = static_cast<int>(k); break; }
        if (j < 0)
            throw std::invalid_argument("cannot rebase: generator '" + tag +
                                        "' missing from basis '" + target->name() + "'");
        out = out + ExactReal::generator(target, j, x.coeff(i));
    }
    return out;
}

ExactVector rebase(const ExactVector& v, const BasisPtr& target) {
    std::vector<ExactReal> entries;
    entries.reserve(v.dimension());
    for (int i = 0; i < v.dimension(); ++i) entries.push_back(rebase(v[i], target));
    return ExactVector(std::move(entries));
}

std::complex<double> cis_2pi(const ExactReal& x) {
    Rational f;
    if (x.rational_fraction(f)) {
        const Rational quarter = f * 4;
        if (is_integer(quarter)) {
            switch (quarter.get_num().get_si() & 3) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        const double fd = f.get_d();
        return {std::cos(2 * M_PI * fd), std::sin(2 * M_PI * fd)};
    }
    const double fd = x.fractional_part_double();
    return {std::cos(2 * M_PI * fd), std::sin(2 * M_PI * fd)};
}

}  // namespace qc
