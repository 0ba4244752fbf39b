#include "qc/qlinalg.hpp"

#include <stdexcept>

namespace qc::linalg {

ExactMatrix::ExactMatrix(BasisPtr basis, int rows, int cols)
    : basis_(std::move(basis)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    data_.assign(static_cast<size_t>(rows) * cols, ExactReal(basis_));
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& columns) {
    if (columns.empty()) throw std::invalid_argument("no columns");
    const int rows = columns[0].dimension();
    ExactMatrix m(columns[0].basis(), rows, static_cast<int>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dimension() != rows) throw std::invalid_argument("ragged columns");
        for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = columns[c][r];
    }
    return m;
}

ExactVector ExactMatrix::column(int c) const {
    std::vector<ExactReal> e;
    e.reserve(rows_);
    for (int r = 0; r < rows_; ++r) e.push_back(at(r, c));
    return ExactVector(std::move(e));
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(basis_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool ExactMatrix::exact_field_available() const {
    if (basis_->has_multiplication_table()) return true;
    for (const auto& x : data_)
        if (!x.is_rational()) return false;
    return true;
}

std::vector<std::vector<double>> ExactMatrix::to_doubles() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c).to_double();
    return out;
}

namespace {

// Gauss-Jordan on [M | rhs...]; returns false if singular.
bool eliminate(ExactMatrix& m, ExactMatrix& rhs) {
    const int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) return false;
        if (pivot != c) {
            for (int k = 0; k < n; ++k) std::swap(m.at(c, k), m.at(pivot, k));
            for (int k = 0; k < rhs.cols(); ++k) std::swap(rhs.at(c, k), rhs.at(pivot, k));
        }
        const ExactReal inv = m.at(c, c).inverse();
        for (int k = 0; k < n; ++k) m.at(c, k) = m.at(c, k) * inv;
        for (int k = 0; k < rhs.cols(); ++k) rhs.at(c, k) = rhs.at(c, k) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c).is_zero()) continue;
            const ExactReal f = m.at(r, c);
            for (int k = 0; k < n; ++k) m.at(r, k) = m.at(r, k) - f * m.at(c, k);
            for (int k = 0; k < rhs.cols(); ++k) rhs.at(r, k) = rhs.at(r, k) - f * rhs.at(c, k);
        }
    }
    return true;
}

}  // namespace

ExactReal det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    if (!m.exact_field_available())
        throw std::logic_error("exact determinant unavailable for this basis");
    ExactMatrix a = m;
    const int n = a.rows();
    ExactReal d(m.basis(), Rational(1));
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) return ExactReal(m.basis());  // singular -> 0
        if (pivot != c) {
            for (int k = 0; k < n; ++k) std::swap(a.at(c, k), a.at(pivot, k));
            d = -d;
        }
        d = d * a.at(c, c);
        const ExactReal inv = a.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            const ExactReal f = a.at(r, c) * inv;
            for (int k = c; k < n; ++k) a.at(r, k) = a.at(r, k) - f * a.at(c, k);
        }
    }
    return d;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    if (!m.exact_field_available())
        throw std::logic_error("exact inverse unavailable for this basis");
    ExactMatrix a = m;
    ExactMatrix id(m.basis(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) id.at(i, i) = ExactReal(m.basis(), Rational(1));
    if (!eliminate(a, id)) throw std::domain_error("singular matrix");
    return id;
}

ExactVector solve(const ExactMatrix& m, const ExactVector& v) {
    ExactMatrix a = m;
    ExactMatrix rhs(m.basis(), m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r) rhs.at(r, 0) = v[r];
    if (!eliminate(a, rhs)) throw std::domain_error("singular matrix");
    return rhs.column(0);
}

NumericMatrix to_numeric(const ExactMatrix& m) {
    NumericMatrix out;
    out.n = m.rows();
    out.data.assign(static_cast<size_t>(out.n) * out.n, BigFloat(0, kNumericPrecision));
    for (int r = 0; r < out.n; ++r)
        for (int c = 0; c < out.n; ++c) out.at(r, c) = m.at(r, c).evaluate();
    return out;
}

BigFloat numeric_det(NumericMatrix a) {
    const int n = a.n;
    BigFloat d(1, kNumericPrecision);
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (abs(a.at(r, c)) > abs(a.at(pivot, c))) pivot = r;
        if (pivot != c) {
            for (int k = 0; k < n; ++k) std::swap(a.at(c, k), a.at(pivot, k));
            d = -d;
        }
        if (abs(a.at(c, c)) < 1e-30) return BigFloat(0, kNumericPrecision);
        d *= a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            BigFloat f(0, kNumericPrecision);
            f = a.at(r, c) / a.at(c, c);
            for (int k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
        }
    }
    return d;
}

NumericMatrix numeric_inverse(NumericMatrix a) {
    const int n = a.n;
    NumericMatrix inv;
    inv.n = n;
    inv.data.assign(static_cast<size_t>(n) * n, BigFloat(0, kNumericPrecision));
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (abs(a.at(r, c)) > abs(a.at(pivot, c))) pivot = r;
        if (pivot != c)
            for (int k = 0; k < n; ++k) {
                std::swap(a.at(c, k), a.at(pivot, k));
                std::swap(inv.at(c, k), inv.at(pivot, k));
            }
        if (abs(a.at(c, c)) < 1e-30) throw std::domain_error("numerically singular matrix");
        BigFloat p(0, kNumericPrecision);
        p = a.at(c, c);
        for (int k = 0; k < n; ++k) {
            a.at(c, k) /= p;
            inv.at(c, k) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            BigFloat f(0, kNumericPrecision);
            f = a.at(r, c);
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) {
                a.at(r, k) -= f * a.at(c, k);
                inv.at(r, k) -= f * inv.at(c, k);
            }
        }
    }
    return inv;
}

// --- RationalSpan -------------------------------------------------------------

RationalSpan::RationalSpan(int ambient_dimension) : dim_(ambient_dimension) {
    if (dim_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
}

int RationalSpan::add_column(const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("wrong vector size");
    const int index = num_columns_++;

    std::vector<Rational> vec = v;
    std::vector<Rational> combo(num_columns_, Rational(0));
    combo[index] = 1;
    // existing rows have shorter combos; pad lazily below
    for (auto& row : echelon_) row.combo.resize(num_columns_, Rational(0));

    for (const auto& row : echelon_) {
        const Rational c = vec[row.pivot];
        if (c == 0) continue;
        for (int k = 0; k < dim_; ++k) vec[k] -= c * row.vec[k];
        for (int k = 0; k < num_columns_; ++k) combo[k] -= c * row.combo[k];
    }
    int pivot = -1;
    for (int k = 0; k < dim_; ++k)
        if (vec[k] != 0) { pivot = k; break; }
    if (pivot < 0) return index;  // dependent column

    const Rational inv = Rational(1) / vec[pivot];
    for (int k = 0; k < dim_; ++k) vec[k] *= inv;
    for (int k = 0; k < num_columns_; ++k) combo[k] *= inv;
    // Gauss-Jordan: clear this pivot from existing rows.
    for (auto& row : echelon_) {
        const Rational c = row.vec[pivot];
        if (c == 0) continue;
        for (int k = 0; k < dim_; ++k) row.vec[k] -= c * vec[k];
        for (int k = 0; k < num_columns_; ++k) row.combo[k] -= c * combo[k];
    }
    echelon_.push_back(Row{std::move(vec), std::move(combo), pivot});
    return index;
}

RationalSpan::Decomposition RationalSpan::decompose(const std::vector<Rational>& t) const {
    if (static_cast<int>(t.size()) != dim_) throw std::invalid_argument("wrong vector size");
    Decomposition d;
    d.coefficients.assign(num_columns_, Rational(0));
    d.residual = t;
    for (const auto& row : echelon_) {
        const Rational c = d.residual[row.pivot];
        if (c == 0) continue;
        for (int k = 0; k < dim_; ++k) d.residual[k] -= c * row.vec[k];
        for (size_t k = 0; k < row.combo.size(); ++k) d.coefficients[k] += c * row.combo[k];
    }
    d.in_span = true;
    for (const auto& r : d.residual)
        if (r != 0) { d.in_span = false; break; }
    return d;
}

}  // namespace qc::linalg
