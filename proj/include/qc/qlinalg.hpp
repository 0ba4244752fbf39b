#pragma once

#include <optional>
#include <vector>

#include "qc/exact_real.hpp"
#include "qc/rational.hpp"

namespace qc::linalg {

// Dense matrix of ExactReals over one basis, column-major semantics kept
// explicit through accessors (columns are the natural unit for lattice bases).
class ExactMatrix {
public:
    ExactMatrix(BasisPtr basis, int rows, int cols);
    static ExactMatrix from_columns(const std::vector<ExactVector>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BasisPtr& basis() const { return basis_; }
    const ExactReal& at(int r, int c) const { return data_.at(r * cols_ + c); }
    ExactReal& at(int r, int c) { return data_.at(r * cols_ + c); }
    ExactVector column(int c) const;
    ExactMatrix transposed() const;

    // True when entries support exact field arithmetic (all rational, or the
    // basis carries a multiplication table).
    bool exact_field_available() const;

    std::vector<std::vector<double>> to_doubles() const;

private:
    BasisPtr basis_;
    int rows_, cols_;
    std::vector<ExactReal> data_;
};

// Determinant by fraction-free-ish Gaussian elimination with exact division.
// Throws if exact field arithmetic is unavailable.
ExactReal det(const ExactMatrix& m);

// Inverse; throws std::domain_error on singular input.
ExactMatrix inverse(const ExactMatrix& m);

// Solves M x = v exactly.
ExactVector solve(const ExactMatrix& m, const ExactVector& v);

// --- high-precision numeric fallback -----------------------------------------

struct NumericMatrix {
    int n = 0;
    std::vector<BigFloat> data;  // row-major
    BigFloat& at(int r, int c) { return data[r * n + c]; }
    const BigFloat& at(int r, int c) const { return data[r * n + c]; }
};

NumericMatrix to_numeric(const ExactMatrix& m);
BigFloat numeric_det(NumericMatrix m);
NumericMatrix numeric_inverse(NumericMatrix m);  // throws on |pivot| < 1e-30

// --- rational span machinery --------------------------------------------------

// Incrementally built row-reduced span of rational column vectors, with
// bookkeeping of how each echelon row combines the original columns. Supports
// the unique decomposition t = sum_c a_c v_c + r where the residual r vanishes
// on all pivot coordinates; r = 0 iff t lies in the span.
class RationalSpan {
public:
    explicit RationalSpan(int ambient_dimension);

    // Adds a column vector; returns its index.
    int add_column(const std::vector<Rational>& v);

    int rank() const { return static_cast<int>(echelon_.size()); }

    struct Decomposition {
        std::vector<Rational> coefficients;  // over the added columns
        std::vector<Rational> residual;      // zero on pivot coordinates
        bool in_span = false;
    };
    Decomposition decompose(const std::vector<Rational>& t) const;

private:
    struct Row {
        std::vector<Rational> vec;    // echelon row, Gauss-Jordan reduced
        std::vector<Rational> combo;  // combination of original columns
        int pivot = -1;
    };
    int dim_;
    int num_columns_ = 0;
    std::vector<Row> echelon_;
};

}  // namespace qc::linalg
