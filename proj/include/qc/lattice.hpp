#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/exact_real.hpp"
#include "qc/qlinalg.hpp"

namespace qc {

// Full-rank lattice L = B * Z^n, columns of B are the generators.
//
// Lattices with rational or table-equipped entries support exact determinant,
// dual, membership and coordinates. Otherwise those fall back to 256-bit
// numerics and results carry an "inexact" flag.
class Lattice {
public:
    explicit Lattice(linalg::ExactMatrix basis_columns, bool inexact = false);

    static Lattice integers(BasisPtr basis, int dimension);          // Z^n
    static Lattice diagonal(BasisPtr basis, std::vector<Rational>);  // diag(q1..qn)
    // Fibonacci projection lattice in R^2 over the golden basis:
    // columns (1,1) and (tau, 1-tau).
    static Lattice fibonacci();

    int dimension() const { return basis_.rows(); }
    const linalg::ExactMatrix& basis_matrix() const { return basis_; }
    bool exact() const { return exact_; }
    bool inexact_flag() const { return inexact_; }

    // |det(B)|. Exact value present iff exact().
    const std::optional<ExactReal>& det_exact() const { return det_exact_; }
    double det_numeric() const { return det_numeric_; }

    Lattice dual() const;

    // B * a for integer coordinates a.
    ExactVector point_at(const std::vector<long>& coords) const;
    // Exact coordinates B^{-1} x; throws if exact inverse unavailable.
    ExactVector coordinates(const ExactVector& x) const;
    // Numeric coordinates, always available.
    std::vector<double> coordinates_numeric(const std::vector<double>& x) const;

    bool contains(const ExactVector& x) const;
    // Canonical representative of theta modulo the lattice (rounds the rational
    // parts of the exact coordinates).
    ExactVector reduce_mod(const ExactVector& theta) const;

    bool operator==(const Lattice& o) const { return equal_basis(o); }

private:
    bool equal_basis(const Lattice& o) const;

    linalg::ExactMatrix basis_;
    bool exact_;
    bool inexact_;
    std::optional<ExactReal> det_exact_;
    double det_numeric_;
    std::optional<linalg::ExactMatrix> inverse_;       // exact inverse when available
    std::vector<std::vector<double>> inverse_numeric_;
};

// Lattice cosets: offsets distinct modulo the lattice. Offsets are stored as
// canonical representatives.
class CosetSystem {
public:
    CosetSystem(Lattice lattice, std::vector<ExactVector> offsets);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<ExactVector>& offsets() const { return offsets_; }
    int count() const { return static_cast<int>(offsets_.size()); }

private:
    Lattice lattice_;
    std::vector<ExactVector> offsets_;
};

struct EnumeratedPoint {
    ExactVector point;
    std::vector<long> coords;  // integer lattice coordinates
    int coset = 0;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// All points of U_j (L + theta_j) with numeric norm <= R, in lexicographic
// order of the integer coordinates, coset index as tie-break. Throws when the
// result would exceed `cap`.
std::vector<EnumeratedPoint> enumerate_in_ball(const Lattice& lattice, double radius,
                                               std::size_t cap = kDefaultEnumerationCap);
std::vector<EnumeratedPoint> enumerate_in_ball(const CosetSystem& cosets, double radius,
                                               std::size_t cap = kDefaultEnumerationCap);

// Corollary-style refinement (L, F) -> (L', F') with L+F contained in L'+F',
// L' = (1/q) L, and Z[F'] meeting L' only at 0. Requires a rational L.
struct LatticeRefinement {
    Lattice refined;                  // L'
    std::vector<ExactVector> residues;  // F' (deduplicated)
    BigInt q;
    struct Assignment {
        ExactVector rational_shift;  // u_j, in (1/q) L
        int residue_index;           // w_j position in residues
    };
    std::vector<Assignment> mapping;  // one per input offset
};
LatticeRefinement refine_lattice(const Lattice& lattice, const std::vector<ExactVector>& offsets);

// Witness check for Z[F'] /\ L' = {0}: every nonzero integer combination of
// the residues with coefficients bounded by `budget` stays outside the lattice.
bool verify_independence(const Lattice& refined, const std::vector<ExactVector>& residues,
                         long budget);

// CLI shorthand: "Z", "Z2", ..., "diag:2,3", "diag:1/2", "fib".
Lattice parse_lattice_shorthand(const std::string& text);

}  // namespace qc
