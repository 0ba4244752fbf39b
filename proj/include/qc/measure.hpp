#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qc/exact_real.hpp"
#include "qc/point_set.hpp"

namespace qc {

// Finite truncation of an atomic measure sum mu(x) delta_x with uniformly
// discrete support: exact support points, complex double weights.
class AtomicMeasure {
public:
    struct Atom {
        ExactVector point;
        std::complex<double> weight;
    };

    // Duplicate points are merged by adding weights; exact zeros are dropped.
    AtomicMeasure(std::vector<Atom> atoms, double r_trunc,
                  std::string provenance = "measure");

    int size() const { return static_cast<int>(atoms_.size()); }
    int dimension() const { return atoms_.empty() ? 0 : atoms_[0].point.dimension(); }
    double r_trunc() const { return r_trunc_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<std::vector<double>>& numeric_points() const { return numeric_; }
    const std::vector<std::complex<double>>& weights() const { return weights_; }

    double mass() const;        // sum |w|
    double sup_weight() const;  // max |w|
    // Weight at an exact point, 0 if absent.
    std::complex<double> weight_at(const ExactVector& x) const;
    PointSet support() const;

    AtomicMeasure shifted(const ExactVector& t) const;
    // Multiplies the weight at x by e^{2 pi i <omega, x>}.
    AtomicMeasure modulated(const ExactVector& omega) const;
    AtomicMeasure scaled(std::complex<double> c) const;
    // Merged supports, added weights; results below the zero-pruning threshold
    // are dropped. The truncation region shrinks to the common one.
    AtomicMeasure plus(const AtomicMeasure& other) const;

    static constexpr double kZeroPruneThreshold = 1e-13;

private:
    std::vector<Atom> atoms_;  // sorted lexicographically by point
    std::vector<std::vector<double>> numeric_;
    std::vector<std::complex<double>> weights_;
    double r_trunc_;
    std::string provenance_;
};

// mu_h = sum over Lambda_h of mu(x) * conj(mu(x+h)) delta_x, edge-corrected.
// Throws if the corrected support is empty.
AtomicMeasure autocorrelation_measure(const AtomicMeasure& mu, const ExactVector& h);

struct MeasureValidation {
    bool is_positive = false;
    double sup_weight = 0;
    double growth_log_c = 0;  // least-squares fit log|w| = log C + N log(1+|x|)
    double growth_exponent = 0;
    bool bounded = false;  // growth exponent indistinguishable from 0
};
MeasureValidation validate(const AtomicMeasure& mu);

// Comb measure sum delta_x over a point set, unit weights.
AtomicMeasure unit_measure(const PointSet& points);

}  // namespace qc
