#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qc/exact_real.hpp"

namespace qc {

// Finite truncation of a discrete point set: exactly the points of the
// underlying infinite set with numeric norm <= R_trunc. Points are stored
// deduplicated in lexicographic order, with cached double coordinates for
// numeric scans.
class PointSet {
public:
    PointSet(std::vector<ExactVector> points, double r_trunc, std::string provenance);

    int size() const { return static_cast<int>(points_.size()); }
    int dimension() const { return points_.empty() ? 0 : points_[0].dimension(); }
    double r_trunc() const { return r_trunc_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<ExactVector>& points() const { return points_; }
    const ExactVector& point(int i) const { return points_.at(i); }
    const std::vector<std::vector<double>>& numeric_points() const { return numeric_; }

    bool contains(const ExactVector& x) const;  // exact, binary search
    // Distance from an arbitrary probe to the nearest point, numeric.
    double nearest_distance(const std::vector<double>& probe) const;
    // Index of the nearest point; distance ties broken toward the
    // lexicographically smallest point.
    int nearest_index(const std::vector<double>& probe) const;

    PointSet translated(const ExactVector& shift) const;

private:
    std::vector<ExactVector> points_;
    std::vector<std::vector<double>> numeric_;
    std::vector<int> order_by_x0_;  // indices sorted by first coordinate
    double r_trunc_;
    std::string provenance_;
};

// inf of pairwise distances (numeric); throws if fewer than two points.
double min_gap(const PointSet& a);

// {a - a'} over all pairs (0 included), clipped to |h| <= clip_radius.
PointSet difference_set(const PointSet& a, double clip_radius);

// Lambda_h = {x in A : x + h in A}, edge-corrected to |x| <= R_trunc - |h|.
PointSet lambda_h(const PointSet& a, const ExactVector& h);

struct CoveringRadiusReport {
    double radius = 0;          // max over probes of distance to nearest point
    double probe_region = 0;    // probes ranged over B_{0.8 R_trunc}
    double pitch = 0;
    bool relatively_dense = true;  // false when radius >= probe_region / 2
};
CoveringRadiusReport covering_radius(const PointSet& a);

struct DensityReport {
    std::vector<double> radii;
    std::vector<double> d_minus, d_sharp, d_plus;
    std::vector<double> pitch_bound;  // declared per-radius translation error bound
    double extrapolated_minus = 0, extrapolated_sharp = 0, extrapolated_plus = 0;
    double pitch = 0;
};
// Finite-window estimators of the lower/upper uniform densities and the
// centered density. Radii must stay within 0.8 * R_trunc.
DensityReport densities(const PointSet& a, const std::vector<double>& radii);

double ball_volume(int dimension, double radius);

struct MeyerWitness {
    bool success = false;
    std::vector<ExactVector> residues;                 // F
    std::vector<std::pair<ExactVector, long>> histogram;
    std::string reason;
};
// Greedy residue cover for Lambda - Lambda inside Lambda + F. Success is a
// certificate on the truncation (|F| <= budget and the residue set stable
// under halving the truncation); failure is not a disproof.
MeyerWitness meyer_witness(const PointSet& a, int budget);

}  // namespace qc
