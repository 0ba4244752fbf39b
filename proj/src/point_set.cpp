#include "qc/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qc {

namespace {

double norm_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

PointSet::PointSet(std::vector<ExactVector> points, double r_trunc, std::string provenance)
    : points_(std::move(points)), r_trunc_(r_trunc), provenance_(std::move(provenance)) {
    if (r_trunc_ <= 0) throw std::invalid_argument("truncation radius must be positive");
    std::sort(points_.begin(), points_.end(), ExactVector::lex_less);
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    numeric_.reserve(points_.size());
    for (const auto& p : points_) {
        auto d = p.to_doubles();
        if (norm_of(d) > r_trunc_ + 1e-9)
            throw std::invalid_argument("point outside the declared truncation region");
        numeric_.push_back(std::move(d));
    }
    order_by_x0_.resize(points_.size());
    for (size_t i = 0; i < points_.size(); ++i) order_by_x0_[i] = static_cast<int>(i);
    std::sort(order_by_x0_.begin(), order_by_x0_.end(),
              [&](int i, int j) { return numeric_[i][0] < numeric_[j][0]; });
}

bool PointSet::contains(const ExactVector& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x, ExactVector::lex_less);
    return it != points_.end() && *it == x;
}

int PointSet::nearest_index(const std::vector<double>& probe) const {
    if (points_.empty()) throw std::logic_error("nearest_index on empty set");
    // Sweep outward from the first-coordinate rank of the probe.
    const auto& ord = order_by_x0_;
    int lo = static_cast<int>(std::lower_bound(ord.begin(), ord.end(), probe[0],
                                               [&](int i, double v) {
                                                   return numeric_[i][0] < v;
                                               }) -
                              ord.begin());
    int hi = lo - 1;
    double best = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    auto consider = [&](int idx) {
        const double d2 = dist2(numeric_[idx], probe);
        if (d2 < best - 1e-12 ||
            (d2 < best + 1e-12 &&
             (best_idx < 0 || ExactVector::lex_less(points_[idx], points_[best_idx])))) {
            best = std::min(best, d2);
            best_idx = idx;
        }
    };
    while (true) {
        const bool lo_ok = lo < size() &&
                           (best_idx < 0 ||
                            (numeric_[ord[lo]][0] - probe[0]) *
                                    (numeric_[ord[lo]][0] - probe[0]) <=
                                best + 1e-12);
        const bool hi_ok = hi >= 0 &&
                           (best_idx < 0 || (probe[0] - numeric_[ord[hi]][0]) *
                                                    (probe[0] - numeric_[ord[hi]][0]) <=
                                                best + 1e-12);
        if (!lo_ok && !hi_ok) break;
        if (lo_ok) consider(ord[lo++]);
        if (hi_ok) consider(ord[hi--]);
    }
    return best_idx;
}

double PointSet::nearest_distance(const std::vector<double>& probe) const {
    return std::sqrt(dist2(numeric_[nearest_index(probe)], probe));
}

PointSet PointSet::translated(const ExactVector& shift) const {
    std::vector<ExactVector> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p + shift);
    return PointSet(std::move(pts), r_trunc_ + shift.norm() + 1e-12,
                    provenance_ + " (translated)");
}

double min_gap(const PointSet& a) {
    if (a.size() < 2) throw std::invalid_argument("min_gap needs at least two points");
    const auto& pts = a.numeric_points();
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return pts[i][0] < pts[j][0]; });
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = i + 1; j < idx.size(); ++j) {
            const double dx = pts[idx[j]][0] - pts[idx[i]][0];
            if (dx * dx >= best) break;  // sorted on x0: nothing closer further out
            best = std::min(best, dist2(pts[idx[i]], pts[idx[j]]));
        }
    }
    return std::sqrt(best);
}

PointSet difference_set(const PointSet& a, double clip_radius) {
    if (clip_radius <= 0) throw std::invalid_argument("clip radius must be positive");
    const auto& pts = a.numeric_points();
    std::vector<ExactVector> diffs;
    const double r2 = clip_radius * clip_radius;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            if (dist2(pts[i], pts[j]) > r2 + 1e-9) continue;
            diffs.push_back(a.point(i) - a.point(j));
        }
    return PointSet(std::move(diffs), clip_radius + 1e-9, "difference_set(" + a.provenance() + ")");
}

PointSet lambda_h(const PointSet& a, const ExactVector& h) {
    const double hn = h.norm();
    const double limit = a.r_trunc() - hn;
    std::vector<ExactVector> out;
    for (int i = 0; i < a.size(); ++i) {
        if (norm_of(a.numeric_points()[i]) > limit) continue;
        if (a.contains(a.point(i) + h)) out.push_back(a.point(i));
    }
    if (limit <= 0) throw std::invalid_argument("shift too large for the truncation region");
    return PointSet(std::move(out), limit, "lambda_h(" + a.provenance() + ")");
}

double ball_volume(int dimension, double radius) {
    const double n = dimension;
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) *
           std::pow(radius, n);
}

namespace {

// Probe centers on a cubic grid of the given pitch inside a ball.
std::vector<std::vector<double>> probe_grid(int dim, double region_radius, double pitch) {
    std::vector<std::vector<double>> probes;
    const long k = static_cast<long>(std::floor(region_radius / pitch));
    std::vector<long> idx(dim, -k);
    while (true) {
        std::vector<double> p(dim);
        double s = 0;
        for (int i = 0; i < dim; ++i) {
            p[i] = idx[i] * pitch;
            s += p[i] * p[i];
        }
        if (s <= region_radius * region_radius) probes.push_back(std::move(p));
        int i = dim - 1;
        while (i >= 0 && idx[i] == k) idx[i--] = -k;
        if (i < 0) break;
        ++idx[i];
    }
    return probes;
}

}  // namespace

CoveringRadiusReport covering_radius(const PointSet& a) {
    if (a.size() == 0) throw std::invalid_argument("covering_radius on empty set");
    CoveringRadiusReport rep;
    rep.probe_region = 0.8 * a.r_trunc();
    rep.pitch = a.size() >= 2 ? min_gap(a) / 4.0 : rep.probe_region / 32.0;
    // keep the probe count sane in higher dimensions
    const double min_pitch = rep.probe_region / 400.0;
    if (rep.pitch < min_pitch) rep.pitch = min_pitch;
    double worst = 0;
    for (const auto& probe : probe_grid(a.dimension(), rep.probe_region, rep.pitch))
        worst = std::max(worst, a.nearest_distance(probe));
    rep.radius = worst;
    rep.relatively_dense = worst < 0.5 * rep.probe_region;
    return rep;
}

DensityReport densities(const PointSet& a, const std::vector<double>& radii) {
    DensityReport rep;
    if (radii.empty()) throw std::invalid_argument("no radii given");
    const int dim = a.dimension();
    rep.pitch = a.size() >= 2 ? min_gap(a) / 4.0 : 0.25;
    const double guard = 0.8 * a.r_trunc();

    // counting helper over the x0-sorted order
    const auto& pts = a.numeric_points();
    std::vector<std::pair<double, int>> by_x0;
    by_x0.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) by_x0.emplace_back(pts[i][0], static_cast<int>(i));
    std::sort(by_x0.begin(), by_x0.end());
    auto count_in_ball = [&](const std::vector<double>& c, double R) {
        const double r2 = R * R;
        auto lo = std::lower_bound(by_x0.begin(), by_x0.end(),
                                   std::make_pair(c[0] - R, -1));
        long n = 0;
        for (auto it = lo; it != by_x0.end() && it->first < c[0] + R; ++it)
            if (dist2(pts[it->second], c) < r2) ++n;
        return n;
    };

    for (double R : radii) {
        if (R <= 0 || R > guard)
            throw std::invalid_argument("window radius exceeds 0.8 * R_trunc guard");
        const double vol = ball_volume(dim, R);
        const double center_region = guard - R;
        if (center_region < 0) throw std::invalid_argument("no room for sliding centers");
        double pitch = rep.pitch;
        if (dim >= 2) pitch = std::max(pitch, center_region / 24.0);  // probe budget
        double dmin = std::numeric_limits<double>::infinity(), dmax = 0;
        if (center_region < pitch) {
            const long c0 = count_in_ball(std::vector<double>(dim, 0.0), R);
            dmin = dmax = c0 / vol;
        } else {
            for (const auto& c : probe_grid(dim, center_region, pitch)) {
                const long n = count_in_ball(c, R);
                dmin = std::min(dmin, n / vol);
                dmax = std::max(dmax, n / vol);
            }
        }
        const long centered = count_in_ball(std::vector<double>(dim, 0.0), R);
        rep.radii.push_back(R);
        rep.d_minus.push_back(dmin);
        rep.d_plus.push_back(dmax);
        rep.d_sharp.push_back(centered / vol);
        const double h = pitch;  // effective probe pitch for this radius
        rep.pitch_bound.push_back(
            dmax * (std::pow(R + h, dim) - std::pow(R - h, dim)) / std::pow(R, dim) +
            2.0 / vol);
    }
    size_t last = rep.radii.size() - 1;
    rep.extrapolated_minus = rep.d_minus[last];
    rep.extrapolated_sharp = rep.d_sharp[last];
    rep.extrapolated_plus = rep.d_plus[last];
    return rep;
}

MeyerWitness meyer_witness(const PointSet& a, int budget) {
    MeyerWitness out;
    if (a.size() < 2) {
        out.reason = "too few points";
        return out;
    }
    auto cov = covering_radius(a);
    if (!cov.relatively_dense) {
        out.reason = "set fails the relative denseness check";
        return out;
    }

    auto residues_for = [&](const PointSet& set) {
        std::map<std::vector<std::string>, std::pair<ExactVector, long>> hist;
        PointSet diffs = difference_set(set, 0.4 * set.r_trunc());
        for (int i = 0; i < diffs.size(); ++i) {
            const ExactVector& h = diffs.point(i);
            const int nearest = set.nearest_index(diffs.numeric_points()[i]);
            ExactVector r = h - set.point(nearest);
            std::vector<std::string> key;
            for (const auto& e : r.entries()) key.push_back(e.to_string());
            auto it = hist.find(key);
            if (it == hist.end())
                hist.emplace(std::move(key), std::make_pair(std::move(r), 1L));
            else
                ++it->second.second;
        }
        return hist;
    };

    auto full = residues_for(a);
    for (const auto& [key, val] : full) out.histogram.push_back(val);
    if (static_cast<int>(full.size()) > budget) {
        out.reason = "residue count " + std::to_string(full.size()) + " exceeds budget " +
                     std::to_string(budget);
        return out;
    }

    // self-consistency: the same residues must appear from the halved truncation
    std::vector<ExactVector> half_points;
    for (int i = 0; i < a.size(); ++i)
        if (norm_of(a.numeric_points()[i]) <= a.r_trunc() / 2) half_points.push_back(a.point(i));
    if (half_points.size() < 2) {
        out.reason = "halved truncation too small for the stability check";
        return out;
    }
    auto half = residues_for(PointSet(std::move(half_points), a.r_trunc() / 2, "half"));
    bool stable = full.size() == half.size();
    if (stable)
        for (const auto& [key, val] : half)
            if (full.find(key) == full.end()) { stable = false; break; }
    if (!stable) {
        out.reason = "residues do not stabilize under halving the truncation";
        return out;
    }
    for (const auto& [key, val] : full) out.residues.push_back(val.first);
    out.success = true;
    return out;
}

}  // namespace qc
