#include "qc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qc {

namespace {

double norm_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double r_trunc, std::string provenance)
    : r_trunc_(r_trunc), provenance_(std::move(provenance)) {
    if (r_trunc_ <= 0) throw std::invalid_argument("truncation radius must be positive");
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        return ExactVector::lex_less(a.point, b.point);
    });
    for (auto& a : atoms) {
        if (!atoms_.empty() && atoms_.back().point == a.point) {
            atoms_.back().weight += a.weight;
            continue;
        }
        atoms_.push_back(std::move(a));
    }
    std::erase_if(atoms_, [](const Atom& a) { return a.weight == std::complex<double>(0.0); });
    numeric_.reserve(atoms_.size());
    weights_.reserve(atoms_.size());
    for (const auto& a : atoms_) {
        auto d = a.point.to_doubles();
        if (norm_of(d) > r_trunc_ + 1e-9)
            throw std::invalid_argument("atom outside the declared truncation region");
        numeric_.push_back(std::move(d));
        weights_.push_back(a.weight);
    }
}

double AtomicMeasure::mass() const {
    double s = 0;
    for (const auto& w : weights_) s += std::abs(w);
    return s;
}

double AtomicMeasure::sup_weight() const {
    double s = 0;
    for (const auto& w : weights_) s = std::max(s, std::abs(w));
    return s;
}

std::complex<double> AtomicMeasure::weight_at(const ExactVector& x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, const ExactVector& v) {
                                   return ExactVector::lex_less(a.point, v);
                               });
    if (it != atoms_.end() && it->point == x) return it->weight;
    return {0.0, 0.0};
}

PointSet AtomicMeasure::support() const {
    std::vector<ExactVector> pts;
    pts.reserve(atoms_.size());
    for (const auto& a : atoms_) pts.push_back(a.point);
    return PointSet(std::move(pts), r_trunc_, "supp(" + provenance_ + ")");
}

AtomicMeasure AtomicMeasure::shifted(const ExactVector& t) const {
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back({a.point + t, a.weight});
    return AtomicMeasure(std::move(out), r_trunc_ + t.norm() + 1e-12, provenance_);
}

AtomicMeasure AtomicMeasure::modulated(const ExactVector& omega) const {
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_)
        out.push_back({a.point, a.weight * cis_2pi(omega.inner(a.point))});
    return AtomicMeasure(std::move(out), r_trunc_, provenance_);
}

AtomicMeasure AtomicMeasure::scaled(std::complex<double> c) const {
    if (c == std::complex<double>(0.0))
        throw std::invalid_argument("scaling a measure by zero leaves no atoms");
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back({a.point, a.weight * c});
    return AtomicMeasure(std::move(out), r_trunc_, provenance_);
}

AtomicMeasure AtomicMeasure::plus(const AtomicMeasure& other) const {
    if (dimension() != other.dimension() && size() && other.size())
        throw std::invalid_argument("dimension mismatch in measure sum");
    std::vector<Atom> out;
    out.reserve(atoms_.size() + other.atoms_.size());
    for (const auto& a : atoms_) out.push_back(a);
    for (const auto& a : other.atoms_) out.push_back(a);
    AtomicMeasure merged(std::move(out), std::min(r_trunc_, other.r_trunc_), provenance_);
    std::vector<Atom> pruned;
    pruned.reserve(merged.atoms_.size());
    for (const auto& a : merged.atoms_)
        if (std::abs(a.weight) > kZeroPruneThreshold) pruned.push_back(a);
    return AtomicMeasure(std::move(pruned), merged.r_trunc_, provenance_);
}

AtomicMeasure autocorrelation_measure(const AtomicMeasure& mu, const ExactVector& h) {
    const double limit = mu.r_trunc() - h.norm();
    if (limit <= 0) throw std::invalid_argument("shift exceeds the truncation region");
    std::vector<AtomicMeasure::Atom> out;
    for (int i = 0; i < mu.size(); ++i) {
        if (norm_of(mu.numeric_points()[i]) > limit) continue;
        const auto w2 = mu.weight_at(mu.atoms()[i].point + h);
        if (w2 == std::complex<double>(0.0)) continue;
        out.push_back({mu.atoms()[i].point, mu.atoms()[i].weight * std::conj(w2)});
    }
    if (out.empty())
        throw std::invalid_argument("Lambda_h is empty after edge correction");
    return AtomicMeasure(std::move(out), limit, "autocorr(" + mu.provenance() + ")");
}

MeasureValidation validate(const AtomicMeasure& mu) {
    MeasureValidation rep;
    if (mu.size() == 0) throw std::invalid_argument("empty measure");
    rep.is_positive = true;
    for (const auto& w : mu.weights()) {
        if (!(w.real() >= 0.0) ||
            std::abs(w.imag()) > 1e-12 * std::max(1.0, std::abs(w.real()))) {
            rep.is_positive = false;
            break;
        }
    }
    rep.sup_weight = mu.sup_weight();

    // least squares on log|w| vs log(1 + |x|)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (int i = 0; i < mu.size(); ++i) {
        const double a = std::abs(mu.weights()[i]);
        if (a <= 0) continue;
        const double x = std::log(1.0 + norm_of(mu.numeric_points()[i]));
        const double y = std::log(a);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2 && sxx * n - sx * sx > 1e-12) {
        rep.growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.growth_log_c = (sy - rep.growth_exponent * sx) / n;
    }
    rep.bounded = std::abs(rep.growth_exponent) < 0.1;
    return rep;
}

AtomicMeasure unit_measure(const PointSet& points) {
    std::vector<AtomicMeasure::Atom> atoms;
    atoms.reserve(points.size());
    for (int i = 0; i < points.size(); ++i) atoms.push_back({points.point(i), {1.0, 0.0}});
    return AtomicMeasure(std::move(atoms), points.r_trunc(), points.provenance());
}

}  // namespace qc
