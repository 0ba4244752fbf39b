#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/lattice.hpp"
#include "qc/point_set.hpp"

namespace qc {

// Bounded window in R^m with measure-zero boundary. Boxes are half-open
// [lo, hi) per axis with exact endpoints; balls use numeric membership with a
// 1e-12 boundary tolerance.
class Window {
public:
    static Window box(std::vector<std::pair<ExactReal, ExactReal>> axes);
    static Window interval(ExactReal lo, ExactReal hi);  // 1-D box
    static Window ball(std::vector<double> center, double radius);

    int dim() const;
    bool is_box() const { return kind_ == Kind::Box; }
    double measure() const;
    // exact for boxes; numeric for balls. boundary_hit is set when the point
    // is within 1e-12 of the boundary.
    bool contains(const ExactVector& y, bool* boundary_hit = nullptr) const;
    Window translated(const ExactVector& shift) const;
    // numeric bounding box (lo, hi) per axis
    std::vector<std::pair<double, double>> bounds() const;

    const std::vector<std::pair<ExactReal, ExactReal>>& box_axes() const { return axes_; }
    const std::vector<double>& ball_center() const { return center_; }
    double ball_radius() const { return radius_; }

private:
    enum class Kind { Box, Ball };
    Kind kind_ = Kind::Box;
    std::vector<std::pair<ExactReal, ExactReal>> axes_;  // box
    std::vector<double> center_;                         // ball
    double radius_ = 0;
};

// Union of translated windows (arises from scheme extension). Measure uses
// inclusion-exclusion, exact per-axis interval overlaps for boxes.
class WindowUnion {
public:
    WindowUnion() = default;
    explicit WindowUnion(Window w) { parts_.push_back(std::move(w)); }
    explicit WindowUnion(std::vector<Window> parts) : parts_(std::move(parts)) {}

    int dim() const { return parts_.empty() ? 0 : parts_[0].dim(); }
    const std::vector<Window>& parts() const { return parts_; }
    bool contains(const ExactVector& y, bool* boundary_hit = nullptr) const;
    double measure() const;
    std::vector<std::pair<double, double>> bounds() const;

private:
    std::vector<Window> parts_;
};

// Cut-and-project scheme: lattice Gamma in R^{n+m} with coordinate projections
// p1 (first n axes) and p2 (last m axes); p1 injective on Gamma, p2(Gamma)
// dense in R^m (declared hypothesis, checked on enumerations).
struct CutAndProjectScheme {
    Lattice gamma;
    int n = 1;
    int m = 0;
    WindowUnion window;  // default window carried with the scheme

    CutAndProjectScheme(Lattice g, int n_, int m_, WindowUnion w);
    static CutAndProjectScheme fibonacci();  // golden-ratio chain, window [0,1)
    static CutAndProjectScheme from_lattice(Lattice lattice);  // m = 0

    ExactVector p1(const ExactVector& full) const;
    ExactVector p2(const ExactVector& full) const;
};

struct ModelSetReport {
    long boundary_hits = 0;
    double eps_net_fraction = 1.0;  // fraction of 0.01-cells of the window hit by p2
    long count = 0;
};

// Points p1(g) with |p1(g)| <= R and p2(g) in the window. m = 0 degenerates to
// plain lattice enumeration.
PointSet generate_model_set(const CutAndProjectScheme& scheme, const WindowUnion& window,
                            double radius, ModelSetReport* report = nullptr,
                            std::size_t cap = kDefaultEnumerationCap);

// mes(window) / det(Gamma); the window measure is 1 by convention when m = 0.
double predicted_density(const CutAndProjectScheme& scheme, const WindowUnion& window);

// Scheme extension: M + F inside M' + F' with p1(Gamma') independent of Z[F'].
struct SchemeExtension {
    CutAndProjectScheme scheme;       // Gamma' = (1/q) Gamma, window union
    std::vector<ExactVector> residues;  // F'
    BigInt q;
    struct Assignment {
        std::vector<Rational> gamma_coords;  // a_j with Gamma * a_j = shift lift
        ExactVector p1_shift;                // u_j
        int residue_index;
    };
    std::vector<Assignment> mapping;
};
SchemeExtension extend_scheme(const CutAndProjectScheme& scheme, const WindowUnion& window,
                              const std::vector<ExactVector>& offsets);

}  // namespace qc
