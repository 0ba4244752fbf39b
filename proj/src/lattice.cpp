#include "qc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qc {

namespace {

std::vector<std::vector<double>> numeric_matrix_to_doubles(const linalg::NumericMatrix& m) {
    std::vector<std::vector<double>> out(m.n, std::vector<double>(m.n));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) out[r][c] = m.at(r, c).get_d();
    return out;
}

}  // namespace

Lattice::Lattice(linalg::ExactMatrix basis_columns, bool inexact)
    : basis_(std::move(basis_columns)), inexact_(inexact), det_numeric_(0) {
    if (basis_.rows() != basis_.cols())
        throw std::invalid_argument("lattice basis matrix must be square");
    exact_ = basis_.exact_field_available();
    if (exact_) {
        ExactReal d = linalg::det(basis_);
        if (d.is_zero()) throw std::invalid_argument("lattice basis is singular");
        if (d.sign() < 0) d = -d;
        det_exact_ = d;
        det_numeric_ = d.to_double();
        inverse_ = linalg::inverse(basis_);
    } else {
        BigFloat d = linalg::numeric_det(linalg::to_numeric(basis_));
        det_numeric_ = std::abs(d.get_d());
        if (det_numeric_ <= 1e-9)
            throw std::invalid_argument("lattice basis numerically singular (|det| <= 1e-9)");
    }
    inverse_numeric_ = numeric_matrix_to_doubles(linalg::numeric_inverse(linalg::to_numeric(basis_)));
}

Lattice Lattice::integers(BasisPtr basis, int dimension) {
    linalg::ExactMatrix m(basis, dimension, dimension);
    for (int i = 0; i < dimension; ++i) m.at(i, i) = ExactReal(basis, Rational(1));
    return Lattice(std::move(m));
}

Lattice Lattice::diagonal(BasisPtr basis, std::vector<Rational> diag) {
    const int n = static_cast<int>(diag.size());
    linalg::ExactMatrix m(basis, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ExactReal(basis, diag[i]);
    return Lattice(std::move(m));
}

Lattice Lattice::fibonacci() {
    auto basis = RealBasis::preset("golden");
    linalg::ExactMatrix m(basis, 2, 2);
    const ExactReal one(basis, Rational(1));
    const ExactReal tau = ExactReal::generator(basis, 1);
    m.at(0, 0) = one;
    m.at(1, 0) = one;
    m.at(0, 1) = tau;
    m.at(1, 1) = one - tau;
    return Lattice(std::move(m));
}

Lattice Lattice::dual() const {
    if (exact_) {
        return Lattice(inverse_->transposed(), inexact_);
    }
    // Numeric fallback: 256-bit inverse, entries stored as exact binary
    // fractions of the computed values, result flagged inexact.
    linalg::NumericMatrix inv = linalg::numeric_inverse(linalg::to_numeric(basis_));
    const int n = basis_.rows();
    linalg::ExactMatrix d(basis_.basis(), n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rational q;
            mpq_set_f(q.get_mpq_t(), inv.at(c, r).get_mpf_t());  // transpose
            d.at(r, c) = ExactReal(basis_.basis(), q);
        }
    return Lattice(std::move(d), true);
}

ExactVector Lattice::point_at(const std::vector<long>& coords) const {
    if (static_cast<int>(coords.size()) != dimension())
        throw std::invalid_argument("coordinate count mismatch");
    ExactVector acc(basis_.basis(), dimension());
    for (int c = 0; c < dimension(); ++c) {
        if (coords[c] == 0) continue;
        acc = acc + basis_.column(c).scaled(Rational(coords[c]));
    }
    return acc;
}

ExactVector Lattice::coordinates(const ExactVector& x) const {
    if (!exact_) throw std::logic_error("exact coordinates unavailable: inexact lattice basis");
    return linalg::solve(basis_, x);
}

std::vector<double> Lattice::coordinates_numeric(const std::vector<double>& x) const {
    const int n = dimension();
    std::vector<double> out(n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r] += inverse_numeric_[r][c] * x[c];
    return out;
}

bool Lattice::contains(const ExactVector& x) const {
    if (exact_) {
        ExactVector c = coordinates(x);
        for (int i = 0; i < c.dimension(); ++i)
            if (!c[i].is_integer()) return false;
        return true;
    }
    std::vector<double> c = coordinates_numeric(x.to_doubles());
    for (double v : c)
        if (std::abs(v - std::round(v)) > 1e-9) return false;
    return true;
}

ExactVector Lattice::reduce_mod(const ExactVector& theta) const {
    ExactVector c = coordinates(theta);
    std::vector<long> shift(dimension());
    bool any = false;
    for (int i = 0; i < dimension(); ++i) {
        const BigInt k = rational_round(c[i].rational_part());
        if (!k.fits_slong_p()) throw std::range_error("offset too far from the lattice origin");
        shift[i] = k.get_si();
        any = any || shift[i] != 0;
    }
    if (!any) return theta;
    return theta - point_at(shift);
}

bool Lattice::equal_basis(const Lattice& o) const {
    if (dimension() != o.dimension()) return false;
    for (int r = 0; r < dimension(); ++r)
        for (int c = 0; c < dimension(); ++c)
            if (basis_.at(r, c) != o.basis_.at(r, c)) return false;
    return true;
}

CosetSystem::CosetSystem(Lattice lattice, std::vector<ExactVector> offsets)
    : lattice_(std::move(lattice)) {
    if (offsets.empty()) throw std::invalid_argument("coset system needs at least one offset");
    offsets_.reserve(offsets.size());
    for (const auto& t : offsets) {
        ExactVector rep = lattice_.reduce_mod(t);
        for (const auto& prev : offsets_)
            if (prev == rep)
                throw std::invalid_argument("offsets not distinct modulo the lattice");
        offsets_.push_back(std::move(rep));
    }
}

namespace {

std::vector<EnumeratedPoint> enumerate_impl(const Lattice& L,
                                            const std::vector<ExactVector>& offsets,
                                            double radius, std::size_t cap) {
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    const int n = L.dimension();

    double max_offset_norm = 0;
    for (const auto& t : offsets) max_offset_norm = std::max(max_offset_norm, t.norm());

    // Bound on integer coordinates: |a|_inf <= ||B^{-1}||_inf * max|point|.
    double inv_norm = 0;
    for (int r = 0; r < n; ++r) {
        double s = 0;
        for (int c = 0; c < n; ++c) {
            // recompute from numeric coordinates of unit vectors
            std::vector<double> e(n, 0.0);
            e[c] = 1.0;
            s += std::abs(L.coordinates_numeric(e)[r]);
        }
        inv_norm = std::max(inv_norm, s);
    }
    const double reach = radius + max_offset_norm;
    const long bound = static_cast<long>(std::ceil(inv_norm * reach)) + 1;
    if (bound > 100'000'000L) throw std::range_error("enumeration box too large");

    std::vector<std::vector<double>> offsets_d;
    offsets_d.reserve(offsets.size());
    for (const auto& t : offsets) offsets_d.push_back(t.to_doubles());
    std::vector<std::vector<double>> cols_d(n, std::vector<double>(n));
    for (int c = 0; c < n; ++c) {
        auto col = L.basis_matrix().column(c).to_doubles();
        for (int i = 0; i < n; ++i) cols_d[c][i] = col[i];
    }

    // The last axis is incremented fastest, so points come out in ascending
    // lexicographic order of (coords, coset) as required.
    std::vector<EnumeratedPoint> out;
    std::vector<long> a(n, -bound);
    const double r2 = radius * radius;
    // Cheap double-precision prefilter; the exact point is built only for
    // candidates inside a slightly inflated ball and re-checked there.
    const double r2_loose = (radius + 1e-6) * (radius + 1e-6);
    std::vector<double> base_d(n);
    while (true) {
        for (int i = 0; i < n; ++i) {
            double v = 0;
            for (int c = 0; c < n; ++c) v += cols_d[c][i] * static_cast<double>(a[c]);
            base_d[i] = v;
        }
        for (size_t j = 0; j < offsets.size(); ++j) {
            double s = 0;
            const std::vector<double>& od = offsets_d[j];
            for (int i = 0; i < n; ++i) {
                const double v = base_d[i] + od[i];
                s += v * v;
            }
            if (s <= r2_loose) {
                ExactVector point = L.point_at(a);
                if (!offsets[j].is_zero()) point = point + offsets[j];
                std::vector<double> pd = point.to_doubles();
                double s_exact = 0;
                for (double v : pd) s_exact += v * v;
                if (s_exact > r2) continue;
                if (out.size() >= cap)
                    throw std::length_error("enumeration cap of " + std::to_string(cap) +
                                            " points exceeded");
                EnumeratedPoint p;
                p.point = std::move(point);
                p.coords = a;
                p.coset = static_cast<int>(j);
                out.push_back(std::move(p));
            }
        }
        int k = n - 1;
        while (k >= 0 && a[k] == bound) {
            a[k] = -bound;
            --k;
        }
        if (k < 0) break;
        ++a[k];
    }
    return out;
}

}  // namespace

std::vector<EnumeratedPoint> enumerate_in_ball(const Lattice& lattice, double radius,
                                               std::size_t cap) {
    std::vector<ExactVector> origin{ExactVector(lattice.basis_matrix().basis(),
                                                lattice.dimension())};
    return enumerate_impl(lattice, origin, radius, cap);
}

std::vector<EnumeratedPoint> enumerate_in_ball(const CosetSystem& cosets, double radius,
                                               std::size_t cap) {
    return enumerate_impl(cosets.lattice(), cosets.offsets(), radius, cap);
}

LatticeRefinement refine_lattice(const Lattice& lattice,
                                 const std::vector<ExactVector>& offsets) {
    const int n = lattice.dimension();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!lattice.basis_matrix().at(r, c).is_rational())
                throw std::invalid_argument(
                    "refine_lattice needs a rational lattice basis (apply a change of "
                    "variables first)");

    // L-coordinates of each offset, split into rational and irrational parts.
    std::vector<ExactVector> rational_coord_parts;
    std::vector<ExactVector> residues;           // deduplicated w_j
    std::vector<LatticeRefinement::Assignment> mapping;
    BigInt q(1);

    std::vector<std::vector<Rational>> rparts;
    for (const auto& theta : offsets) {
        ExactVector c = lattice.coordinates(theta);
        std::vector<Rational> r(n);
        for (int i = 0; i < n; ++i) {
            r[i] = c[i].rational_part();
            q = lcm(q, r[i].get_den());
        }
        rparts.push_back(std::move(r));
    }

    for (size_t j = 0; j < offsets.size(); ++j) {
        // u_j = L * rational part of coords, w_j = theta_j - u_j
        ExactVector u(lattice.basis_matrix().basis(), n);
        for (int c = 0; c < n; ++c)
            if (rparts[j][c] != 0)
                u = u + lattice.basis_matrix().column(c).scaled(rparts[j][c]);
        ExactVector w = offsets[j] - u;

        int idx = -1;
        for (size_t k = 0; k < residues.size(); ++k)
            if (residues[k] == w) { idx = static_cast<int>(k); break; }
        if (idx < 0) {
            idx = static_cast<int>(residues.size());
            residues.push_back(w);
        }
        mapping.push_back({u, idx});
    }

    // L' = (1/q) L
    linalg::ExactMatrix refined = lattice.basis_matrix();
    const Rational invq(Rational(1) / Rational(q));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) refined.at(r, c) = refined.at(r, c).scaled(invq);

    LatticeRefinement out{Lattice(std::move(refined)), std::move(residues), q,
                          std::move(mapping)};
    return out;
}

bool verify_independence(const Lattice& refined, const std::vector<ExactVector>& residues,
                         long budget) {
    if (residues.empty()) return true;
    const int s = static_cast<int>(residues.size());
    std::vector<long> k(s, -budget);
    while (true) {
        bool all_zero = true;
        for (long v : k)
            if (v != 0) { all_zero = false; break; }
        if (!all_zero) {
            ExactVector combo(residues[0].basis(), refined.dimension());
            for (int i = 0; i < s; ++i)
                if (k[i] != 0) combo = combo + residues[i].scaled(Rational(k[i]));
            if (!combo.is_zero() && refined.contains(combo)) return false;
        }
        int i = s - 1;
        while (i >= 0 && k[i] == budget) {
            k[i] = -budget;
            --i;
        }
        if (i < 0) break;
        ++k[i];
    }
    return true;
}

Lattice parse_lattice_shorthand(const std::string& text) {
    auto rational_basis = RealBasis::preset("rational");
    if (text == "Z" || text == "Z1") return Lattice::integers(rational_basis, 1);
    if (text.size() >= 2 && text[0] == 'Z') {
        const int n = std::stoi(text.substr(1));
        if (n < 1 || n > 8) throw std::invalid_argument("unsupported lattice dimension");
        return Lattice::integers(rational_basis, n);
    }
    if (text.rfind("diag:", 0) == 0) {
        std::vector<Rational> d;
        std::string rest = text.substr(5);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            d.push_back(parse_rational(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (d.empty()) throw std::invalid_argument("empty diagonal");
        return Lattice::diagonal(rational_basis, std::move(d));
    }
    if (text == "fib") return Lattice::fibonacci();
    throw std::invalid_argument("unknown lattice shorthand: " + text);
}

}  // namespace qc
