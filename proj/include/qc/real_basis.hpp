#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qc/rational.hpp"

namespace qc {

// A declared Q-linearly-independent family of real generators {1, b1, b2, ...}.
// Generator 0 is always the constant 1. Independence of the remaining generators
// is a trusted axiom of the basis, recorded but not verified.
//
// An optional multiplication table turns the span into a commutative algebra:
// table[(i,j)] is the coefficient vector of b_i * b_j over the basis. Presets
// with a table (quadratic and biquadratic fields) support exact products,
// inverses, determinants and dual lattices; table-less bases fall back to
// high-precision numerics.
class RealBasis {
public:
    struct Generator {
        std::string tag;
        BigFloat value;  // >= kNumericPrecision bits
    };

    RealBasis(std::string name, std::vector<Generator> generators,
              std::optional<std::map<std::pair<int, int>, std::vector<Rational>>> table);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(generators_.size()); }
    const Generator& generator(int i) const { return generators_.at(i); }
    bool has_multiplication_table() const { return table_.has_value(); }

    // Coefficient vector of b_i * b_j; throws if no table.
    const std::vector<Rational>& product(int i, int j) const;

    std::vector<std::string> tags() const;

    // --- registry -----------------------------------------------------------
    // Shipped presets: "rational" (1), "sqrt2" (1,s2), "sqrt3" (1,s3),
    // "golden" (1,tau), "sqrt23" (1,s2,s3; no table), "sqrt236" (1,s2,s3,s6).
    static std::shared_ptr<const RealBasis> preset(const std::string& name);
    // Finds a registered basis whose tag list matches exactly; throws if none.
    static std::shared_ptr<const RealBasis> find_by_tags(const std::vector<std::string>& tags);

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::optional<std::map<std::pair<int, int>, std::vector<Rational>>> table_;
};

using BasisPtr = std::shared_ptr<const RealBasis>;

}  // namespace qc
