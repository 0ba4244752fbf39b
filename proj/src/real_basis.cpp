#include "qc/real_basis.hpp"

#include <mutex>
#include <stdexcept>

namespace qc {

RealBasis::RealBasis(std::string name, std::vector<Generator> generators,
                     std::optional<std::map<std::pair<int, int>, std::vector<Rational>>> table)
    : name_(std::move(name)), generators_(std::move(generators)), table_(std::move(table)) {
    if (generators_.empty()) throw std::invalid_argument("basis needs at least the constant 1");
    if (generators_[0].tag != "1" || generators_[0].value != 1)
        throw std::invalid_argument("generator 0 must be the constant 1");
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].tag == generators_[j].tag)
                throw std::invalid_argument("duplicate generator tag: " + generators_[i].tag);
    if (table_) {
        for (const auto& [key, coeffs] : *table_) {
            if (coeffs.size() != generators_.size())
                throw std::invalid_argument("table entry with wrong coefficient count");
            auto sym = table_->find({key.second, key.first});
            if (sym == table_->end() || sym->second != coeffs)
                throw std::invalid_argument("multiplication table not symmetric");
        }
    }
}

const std::vector<Rational>& RealBasis::product(int i, int j) const {
    if (!table_) throw std::logic_error("basis '" + name_ + "' has no multiplication table");
    auto it = table_->find({i, j});
    if (it == table_->end()) throw std::logic_error("missing multiplication table entry");
    return it->second;
}

std::vector<std::string> RealBasis::tags() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.tag);
    return out;
}

namespace {

BigFloat hp(double x) {
    BigFloat f(0, kNumericPrecision);
    f = x;
    return f;
}

BigFloat hp_sqrt(unsigned long n) {
    BigFloat f(n, kNumericPrecision);
    return sqrt(f);
}

// coefficient vector helper
std::vector<Rational> cv(std::initializer_list<long> entries) {
    std::vector<Rational> v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

std::vector<BasisPtr> build_presets() {
    std::vector<BasisPtr> out;

    out.push_back(std::make_shared<RealBasis>(
        "rational", std::vector<RealBasis::Generator>{{"1", hp(1.0)}}, std::nullopt));

    {
        std::map<std::pair<int, int>, std::vector<Rational>> t;
        t[{1, 1}] = cv({2, 0});  // s2*s2 = 2
        out.push_back(std::make_shared<RealBasis>(
            "sqrt2",
            std::vector<RealBasis::Generator>{{"1", hp(1.0)}, {"sqrt2", hp_sqrt(2)}}, t));
    }
    {
        std::map<std::pair<int, int>, std::vector<Rational>> t;
        t[{1, 1}] = cv({3, 0});
        out.push_back(std::make_shared<RealBasis>(
            "sqrt3",
            std::vector<RealBasis::Generator>{{"1", hp(1.0)}, {"sqrt3", hp_sqrt(3)}}, t));
    }
    {
        // tau^2 = tau + 1
        std::map<std::pair<int, int>, std::vector<Rational>> t;
        t[{1, 1}] = cv({1, 1});
        BigFloat tau(0, kNumericPrecision);
        tau = (1 + hp_sqrt(5)) / 2;
        out.push_back(std::make_shared<RealBasis>(
            "golden", std::vector<RealBasis::Generator>{{"1", hp(1.0)}, {"tau", tau}}, t));
    }
    {
        // (1, s2, s3): products leave the span, so no table.
        out.push_back(std::make_shared<RealBasis>(
            "sqrt23",
            std::vector<RealBasis::Generator>{
                {"1", hp(1.0)}, {"sqrt2", hp_sqrt(2)}, {"sqrt3", hp_sqrt(3)}},
            std::nullopt));
    }
    {
        // biquadratic field Q(s2, s3) with basis (1, s2, s3, s6)
        std::map<std::pair<int, int>, std::vector<Rational>> t;
        t[{1, 1}] = cv({2, 0, 0, 0});
        t[{2, 2}] = cv({3, 0, 0, 0});
        t[{3, 3}] = cv({6, 0, 0, 0});
        t[{1, 2}] = cv({0, 0, 0, 1});
        t[{2, 1}] = t[{1, 2}];
        t[{1, 3}] = cv({0, 0, 2, 0});  // s2*s6 = 2*s3
        t[{3, 1}] = t[{1, 3}];
        t[{2, 3}] = cv({0, 3, 0, 0});  // s3*s6 = 3*s2
        t[{3, 2}] = t[{2, 3}];
        out.push_back(std::make_shared<RealBasis>(
            "sqrt236",
            std::vector<RealBasis::Generator>{{"1", hp(1.0)},
                                              {"sqrt2", hp_sqrt(2)},
                                              {"sqrt3", hp_sqrt(3)},
                                              {"sqrt6", hp_sqrt(6)}},
            t));
    }
    return out;
}

const std::vector<BasisPtr>& presets() {
    static const std::vector<BasisPtr> p = build_presets();
    return p;
}

}  // namespace

BasisPtr RealBasis::preset(const std::string& name) {
    for (const auto& b : presets())
        if (b->name() == name) return b;
    throw std::invalid_argument("unknown basis preset: " + name);
}

BasisPtr RealBasis::find_by_tags(const std::vector<std::string>& tags) {
    for (const auto& b : presets())
        if (b->tags() == tags) return b;
    throw std::invalid_argument("no registered basis with the given tag list");
}

}  // namespace qc
