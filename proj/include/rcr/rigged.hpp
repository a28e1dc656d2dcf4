#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcr/cartan.hpp"

namespace rcr {

// Multiplicity array L_i^(a) with an optional ordered factor list (r_i, s_i)
// when it represents a tensor product of KR crystals (leftmost first).
struct MultiplicityArray {
    AffineType type;
    std::vector<std::pair<int, int>> factors;  // ordered (r, s), leftmost first

    static MultiplicityArray of_factors(const AffineType& t,
                                        std::vector<std::pair<int, int>> fs) {
        return MultiplicityArray{t, std::move(fs)};
    }
    // L_i^(a)
    int mult(int a, int i) const {
        int m = 0;
        for (auto& [r, s] : factors)
            if (r == a && s == i) ++m;
        return m;
    }
    std::map<std::pair<int, int>, int> as_map() const {
        std::map<std::pair<int, int>, int> m;
        for (auto& [r, s] : factors) m[{r, s}]++;
        return m;
    }
    bool operator==(const MultiplicityArray&) const = default;
};

// One rigged partition: strings (length, label) kept sorted by decreasing
// (length, label).
struct RiggedPartition {
    struct String {
        int len;
        Half rig;
        auto operator<=>(const String&) const = default;
    };
    std::vector<String> strings;

    void normalize();
    int count_of_length(int i) const;
    int size_boxes() const;
    int longest() const { return strings.empty() ? 0 : strings.front().len; }
    bool operator==(const RiggedPartition&) const = default;
    auto operator<=>(const RiggedPartition&) const = default;
};

// A rigged configuration (nu, J) over a multiplicity array.
class RiggedConfiguration {
public:
    RiggedConfiguration() = default;
    RiggedConfiguration(std::shared_ptr<const MultiplicityArray> L,
                        std::vector<RiggedPartition> nu);

    static RiggedConfiguration empty(std::shared_ptr<const MultiplicityArray> L);

    const MultiplicityArray& L() const { return *L_; }
    std::shared_ptr<const MultiplicityArray> L_ptr() const { return L_; }
    const AffineType& type() const { return L_->type; }
    const CartanData& cartan() const { return cartan_data(L_->type); }
    int n() const { return cartan().n; }
    const std::vector<RiggedPartition>& nu() const { return nu_; }
    const RiggedPartition& part(int a) const { return nu_[a - 1]; }

    // vacancy number p_i^(a); i = 0 gives 0, large i saturates per p_infinity
    Half vacancy(int a, int i) const;
    Half p_infinity(int a) const;

    // crystal operators for a in {1..n}; nullopt encodes the paper's 0
    std::optional<RiggedConfiguration> f(int a) const;
    std::optional<RiggedConfiguration> e(int a) const;
    Half epsilon(int a) const;
    Half phi(int a) const;

    ClassicalWeight weight() const;
    AffineWeight affine_weight() const;

    Half cocharge() const;            // via the quadratic form
    Half cocharge_via_vacancy() const;  // alternative form, must agree

    RiggedConfiguration theta() const;  // riggings -> colabels

    bool is_highest_weight() const;  // 0 <= x <= p for all strings
    // structural sanity: rigging <= vacancy everywhere, correct rigging
    // parity in type A_{2n}^(2)+ at nu^(n)
    bool well_formed(std::string* why = nullptr) const;

    std::string serialize() const;  // canonical, usable as a map key
    std::string pretty() const;     // paper-style layout
    std::string json() const;

    RiggedConfiguration with_factors(std::shared_ptr<const MultiplicityArray> L) const;

    bool operator==(const RiggedConfiguration& o) const {
        return nu_ == o.nu_ && *L_ == *o.L_;
    }
    bool operator<(const RiggedConfiguration& o) const { return nu_ < o.nu_; }

private:
    std::shared_ptr<const MultiplicityArray> L_;
    std::vector<RiggedPartition> nu_;
    mutable std::shared_ptr<std::vector<std::map<int, Half>>> vac_cache_;

    // half-step crystal operator: label moves in units of step/2
    std::optional<RiggedConfiguration> f_step(int a, Half step) const;
    std::optional<RiggedConfiguration> e_step(int a, Half step) const;
    friend struct RcOps;
};

// q_i^(a) of the vacancy formula (the quadratic kernel applied to m)
Half rc_kernel_q(const CartanData& cd, const std::vector<RiggedPartition>& nu, int a, int i);

}  // namespace rcr
