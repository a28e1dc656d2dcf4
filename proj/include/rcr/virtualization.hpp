#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcr/rigged.hpp"

namespace rcr {

// Dynkin folding of a non-simply-laced non-exceptional type into its
// simply-laced ambient type (rows 1-2 of the affine embedding list).
struct Folding {
    AffineType source;
    AffineType ambient;                   // A_{2n-1}^(1) or D_{n+1}^(1)
    std::vector<std::vector<int>> orbit;  // orbit[a-1] = phi^{-1}(a), a = 1..n
    std::vector<int> orbit0;              // phi^{-1}(0)
    std::vector<int> gamma;               // gamma_0..gamma_n
    std::vector<int> gamma_tilde;         // differs from gamma only at n (A2 even/dual)

    // string lengths scale by gamma~ except in the A2Dual map, which leaves
    // nu^(n) lengths alone and doubles the riggings instead
    int len_scale(int a) const {
        if (source.family == Family::A2Dual && a == source.rank) return 1;
        return gamma_tilde[a];
    }
    // scale of riggings and vacancy numbers under v
    int rig_scale(int a) const {
        if (source.family == Family::A2Dual && a == source.rank) return gamma_tilde[a];
        return gamma[a];
    }
    int ops_exponent(int a) const { return gamma[a]; }  // f_a^v = prod fhat_b^{gamma_a}

    std::string json() const;
};

const Folding& folding_of(const AffineType& t);  // throws for simply-laced input

// ambient multiplicity array L-hat (factor list built per KR-virtualization)
std::shared_ptr<const MultiplicityArray> ambient_mult_array(const Folding& f,
                                                            const MultiplicityArray& B);

// Psi on classical weights: varpi_a -> gamma_a sum_{b in orbit} varpi-hat_b,
// with the doubled spin-node convention for A2 even/dual at a = n.
ClassicalWeight psi_classical(const Folding& f, const ClassicalWeight& w);
// Psi on affine weights (Lambda coordinates, 0..n)
AffineWeight psi_affine(const Folding& f, const AffineWeight& w);

RiggedConfiguration virtualize_rc(const RiggedConfiguration& rc);
// inverse of virtualize_rc; error string identifies the violated condition
std::optional<RiggedConfiguration> devirtualize_rc(
    const Folding& f, const RiggedConfiguration& ambient_rc,
    std::shared_ptr<const MultiplicityArray> source_L, std::string* why = nullptr);

// virtual crystal operators on ambient rigged configurations
std::optional<RiggedConfiguration> virtual_f(const Folding& f,
                                             const RiggedConfiguration& ambient_rc, int a);
std::optional<RiggedConfiguration> virtual_e(const Folding& f,
                                             const RiggedConfiguration& ambient_rc, int a);

}  // namespace rcr
