#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcr/rigged.hpp"
#include "rcr/tableaux.hpp"

namespace rcr {

// Column states of a +/- diagram.  The sign content of a column of outer
// height x determines the inner shapes: mu drops by one for -, tau follows.
enum class PMCol { Plain, Plus, Minus, Both, ZeroCol };

// +/- diagram: nested shapes tau <= mu <= lambda recorded as per-height
// column-state counts, plus the type B spin decorations.  Heights include 0
// so that the total number of columns is s.
struct PMDiagram {
    // counts[h][state] for state in {Plain, Plus, Minus, Both, ZeroCol}
    std::map<int, std::array<int, 5>> counts;
    int spin = 0;  // 0 none, +1 or -1: half-width spin column (type B, r = n)

    int total_columns() const;
    std::vector<int> lambda_rows() const;  // outer shape
    std::vector<int> mu_rows() const;
    std::vector<int> tau_rows() const;
    bool operator==(const PMDiagram&) const = default;
    auto operator<=>(const PMDiagram&) const = default;
    std::string json() const;
    std::string key() const;
};

// all diagrams attached to B^{r,s} (outer shapes from the classical
// decomposition, s columns in total, type-specific decorations)
std::vector<PMDiagram> enumerate_pm(const AffineType& t, int r, int s);

// zeta: the {2,...,n}-highest weight element of B(lambda) attached to P
WordElement zeta(const AffineType& t, int r, int s, const PMDiagram& P);

// zeta_rc and its inverse via the printed column tables
RiggedConfiguration zeta_rc(const AffineType& t, int r, int s, const PMDiagram& P);
PMDiagram zeta_rc_inverse(const AffineType& t, int r, int s,
                          const RiggedConfiguration& rc);

// the diagram involution: swaps c_+(h) with c_-(h) for r >= h >= 1 and
// c_.(h-2) with c_pm(h) for r >= h >= 2
PMDiagram s_involution(const PMDiagram& P, int r);

// sigma on rigged configurations and the affine crystal operators
RiggedConfiguration sigma_rc(const RiggedConfiguration& rc);
std::optional<RiggedConfiguration> f0(const RiggedConfiguration& rc);
std::optional<RiggedConfiguration> e0(const RiggedConfiguration& rc);

// doubling map on type B spin diagrams into type A_{2n-1}^(2); n fixes the
// height of a spin column
PMDiagram double_pm(const PMDiagram& P, int n);
// the doubling map on rigged configurations (B_n^(1) -> A_{2n-1}^(2))
RiggedConfiguration double_rc_b(const RiggedConfiguration& rc);
// virtualization of +/- diagrams: c_*(h) -> gamma_h c_*(h)
PMDiagram virtualize_pm(const AffineType& source, const PMDiagram& P);

}  // namespace rcr
