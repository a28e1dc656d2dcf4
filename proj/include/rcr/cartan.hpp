#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcr/half.hpp"

namespace rcr {

// Non-exceptional affine families.  A2Dual is A_{2n}^(2) with the opposite
// node labelling; it carries its own marks and crystal operators, so it is a
// distinct tag rather than a relabelling.
enum class Family {
    A1,      // A_n^(1),       n >= 1
    B1,      // B_n^(1),       n >= 3
    C1,      // C_n^(1),       n >= 2
    D1,      // D_n^(1),       n >= 4
    A2Odd,   // A_{2n-1}^(2),  n >= 3
    A2Even,  // A_{2n}^(2),    n >= 1
    A2Dual,  // A_{2n}^(2)+,   n >= 1
    D2,      // D_{n+1}^(2),   n >= 2
};

// Classical (finite) families used for tableaux alphabets and epsilon
// coordinates.
enum class ClassicalFamily { A, B, C, D };

struct AffineType {
    Family family;
    int rank;  // n: classical index set is {1,...,n}

    bool operator==(const AffineType&) const = default;

    std::string str() const;                               // e.g. "D_5^1"
    static std::optional<AffineType> parse(const std::string& s);
};

int min_rank(Family f);
bool valid_type(const AffineType& t);

// Classical weight in fundamental-weight coordinates, exact half-integers.
// coeff[a-1] is the coefficient of varpi_a.
struct ClassicalWeight {
    std::vector<Half> coeff;

    bool operator==(const ClassicalWeight&) const = default;
    auto operator<=>(const ClassicalWeight&) const = default;

    static ClassicalWeight zero(int n) { return ClassicalWeight{std::vector<Half>(n)}; }
    Half operator[](int a) const { return coeff[a - 1]; }
    Half& at(int a) { return coeff[a - 1]; }
    int n() const { return static_cast<int>(coeff.size()); }
    bool is_zero() const;
    ClassicalWeight operator+(const ClassicalWeight& o) const;
    ClassicalWeight operator-(const ClassicalWeight& o) const;
    ClassicalWeight scaled(std::int64_t k) const;
    std::string str() const;
};

// Affine weight: coefficients of Lambda_0..Lambda_n.
struct AffineWeight {
    std::vector<Half> coeff;  // index i = coefficient of Lambda_i

    bool operator==(const AffineWeight&) const = default;
    std::string str() const;
};

// Static root-system data for one affine type.  All tables indexed by the
// classical nodes a = 1..n unless noted.
struct CartanData {
    AffineType type;
    int n;

    std::vector<int> c;        // Kac labels c_0..c_n
    std::vector<int> cv;       // dual Kac labels c_0^v..c_n^v
    std::vector<int> t;        // t_0..t_n per equation on t_i
    std::vector<int> tv;       // t_0^v..t_n^v
    std::vector<Half> upsilon; // upsilon_1..upsilon_n (index a-1)

    // full (n+1)x(n+1) affine Cartan matrix, rows/cols 0..n
    std::vector<std::vector<int>> affine_cartan;
    // classical Cartan matrix A_{ab}, a,b in 1..n (index shifted by one)
    std::vector<std::vector<int>> classical_cartan;

    // Kernel data driving vacancy numbers and cocharge:
    //   q_i^(a) = sum_b (Aeff_{ab}/g_b) sum_j min(g_a i, g_b j) m_j^(b).
    // Aeff is stored doubled so the halved row n of A_{2n}^(2)/dagger stays
    // integral; g is the per-node scaling of that formula.
    std::vector<std::vector<int>> kernel_a2;  // 2*Aeff_{ab}
    std::vector<int> kernel_g;                // g_1..g_n (index a-1)
    std::vector<int> tv_classical;            // t_a^v for a = 1..n
    std::vector<int> k_epsphi;                // k_a (1, or 2 at n for A2Dual)

    ClassicalFamily classical_family() const;
    bool simply_laced_classical() const;

    // weight of one B^{r,s} factor: s*varpi_r, with the A2Dual convention
    // that the node-n factor weighs s*(2 varpi_n).
    ClassicalWeight factor_weight(int r, int s) const;

    // classical simple root alpha_a (image under eta^{-1} for A_{2n}^(2))
    // expressed in varpi coordinates; this is what one box of nu^(a) weighs.
    ClassicalWeight box_weight(int a) const;

    // nodes whose fundamental weight is half-integral in epsilon coordinates
    bool spin_node(int a) const;
};

const CartanData& cartan_data(const AffineType& t);

// epsilon-coordinate view for classical families B/C/D (and A: partition-ish).
std::vector<Half> to_epsilon(const CartanData& cd, const ClassicalWeight& w);
bool is_dominant(const CartanData& cd, const ClassicalWeight& w);

// eta: Z-linear map from type C_n weights to type B_n weights used by
// A_{2n}^(2); varpi_a -> varpi_a for a < n, varpi_n -> 2 varpi_n.
ClassicalWeight eta(const ClassicalWeight& w);
// inverse on the image (throws if the varpi_n coefficient is odd)
ClassicalWeight eta_inverse(const ClassicalWeight& w);

// level-0 affine lift: c_0 Lambda_0 + sum_a k_a Lambda_a
AffineWeight affine_lift(const CartanData& cd, const ClassicalWeight& w);
// <alpha_a^v, w> for classical a (standard pairing; A2Dual uses 2*delta at n
// only through factor_weight, so this is the plain coefficient).
Half alpha_check_pairing(const CartanData& cd, const ClassicalWeight& w, int a);

}  // namespace rcr
