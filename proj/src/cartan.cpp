#include "rcr/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rcr {

int min_rank(Family f) {
    switch (f) {
        case Family::A1: return 1;
        case Family::B1: return 3;
        case Family::C1: return 2;
        case Family::D1: return 4;
        case Family::A2Odd: return 3;
        case Family::A2Even: return 1;
        case Family::A2Dual: return 1;
        case Family::D2: return 2;
    }
    return 1;
}

bool valid_type(const AffineType& t) { return t.rank >= min_rank(t.family); }

std::string AffineType::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::A1: os << "A_" << rank << "^1"; break;
        case Family::B1: os << "B_" << rank << "^1"; break;
        case Family::C1: os << "C_" << rank << "^1"; break;
        case Family::D1: os << "D_" << rank << "^1"; break;
        case Family::A2Odd: os << "A_" << (2 * rank - 1) << "^2"; break;
        case Family::A2Even: os << "A_" << (2 * rank) << "^2"; break;
        case Family::A2Dual: os << "A_" << (2 * rank) << "^2+"; break;
        case Family::D2: os << "D_" << (rank + 1) << "^2"; break;
    }
    return os.str();
}

std::optional<AffineType> AffineType::parse(const std::string& s) {
    // forms: X_<m>^1, A_<m>^2, A_<m>^2+, D_<m>^2
    if (s.size() < 5 || s[1] != '_') return std::nullopt;
    char fam = s[0];
    size_t caret = s.find('^');
    if (caret == std::string::npos || caret < 3) return std::nullopt;
    int m = 0;
    try {
        m = std::stoi(s.substr(2, caret - 2));
    } catch (...) {
        return std::nullopt;
    }
    std::string tail = s.substr(caret + 1);
    AffineType t{};
    if (tail == "1") {
        t.rank = m;
        switch (fam) {
            case 'A': t.family = Family::A1; break;
            case 'B': t.family = Family::B1; break;
            case 'C': t.family = Family::C1; break;
            case 'D': t.family = Family::D1; break;
            default: return std::nullopt;
        }
    } else if (tail == "2" || tail == "2+") {
        bool dual = (tail == "2+");
        if (fam == 'A') {
            if (m % 2 == 1) {
                if (dual) return std::nullopt;
                t.family = Family::A2Odd;
                t.rank = (m + 1) / 2;
            } else {
                t.family = dual ? Family::A2Dual : Family::A2Even;
                t.rank = m / 2;
            }
        } else if (fam == 'D' && !dual) {
            t.family = Family::D2;
            t.rank = m - 1;
        } else {
            return std::nullopt;
        }
    } else {
        return std::nullopt;
    }
    if (!valid_type(t)) return std::nullopt;
    return t;
}

bool ClassicalWeight::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](Half h) { return h.num == 0; });
}

ClassicalWeight ClassicalWeight::operator+(const ClassicalWeight& o) const {
    ClassicalWeight r = *this;
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
    return r;
}

ClassicalWeight ClassicalWeight::operator-(const ClassicalWeight& o) const {
    ClassicalWeight r = *this;
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
    return r;
}

ClassicalWeight ClassicalWeight::scaled(std::int64_t k) const {
    ClassicalWeight r = *this;
    for (auto& h : r.coeff) h = k * h;
    return r;
}

std::string ClassicalWeight::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].num == 0) continue;
        if (!first) os << (coeff[i].num > 0 ? "+" : "");
        os << coeff[i].str() << "w" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string AffineWeight::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].num == 0) continue;
        if (!first) os << (coeff[i].num > 0 ? "+" : "");
        os << coeff[i].str() << "L" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ClassicalFamily CartanData::classical_family() const {
    switch (type.family) {
        case Family::A1: return ClassicalFamily::A;
        case Family::B1: return ClassicalFamily::B;
        case Family::C1: return ClassicalFamily::C;
        case Family::D1: return ClassicalFamily::D;
        case Family::A2Odd: return ClassicalFamily::C;
        case Family::A2Even: return ClassicalFamily::C;  // weights live in C_n
        case Family::A2Dual: return ClassicalFamily::B;
        case Family::D2: return ClassicalFamily::B;
    }
    return ClassicalFamily::A;
}

bool CartanData::simply_laced_classical() const {
    return type.family == Family::A1 || type.family == Family::D1;
}

ClassicalWeight CartanData::factor_weight(int r, int s) const {
    ClassicalWeight w = ClassicalWeight::zero(n);
    std::int64_t mult = s;
    if (type.family == Family::A2Dual && r == n) mult = 2 * static_cast<std::int64_t>(s);
    w.at(r) = Half::of_int(mult);
    return w;
}

ClassicalWeight CartanData::box_weight(int a) const {
    ClassicalWeight w = ClassicalWeight::zero(n);
    if (type.family == Family::A2Even) {
        if (a < n) {
            for (int b = 1; b <= n; ++b) w.at(b) = Half::of_int(classical_cartan[b - 1][a - 1]);
        } else {
            // eta^{-1}(alpha~_n) = alpha_n^C / 2
            for (int b = 1; b <= n; ++b)
                w.at(b) = Half::of_halves(classical_cartan[b - 1][n - 1]);
        }
        return w;
    }
    for (int b = 1; b <= n; ++b) w.at(b) = Half::of_int(classical_cartan[b - 1][a - 1]);
    return w;
}

bool CartanData::spin_node(int a) const {
    switch (classical_family()) {
        case ClassicalFamily::B: return a == n;
        case ClassicalFamily::D: return a == n - 1 || a == n;
        default: return false;
    }
}

namespace {

std::vector<std::vector<int>> classical_matrix(ClassicalFamily f, int n) {
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a) A[a][a] = 2;
    auto link = [&](int a, int b, int ab, int ba) {
        A[a - 1][b - 1] = ab;
        A[b - 1][a - 1] = ba;
    };
    switch (f) {
        case ClassicalFamily::A:
            for (int a = 1; a < n; ++a) link(a, a + 1, -1, -1);
            break;
        case ClassicalFamily::B:
            for (int a = 1; a + 1 < n; ++a) link(a, a + 1, -1, -1);
            if (n >= 2) link(n - 1, n, -1, -2);
            break;
        case ClassicalFamily::C:
            for (int a = 1; a + 1 < n; ++a) link(a, a + 1, -1, -1);
            if (n >= 2) link(n - 1, n, -2, -1);
            break;
        case ClassicalFamily::D:
            // path 1-...-(n-1) plus the fork node n attached to n-2
            for (int a = 1; a + 1 <= n - 1; ++a) link(a, a + 1, -1, -1);
            if (n >= 3) link(n - 2, n, -1, -1);
            break;
    }
    return A;
}

CartanData build(const AffineType& t) {
    if (!valid_type(t)) throw std::domain_error("invalid affine type " + t.str());
    CartanData cd;
    cd.type = t;
    const int n = cd.n = t.rank;

    // Kac and dual Kac labels, indices 0..n
    cd.c.assign(n + 1, 1);
    cd.cv.assign(n + 1, 1);
    switch (t.family) {
        case Family::A1:
            break;
        case Family::B1:
            for (int i = 2; i <= n; ++i) cd.c[i] = 2;
            for (int i = 2; i <= n - 1; ++i) cd.cv[i] = 2;
            break;
        case Family::C1:
            for (int i = 1; i <= n - 1; ++i) cd.c[i] = 2;
            break;
        case Family::D1:
            for (int i = 2; i <= n - 2; ++i) cd.c[i] = 2;
            cd.cv = cd.c;
            break;
        case Family::A2Odd:
            for (int i = 2; i <= n - 1; ++i) cd.c[i] = 2;
            for (int i = 2; i <= n; ++i) cd.cv[i] = 2;
            break;
        case Family::A2Even:
            for (int i = 0; i <= n - 1; ++i) cd.c[i] = 2;
            for (int i = 1; i <= n; ++i) cd.cv[i] = 2;
            break;
        case Family::A2Dual:
            for (int i = 1; i <= n; ++i) cd.c[i] = 2;
            for (int i = 0; i <= n - 1; ++i) cd.cv[i] = 2;
            break;
        case Family::D2:
            for (int i = 1; i <= n - 1; ++i) cd.cv[i] = 2;
            break;
    }

    // t_i = max(c_i/c_i^v, c_0^v), t_i^v = max(c_i^v/c_i, c_0); ratios lie in
    // {1/2, 1, 2, 4} so the max against an integer is again an integer
    cd.t.assign(n + 1, 1);
    cd.tv.assign(n + 1, 1);
    for (int i = 0; i <= n; ++i) {
        cd.t[i] = (cd.c[i] > cd.cv[i] * cd.cv[0]) ? cd.c[i] / cd.cv[i] : cd.cv[0];
        cd.tv[i] = (cd.cv[i] > cd.c[i] * cd.c[0]) ? cd.cv[i] / cd.c[i] : cd.c[0];
    }

    cd.upsilon.assign(n, half_one);
    if (t.family == Family::C1) cd.upsilon[n - 1] = Half::of_int(2);
    if (t.family == Family::B1) cd.upsilon[n - 1] = one_half;

    // affine Cartan matrix
    auto& A = cd.affine_cartan;
    A.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) A[i][i] = 2;
    auto link = [&](int i, int j, int ij, int ji) {
        A[i][j] = ij;
        A[j][i] = ji;
    };
    switch (t.family) {
        case Family::A1:
            if (n == 1) {
                link(0, 1, -2, -2);
            } else {
                for (int i = 1; i < n; ++i) link(i, i + 1, -1, -1);
                link(0, 1, -1, -1);
                link(0, n, -1, -1);
            }
            break;
        case Family::B1:
            link(0, 2, -1, -1);
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 1, n, -1, -2);
            break;
        case Family::C1:
            link(0, 1, -1, -2);
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 1, n, -2, -1);
            break;
        case Family::D1:
            link(0, 2, -1, -1);
            for (int i = 1; i + 1 <= n - 1; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n, -1, -1);
            A[n - 1][n] = A[n][n - 1] = 0;
            break;
        case Family::A2Odd:
            link(0, 2, -1, -1);
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 1, n, -2, -1);
            break;
        case Family::A2Even:
            if (n == 1) {
                link(0, 1, -4, -1);
            } else {
                link(0, 1, -2, -1);
                for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
                link(n - 1, n, -2, -1);
            }
            break;
        case Family::A2Dual:
            if (n == 1) {
                link(0, 1, -1, -4);
            } else {
                link(0, 1, -1, -2);
                for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
                link(n - 1, n, -1, -2);
            }
            break;
        case Family::D2:
            link(0, 1, -2, -1);
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 1, n, -1, -2);
            break;
    }

    cd.classical_cartan = classical_matrix(cd.classical_family(), n);

    // kernel for vacancy numbers / cocharge
    ClassicalFamily kf;
    switch (t.family) {
        case Family::A1: kf = ClassicalFamily::A; break;
        case Family::B1: kf = ClassicalFamily::B; break;
        case Family::C1: kf = ClassicalFamily::C; break;
        case Family::D1: kf = ClassicalFamily::D; break;
        case Family::A2Odd: kf = ClassicalFamily::C; break;
        case Family::A2Even: kf = ClassicalFamily::B; break;
        case Family::A2Dual: kf = ClassicalFamily::B; break;
        case Family::D2: kf = ClassicalFamily::B; break;
    }
    auto Ak = classical_matrix(kf, n);
    cd.kernel_a2.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cd.kernel_a2[a][b] = 2 * Ak[a][b];
    if (t.family == Family::A2Even || t.family == Family::A2Dual) {
        for (int b = 0; b < n; ++b) cd.kernel_a2[n - 1][b] /= 2;  // halved row n
    }
    cd.kernel_g.assign(n, 1);
    if (t.family == Family::B1)
        for (int a = 0; a < n - 1; ++a) cd.kernel_g[a] = 2;
    if (t.family == Family::C1) cd.kernel_g[n - 1] = 2;

    cd.tv_classical.assign(n, 1);
    switch (t.family) {
        case Family::A2Odd: cd.tv_classical[n - 1] = 2; break;
        case Family::A2Even: cd.tv_classical.assign(n, 2); break;
        case Family::D2:
            cd.tv_classical.assign(n, 2);
            cd.tv_classical[n - 1] = 1;
            break;
        default: break;
    }

    cd.k_epsphi.assign(n, 1);
    if (t.family == Family::A2Dual) cd.k_epsphi[n - 1] = 2;

    return cd;
}

}  // namespace

const CartanData& cartan_data(const AffineType& t) {
    static std::map<std::pair<int, int>, CartanData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(static_cast<int>(t.family), t.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(t)).first;
    return it->second;
}

std::vector<Half> to_epsilon(const CartanData& cd, const ClassicalWeight& w) {
    const int n = cd.n;
    std::vector<Half> eps(n);
    switch (cd.classical_family()) {
        case ClassicalFamily::A:
        case ClassicalFamily::C: {
            Half run = half_zero;
            for (int i = n; i >= 1; --i) {
                run += w[i];
                eps[i - 1] = run;
            }
            break;
        }
        case ClassicalFamily::B: {
            Half run = w[cd.n].div(2);
            eps[n - 1] = run;
            for (int i = n - 1; i >= 1; --i) {
                run += w[i];
                eps[i - 1] = run;
            }
            break;
        }
        case ClassicalFamily::D: {
            Half spin_sum = (w[n - 1] + w[n]).div(2);
            Half spin_diff = (w[n] - w[n - 1]).div(2);
            eps[n - 1] = spin_diff;
            Half run = spin_sum;
            eps[n - 2] = run;
            for (int i = n - 2; i >= 1; --i) {
                run += w[i];
                eps[i - 1] = run;
            }
            break;
        }
    }
    return eps;
}

bool is_dominant(const CartanData& cd, const ClassicalWeight& w) {
    if (cd.classical_family() == ClassicalFamily::A) {
        for (auto h : w.coeff)
            if (h < half_zero) return false;
        return true;
    }
    auto eps = to_epsilon(cd, w);
    const int n = cd.n;
    for (int i = 0; i + 1 < n; ++i)
        if (eps[i] < eps[i + 1]) return false;
    if (cd.classical_family() == ClassicalFamily::D) {
        if ((eps[n - 2] + eps[n - 1]) < half_zero) return false;
    } else {
        if (eps[n - 1] < half_zero) return false;
    }
    return true;
}

ClassicalWeight eta(const ClassicalWeight& w) {
    ClassicalWeight r = w;
    r.coeff.back() = 2 * r.coeff.back();
    return r;
}

ClassicalWeight eta_inverse(const ClassicalWeight& w) {
    ClassicalWeight r = w;
    r.coeff.back() = r.coeff.back().div(2);
    return r;
}

AffineWeight affine_lift(const CartanData& cd, const ClassicalWeight& w) {
    AffineWeight aw;
    aw.coeff.assign(cd.n + 1, half_zero);
    Half lvl = half_zero;
    for (int a = 1; a <= cd.n; ++a) {
        aw.coeff[a] = w[a];
        lvl += cd.cv[a] * w[a];
    }
    aw.coeff[0] = (-lvl).div(cd.cv[0]);
    return aw;
}

Half alpha_check_pairing(const CartanData& cd, const ClassicalWeight& w, int a) {
    (void)cd;
    return w[a];
}

}  // namespace rcr
