#include "rcr/filling.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "rcr/kleber.hpp"

namespace rcr {

namespace {

enum class Diamond { None, Box, Vertical, Horizontal };

Diamond diamond_of(const AffineType& t, int r) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A1: return Diamond::None;
        case Family::B1: return Diamond::Vertical;  // n x (s/2) rectangle at r = n
        case Family::C1: return r < n ? Diamond::Horizontal : Diamond::None;
        case Family::D1: return r < n - 1 ? Diamond::Vertical : Diamond::None;
        case Family::A2Odd: return Diamond::Vertical;
        case Family::A2Even: return Diamond::Box;
        case Family::A2Dual: return Diamond::Horizontal;
        case Family::D2: return r < n ? Diamond::Box : Diamond::None;
    }
    return Diamond::None;
}

// lambda as a ClassicalWeight from integral epsilon coordinates
ClassicalWeight weight_from_rows(const CartanData& cd, const std::vector<Half>& rows) {
    const int n = cd.n;
    ClassicalWeight w = ClassicalWeight::zero(n);
    auto row = [&](int i) { return i <= static_cast<int>(rows.size()) ? rows[i - 1] : half_zero; };
    switch (cd.classical_family()) {
        case ClassicalFamily::A:
        case ClassicalFamily::C:
            for (int a = 1; a < n; ++a) w.at(a) = row(a) - row(a + 1);
            w.at(n) = row(n);
            break;
        case ClassicalFamily::B:
            for (int a = 1; a < n; ++a) w.at(a) = row(a) - row(a + 1);
            w.at(n) = 2 * row(n);
            break;
        case ClassicalFamily::D:
            for (int a = 1; a <= n - 2; ++a) w.at(a) = row(a) - row(a + 1);
            w.at(n - 1) = row(n - 1) - row(n);
            w.at(n) = row(n - 1) + row(n);
            break;
    }
    return w;
}

}  // namespace

int diamond_cells(const AffineType& t, int r) {
    switch (diamond_of(t, r)) {
        case Diamond::None: return 0;
        case Diamond::Box: return 1;
        default: return 2;
    }
}

std::vector<ClassicalWeight> decomposition_list(const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    std::vector<ClassicalWeight> out;
    Diamond d = diamond_of(t, r);
    if (d == Diamond::None) {
        out.push_back(cd.factor_weight(r, s));
        return out;
    }
    // rectangle: r x s, except n x (s/2) for the type B spinor
    bool bspin = (t.family == Family::B1 && r == n);
    int rows_n = r;
    Half width = bspin ? Half::of_halves(s) : Half::of_int(s);

    // enumerate partitions with rows_n rows of length <= width (half steps
    // only in the B-spin width), filtered by the tiling condition
    std::vector<Half> rows(rows_n, half_zero);
    std::function<void(int, Half)> rec = [&](int i, Half maxlen) {
        if (i == rows_n) {
            // tiling conditions on the complement
            std::vector<Half> comp;  // complement rows, largest first
            for (int k = rows_n - 1; k >= 0; --k) comp.push_back(width - rows[k]);
            bool ok = true;
            if (d == Diamond::Horizontal) {
                for (auto h : comp)
                    if (h.num % 4 != 0) ok = false;  // even integer rows
            } else if (d == Diamond::Vertical) {
                // complement rows are integral and pair up (even column heights)
                for (auto h : comp)
                    if (!h.is_integer()) ok = false;
                for (size_t k = 0; ok && k + 1 < comp.size(); k += 2)
                    if (comp[k] != comp[k + 1]) ok = false;
                if (ok && comp.size() % 2 == 1 && comp.back() != half_zero) ok = false;
            } else {
                for (auto h : comp)
                    if (!h.is_integer()) ok = false;
            }
            if (ok) out.push_back(weight_from_rows(cd, rows));
            return;
        }
        for (Half v = maxlen; v >= half_zero; v -= (bspin ? one_half : half_one)) {
            rows[i] = v;
            rec(i + 1, v);
        }
        // ensure exact zero included when stepping misses it (half grid)
    };
    rec(0, width);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // keep only weights with lambda inside the rectangle reachable by the
    // diamond removal; for vertical dominoes in the B-spin case parity of
    // row differences was already enforced
    return out;
}

bool in_decomposition(const AffineType& t, int r, int s, const ClassicalWeight& lambda) {
    auto list = decomposition_list(t, r, s);
    return std::find(list.begin(), list.end(), lambda) != list.end();
}

namespace {

std::vector<Letter> plain_column(int top, int h) {
    // [1..h] shifted: letters 1..h reading bottom-to-top; stored top-to-bottom
    std::vector<Letter> col;
    for (int k = h; k >= 1; --k) col.push_back(k);
    (void)top;
    return col;
}

// reading-order (top to bottom) column from bottom-to-top letter list
std::vector<Letter> col_from_bottom_up(std::vector<Letter> bu) {
    std::reverse(bu.begin(), bu.end());
    return bu;
}

// the fill procedure of the vertical/box families (steps 1-4); the final
// column uses empty letters in the box-removal types
std::vector<std::vector<Letter>> fill_columns(const AffineType& t, int r, int s,
                                              const std::vector<int>& kcount,
                                              bool empty_final) {
    std::vector<std::vector<Letter>> cols;
    // c: largest h < r with odd k_h
    int c = -1;
    for (int h = r - 1; h >= 0; --h)
        if (kcount[h] % 2 == 1) {
            c = h;
            break;
        }
    // (1)
    for (int k = 0; k < kcount[r]; ++k) cols.push_back(plain_column(0, r));
    // (2)
    for (int h = r - 1; h >= std::max(c, 0); --h)
        for (int k = 0; k < kcount[h] / 2; ++k) {
            std::vector<Letter> bu;
            for (int j = 1; j <= h; ++j) bu.push_back(j);
            for (int j = r; j >= h + 1; --j) bu.push_back(-j);
            cols.push_back(col_from_bottom_up(bu));
            cols.push_back(plain_column(0, r));
        }
    if (c < 0) return cols;
    // (3): the unpaired columns below c, shortest first, chained through x
    int x = c + 1;
    for (int h = 0; h < c; ++h) {
        for (int k = 0; k < kcount[h]; ++k) {
            std::vector<Letter> bu;
            for (int j = 1; j <= h; ++j) bu.push_back(j);
            for (int j = r - (x - h - 2); j <= r; ++j) bu.push_back(j);
            for (int j = r; j >= x; --j) bu.push_back(-j);
            if (static_cast<int>(bu.size()) != r)
                throw std::domain_error("fill: step (3) produced a bad column");
            cols.push_back(col_from_bottom_up(bu));
            Letter at = bu[h];  // (h+1)-th letter from the bottom
            x = std::abs(at);
        }
    }
    // (4)
    if (empty_final) {
        std::vector<Letter> bu;
        for (int j = 1; j <= x - 1; ++j) bu.push_back(j);
        while (static_cast<int>(bu.size()) < r) bu.push_back(kEmptyLetter);
        cols.push_back(col_from_bottom_up(bu));
    } else {
        if ((r + x - 1) % 2 != 0)
            throw std::domain_error("fill: step (4) parity violation");
        int y = (r + x - 1) / 2;
        std::vector<Letter> bu;
        for (int j = 1; j <= y; ++j) bu.push_back(j);
        for (int j = y; j >= x; --j) bu.push_back(-j);
        if (static_cast<int>(bu.size()) != r)
            throw std::domain_error("fill: step (4) produced a bad column");
        cols.push_back(col_from_bottom_up(bu));
    }
    return cols;
}

std::vector<int> column_counts(const CartanData& cd, const ClassicalWeight& lambda, int r,
                               int s, int ncols_target) {
    // k_h = number of columns of height h in the shape of lambda (h = 0..r)
    auto eps = to_epsilon(cd, lambda);
    std::vector<int> k(r + 1, 0);
    int placed = 0;
    for (int h = 1; h <= r; ++h) {
        Half rh = h <= cd.n ? eps[h - 1] : half_zero;
        Half rh1 = h < cd.n ? eps[h] : half_zero;
        if (h == r) {
            if (!rh.is_integer()) throw std::domain_error("fill: non-integral shape");
            k[h] = static_cast<int>(rh.to_int());
        } else {
            Half diff = rh - rh1;
            if (!diff.is_integer()) throw std::domain_error("fill: non-integral shape");
            k[h] = static_cast<int>(diff.to_int());
        }
        placed += k[h];
    }
    k[0] = ncols_target - placed;
    if (k[0] < 0) throw std::domain_error("fill: shape wider than the rectangle");
    (void)s;
    return k;
}

}  // namespace

WordElement fill_highest_weight(const AffineType& t, int r, int s,
                                const ClassicalWeight& lambda) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    if (!in_decomposition(t, r, s, lambda))
        throw std::domain_error("fill: lambda not in the classical decomposition");
    auto [rows, scale] = kr_tableau_rows(t, r);

    WordElement out;
    out.family = cd.classical_family();
    out.n = n;
    WordFactor f;
    f.cols.assign(s, rows);
    f.scale = scale;

    auto push_cols = [&](const std::vector<std::vector<Letter>>& cols) {
        for (auto& col : cols) f.letters.insert(f.letters.end(), col.begin(), col.end());
    };

    if (diamond_of(t, r) == Diamond::None) {
        // trivial filling: s columns [1..rows], with nbar at the top of the
        // D-type r = n-1 spinor
        for (int cidx = 0; cidx < s; ++cidx) {
            std::vector<Letter> bu;
            for (int j = 1; j <= rows; ++j) bu.push_back(j);
            if (t.family == Family::D1 && r == n - 1) bu.back() = -n;
            push_cols({col_from_bottom_up(bu)});
        }
        out.factors.push_back(std::move(f));
        return out;
    }

    bool empty_final = (t.family == Family::A2Even || t.family == Family::D2);
    if (t.family == Family::B1 && r == n) {
        // doubled spin columns: counts from the doubled shape in the n x s box
        auto eps = to_epsilon(cd, lambda);
        std::vector<int> k(n + 1, 0);
        int placed = 0;
        for (int h = 1; h <= n; ++h) {
            Half diff = (h == n) ? eps[n - 1] : eps[h - 1] - eps[h];
            Half doubled = 2 * diff;
            if (!doubled.is_integer()) throw std::domain_error("fill: bad spin shape");
            k[h] = static_cast<int>(doubled.to_int());
            placed += k[h];
        }
        k[0] = s - placed;
        if (k[0] < 0) throw std::domain_error("fill: shape wider than the rectangle");
        push_cols(fill_columns(t, n, s, k, false));
    } else {
        auto k = column_counts(cd, lambda, r, s, s);
        push_cols(fill_columns(t, r, s, k, empty_final));
    }
    out.factors.push_back(std::move(f));
    return out;
}

namespace {

// raise an element to its highest weight, recording the applied indices
template <class T, class EOp>
std::vector<int> raise_to_highest(T& b, const EOp& eop, int n) {
    std::vector<int> path;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 1; a <= n; ++a) {
            auto up = eop(b, a);
            if (up) {
                b = *up;
                path.push_back(a);
                moved = true;
                break;
            }
        }
    }
    return path;
}

}  // namespace

WordElement fill(const AffineType& t, int r, int s, const WordElement& kn) {
    const CartanData& cd = cartan_data(t);
    WordElement b = kn;
    auto path = raise_to_highest(
        b, [](const WordElement& w, int a) { return w.e(a); }, cd.n);
    WordElement target = fill_highest_weight(t, r, s, b.weight());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = target.f(*it);
        if (!down) throw std::domain_error("fill: morphism transport failed");
        target = *down;
    }
    return target;
}

RiggedConfiguration iota(const AffineType& t, int r, int s, const WordElement& kn) {
    const CartanData& cd = cartan_data(t);
    WordElement b = kn;
    auto path = raise_to_highest(
        b, [](const WordElement& w, int a) { return w.e(a); }, cd.n);
    RiggedConfiguration rc = closed_form_hw_rc(t, r, s, b.weight());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = rc.f(*it);
        if (!down) throw std::domain_error("iota: morphism transport failed");
        rc = *down;
    }
    return rc;
}

WordElement iota_inverse(const AffineType& t, int r, int s, const RiggedConfiguration& rc0) {
    const CartanData& cd = cartan_data(t);
    RiggedConfiguration rc = rc0;
    auto path = raise_to_highest(
        rc, [](const RiggedConfiguration& x, int a) { return x.e(a); }, cd.n);
    ShapeInfo si = shape_of(cd, rc.weight());
    (void)si;
    WordElement b = kn_highest_weight(cd, rc.weight());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = b.f(*it);
        if (!down) throw std::domain_error("iota_inverse: morphism transport failed");
        b = *down;
    }
    (void)r;
    (void)s;
    return b;
}

Half energy(const AffineType& t, int r, int s, const WordElement& kn) {
    const CartanData& cd = cartan_data(t);
    WordElement b = kn;
    raise_to_highest(
        b, [](const WordElement& w, int a) { return w.e(a); }, cd.n);
    int cells = diamond_cells(t, r);
    if (cells == 0) return half_zero;
    // removed cells = |rectangle| - |lambda|
    auto eps = to_epsilon(cd, b.weight());
    Half lam_cells = half_zero;
    for (auto h : eps) lam_cells += h;
    bool bspin = (t.family == Family::B1 && r == cd.n);
    Half rect = bspin ? Half::of_halves(static_cast<std::int64_t>(cd.n) * s)
                      : Half::of_int(static_cast<std::int64_t>(r) * s);
    Half removed = rect - lam_cells;
    return removed.div(cells);
}

WordElement fill_hw_for_b(const AffineType& t, int r, int s, const ClassicalWeight& lambda) {
    return fill_highest_weight(t, r, s, lambda);
}

std::vector<std::string> verify_fill_equals_phi(const AffineType& t, int r, int s) {
    std::vector<std::string> bad;
    for (auto& lambda : decomposition_list(t, r, s)) {
        auto rc = closed_form_hw_rc(t, r, s, lambda);
        auto via_phi = phi(rc);
        auto direct = fill_highest_weight(t, r, s, lambda);
        if (!(via_phi.tableaux == direct))
            bad.push_back(t.str() + " B^{" + std::to_string(r) + "," + std::to_string(s) +
                          "} lambda=" + lambda.str());
    }
    return bad;
}

}  // namespace rcr
