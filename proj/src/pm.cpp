#include "rcr/pm.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rcr/filling.hpp"

namespace rcr {

namespace {

constexpr int kPlain = 0, kPlus = 1, kMinus = 2, kBoth = 3, kZero = 4;

int mu_drop(int st) { return st == kMinus || st == kBoth ? 1 : 0; }
int tau_drop(int st) {
    switch (st) {
        case kPlain: return 0;
        case kPlus: return 1;
        case kMinus: return 1;
        case kBoth: return 2;
        default: return 0;
    }
}

std::vector<int> conj_from_heights(const std::vector<int>& heights) {
    std::vector<int> rows;
    int maxh = 0;
    for (int h : heights) maxh = std::max(maxh, h);
    for (int r = 1; r <= maxh; ++r) {
        int cnt = 0;
        for (int h : heights)
            if (h >= r) ++cnt;
        rows.push_back(cnt);
    }
    return rows;
}

}  // namespace

int PMDiagram::total_columns() const {
    int c = 0;
    for (auto& [h, arr] : counts)
        for (int st = 0; st < 5; ++st) c += arr[st];
    return c;
}

std::vector<int> PMDiagram::lambda_rows() const {
    std::vector<int> hs;
    for (auto& [h, arr] : counts)
        for (int st = 0; st < 5; ++st)
            for (int k = 0; k < arr[st]; ++k) hs.push_back(h);
    return conj_from_heights(hs);
}

std::vector<int> PMDiagram::mu_rows() const {
    std::vector<int> hs;
    for (auto& [h, arr] : counts)
        for (int st = 0; st < 5; ++st)
            for (int k = 0; k < arr[st]; ++k) hs.push_back(h - mu_drop(st));
    return conj_from_heights(hs);
}

std::vector<int> PMDiagram::tau_rows() const {
    std::vector<int> hs;
    for (auto& [h, arr] : counts)
        for (int st = 0; st < 5; ++st)
            for (int k = 0; k < arr[st]; ++k) hs.push_back(h - tau_drop(st));
    return conj_from_heights(hs);
}

std::string PMDiagram::key() const {
    std::ostringstream os;
    for (auto& [h, arr] : counts) {
        bool any = false;
        for (int st = 0; st < 5; ++st) any |= arr[st] > 0;
        if (!any) continue;
        os << h << ':';
        for (int st = 0; st < 5; ++st) os << arr[st] << ',';
        os << ';';
    }
    os << "s" << spin;
    return os.str();
}

std::string PMDiagram::json() const {
    auto rows = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << ']';
        return os.str();
    };
    bool zero = false;
    for (auto& [h, arr] : counts) zero |= arr[kZero] > 0;
    std::ostringstream os;
    os << "{\"lambda\":" << rows(lambda_rows()) << ",\"mu\":" << rows(mu_rows())
       << ",\"tau\":" << rows(tau_rows()) << ",\"zero_col\":" << (zero ? "true" : "false")
       << ",\"spin\":" << (spin == 0 ? "null" : (spin > 0 ? "\"+\"" : "\"-\"")) << "}";
    return os.str();
}

std::vector<PMDiagram> enumerate_pm(const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    bool bspin = (t.family == Family::B1 && r == n);
    std::vector<PMDiagram> out;

    for (auto& lam : decomposition_list(t, r, s)) {
        auto eps = to_epsilon(cd, lam);
        bool has_spin =
            std::any_of(eps.begin(), eps.end(), [](Half h) { return !h.is_integer(); });
        if (has_spin && !bspin) continue;
        std::vector<int> full_heights;
        {
            std::vector<std::int64_t> rows;
            for (auto h : eps) rows.push_back((has_spin ? h - one_half : h).to_int());
            std::int64_t maxr = 0;
            for (auto v : rows) maxr = std::max(maxr, v);
            for (std::int64_t c = 1; c <= maxr; ++c) {
                int cnt = 0;
                for (auto v : rows)
                    if (v >= c) ++cnt;
                full_heights.push_back(cnt);
            }
        }
        int total_cols = bspin ? (s - (has_spin ? 1 : 0)) / 2 : s;
        if (static_cast<int>(full_heights.size()) > total_cols) continue;
        std::map<int, int> per_height;
        for (int h : full_heights) per_height[h]++;
        per_height[0] += total_cols - static_cast<int>(full_heights.size());

        std::vector<std::pair<int, int>> hs(per_height.begin(), per_height.end());
        PMDiagram base;
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == hs.size()) {
                if (bspin && has_spin) {
                    for (int sg : {1, -1}) {
                        PMDiagram P = base;
                        P.spin = sg;
                        out.push_back(P);
                    }
                } else {
                    out.push_back(base);
                }
                return;
            }
            auto [h, cnt] = hs[idx];
            std::vector<int> states;
            if (h == 0) {
                states = {kPlain};
            } else {
                states = {kPlain, kPlus, kMinus};
                if (h >= 2) states.push_back(kBoth);
                if (h == n) {
                    if (bspin) states.push_back(kZero);
                    bool no_plain = bspin || cd.classical_family() == ClassicalFamily::C;
                    if (no_plain)
                        states.erase(std::find(states.begin(), states.end(), kPlain));
                }
            }
            std::function<void(size_t, int)> comp = [&](size_t si, int left) {
                if (si + 1 == states.size()) {
                    int st = states[si];
                    if (st == kZero && left > 1) return;
                    base.counts[h][st] += left;
                    rec(idx + 1);
                    base.counts[h][st] -= left;
                    return;
                }
                int st = states[si];
                int cap = (st == kZero) ? std::min(left, 1) : left;
                for (int k = 0; k <= cap; ++k) {
                    base.counts[h][st] += k;
                    comp(si + 1, left - k);
                    base.counts[h][st] -= k;
                }
            };
            if (cnt == 0)
                rec(idx + 1);
            else
                comp(0, cnt);
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// column list, leftmost first: outer height descending, states in display
// order plain, plus, zero, minus, both within a height
std::vector<std::pair<int, int>> column_list(const PMDiagram& P) {
    std::vector<std::pair<int, int>> cols;
    static const int order[5] = {kPlain, kPlus, kZero, kMinus, kBoth};
    for (auto it = P.counts.rbegin(); it != P.counts.rend(); ++it)
        for (int oi = 0; oi < 5; ++oi)
            for (int k = 0; k < it->second[order[oi]]; ++k)
                cols.push_back({it->first, order[oi]});
    return cols;
}

ClassicalWeight weight_of_rows(const CartanData& cd, const std::vector<int>& rows) {
    const int n = cd.n;
    std::vector<Half> eps(n, half_zero);
    for (size_t i = 0; i < rows.size() && i < static_cast<size_t>(n); ++i)
        eps[i] = Half::of_int(rows[i]);
    ClassicalWeight lam = ClassicalWeight::zero(n);
    switch (cd.classical_family()) {
        case ClassicalFamily::B:
            for (int a = 1; a < n; ++a) lam.at(a) = eps[a - 1] - eps[a];
            lam.at(n) = 2 * eps[n - 1];
            break;
        case ClassicalFamily::C:
            for (int a = 1; a < n; ++a) lam.at(a) = eps[a - 1] - eps[a];
            lam.at(n) = eps[n - 1];
            break;
        case ClassicalFamily::D:
            for (int a = 1; a <= n - 2; ++a) lam.at(a) = eps[a - 1] - eps[a];
            lam.at(n - 1) = eps[n - 2] - eps[n - 1];
            lam.at(n) = eps[n - 2] + eps[n - 1];
            break;
        default:
            for (int a = 1; a < n; ++a) lam.at(a) = eps[a - 1] - eps[a];
            lam.at(n) = eps[n - 1];
            break;
    }
    return lam;
}

}  // namespace

WordElement zeta(const AffineType& t, int r, int s, const PMDiagram& P) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    if (P.spin != 0) throw std::domain_error("zeta: spin columns not supported");
    auto cols = column_list(P);
    bool has_zero_col = false;
    for (auto& [h, st] : cols) has_zero_col |= (st == kZero);

    // Case 1: rightmost column where a + can be added
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        auto [x, st] = *it;
        int h = -1, next = -1;
        if (st == kPlain && x >= 1) {
            h = x;
            next = kPlus;
        } else if (st == kMinus && x >= 2) {
            h = x - 1;
            next = kBoth;
        }
        if (h < 0) continue;
        PMDiagram Q = P;
        Q.counts[x][st] -= 1;
        Q.counts[x][next] += 1;
        WordElement b = zeta(t, r, s, Q);
        if (has_zero_col) {
            for (int a = n; a >= 1; --a) {
                auto d = b.f(a);
                if (!d) throw std::domain_error("zeta: zero-column f-string vanished");
                b = *d;
            }
        }
        for (int a = h; a >= 1; --a) {
            auto d = b.f(a);
            if (!d) throw std::domain_error("zeta: f-string vanished");
            b = *d;
        }
        return b;
    }

    // Case 2: leftmost minus
    for (auto& [x, st] : cols) {
        if (st != kBoth && st != kMinus && st != kZero) continue;
        int h = x;
        PMDiagram Q = P;
        Q.counts[x][st] -= 1;
        Q.counts[x][kPlus] += 1;
        bool spin_minus = false;  // reserved for the half-width spin column
        WordElement b = zeta(t, r, s, Q);
        std::vector<int> word;
        switch (cd.classical_family()) {
            case ClassicalFamily::D:
                for (int a = h; a <= n - 2; ++a) word.push_back(a);
                word.push_back(n);
                for (int a = n - 1; a >= 1; --a) word.push_back(a);
                break;
            case ClassicalFamily::B:
                if (spin_minus) {
                    word.push_back(n);
                    for (int a = n - 1; a >= 1; --a) word.push_back(a);
                } else {
                    for (int a = h; a <= n - 1; ++a) word.push_back(a);
                    word.push_back(n);
                    word.push_back(n);
                    for (int a = n - 1; a >= 1; --a) word.push_back(a);
                }
                break;
            case ClassicalFamily::C:
                for (int a = h; a <= n - 1; ++a) word.push_back(a);
                word.push_back(n);
                for (int a = n - 1; a >= 1; --a) word.push_back(a);
                break;
            default:
                throw std::domain_error("zeta: unsupported classical family");
        }
        for (int a : word) {
            auto d = b.f(a);
            if (!d) throw std::domain_error("zeta: case 2 f-string vanished");
            b = *d;
        }
        return b;
    }

    // all plus: the highest weight vector
    return kn_highest_weight(cd, weight_of_rows(cd, P.lambda_rows()));
}

namespace {

struct Contribution {
    std::vector<std::vector<std::pair<int, Half>>> rows;  // per node, longest first
};

// the printed per-column tables; the D spinor pair collapses onto node n for
// families B (doubled lengths) and C (as is)
Contribution column_contribution(const CartanData& cd, int r, int x, int st) {
    const int n = cd.n;
    Contribution c;
    c.rows.assign(n, {});
    const int y = r - x;
    auto fam = cd.classical_family();
    const int flat_end = (fam == ClassicalFamily::D) ? n - 2 : n - 1;
    const int spin_scale = (fam == ClassicalFamily::B) ? 2 : 1;

    auto add = [&](int a, int len, Half rig) {
        if (a >= 1 && a <= n && len > 0) c.rows[a - 1].push_back({len, rig});
    };
    auto spinor_add = [&](int count) {
        for (int k = 0; k < count; ++k) {
            if (fam == ClassicalFamily::D) {
                add(n - 1, 1, half_zero);
                add(n, 1, half_zero);
            } else {
                add(n, spin_scale, half_zero);
            }
        }
    };

    switch (st) {
        case kPlain:
            for (int a = 1; a <= x; ++a) add(a, 1, a == 1 ? Half::of_int(-1) : half_zero);
            // the leading rigging 1 belongs to columns with x >= 1 only (the
            // h = 0 case is corrected by nu_1^(1) in the inverse formulas)
            for (int k = 1; k <= y; ++k)
                for (int j = 0; j < k; ++j)
                    add(x + k, 1,
                        (x >= 1 && k == 1 && j == 0) ? Half::of_int(1) : half_zero);
            for (int a = x + y + 1; a <= flat_end; ++a)
                for (int j = 0; j < y; ++j) add(a, 1, half_zero);
            spinor_add(y / 2);
            break;
        case kPlus:
            for (int k = 1; k <= y; ++k)
                for (int j = 0; j < k; ++j) add(x + k, 1, half_zero);
            for (int a = x + y + 1; a <= flat_end; ++a)
                for (int j = 0; j < y; ++j) add(a, 1, half_zero);
            spinor_add(y / 2);
            break;
        case kMinus:
            for (int a = 1; a <= x - 1; ++a)
                add(a, 2, a == 1 ? Half::of_int(-2) : half_zero);
            for (int k = 1; k <= y + 1; ++k)
                for (int j = 0; j < k + 1; ++j) {
                    // the printed x = 1 exception: the first entry is the
                    // node-1 pair with riggings (-1, -1)
                    Half rig = (x == 1 && k == 1) ? Half::of_int(-1) : half_zero;
                    add(x - 1 + k, 1, rig);
                }
            for (int a = x + y + 1; a <= flat_end; ++a)
                for (int j = 0; j < y + 2; ++j) add(a, 1, half_zero);
            spinor_add((y + 2) / 2);
            break;
        case kBoth:
            for (int a = 1; a <= x - 1; ++a)
                add(a, 1, a == 1 ? Half::of_int(-1) : half_zero);
            for (int k = 1; k <= y + 1; ++k)
                for (int j = 0; j < k + 1; ++j) add(x - 1 + k, 1, half_zero);
            for (int a = x + y + 1; a <= flat_end; ++a)
                for (int j = 0; j < y + 2; ++j) add(a, 1, half_zero);
            spinor_add((y + 2) / 2);
            break;
        case kZero:
            // full column containing 0, or a spin column with -
            for (int a = 1; a <= n; ++a) add(a, 1, a == 1 ? Half::of_int(-1) : half_zero);
            break;
    }
    return c;
}

}  // namespace

RiggedConfiguration zeta_rc(const AffineType& t, int r, int s, const PMDiagram& P) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    bool bspin = (t.family == Family::B1 && r == n);
    if (r == n && (t.family == Family::B1 || t.family == Family::A2Odd)) {
        // the printed tables stop at r < n (their growing group would meet
        // the spinor nodes); at r = n the map is the natural isomorphism
        // applied to zeta, as in the spinor extension
        if (P.spin != 0)
            throw std::domain_error("zeta_rc: half-width spin columns not supported");
        return iota(t, r, s, zeta(t, r, s, P));
    }
    std::vector<std::vector<std::pair<int, Half>>> acc(n);
    auto merge = [&](Contribution c) {
        for (int a = 0; a < n; ++a) {
            auto& rows = c.rows[a];
            std::sort(rows.begin(), rows.end(),
                      [](auto& u, auto& v) { return u.first > v.first; });
            for (size_t k = 0; k < rows.size(); ++k) {
                if (k >= acc[a].size()) acc[a].push_back({0, half_zero});
                acc[a][k].first += rows[k].first;
                acc[a][k].second += rows[k].second;
            }
        }
    };
    for (auto& [h, arr] : P.counts)
        for (int st = 0; st < 5; ++st)
            for (int k = 0; k < arr[st]; ++k)
                merge(column_contribution(cd, bspin ? n : r, h, st));
    if (P.spin == -1) merge(column_contribution(cd, r, 0, kZero));

    auto L = std::make_shared<MultiplicityArray>(MultiplicityArray::of_factors(t, {{r, s}}));
    std::vector<RiggedPartition> nu(n);
    for (int a = 0; a < n; ++a)
        for (auto& [len, rig] : acc[a])
            if (len > 0) nu[a].strings.push_back({len, rig});
    return RiggedConfiguration(L, std::move(nu));
}

PMDiagram zeta_rc_inverse(const AffineType& t, int r, int s,
                          const RiggedConfiguration& rc) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    for (int a = 2; a <= n; ++a)
        if (rc.epsilon(a) != half_zero)
            throw std::domain_error("zeta_rc_inverse: not {2..n}-highest weight");
    // Invert against the forward column tables.  (The printed difference
    // formulas go negative on lone full-height minus columns, so the tables
    // are the authority here.)
    static std::map<std::string, std::map<std::string, PMDiagram>> cache;
    std::string key = t.str() + "/" + std::to_string(r) + "," + std::to_string(s);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<std::string, PMDiagram> table;
        for (auto& P : enumerate_pm(t, r, s)) table[zeta_rc(t, r, s, P).serialize()] = P;
        it = cache.emplace(key, std::move(table)).first;
    }
    auto hit = it->second.find(rc.serialize());
    if (hit == it->second.end())
        throw std::domain_error("zeta_rc_inverse: configuration outside the image");
    return hit->second;
}

PMDiagram s_involution(const PMDiagram& P, int r) {
    int parity = -1;
    for (auto& [h, arr] : P.counts) {
        if (h == 0) continue;
        int cnt = arr[0] + arr[1] + arr[2] + arr[3] + arr[4];
        if (cnt == 0) continue;
        if (parity == -1)
            parity = h % 2;
        else if (parity != h % 2)
            throw std::domain_error("S: mixed column height parities");
    }
    if (P.spin != 0) throw std::domain_error("S: spin columns not supported");
    auto get = [&](int h, int st) -> int {
        if (h < 0) return 0;
        auto it = P.counts.find(h);
        return it == P.counts.end() ? 0 : it->second[st];
    };
    PMDiagram Q;
    for (int h = 0; h <= r; ++h) {
        int plus = (h >= 1) ? get(h, kMinus) : get(h, kPlus);
        int minus = (h >= 1) ? get(h, kPlus) : get(h, kMinus);
        int both = (h >= 2) ? get(h - 2, kPlain) : get(h, kBoth);
        int plain = (h + 2 <= r) ? get(h + 2, kBoth) : get(h, kPlain);
        if (plus) Q.counts[h][kPlus] += plus;
        if (minus) Q.counts[h][kMinus] += minus;
        if (both) Q.counts[h][kBoth] += both;
        if (plain) Q.counts[h][kPlain] += plain;
    }
    return Q;
}

namespace {

std::vector<int> raise_word_2n(RiggedConfiguration& rc) {
    std::vector<int> path;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 2; a <= rc.n(); ++a) {
            auto up = rc.e(a);
            if (up) {
                rc = *up;
                path.push_back(a);
                moved = true;
                break;
            }
        }
    }
    return path;
}

}  // namespace

RiggedConfiguration sigma_rc(const RiggedConfiguration& rc0) {
    const AffineType t = rc0.type();
    const CartanData& cd = cartan_data(t);
    if (rc0.L().factors.size() != 1)
        throw std::domain_error("sigma_rc: single factor only");
    auto [r, s] = rc0.L().factors.front();
    bool ok = (t.family == Family::D1 && r <= cd.n - 2) ||
              (t.family == Family::B1 && r < cd.n) ||
              (t.family == Family::A2Odd && r < cd.n);
    if (!ok) throw std::domain_error("sigma_rc: unsupported type or node");

    RiggedConfiguration rc = rc0;
    auto path = raise_word_2n(rc);
    RiggedConfiguration img = zeta_rc(t, r, s, s_involution(zeta_rc_inverse(t, r, s, rc), r));
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = img.f(*it);
        if (!down) throw std::domain_error("sigma_rc: transport failed");
        img = *down;
    }
    return img;
}

std::optional<RiggedConfiguration> f0(const RiggedConfiguration& rc) {
    auto x = sigma_rc(rc).f(1);
    if (!x) return std::nullopt;
    return sigma_rc(*x);
}

std::optional<RiggedConfiguration> e0(const RiggedConfiguration& rc) {
    auto x = sigma_rc(rc).e(1);
    if (!x) return std::nullopt;
    return sigma_rc(*x);
}

PMDiagram double_pm(const PMDiagram& P, int n) {
    PMDiagram Q;
    for (auto& [h, arr] : P.counts) {
        for (int st : {kPlain, kPlus, kMinus, kBoth})
            if (arr[st]) Q.counts[h][st] += 2 * arr[st];
        if (arr[kZero]) {
            // the 0 cell splits into a + and a -, one to each doubled copy
            // of the ambient +- pair (weight bookkeeping forces this)
            Q.counts[h][kBoth] += 2 * arr[kZero];
        }
    }
    if (P.spin != 0) Q.counts[n][P.spin > 0 ? kPlus : kMinus] += 1;
    return Q;
}

RiggedConfiguration double_rc_b(const RiggedConfiguration& rc) {
    const int n = rc.n();
    if (rc.type().family != Family::B1)
        throw std::domain_error("double_rc_b: type B input required");
    std::vector<std::pair<int, int>> fs;
    for (auto& [r, s] : rc.L().factors) fs.push_back({r, r == n ? s : 2 * s});
    std::vector<RiggedPartition> nu(n);
    for (int a = 1; a <= n; ++a)
        for (auto& str : rc.part(a).strings) {
            if (a < n)
                nu[a - 1].strings.push_back({2 * str.len, 2 * str.rig});
            else
                nu[a - 1].strings.push_back(str);
        }
    return RiggedConfiguration(
        std::make_shared<MultiplicityArray>(
            MultiplicityArray::of_factors(AffineType{Family::A2Odd, n}, fs)),
        std::move(nu));
}

PMDiagram virtualize_pm(const AffineType& source, const PMDiagram& P) {
    const CartanData& cd = cartan_data(source);
    const int n = cd.n;
    int gamma_low = (source.family == Family::B1) ? 2 : 1;
    PMDiagram Q;
    for (auto& [h, arr] : P.counts) {
        int g = (h < n) ? gamma_low : 1;
        for (int st = 0; st < 5; ++st)
            if (arr[st]) Q.counts[h][st] += g * arr[st];
    }
    Q.spin = P.spin;
    return Q;
}

}  // namespace rcr
