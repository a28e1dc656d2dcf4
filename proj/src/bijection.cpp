#include "rcr/bijection.hpp"

namespace rcr {
// defined in filling.cpp (fill of the source highest weight tableau)
WordElement fill_hw_for_b(const AffineType& t, int r, int s, const ClassicalWeight& lambda);
}

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace rcr {

namespace {

std::shared_ptr<const MultiplicityArray> with_factors(
    const AffineType& t, std::vector<std::pair<int, int>> fs) {
    return std::make_shared<MultiplicityArray>(
        MultiplicityArray::of_factors(t, std::move(fs)));
}

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mutable selection state for one delta application
struct DeltaState {
    struct Str {
        int len;
        Half rig;
        int picked = 0;
    };
    const RiggedConfiguration* rc;
    std::vector<std::vector<Str>> nu;
    std::ostringstream trace;

    explicit DeltaState(const RiggedConfiguration& r) : rc(&r) {
        nu.resize(r.n());
        for (int a = 1; a <= r.n(); ++a)
            for (auto& s : r.part(a).strings) nu[a - 1].push_back({s.len, s.rig, 0});
    }

    bool singular(int a, const Str& s) const { return s.rig == rc->vacancy(a, s.len); }
    bool quasi(int a, const Str& s, Half off) const {
        return s.rig == rc->vacancy(a, s.len) - off;
    }

    // In the simply-laced-shaped walks a string selected once participates in
    // the return pass with effective length one less; the folded single-pass
    // walks keep its original length (the printed "ell = ellbar" case, both
    // boxes off the same string).
    enum class Repick { Effective, Original };
    int last_value = 0;

    int value(const Str& s, Repick mode) const {
        if (mode == Repick::Effective) return s.len - s.picked;
        return s.len;
    }

    // smallest candidate of value >= bound: fresh singular strings or a
    // once-picked string; ties prefer the picked string
    int select(int a, int bound, Repick mode = Repick::Effective) {
        int best = -1;
        for (size_t k = 0; k < nu[a - 1].size(); ++k) {
            auto& s = nu[a - 1][k];
            if (s.picked >= 2) continue;
            if (s.picked == 0 && !singular(a, s)) continue;
            if (s.picked == 1 && s.len < 2) continue;  // nothing left to remove twice
            int v = value(s, mode);
            if (v < bound) continue;
            if (best < 0 || v < value(nu[a - 1][best], mode) ||
                (v == value(nu[a - 1][best], mode) && s.picked > nu[a - 1][best].picked)) {
                best = static_cast<int>(k);
            }
        }
        if (best >= 0) {
            last_value = value(nu[a - 1][best], mode);
            trace << "a=" << a << " l=" << last_value << "\n";
            nu[a - 1][best].picked += 1;
        }
        return best;
    }

    // fresh quasisingular string (rig = vacancy - off) of length >= minlen
    int select_quasi(int a, int minlen, Half off) {
        int best = -1;
        for (size_t k = 0; k < nu[a - 1].size(); ++k) {
            auto& s = nu[a - 1][k];
            if (s.picked > 0) continue;
            if (!quasi(a, s, off)) continue;
            if (s.len < minlen) continue;
            if (best < 0 || s.len < nu[a - 1][best].len) best = static_cast<int>(k);
        }
        if (best >= 0) {
            last_value = nu[a - 1][best].len;
            nu[a - 1][best].picked += 1;
            trace << "a=" << a << " l=" << last_value << " q\n";
        }
        return best;
    }



    // apply removals, re-rig shortened strings singular, rebuild over the new
    // factor list
    RiggedConfiguration finish(std::shared_ptr<const MultiplicityArray> L) {
        std::vector<RiggedPartition> out(nu.size());
        std::vector<std::vector<char>> shortened(nu.size());
        for (size_t a = 0; a < nu.size(); ++a)
            for (auto& s : nu[a]) {
                int len = s.len - s.picked;
                if (len < 0) throw InternalError("delta removed below zero length");
                if (len == 0) continue;
                out[a].strings.push_back({len, s.rig});
                shortened[a].push_back(s.picked > 0);
            }
        RiggedConfiguration probe(L, out);  // vacancy oracle for the new state
        for (size_t a = 0; a < out.size(); ++a)
            for (size_t k = 0; k < out[a].strings.size(); ++k)
                if (shortened[a][k])
                    out[a].strings[k].rig =
                        probe.vacancy(static_cast<int>(a) + 1, out[a].strings[k].len);
        RiggedConfiguration res(std::move(L), std::move(out));
        std::string why;
        if (!res.well_formed(&why))
            throw InternalError("delta produced an ill-formed configuration: " + why);
        return res;
    }
};

// factor list after removing the top cell of the leading column of height h
std::vector<std::pair<int, int>> shrink_leading(const std::vector<std::pair<int, int>>& fs,
                                                int h) {
    std::vector<std::pair<int, int>> out = fs;
    if (out.empty() || out.front() != std::make_pair(h, 1))
        throw InternalError("leading factor is not the expected column");
    if (h == 1)
        out.erase(out.begin());
    else
        out.front() = {h - 1, 1};
    return out;
}

Letter walk_A(DeltaState& st, int h, int n) {
    int last = 0;
    for (int a = h; a <= n; ++a) {
        int k = st.select(a, std::max(last, 1));
        if (k < 0) return a;
        last = st.last_value;
    }
    return n + 1;
}

Letter walk_D(DeltaState& st, int h, int n) {
    int last = 0;
    for (int a = h; a <= n - 2; ++a) {
        int k = st.select(a, std::max(last, 1));
        if (k < 0) return a;
        last = st.last_value;
    }
    int k1 = st.select(n - 1, std::max(last, 1));
    int v1 = k1 >= 0 ? st.last_value : 0;
    int k2 = st.select(n, std::max(last, 1));
    int v2 = k2 >= 0 ? st.last_value : 0;
    if (k1 < 0 && k2 < 0) return n - 1;
    if (k1 >= 0 && k2 < 0) return n;
    if (k1 < 0 && k2 >= 0) return -n;
    last = std::max(v1, v2);
    for (int a = n - 2; a >= 1; --a) {
        int k = st.select(a, std::max(last, 1));
        if (k < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

Letter walk_A2Odd(DeltaState& st, int h, int n) {
    int last = 0;
    for (int a = h; a <= n - 1; ++a) {
        int k = st.select(a, std::max(last, 1));
        if (k < 0) return a;
        last = st.last_value;
    }
    int kn = st.select(n, std::max(last, 1));
    if (kn < 0) return n;
    last = st.last_value;
    for (int a = n - 1; a >= 1; --a) {
        int k = st.select(a, std::max(last, 1));
        if (k < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

Letter walk_C(DeltaState& st, int h, int n) {
    using R = DeltaState::Repick;
    int last = 0;
    for (int a = h; a <= n - 1; ++a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return a;
        last = st.last_value;
    }
    int kn = st.select(n, std::max((last + 1) / 2, 1), R::Original);
    if (kn < 0) return n;
    last = 2 * st.last_value;
    for (int a = n - 1; a >= 1; --a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

// type A_{2n}^(2): as in type C at generic nodes; the selected singular
// string of nu^(n) loses two boxes, except that a selected string of length
// one ends the run with the empty letter
Letter walk_A2Even(DeltaState& st, int h, int n) {
    using R = DeltaState::Repick;
    int last = 0;
    for (int a = h; a <= n - 1; ++a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return a;
        last = st.last_value;
    }
    int kn = st.select(n, std::max(last, 1), R::Original);
    if (kn < 0) return n;
    int ell = st.last_value;
    if (ell == 1) return kEmptyLetter;
    st.nu[n - 1][kn].picked += 1;  // two boxes from the same string
    last = ell;
    for (int a = n - 1; a >= 1; --a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

// types D_{n+1}^(2) and A_{2n}^(2)+: two single-box passes through nu^(n);
// the letter 0 enters through quasisingular strings (rigging = vacancy - step)
Letter walk_BVector(DeltaState& st, int h, int n, Half quasi_off, bool has_empty) {
    using R = DeltaState::Repick;
    int last = 0;
    for (int a = h; a <= n - 1; ++a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return a;
        last = st.last_value;
    }
    int p1 = st.select(n, std::max(last, 1), R::Original);
    bool via_quasi = false;
    if (p1 < 0) {
        p1 = st.select_quasi(n, std::max(last, 1), quasi_off);
        via_quasi = true;
    }
    if (p1 < 0) return n;
    int len1 = st.last_value;
    if (!via_quasi && len1 == 1 && has_empty) return kEmptyLetter;
    int p2 = -1;
    if (!via_quasi) {
        p2 = st.select(n, len1, R::Original);
    } else {
        // after case (Q) only fresh singular strings qualify
        for (size_t k = 0; k < st.nu[n - 1].size(); ++k) {
            auto& s = st.nu[n - 1][k];
            if (s.picked > 0 || !st.singular(n, s) || s.len < len1) continue;
            if (p2 < 0 || s.len < st.nu[n - 1][p2].len) p2 = static_cast<int>(k);
        }
        if (p2 >= 0) {
            st.last_value = st.nu[n - 1][p2].len;
            st.trace << "a=" << n << " l=" << st.nu[n - 1][p2].len << "\n";
            st.nu[n - 1][p2].picked += 1;
        }
    }
    if (p2 < 0) return 0;
    last = st.last_value;
    for (int a = n - 1; a >= 1; --a) {
        int k = st.select(a, std::max(last, 1), R::Original);
        if (k < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

// spinor entry walks for type D_n^(1) (doubled coordinates)
Letter walk_spin_entry(DeltaState& st, int entry, int n) {
    int k = st.select(entry, 1);
    if (k < 0) return entry == n ? n : -n;
    int last = st.last_value;
    for (int a = n - 2; a >= 1; --a) {
        int kk = st.select(a, std::max(last, 1));
        if (kk < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

Letter walk_spin_branch(DeltaState& st, int n) {
    int k1 = st.select(n - 1, 1);
    int v1 = k1 >= 0 ? st.last_value : 0;
    int k2 = st.select(n, 1);
    int v2 = k2 >= 0 ? st.last_value : 0;
    if (k1 < 0 && k2 < 0) return n - 1;
    if (k1 >= 0 && k2 < 0) return n;
    if (k1 < 0 && k2 >= 0) return -n;
    int last = std::max(v1, v2);
    for (int a = n - 2; a >= 1; --a) {
        int kk = st.select(a, std::max(last, 1));
        if (kk < 0) return -(a + 1);
        last = st.last_value;
    }
    return -1;
}

DeltaResult run_walk(const RiggedConfiguration& rc, int height,
                     std::vector<std::pair<int, int>> next_factors) {
    const auto fam = rc.type().family;
    const int n = rc.n();
    DeltaState st(rc);
    Letter b = 0;
    switch (fam) {
        case Family::A1: b = walk_A(st, height, n); break;
        case Family::D1: b = walk_D(st, height, n); break;
        case Family::A2Odd: b = walk_A2Odd(st, height, n); break;
        case Family::C1: b = walk_C(st, height, n); break;
        case Family::A2Even: b = walk_A2Even(st, height, n); break;
        case Family::D2: b = walk_BVector(st, height, n, half_one, true); break;
        case Family::A2Dual: b = walk_BVector(st, height, n, one_half, false); break;
        case Family::B1:
            throw InternalError("type B columns run through the doubling map");
    }
    auto out = st.finish(with_factors(rc.type(), std::move(next_factors)));
    return DeltaResult{std::move(out), b, st.trace.str()};
}

}  // namespace

RiggedConfiguration left_split(const RiggedConfiguration& rc) {
    auto fs = rc.L().factors;
    if (fs.empty() || fs.front().second <= 1)
        throw std::domain_error("left_split requires a leading factor of width > 1");
    auto [r, s] = fs.front();
    fs.front() = {r, 1};
    fs.insert(fs.begin() + 1, {r, s - 1});
    return rc.with_factors(with_factors(rc.type(), std::move(fs)));
}

RiggedConfiguration top_split(const RiggedConfiguration& rc) {
    auto fs = rc.L().factors;
    if (fs.empty() || fs.front().second != 1 || fs.front().first <= 1)
        throw std::domain_error("top_split requires a leading column of height > 1");
    int r = fs.front().first;
    fs.front() = {r - 1, 1};
    fs.insert(fs.begin(), {1, 1});
    auto L2 = with_factors(rc.type(), std::move(fs));
    std::vector<RiggedPartition> nu = rc.nu();
    for (int a = 1; a < r; ++a) nu[a - 1].strings.push_back({1, half_zero});
    RiggedConfiguration probe(L2, nu);  // the new strings must end up singular
    for (int a = 1; a < r; ++a)
        nu[a - 1].strings.back().rig = probe.vacancy(a, 1);
    return RiggedConfiguration(L2, std::move(nu));
}

RiggedConfiguration doubling(const RiggedConfiguration& rc) {
    std::vector<std::pair<int, int>> fs;
    for (auto& [r, s] : rc.L().factors) fs.push_back({r, 2 * s});
    std::vector<RiggedPartition> nu(rc.n());
    for (int a = 1; a <= rc.n(); ++a)
        for (auto& s : rc.part(a).strings)
            nu[a - 1].strings.push_back({2 * s.len, 2 * s.rig});
    return RiggedConfiguration(with_factors(rc.type(), std::move(fs)), std::move(nu));
}

RiggedConfiguration halving(const RiggedConfiguration& rc) {
    std::vector<std::pair<int, int>> fs;
    for (auto& [r, s] : rc.L().factors) {
        if (s % 2 != 0) throw std::domain_error("halving: odd factor width");
        fs.push_back({r, s / 2});
    }
    std::vector<RiggedPartition> nu(rc.n());
    for (int a = 1; a <= rc.n(); ++a)
        for (auto& s : rc.part(a).strings) {
            if (s.len % 2 != 0 || s.rig.num % 2 != 0)
                throw std::domain_error("halving: odd length or rigging");
            nu[a - 1].strings.push_back({s.len / 2, s.rig.div(2)});
        }
    return RiggedConfiguration(with_factors(rc.type(), std::move(fs)), std::move(nu));
}

DeltaResult delta_step(const RiggedConfiguration& rc) {
    auto fs = rc.L().factors;
    if (fs.empty() || fs.front().second != 1)
        throw std::domain_error("delta requires a leading column factor");
    int h = fs.front().first;
    return run_walk(rc, h, shrink_leading(fs, h));
}

std::pair<int, int> kr_tableau_rows(const AffineType& t, int r) {
    const CartanData& cd = cartan_data(t);
    int rows = r;
    int scale = 1;
    if (t.family == Family::D1 && (r == cd.n - 1 || r == cd.n)) {
        rows = cd.n;
        scale = 2;
    }
    if (t.family == Family::B1 && r == cd.n) scale = 2;
    if (t.family == Family::D2 && r == cd.n) scale = 2;
    return {rows, scale};
}

namespace {

// B_n^(1) doubling into type A_{2n-1}^(2): lengths and riggings double for
// a < n, nu^(n) and the node-n factor widths stay put
RiggedConfiguration b_to_a2odd(const RiggedConfiguration& rc) {
    const int n = rc.n();
    std::vector<std::pair<int, int>> fs;
    for (auto& [r, s] : rc.L().factors) fs.push_back({r, r == n ? s : 2 * s});
    std::vector<RiggedPartition> nu(n);
    for (int a = 1; a <= n; ++a)
        for (auto& s : rc.part(a).strings) {
            if (a < n)
                nu[a - 1].strings.push_back({2 * s.len, 2 * s.rig});
            else
                nu[a - 1].strings.push_back(s);
        }
    return RiggedConfiguration(
        with_factors(AffineType{Family::A2Odd, n}, std::move(fs)), std::move(nu));
}

RiggedConfiguration a2odd_to_b(const RiggedConfiguration& rc) {
    const int n = rc.n();
    std::vector<std::pair<int, int>> fs;
    for (auto& [r, s] : rc.L().factors) {
        if (r != n && s % 2 != 0) throw std::domain_error("halving: odd factor width");
        fs.push_back({r, r == n ? s : s / 2});
    }
    std::vector<RiggedPartition> nu(n);
    for (int a = 1; a <= n; ++a)
        for (auto& s : rc.part(a).strings) {
            if (a < n) {
                if (s.len % 2 != 0 || s.rig.num % 2 != 0)
                    throw std::domain_error("halving: odd length or rigging");
                nu[a - 1].strings.push_back({s.len / 2, s.rig.div(2)});
            } else {
                nu[a - 1].strings.push_back(s);
            }
        }
    return RiggedConfiguration(with_factors(AffineType{Family::B1, n}, std::move(fs)),
                               std::move(nu));
}

// Devirtualize one ambient factor of the B_n^(1) doubling: raise the
// ambient word element to highest weight in orbit blocks (ehat_a^2 for
// a < n, ehat_n once), then walk the reversed path down from the filled
// source highest weight tableau.
WordFactor devirtualize_b_factor(const AffineType& bt, int r, int s,
                                 const WordFactor& ambient_factor) {
    const CartanData& cd = cartan_data(bt);
    const int n = cd.n;
    WordElement amb{ClassicalFamily::C, n, {ambient_factor}};
    std::vector<int> path;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 1; a <= n && !moved; ++a) {
            int reps = (a < n) ? 2 : 1;
            WordElement cur = amb;
            bool ok = true;
            for (int k = 0; k < reps && ok; ++k) {
                auto up = cur.e(a);
                if (!up) ok = false;
                else cur = *up;
            }
            if (ok && cur.eps(a) % reps == 0 && amb.eps(a) % reps == 0) {
                amb = cur;
                path.push_back(a);
                moved = true;
            }
        }
    }
    for (int a = 1; a <= n; ++a)
        if (amb.eps(a) != 0)
            throw InternalError("type B devirtualization: ambient element not aligned");
    // source highest weight from the halved ambient epsilon coordinates
    auto eps_amb = to_epsilon(cartan_data(AffineType{Family::A2Odd, std::max(n, 3)}),
                              amb.weight());
    // ambient weight lives in C_n coordinates of the same rank n
    LetterCrystal amblc{ClassicalFamily::C, n};
    std::vector<Half> eps(n, half_zero);
    {
        WordElement tmp = amb;
        for (Letter x : tmp.reading_word()) {
            if (x == kEmptyLetter || x == 0) continue;
            eps[std::abs(x) - 1] += (x > 0 ? half_one : -half_one);
        }
    }
    ClassicalWeight lambda = ClassicalWeight::zero(n);
    for (int a = 1; a < n; ++a) lambda.at(a) = (eps[a - 1] - eps[a]).div(2);
    lambda.at(n) = eps[n - 1];  // B_n: k_n = 2 eps_n / 2
    WordElement src = fill_hw_for_b(bt, r, s, lambda);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto down = src.f(*it);
        if (!down) throw InternalError("type B devirtualization: transport failed");
        src = *down;
    }
    return src.factors.at(0);
}

}  // namespace

PhiResult phi(const RiggedConfiguration& rc0) {
    PhiResult result;
    const AffineType type = rc0.type();
    const CartanData& cd = cartan_data(type);
    const int n = cd.n;
    result.tableaux.family = cd.classical_family();
    result.tableaux.n = n;

    RiggedConfiguration rc = rc0;
    size_t total_factors = rc.L().factors.size();

    for (size_t fi = 0; fi < total_factors; ++fi) {
        auto [r, s] = rc.L().factors.front();
        auto [rows, scale] = kr_tableau_rows(type, r);
        WordFactor out;
        out.cols.assign(s, rows);
        out.scale = scale;

        bool d_spin = type.family == Family::D1 && (r == n - 1 || r == n);
        bool b_spin = type.family == Family::B1 && r == n;

        if (b_spin) {
            // embed into A_{2n-1}^(2), run its algorithm on the whole factor,
            // halve afterwards
            RiggedConfiguration amb = b_to_a2odd(rc);
            WordFactor ambf;
            ambf.cols.assign(s, n);
            for (int col = 0; col < s; ++col) {
                if (amb.L().factors.front().second > 1) amb = left_split(amb);
                for (int h = n; h >= 1; --h) {
                    auto res = delta_step(amb);
                    result.trace.push_back(res.trace);
                    ambf.letters.push_back(res.letter);
                    amb = std::move(res.rc);
                }
            }
            rc = a2odd_to_b(amb);
            // the halving map is the identity on the spinor KR tableau
            out.letters = ambf.letters;
        } else if (d_spin) {
            for (int col = 0; col < s; ++col) {
                if (rc.L().factors.front().second > 1) rc = left_split(rc);
                RiggedConfiguration dbl = doubling(rc);
                // doubled leading column: B^{r,2} -> B^{n,1} (x) B^{n-1,1}
                auto fs = dbl.L().factors;
                if (fs.front() != std::make_pair(r, 2))
                    throw InternalError("unexpected doubled spinor factor");
                fs.front() = {n, 1};
                fs.insert(fs.begin() + 1, {n - 1, 1});
                {
                    DeltaState st(dbl);
                    Letter b = walk_spin_entry(st, r, n);
                    dbl = st.finish(with_factors(type, fs));
                    result.trace.push_back(st.trace.str());
                    out.letters.push_back(b);
                }
                // B^{n,1} (x) B^{n-1,1} -> B^{n-2,1}
                fs.erase(fs.begin());
                fs.front() = {n - 2, 1};
                {
                    DeltaState st(dbl);
                    Letter b = walk_spin_branch(st, n);
                    dbl = st.finish(with_factors(type, fs));
                    result.trace.push_back(st.trace.str());
                    out.letters.push_back(b);
                }
                for (int h = n - 2; h >= 1; --h) {
                    auto res = delta_step(dbl);
                    result.trace.push_back(res.trace);
                    out.letters.push_back(res.letter);
                    dbl = std::move(res.rc);
                }
                rc = halving(dbl);
            }
        } else if (type.family == Family::B1 && r < n) {
            // the whole factor runs through the A_{2n-1}^(2) doubling; the
            // source tableau is recovered from the ambient one afterwards
            RiggedConfiguration amb = b_to_a2odd(rc);
            WordFactor ambf;
            ambf.cols.assign(2 * s, r);
            for (int col = 0; col < 2 * s; ++col) {
                if (amb.L().factors.front().second > 1) amb = left_split(amb);
                for (int h = r; h >= 1; --h) {
                    auto res = delta_step(amb);
                    result.trace.push_back(res.trace);
                    ambf.letters.push_back(res.letter);
                    amb = std::move(res.rc);
                }
            }
            rc = a2odd_to_b(amb);
            out.letters = devirtualize_b_factor(type, r, s, ambf).letters;
        } else {
            for (int col = 0; col < s; ++col) {
                if (rc.L().factors.front().second > 1) rc = left_split(rc);
                for (int h = r; h >= 1; --h) {
                    auto res = delta_step(rc);
                    result.trace.push_back(res.trace);
                    out.letters.push_back(res.letter);
                    rc = std::move(res.rc);
                }
            }
        }
        result.tableaux.factors.push_back(std::move(out));
    }
    if (!rc.L().factors.empty())
        throw InternalError("phi did not consume every factor");
    return result;
}

}  // namespace rcr
