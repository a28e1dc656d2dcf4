#include "rcr/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace rcr {

std::string letter_str(Letter x) {
    if (x == kEmptyLetter) return "E";
    return std::to_string(x);
}

std::vector<Letter> LetterCrystal::letters() const {
    std::vector<Letter> ls;
    for (int a = 1; a <= n; ++a) ls.push_back(a);
    if (family == ClassicalFamily::A) {
        ls.push_back(n + 1);
        return ls;
    }
    if (family == ClassicalFamily::B) ls.push_back(0);
    for (int a = n; a >= 1; --a) ls.push_back(-a);
    return ls;
}

std::optional<Letter> LetterCrystal::f(Letter x, int a) const {
    if (x == kEmptyLetter) return std::nullopt;
    switch (family) {
        case ClassicalFamily::A:
            if (x == a) return a + 1;
            return std::nullopt;
        case ClassicalFamily::B:
            if (a < n) {
                if (x == a) return a + 1;
                if (x == -(a + 1)) return -a;
                return std::nullopt;
            }
            if (x == n) return 0;
            if (x == 0) return -n;
            return std::nullopt;
        case ClassicalFamily::C:
            if (a < n) {
                if (x == a) return a + 1;
                if (x == -(a + 1)) return -a;
                return std::nullopt;
            }
            if (x == n) return -n;
            return std::nullopt;
        case ClassicalFamily::D:
            if (a < n - 1) {
                if (x == a) return a + 1;
                if (x == -(a + 1)) return -a;
                return std::nullopt;
            }
            if (a == n - 1) {
                if (x == n - 1) return n;
                if (x == -n) return -(n - 1);
                return std::nullopt;
            }
            if (x == n - 1) return -n;
            if (x == n) return -(n - 1);
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Letter> LetterCrystal::e(Letter x, int a) const {
    for (Letter y : letters())
        if (f(y, a) == std::optional<Letter>(x)) return y;
    return std::nullopt;
}

int LetterCrystal::phi(Letter x, int a) const {
    int k = 0;
    auto cur = std::optional<Letter>(x);
    while ((cur = f(*cur, a))) ++k;
    return k;
}

int LetterCrystal::eps(Letter x, int a) const {
    int k = 0;
    auto cur = std::optional<Letter>(x);
    while ((cur = e(*cur, a))) ++k;
    return k;
}

ClassicalWeight LetterCrystal::wt(Letter x) const {
    int dim = (family == ClassicalFamily::A) ? n : n;
    ClassicalWeight w = ClassicalWeight::zero(dim);
    if (x == kEmptyLetter || x == 0) return w;
    int a = std::abs(x);
    int sgn = x > 0 ? 1 : -1;
    // epsilon_a in varpi coordinates
    switch (family) {
        case ClassicalFamily::A:
            if (a <= n) w.at(a) += Half::of_int(1);
            if (a >= 2) w.at(a - 1) -= Half::of_int(1);
            break;
        case ClassicalFamily::B:
            if (a < n) {
                w.at(a) += Half::of_int(1);
            } else {
                w.at(n) += Half::of_int(2);
            }
            if (a >= 2) w.at(a - 1) -= Half::of_int(1);
            break;
        case ClassicalFamily::C:
            w.at(a) += Half::of_int(1);
            if (a >= 2) w.at(a - 1) -= Half::of_int(1);
            break;
        case ClassicalFamily::D:
            if (a <= n - 2) {
                w.at(a) += Half::of_int(1);
            } else if (a == n - 1) {
                w.at(n - 1) += Half::of_int(1);
                w.at(n) += Half::of_int(1);
            } else {
                w.at(n) += Half::of_int(1);
                w.at(n - 1) -= Half::of_int(1);
            }
            if (a >= 2 && a <= n - 1) w.at(a - 1) -= Half::of_int(1);
            if (a == n && n >= 2) { /* handled above */ }
            break;
    }
    if (sgn < 0) {
        for (auto& h : w.coeff) h = -h;
    }
    return w;
}

std::vector<Letter> WordElement::reading_word() const {
    std::vector<Letter> w;
    for (auto& f : factors) w.insert(w.end(), f.letters.begin(), f.letters.end());
    return w;
}

namespace {

struct EpsPhiPair {
    int eps, phi;
};

// single-letter data, empty letter transparent
EpsPhiPair letter_ep(const LetterCrystal& lc, Letter x, int a) {
    if (x == kEmptyLetter) return {0, 0};
    return {lc.eps(x, a), lc.phi(x, a)};
}

// tensor fold over a sequence: returns (eps, phi) of x_1 ox ... ox x_k
// using eps(W ox x) = max(eps x, eps x + eps W - phi x) etc.
template <class EP>
EpsPhiPair fold_ep(const std::vector<EP>& parts) {
    EpsPhiPair acc{0, 0};
    bool first = true;
    for (auto& p : parts) {
        if (first) {
            acc = {p.eps, p.phi};
            first = false;
            continue;
        }
        // acc = W (left), p = x (right); W ox x
        int e = std::max(p.eps, p.eps + acc.eps - p.phi);
        int ph = std::max(acc.phi, acc.phi + p.phi - acc.eps);
        acc = {e, ph};
    }
    return acc;
}

// which position does f act on in x_1 ox ... ox x_k: returns index or -1
template <class EP>
int f_position(const std::vector<EP>& parts) {
    // prefix eps/phi for W_j = x_1..x_j
    size_t k = parts.size();
    std::vector<EpsPhiPair> pref(k);
    EpsPhiPair acc{0, 0};
    for (size_t j = 0; j < k; ++j) {
        if (j == 0)
            acc = {parts[0].eps, parts[0].phi};
        else {
            int e = std::max(parts[j].eps, parts[j].eps + acc.eps - parts[j].phi);
            int ph = std::max(acc.phi, acc.phi + parts[j].phi - acc.eps);
            acc = {e, ph};
        }
        pref[j] = acc;
    }
    if (pref[k - 1].phi <= 0) return -1;
    // descend: f(W_{j-1} ox x_j): acts left iff eps(W_{j-1}) >= phi(x_j)
    size_t j = k - 1;
    while (j > 0) {
        if (pref[j - 1].eps >= parts[j].phi)
            --j;
        else
            break;
    }
    return static_cast<int>(j);
}

template <class EP>
int e_position(const std::vector<EP>& parts) {
    size_t k = parts.size();
    std::vector<EpsPhiPair> pref(k);
    EpsPhiPair acc{0, 0};
    for (size_t j = 0; j < k; ++j) {
        if (j == 0)
            acc = {parts[0].eps, parts[0].phi};
        else {
            int e = std::max(parts[j].eps, parts[j].eps + acc.eps - parts[j].phi);
            int ph = std::max(acc.phi, acc.phi + parts[j].phi - acc.eps);
            acc = {e, ph};
        }
        pref[j] = acc;
    }
    if (pref[k - 1].eps <= 0) return -1;
    size_t j = k - 1;
    while (j > 0) {
        if (pref[j - 1].eps > parts[j].phi)
            --j;
        else
            break;
    }
    return static_cast<int>(j);
}

// factor-level eps/phi: word eps/phi divided by the factor scale
EpsPhiPair factor_ep(const LetterCrystal& lc, const WordFactor& f, int a) {
    std::vector<EpsPhiPair> parts;
    parts.reserve(f.letters.size());
    for (Letter x : f.letters) parts.push_back(letter_ep(lc, x, a));
    auto ep = fold_ep(parts);
    assert(ep.eps % f.scale == 0 && ep.phi % f.scale == 0);
    return {ep.eps / f.scale, ep.phi / f.scale};
}

// apply word-level f once inside a factor; nullopt if it vanishes
std::optional<WordFactor> factor_word_f(const LetterCrystal& lc, const WordFactor& f, int a) {
    std::vector<EpsPhiPair> parts;
    parts.reserve(f.letters.size());
    for (Letter x : f.letters) parts.push_back(letter_ep(lc, x, a));
    int pos = f_position(parts);
    if (pos < 0) return std::nullopt;
    auto y = lc.f(f.letters[pos], a);
    if (!y) return std::nullopt;
    WordFactor out = f;
    out.letters[pos] = *y;
    return out;
}

std::optional<WordFactor> factor_word_e(const LetterCrystal& lc, const WordFactor& f, int a) {
    std::vector<EpsPhiPair> parts;
    parts.reserve(f.letters.size());
    for (Letter x : f.letters) parts.push_back(letter_ep(lc, x, a));
    int pos = e_position(parts);
    if (pos < 0) return std::nullopt;
    auto y = lc.e(f.letters[pos], a);
    if (!y) return std::nullopt;
    WordFactor out = f;
    out.letters[pos] = *y;
    return out;
}

}  // namespace

int WordElement::eps(int a) const {
    LetterCrystal lc{family, n};
    std::vector<EpsPhiPair> parts;
    for (auto& f : factors) parts.push_back(factor_ep(lc, f, a));
    return fold_ep(parts).eps;
}

int WordElement::phi(int a) const {
    LetterCrystal lc{family, n};
    std::vector<EpsPhiPair> parts;
    for (auto& f : factors) parts.push_back(factor_ep(lc, f, a));
    return fold_ep(parts).phi;
}

std::optional<WordElement> WordElement::f(int a) const {
    LetterCrystal lc{family, n};
    std::vector<EpsPhiPair> parts;
    for (auto& fac : factors) parts.push_back(factor_ep(lc, fac, a));
    int pos = f_position(parts);
    if (pos < 0) return std::nullopt;
    WordElement out = *this;
    auto cur = std::optional<WordFactor>(out.factors[pos]);
    for (int k = 0; k < out.factors[pos].scale; ++k) {
        cur = factor_word_f(lc, *cur, a);
        if (!cur) return std::nullopt;
    }
    out.factors[pos] = *cur;
    return out;
}

std::optional<WordElement> WordElement::e(int a) const {
    LetterCrystal lc{family, n};
    std::vector<EpsPhiPair> parts;
    for (auto& fac : factors) parts.push_back(factor_ep(lc, fac, a));
    int pos = e_position(parts);
    if (pos < 0) return std::nullopt;
    WordElement out = *this;
    auto cur = std::optional<WordFactor>(out.factors[pos]);
    for (int k = 0; k < out.factors[pos].scale; ++k) {
        cur = factor_word_e(lc, *cur, a);
        if (!cur) return std::nullopt;
    }
    out.factors[pos] = *cur;
    return out;
}

ClassicalWeight WordElement::weight() const {
    LetterCrystal lc{family, n};
    ClassicalWeight w = ClassicalWeight::zero(n);
    for (auto& fac : factors) {
        ClassicalWeight fw = ClassicalWeight::zero(n);
        for (Letter x : fac.letters) fw = fw + lc.wt(x);
        if (fac.scale == 2) {
            for (auto& h : fw.coeff) h = h.div(2);
        }
        w = w + fw;
    }
    return w;
}

std::string WordElement::key() const {
    std::ostringstream os;
    for (auto& f : factors) {
        for (Letter x : f.letters) os << static_cast<int>(x) << ',';
        os << '|';
    }
    return os.str();
}

std::string WordElement::pretty() const {
    std::ostringstream os;
    bool firstf = true;
    for (auto& f : factors) {
        if (!firstf) os << " (x) ";
        firstf = false;
        os << '[';
        size_t idx = 0;
        for (size_t c = 0; c < f.cols.size(); ++c) {
            if (c) os << ' ';
            os << '(';
            std::vector<std::string> cells;
            for (int h = 0; h < f.cols[c]; ++h) cells.push_back(letter_str(f.letters[idx++]));
            // stored top-to-bottom; print bottom-to-top
            for (size_t h = cells.size(); h-- > 0;) {
                os << cells[h];
                if (h) os << ',';
            }
            os << ')';
        }
        os << ']';
    }
    return os.str();
}

std::string WordElement::json() const {
    std::ostringstream os;
    os << "{\"factors\":[";
    bool firstf = true;
    for (auto& f : factors) {
        if (!firstf) os << ',';
        firstf = false;
        os << "{\"cols\":[";
        for (size_t c = 0; c < f.cols.size(); ++c) {
            if (c) os << ',';
            os << f.cols[c];
        }
        os << "],\"scale\":" << f.scale << ",\"letters\":[";
        for (size_t k = 0; k < f.letters.size(); ++k) {
            if (k) os << ',';
            os << "\"" << letter_str(f.letters[k]) << "\"";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

ElementOps<WordElement> word_ops() {
    ElementOps<WordElement> ops;
    ops.f = [](const WordElement& w, int a) { return w.f(a); };
    ops.e = [](const WordElement& w, int a) { return w.e(a); };
    ops.eps = [](const WordElement& w, int a) { return ExtHalf::of(Half::of_int(w.eps(a))); };
    ops.phi = [](const WordElement& w, int a) { return ExtHalf::of(Half::of_int(w.phi(a))); };
    ops.wt = [](const WordElement& w) { return w.weight().coeff; };
    ops.key = [](const WordElement& w) { return w.key(); };
    return ops;
}

ShapeInfo shape_of(const CartanData& cd, const ClassicalWeight& lambda) {
    ShapeInfo si;
    auto eps = to_epsilon(cd, lambda);
    bool spin = std::any_of(eps.begin(), eps.end(), [](Half h) { return !h.is_integer(); });
    si.scale = spin ? 2 : 1;
    std::vector<std::int64_t> mu;
    for (auto h : eps) mu.push_back((si.scale == 2 ? h.num : h.num / 2));
    std::int64_t neglast = 0;
    if (!mu.empty() && mu.back() < 0) {
        neglast = -mu.back();
        mu.back() = neglast;
    }
    // conjugate partition -> column heights
    std::int64_t maxr = 0;
    for (auto m : mu) maxr = std::max(maxr, m);
    for (std::int64_t c = 1; c <= maxr; ++c) {
        int h = 0;
        for (auto m : mu)
            if (m >= c) ++h;
        si.cols.push_back(h);
    }
    std::sort(si.cols.begin(), si.cols.end(), std::greater<int>());
    si.nbar_cols = static_cast<int>(neglast);
    return si;
}

WordElement kn_highest_weight(const CartanData& cd, const ClassicalWeight& lambda) {
    ShapeInfo si = shape_of(cd, lambda);
    WordElement w;
    w.family = cd.classical_family();
    w.n = cd.n;
    WordFactor f;
    f.cols = si.cols;
    f.scale = si.scale;
    int nbar_left = si.nbar_cols;
    for (int h : si.cols) {
        // column letters in reading order: top to bottom
        std::vector<Letter> col;
        for (int k = h; k >= 1; --k) col.push_back(k);
        if (h == cd.n && nbar_left > 0) {
            col.front() = -cd.n;  // type D minus-spin flavored column
            --nbar_left;
        }
        f.letters.insert(f.letters.end(), col.begin(), col.end());
    }
    w.factors.push_back(std::move(f));
    return w;
}

bool columns_strict(const WordElement& w) {
    LetterCrystal lc{w.family, w.n};
    auto order_idx = [&](Letter x) {
        auto ls = lc.letters();
        for (size_t k = 0; k < ls.size(); ++k)
            if (ls[k] == x) return static_cast<int>(k);
        return 1000;
    };
    for (auto& f : w.factors) {
        size_t idx = 0;
        for (int h : f.cols) {
            std::vector<Letter> col(f.letters.begin() + idx, f.letters.begin() + idx + h);
            idx += h;
            // reading order is top to bottom; bottom-to-top must strictly increase
            for (int k = h - 1; k > 0; --k) {
                Letter lo = col[k], hi = col[k - 1];
                if (hi == kEmptyLetter) continue;  // empties sort past everything
                if (lo == kEmptyLetter) return false;
                if (w.family == ClassicalFamily::D && std::abs(lo) == w.n &&
                    std::abs(hi) == w.n && lo != hi)
                    continue;  // n and nbar are incomparable but may be adjacent
                if (order_idx(lo) >= order_idx(hi)) return false;
            }
        }
    }
    return true;
}

WordElement virtualize_column_cd(const WordElement& t) {
    WordElement out = t;
    out.n = t.n + 1;  // letters are unchanged, read in D_{n+1}
    out.family = ClassicalFamily::D;
    return out;
}

namespace {
std::vector<int> largest_subset(std::vector<int> pool, size_t k) {
    std::sort(pool.begin(), pool.end(), std::greater<int>());
    pool.resize(std::min(pool.size(), k));
    return pool;
}
}  // namespace

WordElement virtualize_column_bd(const WordElement& t) {
    // single B_n column (scale 1, 0 allowed) -> two D_{n+1} columns
    const int n = t.n;
    const auto& f = t.factors.at(0);
    std::vector<int> tp, tm;
    int k0 = 0;
    for (Letter x : f.letters) {
        if (x == 0) ++k0;
        else if (x > 0) tp.push_back(x);
        else tm.push_back(-x);
    }
    std::sort(tp.begin(), tp.end());
    std::sort(tm.begin(), tm.end());
    std::vector<int> K;
    std::set_intersection(tp.begin(), tp.end(), tm.begin(), tm.end(), std::back_inserter(K));
    std::vector<int> used = tp;
    for (int x : tm)
        if (!std::binary_search(tp.begin(), tp.end(), x)) used.push_back(x);
    std::sort(used.begin(), used.end());
    std::vector<int> comp;
    for (int x = 1; x <= n; ++x)
        if (!std::binary_search(used.begin(), used.end(), x)) comp.push_back(x);
    std::vector<int> J0 = largest_subset(comp, static_cast<size_t>(k0));
    // J: max subset of the remaining complement with |J| = |K| and J < K
    std::vector<int> comp2;
    for (int x : comp)
        if (!std::count(J0.begin(), J0.end(), x)) comp2.push_back(x);
    // choose greedily from the largest element of K downwards
    std::vector<int> J;
    {
        std::vector<int> Ks = K;
        std::sort(Ks.begin(), Ks.end(), std::greater<int>());
        std::sort(comp2.begin(), comp2.end(), std::greater<int>());
        size_t ci = 0;
        for (int kv : Ks) {
            while (ci < comp2.size() && comp2[ci] >= kv) ++ci;
            if (ci == comp2.size())
                throw std::domain_error("virtualize_column_bd: J undefined, invalid column");
            J.push_back(comp2[ci]);
            ++ci;
        }
    }
    std::vector<int> vp, vm;
    std::set_difference(tp.begin(), tp.end(), K.begin(), K.end(), std::back_inserter(vp));
    std::set_difference(tm.begin(), tm.end(), K.begin(), K.end(), std::back_inserter(vm));

    // left column: v+ u J0 u J unbarred, t- barred; right: t+ unbarred, v- u J0 u J barred
    auto build_col = [&](const std::vector<int>& unb_parts,
                         const std::vector<int>& bar_parts) {
        std::vector<Letter> col;
        for (int x : unb_parts) col.push_back(x);
        std::sort(col.begin(), col.end());
        std::vector<Letter> bars;
        for (int x : bar_parts) bars.push_back(-x);
        std::sort(bars.begin(), bars.end());  // -n < ... < -1: increasing KN order
        col.insert(col.end(), bars.begin(), bars.end());
        // reading order: top to bottom = reverse of increasing
        std::reverse(col.begin(), col.end());
        return col;
    };
    std::vector<int> left_unb = vp;
    left_unb.insert(left_unb.end(), J0.begin(), J0.end());
    left_unb.insert(left_unb.end(), J.begin(), J.end());
    std::vector<int> right_bar = vm;
    right_bar.insert(right_bar.end(), J0.begin(), J0.end());
    right_bar.insert(right_bar.end(), J.begin(), J.end());

    auto lcol = build_col(left_unb, tm);
    auto rcol = build_col(tp, right_bar);

    WordElement out;
    out.family = ClassicalFamily::D;
    out.n = n + 1;
    WordFactor wf;
    int r = static_cast<int>(lcol.size());
    wf.cols = {r, r};
    wf.letters = lcol;
    wf.letters.insert(wf.letters.end(), rcol.begin(), rcol.end());
    out.factors.push_back(std::move(wf));
    return out;
}

std::vector<Letter> spin_signs_to_column(const std::vector<int>& signs) {
    // signs[i] = +1/-1 at height i+1; + at height i -> i, - -> -i; sorted
    std::vector<Letter> col;
    int n = static_cast<int>(signs.size());
    for (int i = 1; i <= n; ++i) col.push_back(signs[i - 1] > 0 ? i : -i);
    std::sort(col.begin(), col.end(), [](Letter a, Letter b) {
        auto rank = [](Letter x) { return x > 0 ? x : 1000 - x; };
        return rank(a) < rank(b);
    });
    std::reverse(col.begin(), col.end());  // reading order top to bottom
    return col;
}

std::vector<int> column_to_spin_signs(const std::vector<Letter>& col, int n) {
    std::vector<int> signs(n, 0);
    for (Letter x : col) {
        int a = std::abs(x);
        if (a < 1 || a > n || signs[a - 1] != 0) return {};
        signs[a - 1] = x > 0 ? 1 : -1;
    }
    return signs;
}

}  // namespace rcr
