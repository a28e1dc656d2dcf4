#include "rcr/rigged.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace rcr {

void RiggedPartition::normalize() {
    std::sort(strings.begin(), strings.end(),
              [](const String& a, const String& b) {
                  return a.len != b.len ? a.len > b.len : a.rig > b.rig;
              });
}

int RiggedPartition::count_of_length(int i) const {
    int c = 0;
    for (auto& s : strings) c += (s.len == i);
    return c;
}

int RiggedPartition::size_boxes() const {
    int c = 0;
    for (auto& s : strings) c += s.len;
    return c;
}

RiggedConfiguration::RiggedConfiguration(std::shared_ptr<const MultiplicityArray> L,
                                         std::vector<RiggedPartition> nu)
    : L_(std::move(L)), nu_(std::move(nu)) {
    for (auto& p : nu_) p.normalize();
}

RiggedConfiguration RiggedConfiguration::empty(std::shared_ptr<const MultiplicityArray> L) {
    int n = cartan_data(L->type).n;
    return RiggedConfiguration(std::move(L), std::vector<RiggedPartition>(n));
}

Half rc_kernel_q(const CartanData& cd, const std::vector<RiggedPartition>& nu, int a, int i) {
    // q_i^(a) = sum_b (Aeff_{ab}/g_b) sum_j min(g_a i, g_b j) m_j^(b)
    std::int64_t num = 0;  // twice the value
    const int ga = cd.kernel_g[a - 1];
    for (int b = 1; b <= cd.n; ++b) {
        const int coeff2 = cd.kernel_a2[a - 1][b - 1];
        if (coeff2 == 0) continue;
        const int gb = cd.kernel_g[b - 1];
        std::int64_t s = 0;
        for (auto& str : nu[b - 1].strings)
            s += std::min<std::int64_t>(static_cast<std::int64_t>(ga) * i,
                                        static_cast<std::int64_t>(gb) * str.len);
        assert((coeff2 * s) % gb == 0);
        num += coeff2 * s / gb;
    }
    return Half::of_halves(num);
}

Half RiggedConfiguration::vacancy(int a, int i) const {
    if (i <= 0) return half_zero;
    std::int64_t lterm = 0;
    for (auto& [r, s] : L_->factors)
        if (r == a) lterm += std::min(i, s);
    return Half::of_int(lterm) - rc_kernel_q(cartan(), nu_, a, i);
}

Half RiggedConfiguration::p_infinity(int a) const {
    const CartanData& cd = cartan();
    std::int64_t lterm = 0;
    for (auto& [r, s] : L_->factors)
        if (r == a) lterm += s;
    std::int64_t qnum = 0;
    for (int b = 1; b <= cd.n; ++b)
        qnum += static_cast<std::int64_t>(cd.kernel_a2[a - 1][b - 1]) *
                nu_[b - 1].size_boxes();
    return Half::of_int(lterm) - Half::of_halves(qnum);
}

namespace {
constexpr Half kHugeLabel = Half::of_int(std::numeric_limits<std::int32_t>::max());
}

std::optional<RiggedConfiguration> RiggedConfiguration::f_step(int a, Half step) const {
    const CartanData& cd = cartan();
    const auto& part = nu_[a - 1];

    Half x = kHugeLabel;
    for (auto& s : part.strings) x = std::min(x, s.rig);

    int sel_len = 0;  // 0 = append new string
    if (!part.strings.empty() && x <= half_zero) {
        for (auto& s : part.strings)
            if (s.rig == x) sel_len = std::max(sel_len, s.len);
    } else if (!part.strings.empty() && x > half_zero) {
        sel_len = 0;
    }

    // old vacancies for colabel bookkeeping
    std::vector<std::map<int, Half>> oldp(cd.n);
    for (int b = 1; b <= cd.n; ++b) {
        if (b != a && cd.kernel_a2[b - 1][a - 1] == 0) continue;
        for (auto& s : nu_[b - 1].strings)
            if (!oldp[b - 1].count(s.len)) oldp[b - 1][s.len] = vacancy(b, s.len);
    }

    std::vector<RiggedPartition> out = nu_;
    auto& opart = out[a - 1];
    int new_len;
    Half new_rig;
    size_t touched;
    if (sel_len == 0) {
        opart.strings.push_back({1, -step});
        touched = opart.strings.size() - 1;
        new_len = 1;
        new_rig = -step;
    } else {
        touched = 0;
        for (size_t k = 0; k < opart.strings.size(); ++k)
            if (opart.strings[k].len == sel_len && opart.strings[k].rig == x) {
                touched = k;
                break;
            }
        opart.strings[touched].len = sel_len + 1;
        opart.strings[touched].rig = x - step;
        new_len = sel_len + 1;
        new_rig = x - step;
    }

    RiggedConfiguration res(L_, {});
    res.nu_ = out;  // not yet normalized; fix labels first
    for (int b = 1; b <= cd.n; ++b) {
        if (b != a && cd.kernel_a2[b - 1][a - 1] == 0) continue;
        auto& bp = res.nu_[b - 1];
        std::map<int, Half> newp;
        for (size_t k = 0; k < bp.strings.size(); ++k) {
            if (b == a && k == touched) continue;
            int len = bp.strings[k].len;
            if (!newp.count(len)) newp[len] = res.vacancy(b, len);
            bp.strings[k].rig += newp[len] - oldp[b - 1][len];
        }
    }
    if (new_rig > res.vacancy(a, new_len)) return std::nullopt;
    for (auto& p : res.nu_) p.normalize();
    return res;
}

std::optional<RiggedConfiguration> RiggedConfiguration::e_step(int a, Half step) const {
    const CartanData& cd = cartan();
    const auto& part = nu_[a - 1];
    if (part.strings.empty()) return std::nullopt;

    Half x = kHugeLabel;
    for (auto& s : part.strings) x = std::min(x, s.rig);
    if (x >= half_zero) return std::nullopt;

    int sel_len = std::numeric_limits<int>::max();
    for (auto& s : part.strings)
        if (s.rig == x) sel_len = std::min(sel_len, s.len);

    std::vector<std::map<int, Half>> oldp(cd.n);
    for (int b = 1; b <= cd.n; ++b) {
        if (b != a && cd.kernel_a2[b - 1][a - 1] == 0) continue;
        for (auto& s : nu_[b - 1].strings)
            if (!oldp[b - 1].count(s.len)) oldp[b - 1][s.len] = vacancy(b, s.len);
    }

    std::vector<RiggedPartition> out = nu_;
    auto& opart = out[a - 1];
    size_t touched = 0;
    for (size_t k = 0; k < opart.strings.size(); ++k)
        if (opart.strings[k].len == sel_len && opart.strings[k].rig == x) {
            touched = k;
            break;
        }
    bool removed = (sel_len == 1);
    if (removed) {
        opart.strings.erase(opart.strings.begin() + touched);
    } else {
        opart.strings[touched].len = sel_len - 1;
        opart.strings[touched].rig = x + step;
    }

    RiggedConfiguration res(L_, {});
    res.nu_ = out;
    for (int b = 1; b <= cd.n; ++b) {
        if (b != a && cd.kernel_a2[b - 1][a - 1] == 0) continue;
        auto& bp = res.nu_[b - 1];
        std::map<int, Half> newp;
        for (size_t k = 0; k < bp.strings.size(); ++k) {
            if (b == a && !removed && k == touched) continue;
            int len = bp.strings[k].len;
            if (!newp.count(len)) newp[len] = res.vacancy(b, len);
            bp.strings[k].rig += newp[len] - oldp[b - 1][len];
        }
    }
    for (auto& p : res.nu_) p.normalize();
    return res;
}

std::optional<RiggedConfiguration> RiggedConfiguration::f(int a) const {
    const auto fam = type().family;
    if (fam == Family::A2Dual && a == n()) return f_step(a, one_half);
    if (fam == Family::A2Even && a == n()) {
        auto first = f_step(a, one_half);
        if (!first) return std::nullopt;
        return first->f_step(a, one_half);
    }
    return f_step(a, half_one);
}

std::optional<RiggedConfiguration> RiggedConfiguration::e(int a) const {
    const auto fam = type().family;
    if (fam == Family::A2Dual && a == n()) return e_step(a, one_half);
    if (fam == Family::A2Even && a == n()) {
        auto first = e_step(a, one_half);
        if (!first) return std::nullopt;
        return first->e_step(a, one_half);
    }
    return e_step(a, half_one);
}

Half RiggedConfiguration::epsilon(int a) const {
    Half x = half_zero;
    for (auto& s : nu_[a - 1].strings) x = std::min(x, s.rig);
    return -cartan().k_epsphi[a - 1] * x;
}

Half RiggedConfiguration::phi(int a) const {
    Half x = half_zero;
    for (auto& s : nu_[a - 1].strings) x = std::min(x, s.rig);
    return cartan().k_epsphi[a - 1] * (p_infinity(a) - x);
}

ClassicalWeight RiggedConfiguration::weight() const {
    const CartanData& cd = cartan();
    ClassicalWeight w = ClassicalWeight::zero(cd.n);
    for (auto& [r, s] : L_->factors) w = w + cd.factor_weight(r, s);
    for (int a = 1; a <= cd.n; ++a) {
        int boxes = nu_[a - 1].size_boxes();
        if (boxes) w = w - cd.box_weight(a).scaled(boxes);
    }
    return w;
}

AffineWeight RiggedConfiguration::affine_weight() const {
    return affine_lift(cartan(), weight());
}

Half RiggedConfiguration::cocharge() const {
    const CartanData& cd = cartan();
    // quadratic part: (1/2) sum t_a^v (Aeff_{ab}/g_b) min(g_a i, g_b j) m m
    std::int64_t four_cc = 0;  // 4 * cc(nu)
    for (int a = 1; a <= cd.n; ++a) {
        const int ga = cd.kernel_g[a - 1];
        for (int b = 1; b <= cd.n; ++b) {
            const int coeff2 = cd.kernel_a2[a - 1][b - 1];
            if (coeff2 == 0) continue;
            const int gb = cd.kernel_g[b - 1];
            std::int64_t s = 0;
            for (auto& sa : nu_[a - 1].strings)
                for (auto& sb : nu_[b - 1].strings)
                    s += std::min<std::int64_t>(static_cast<std::int64_t>(ga) * sa.len,
                                                static_cast<std::int64_t>(gb) * sb.len);
            assert((coeff2 * s) % gb == 0);
            four_cc += cd.tv_classical[a - 1] * (coeff2 * s / gb);
        }
    }
    assert(four_cc % 2 == 0);
    Half cc = Half::of_halves(four_cc / 2);
    for (int a = 1; a <= cd.n; ++a)
        for (auto& s : nu_[a - 1].strings)
            cc += cd.tv_classical[a - 1] * s.rig;
    return cc;
}

Half RiggedConfiguration::cocharge_via_vacancy() const {
    const CartanData& cd = cartan();
    // rewriting the quadratic form through q = (min L-sum) - p gives
    // cc(nu) = 1/2 sum t_a^v min(i,j) L_i^(a) m_j^(a) - 1/2 sum t_a^v p_i^(a) m_i^(a)
    Half cc = half_zero;
    for (int a = 1; a <= cd.n; ++a) {
        Half psum = half_zero;
        for (auto& s : nu_[a - 1].strings) psum += vacancy(a, s.len);
        std::int64_t lm = 0;
        for (auto& [r, si] : L_->factors) {
            if (r != a) continue;
            for (auto& s : nu_[a - 1].strings) lm += std::min(si, s.len);
        }
        cc += Half::of_halves(cd.tv_classical[a - 1] * (2 * lm - psum.num) / 2);
    }
    for (int a = 1; a <= cd.n; ++a)
        for (auto& s : nu_[a - 1].strings)
            cc += cd.tv_classical[a - 1] * s.rig;
    return cc;
}

RiggedConfiguration RiggedConfiguration::theta() const {
    RiggedConfiguration res = *this;
    for (int a = 1; a <= n(); ++a)
        for (auto& s : res.nu_[a - 1].strings) s.rig = vacancy(a, s.len) - s.rig;
    for (auto& p : res.nu_) p.normalize();
    return res;
}

bool RiggedConfiguration::is_highest_weight() const {
    for (int a = 1; a <= n(); ++a)
        for (auto& s : nu_[a - 1].strings) {
            if (s.rig < half_zero) return false;
            if (s.rig > vacancy(a, s.len)) return false;
        }
    return true;
}

bool RiggedConfiguration::well_formed(std::string* why) const {
    const auto fam = type().family;
    for (int a = 1; a <= n(); ++a)
        for (auto& s : nu_[a - 1].strings) {
            if (s.rig > vacancy(a, s.len)) {
                if (why) *why = "rigging exceeds vacancy at nu^(" + std::to_string(a) + ")";
                return false;
            }
            bool want_half = (fam == Family::A2Dual && a == n() && s.len % 2 == 1);
            if (want_half == s.rig.is_integer()) {
                if (why) *why = "rigging parity violation at nu^(" + std::to_string(a) + ")";
                return false;
            }
        }
    return true;
}

std::string RiggedConfiguration::serialize() const {
    std::ostringstream os;
    for (int a = 1; a <= n(); ++a) {
        if (a > 1) os << '|';
        for (auto& s : nu_[a - 1].strings) os << s.len << ':' << s.rig.num << ';';
    }
    return os.str();
}

std::string RiggedConfiguration::pretty() const {
    std::ostringstream os;
    for (int a = 1; a <= n(); ++a) {
        os << "nu^(" << a << "):";
        if (nu_[a - 1].strings.empty()) os << " -";
        for (auto& s : nu_[a - 1].strings)
            os << " [" << vacancy(a, s.len).str() << "]" << std::string(s.len, '#')
               << "(" << s.rig.str() << ")";
        os << '\n';
    }
    return os.str();
}

std::string RiggedConfiguration::json() const {
    std::ostringstream os;
    os << "{\"type\":\"" << type().str() << "\",\"L\":[";
    bool first = true;
    for (auto& [key, m] : L_->as_map()) {
        if (!first) os << ',';
        os << "{\"a\":" << key.first << ",\"i\":" << key.second << ",\"mult\":" << m << "}";
        first = false;
    }
    os << "],\"nu\":[";
    for (int a = 1; a <= n(); ++a) {
        if (a > 1) os << ',';
        os << "{\"a\":" << a << ",\"strings\":[";
        bool f2 = true;
        for (auto& s : nu_[a - 1].strings) {
            if (!f2) os << ',';
            os << "[" << s.len << "," << s.rig.num << ",2]";
            f2 = false;
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

RiggedConfiguration RiggedConfiguration::with_factors(
    std::shared_ptr<const MultiplicityArray> L) const {
    return RiggedConfiguration(std::move(L), nu_);
}

}  // namespace rcr
