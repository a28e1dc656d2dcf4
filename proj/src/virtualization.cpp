#include "rcr/virtualization.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rcr {

namespace {

Folding build_folding(const AffineType& t) {
    Folding f;
    f.source = t;
    const int n = t.rank;
    switch (t.family) {
        case Family::C1:
        case Family::A2Even:
        case Family::A2Dual:
        case Family::D2: {
            f.ambient = AffineType{Family::A1, 2 * n - 1};
            f.orbit0 = {0};
            f.orbit.resize(n);
            for (int a = 1; a < n; ++a) f.orbit[a - 1] = {a, 2 * n - a};
            f.orbit[n - 1] = {n};
            f.gamma.assign(n + 1, 1);
            if (t.family == Family::C1) {
                f.gamma[0] = 2;
                f.gamma[n] = 2;
            } else if (t.family == Family::A2Even) {
                f.gamma[n] = 2;
            } else if (t.family == Family::A2Dual) {
                f.gamma[0] = 2;
            }
            f.gamma_tilde = f.gamma;
            if (t.family == Family::A2Even) f.gamma_tilde[n] = 1;
            if (t.family == Family::A2Dual) f.gamma_tilde[n] = 2;
            break;
        }
        case Family::B1:
        case Family::A2Odd: {
            f.ambient = AffineType{Family::D1, n + 1};
            f.orbit0 = {0};
            f.orbit.resize(n);
            for (int a = 1; a < n; ++a) f.orbit[a - 1] = {a};
            f.orbit[n - 1] = {n, n + 1};
            f.gamma.assign(n + 1, 1);
            if (t.family == Family::B1)
                for (int a = 0; a < n; ++a) f.gamma[a] = 2;
            f.gamma_tilde = f.gamma;
            break;
        }
        default:
            throw std::domain_error("no folding for simply-laced type " + t.str());
    }
    return f;
}

}  // namespace

const Folding& folding_of(const AffineType& t) {
    static std::map<std::pair<int, int>, Folding> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(static_cast<int>(t.family), t.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_folding(t)).first;
    return it->second;
}

std::string Folding::json() const {
    std::ostringstream os;
    os << "{\"source\":\"" << source.str() << "\",\"ambient\":\"" << ambient.str()
       << "\",\"orbits\":{";
    for (int a = 1; a <= source.rank; ++a) {
        if (a > 1) os << ',';
        os << "\"" << a << "\":[";
        for (size_t k = 0; k < orbit[a - 1].size(); ++k) {
            if (k) os << ',';
            os << orbit[a - 1][k];
        }
        os << ']';
    }
    os << "},\"gamma\":[";
    for (size_t k = 0; k < gamma.size(); ++k) {
        if (k) os << ',';
        os << gamma[k];
    }
    os << "],\"gamma_tilde\":[";
    for (size_t k = 0; k < gamma_tilde.size(); ++k) {
        if (k) os << ',';
        os << gamma_tilde[k];
    }
    os << "]}";
    return os.str();
}

std::shared_ptr<const MultiplicityArray> ambient_mult_array(const Folding& f,
                                                            const MultiplicityArray& B) {
    auto amb = std::make_shared<MultiplicityArray>();
    amb->type = f.ambient;
    const int n = f.source.rank;
    bool a2pair = f.source.family == Family::A2Even || f.source.family == Family::A2Dual;
    for (auto& [r, s] : B.factors) {
        if (r == n && a2pair) {
            // B^{n,s} -> B^{n,s} (x) B^{n,s}
            amb->factors.push_back({n, s});
            amb->factors.push_back({n, s});
        } else {
            for (int b : f.orbit[r - 1]) amb->factors.push_back({b, f.gamma[r] * s});
        }
    }
    return amb;
}

ClassicalWeight psi_classical(const Folding& f, const ClassicalWeight& w) {
    const int N = f.ambient.rank;
    ClassicalWeight out = ClassicalWeight::zero(N);
    const int n = f.source.rank;
    bool a2pair = f.source.family == Family::A2Even || f.source.family == Family::A2Dual;
    for (int a = 1; a <= n; ++a) {
        std::int64_t scale = f.gamma[a];
        if (a == n && a2pair) scale = 2;  // spin-node doubling at n
        for (int b : f.orbit[a - 1]) out.at(b) += scale * w[a];
    }
    return out;
}

AffineWeight psi_affine(const Folding& f, const AffineWeight& w) {
    AffineWeight out;
    out.coeff.assign(f.ambient.rank + 1, half_zero);
    for (int b : f.orbit0) out.coeff[b] += f.gamma[0] * w.coeff[0];
    const int n = f.source.rank;
    for (int a = 1; a <= n; ++a)
        for (int b : f.orbit[a - 1]) out.coeff[b] += f.gamma[a] * w.coeff[a];
    return out;
}

RiggedConfiguration virtualize_rc(const RiggedConfiguration& rc) {
    const Folding& f = folding_of(rc.type());
    auto ambL = ambient_mult_array(f, rc.L());
    const int N = f.ambient.rank;
    std::vector<RiggedPartition> nu(N);
    for (int a = 1; a <= rc.n(); ++a) {
        const int ls = f.len_scale(a);
        const int rs = f.rig_scale(a);
        for (int b : f.orbit[a - 1])
            for (auto& s : rc.part(a).strings)
                nu[b - 1].strings.push_back({ls * s.len, rs * s.rig});
    }
    return RiggedConfiguration(ambL, std::move(nu));
}

std::optional<RiggedConfiguration> devirtualize_rc(
    const Folding& f, const RiggedConfiguration& ambient_rc,
    std::shared_ptr<const MultiplicityArray> source_L, std::string* why) {
    const int n = f.source.rank;
    std::vector<RiggedPartition> nu(n);
    for (int a = 1; a <= n; ++a) {
        const auto& orb = f.orbit[a - 1];
        const auto& first = ambient_rc.part(orb[0]);
        for (int b : orb) {
            if (!(ambient_rc.part(b) == first)) {
                if (why) *why = "orbit partitions differ at a=" + std::to_string(a);
                return std::nullopt;
            }
        }
        const int ls = f.len_scale(a);
        const int rs = f.rig_scale(a);
        for (auto& s : first.strings) {
            if (s.len % ls != 0) {
                if (why) *why = "length not divisible by scale at a=" + std::to_string(a);
                return std::nullopt;
            }
            if (s.rig.num % rs != 0) {
                if (why) *why = "rigging not divisible by scale at a=" + std::to_string(a);
                return std::nullopt;
            }
            nu[a - 1].strings.push_back({s.len / ls, s.rig.div(rs)});
        }
    }
    RiggedConfiguration rc(std::move(source_L), std::move(nu));
    std::string wf;
    if (!rc.well_formed(&wf)) {
        if (why) *why = "devirtualized rc ill-formed: " + wf;
        return std::nullopt;
    }
    return rc;
}

std::optional<RiggedConfiguration> virtual_f(const Folding& f,
                                             const RiggedConfiguration& ambient_rc, int a) {
    std::optional<RiggedConfiguration> cur = ambient_rc;
    for (int b : f.orbit[a - 1])
        for (int k = 0; k < f.ops_exponent(a); ++k) {
            cur = cur->f(b);
            if (!cur) return std::nullopt;
        }
    return cur;
}

std::optional<RiggedConfiguration> virtual_e(const Folding& f,
                                             const RiggedConfiguration& ambient_rc, int a) {
    std::optional<RiggedConfiguration> cur = ambient_rc;
    for (int b : f.orbit[a - 1])
        for (int k = 0; k < f.ops_exponent(a); ++k) {
            cur = cur->e(b);
            if (!cur) return std::nullopt;
        }
    return cur;
}

}  // namespace rcr
