#include "rcrystal_c.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcr/bijection.hpp"
#include "rcr/crystal.hpp"
#include "rcr/filling.hpp"
#include "rcr/kleber.hpp"
#include "rcr/rigged.hpp"
#include "rcr/verify.hpp"

using namespace rcr;

struct rcr_result {
    std::string text;
    bool ok = true;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

std::optional<std::vector<std::pair<int, int>>> parse_factors(const char* factors) {
    std::vector<std::pair<int, int>> fs;
    if (!factors) return fs;
    std::string raw(factors);
    for (auto& ch : raw)
        if (ch == ';') ch = ' ';
    std::istringstream is(raw);
    std::string tok;
    while (is >> tok) {
        int r = 0, s = 0;
        if (std::sscanf(tok.c_str(), "%d,%d", &r, &s) != 2 || r <= 0 || s <= 0)
            return std::nullopt;
        fs.push_back({r, s});
    }
    return fs;
}

std::optional<ClassicalWeight> parse_lambda(const CartanData& cd, const char* lambda) {
    if (!lambda) return std::nullopt;
    std::string raw(lambda);
    for (auto& ch : raw)
        if (ch == ',') ch = ' ';
    std::istringstream is(raw);
    ClassicalWeight w = ClassicalWeight::zero(cd.n);
    long v;
    int a = 1;
    while (is >> v) {
        if (a > cd.n) return std::nullopt;
        w.at(a++) = Half::of_int(v);
    }
    if (a != cd.n + 1) return std::nullopt;
    return w;
}

template <class Fn>
int guarded(rcr_result** out, Fn&& fn) {
    if (!out) return set_error(2, "null output handle");
    *out = nullptr;
    try {
        auto res = std::make_unique<rcr_result>();
        fn(*res);
        *out = res.release();
        return 0;
    } catch (const std::domain_error& e) {
        return set_error(2, e.what());
    } catch (const std::exception& e) {
        return set_error(3, e.what());
    }
}

std::vector<int> all_indices(int n) {
    std::vector<int> idx;
    for (int a = 1; a <= n; ++a) idx.push_back(a);
    return idx;
}

}  // namespace

extern "C" {

const char* rcr_last_error(void) { return g_last_error.c_str(); }

const char* rcr_result_str(const rcr_result* res) { return res ? res->text.c_str() : ""; }

int rcr_result_ok(const rcr_result* res) { return res && res->ok ? 1 : 0; }

void rcr_result_free(rcr_result* res) { delete res; }

const char* rcr_version(void) { return "rcrystal 1.0"; }

int rcr_type_check(const char* type) {
    if (!type) return set_error(2, "null type");
    return AffineType::parse(type) ? 0 : set_error(2, "unknown affine type string");
}

int rcr_enumerate(const char* type, const char* factors, const char* format,
                  rcr_result** out) {
    auto t = type ? AffineType::parse(type) : std::nullopt;
    if (!t) return set_error(2, "unknown affine type string");
    auto fs = parse_factors(factors);
    if (!fs || fs->empty()) return set_error(2, "no factors given");
    for (auto& [r, s] : *fs)
        if (r > t->rank) return set_error(2, "factor node above the rank");
    bool json = format && std::strcmp(format, "json") == 0;
    return guarded(out, [&](rcr_result& res) {
        auto L = std::make_shared<MultiplicityArray>(
            MultiplicityArray::of_factors(*t, *fs));
        auto hw = highest_weight_rcs(L);
        std::ostringstream os;
        if (json) {
            os << "[";
            for (size_t k = 0; k < hw.size(); ++k) {
                if (k) os << ',';
                os << hw[k].json();
            }
            os << "]";
        } else {
            os << hw.size() << " highest weight rigged configurations\n";
            for (size_t k = 0; k < hw.size(); ++k)
                os << "#" << k << " wt=" << hw[k].weight().str()
                   << " cc=" << hw[k].cocharge().str() << "\n"
                   << hw[k].pretty();
        }
        res.text = os.str();
    });
}

int rcr_fill(const char* type, int r, int s, const char* lambda, const char* format,
             rcr_result** out) {
    auto t = type ? AffineType::parse(type) : std::nullopt;
    if (!t) return set_error(2, "unknown affine type string");
    if (r < 1 || r > t->rank || s < 1) return set_error(2, "node or width out of range");
    const CartanData& cd = cartan_data(*t);
    auto lam = parse_lambda(cd, lambda);
    if (!lam) return set_error(2, "bad lambda coefficient list");
    bool json = format && std::strcmp(format, "json") == 0;
    return guarded(out, [&](rcr_result& res) {
        auto f = fill_highest_weight(*t, r, s, *lam);
        Half d = energy(*t, r, s, kn_highest_weight(cd, *lam));
        std::ostringstream os;
        if (json)
            os << "{\"tableau\":" << f.json() << ",\"removed\":" << d.str() << "}";
        else
            os << f.pretty() << "  removed diamonds: " << d.str() << "\n";
        res.text = os.str();
    });
}

int rcr_phi(const char* type, const char* factors, int idx, int with_trace,
            rcr_result** out) {
    auto t = type ? AffineType::parse(type) : std::nullopt;
    if (!t) return set_error(2, "unknown affine type string");
    auto fs = parse_factors(factors);
    if (!fs || fs->empty()) return set_error(2, "no factors given");
    return guarded(out, [&](rcr_result& res) {
        auto L = std::make_shared<MultiplicityArray>(
            MultiplicityArray::of_factors(*t, *fs));
        auto hw = highest_weight_rcs(L);
        if (idx < 0 || static_cast<size_t>(idx) >= hw.size())
            throw std::domain_error("highest weight index out of range");
        auto result = phi(hw[idx]);
        std::ostringstream os;
        os << "{\"rc\":" << hw[idx].json() << ",\"image\":" << result.tableaux.json();
        if (with_trace) {
            os << ",\"trace\":[";
            bool first = true;
            for (auto& t2 : result.trace) {
                std::istringstream lines(t2);
                std::string line;
                while (std::getline(lines, line)) {
                    if (!first) os << ',';
                    os << "\"" << line << "\"";
                    first = false;
                }
            }
            os << "]";
        }
        os << "}";
        res.text = os.str();
    });
}

int rcr_graph(const char* type, const char* factors, const char* seed,
              const char* format, rcr_result** out) {
    auto t = type ? AffineType::parse(type) : std::nullopt;
    if (!t) return set_error(2, "unknown affine type string");
    std::string sd = seed ? seed : "hw:0";
    bool dot = !format || std::strcmp(format, "dot") == 0;
    const CartanData& cd = cartan_data(*t);
    return guarded(out, [&](rcr_result& res) {
        CrystalGraph g;
        if (sd.rfind("lambda:", 0) == 0) {
            auto lam = parse_lambda(cd, sd.c_str() + 7);
            if (!lam) throw std::domain_error("bad lambda coefficient list");
            g = generate_component(kn_highest_weight(cd, *lam), word_ops(),
                                   all_indices(cd.n));
        } else if (sd.rfind("hw:", 0) == 0) {
            auto fs = parse_factors(factors);
            if (!fs || fs->empty()) throw std::domain_error("no factors given");
            int idx = std::atoi(sd.c_str() + 3);
            auto L = std::make_shared<MultiplicityArray>(
                MultiplicityArray::of_factors(*t, *fs));
            auto hw = highest_weight_rcs(L);
            if (idx < 0 || static_cast<size_t>(idx) >= hw.size())
                throw std::domain_error("highest weight index out of range");
            ElementOps<RiggedConfiguration> ops;
            ops.f = [](const RiggedConfiguration& r, int a) { return r.f(a); };
            ops.e = [](const RiggedConfiguration& r, int a) { return r.e(a); };
            ops.eps = [](const RiggedConfiguration& r, int a) {
                return ExtHalf::of(r.epsilon(a));
            };
            ops.phi = [](const RiggedConfiguration& r, int a) {
                return ExtHalf::of(r.phi(a));
            };
            ops.wt = [](const RiggedConfiguration& r) { return r.weight().coeff; };
            ops.key = [](const RiggedConfiguration& r) { return r.serialize(); };
            g = generate_component(hw[idx], ops, all_indices(cd.n));
        } else {
            throw std::domain_error("seed must be hw:<idx> or lambda:<coeffs>");
        }
        res.text = dot ? g.dot() : g.json();
    });
}

int rcr_verify(const char* suite, const char* type, int rank_max, int s_max,
               int factors_max, int workers, unsigned seed, int allow_large,
               rcr_result** out) {
    if (!suite) return set_error(2, "null suite");
    bool known = false;
    for (auto& s : suite_names()) known |= (s == suite);
    if (!known) return set_error(2, "unknown suite: " + std::string(suite));
    VerifyOptions opt;
    if (type) {
        auto t = AffineType::parse(type);
        if (!t) return set_error(2, "unknown affine type string");
        opt.only_type = *t;
        opt.rank_max = std::max(opt.rank_max, t->rank);
    }
    if (rank_max > 0) opt.rank_max = rank_max;
    if (s_max > 0) opt.s_max = s_max;
    if (factors_max > 0) opt.factors_max = factors_max;
    if (workers > 0) opt.workers = workers;
    opt.seed = seed;
    opt.allow_large = allow_large != 0;
    return guarded(out, [&](rcr_result& res) {
        auto rep = run_suite(suite, opt);
        res.text = rep.json();
        res.ok = rep.passed();
    });
}

}  // extern "C"
