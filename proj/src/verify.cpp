#include "rcr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "rcr/bijection.hpp"
#include "rcr/crystal.hpp"
#include "rcr/filling.hpp"
#include "rcr/kleber.hpp"
#include "rcr/pm.hpp"
#include "rcr/rigged.hpp"
#include "rcr/virtualization.hpp"

namespace rcr {

namespace {

constexpr size_t kClosureCap = 200000;

std::shared_ptr<const MultiplicityArray> arr(const AffineType& t,
                                             std::vector<std::pair<int, int>> fs) {
    return std::make_shared<MultiplicityArray>(MultiplicityArray::of_factors(t, fs));
}

ElementOps<RiggedConfiguration> rc_ops() {
    ElementOps<RiggedConfiguration> ops;
    ops.f = [](const RiggedConfiguration& r, int a) { return r.f(a); };
    ops.e = [](const RiggedConfiguration& r, int a) { return r.e(a); };
    ops.eps = [](const RiggedConfiguration& r, int a) { return ExtHalf::of(r.epsilon(a)); };
    ops.phi = [](const RiggedConfiguration& r, int a) { return ExtHalf::of(r.phi(a)); };
    ops.wt = [](const RiggedConfiguration& r) { return r.weight().coeff; };
    ops.key = [](const RiggedConfiguration& r) { return r.serialize(); };
    return ops;
}

std::vector<int> classical_indices(int n) {
    std::vector<int> idx;
    for (int a = 1; a <= n; ++a) idx.push_back(a);
    return idx;
}

std::vector<RiggedConfiguration> closure(std::shared_ptr<const MultiplicityArray> L,
                                         size_t cap = kClosureCap) {
    std::vector<RiggedConfiguration> out;
    std::set<std::string> seen;
    for (auto& hw : highest_weight_rcs(L)) {
        if (!seen.insert(hw.serialize()).second) continue;
        out.push_back(hw);
        std::vector<RiggedConfiguration> stack{hw};
        while (!stack.empty()) {
            auto rc = stack.back();
            stack.pop_back();
            for (int a = 1; a <= rc.n(); ++a) {
                auto f = rc.f(a);
                if (f && seen.insert(f->serialize()).second) {
                    if (out.size() >= cap) throw GraphCapExceeded("closure exceeds cap");
                    out.push_back(*f);
                    stack.push_back(*f);
                }
            }
        }
    }
    return out;
}

size_t kr_dimension(const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    size_t dim = 0;
    for (auto& lam : decomposition_list(t, r, s)) {
        auto g = generate_component(kn_highest_weight(cd, lam), word_ops(),
                                    classical_indices(cd.n));
        dim += g.size();
    }
    return dim;
}

using CellFn = std::function<void(VerifyCell&)>;

struct CellJob {
    std::string params;
    CellFn fn;
};

VerifyReport run_cells(const std::string& suite, const VerifyOptions& opt,
                       std::vector<CellJob> jobs) {
    VerifyReport rep;
    rep.suite = suite;
    std::ostringstream grid;
    grid << "rank_max=" << opt.rank_max << " s_max=" << opt.s_max
         << " factors_max=" << opt.factors_max;
    if (opt.only_type) grid << " type=" << opt.only_type->str();
    rep.grid = grid.str();
    rep.cells.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= jobs.size()) break;
            VerifyCell& cell = rep.cells[k];
            cell.params = jobs[k].params;
            try {
                jobs[k].fn(cell);
            } catch (const std::exception& e) {
                cell.pass = false;
                cell.witness = std::string("exception: ") + e.what();
            }
        }
    };
    int nw = std::max(1, opt.workers);
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < nw; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rep;
}

void fail(VerifyCell& cell, const std::string& w) {
    cell.pass = false;
    if (cell.witness.empty()) cell.witness = w;
}

void cell_axioms(VerifyCell& cell, const AffineType& t, int r, int s, bool stembridge_too) {
    const CartanData& cd = cartan_data(t);
    auto roots = classical_roots(cd);
    for (auto& hw : highest_weight_rcs(arr(t, {{r, s}}))) {
        auto g = generate_component(hw, rc_ops(), classical_indices(cd.n));
        auto bad = check_axioms(g, roots);
        if (!bad.empty()) fail(cell, bad.front());
        auto reg = check_regularity(g);
        if (!reg.empty()) fail(cell, reg.front());
        if (stembridge_too) {
            auto st = check_stembridge(g, cd);
            if (!st.empty()) fail(cell, st.front());
        }
        auto kn = generate_component(kn_highest_weight(cd, hw.weight()), word_ops(),
                                     classical_indices(cd.n));
        if (!find_isomorphism(g, kn)) fail(cell, "component not isomorphic to B(lambda)");
    }
}

void cell_ep_phi(VerifyCell& cell, const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    for (auto& rc : closure(arr(t, {{r, s}}))) {
        for (int a = 1; a <= cd.n; ++a) {
            int k = 0;
            auto cur = rc.e(a);
            while (cur) {
                ++k;
                cur = cur->e(a);
            }
            if (rc.epsilon(a) != Half::of_int(k)) fail(cell, "eps formula != string length");
            k = 0;
            cur = rc.f(a);
            while (cur) {
                ++k;
                cur = cur->f(a);
            }
            if (rc.phi(a) != Half::of_int(k)) fail(cell, "phi formula != string length");
            auto fx = rc.f(a);
            if (fx) {
                auto back = fx->e(a);
                if (!back || !(*back == rc)) fail(cell, "e/f pairing broken");
            }
        }
    }
}

void cell_cocharge(VerifyCell& cell, const AffineType& t, int r, int s) {
    for (auto& hw : highest_weight_rcs(arr(t, {{r, s}}))) {
        Half cc = hw.cocharge();
        if (hw.cocharge_via_vacancy() != cc) fail(cell, "cocharge forms disagree");
        std::set<std::string> seen{hw.serialize()};
        std::vector<RiggedConfiguration> stack{hw};
        while (!stack.empty()) {
            auto rc = stack.back();
            stack.pop_back();
            if (rc.cocharge() != cc) fail(cell, "cocharge not constant on component");
            if (rc.cocharge_via_vacancy() != cc) fail(cell, "cocharge forms disagree");
            if (!(rc.theta().theta() == rc)) fail(cell, "theta not an involution");
            for (int a = 1; a <= rc.n(); ++a) {
                auto f = rc.f(a);
                if (f && seen.insert(f->serialize()).second) stack.push_back(*f);
            }
        }
    }
}

void cell_virtual(VerifyCell& cell, const AffineType& t, int r, int s) {
    const Folding& fd = folding_of(t);
    for (auto& rc0 : closure(arr(t, {{r, s}}))) {
        auto v = virtualize_rc(rc0);
        auto back = devirtualize_rc(fd, v, rc0.L_ptr());
        if (!back || !(*back == rc0)) {
            fail(cell, "devirtualization round trip failed");
            continue;
        }
        if (v.cocharge() != fd.gamma[0] * rc0.cocharge()) fail(cell, "cocharge scaling");
        for (int a = 1; a <= rc0.n(); ++a) {
            for (auto& str : rc0.part(a).strings) {
                if (v.vacancy(fd.orbit[a - 1][0], fd.len_scale(a) * str.len) !=
                    fd.rig_scale(a) * rc0.vacancy(a, str.len))
                    fail(cell, "vacancy scaling");
            }
            auto fs = rc0.f(a);
            auto fv = virtual_f(fd, v, a);
            if (fs.has_value() != fv.has_value())
                fail(cell, "virtual f nullness mismatch a=" + std::to_string(a));
            else if (fs && !(virtualize_rc(*fs) == *fv))
                fail(cell, "v . f_a != f_a^v . v at a=" + std::to_string(a));
            auto es = rc0.e(a);
            auto ev = virtual_e(fd, v, a);
            if (es.has_value() != ev.has_value())
                fail(cell, "virtual e nullness mismatch");
            else if (es && !(virtualize_rc(*es) == *ev))
                fail(cell, "v . e_a != e_a^v . v");
            bool dual_n = (t.family == Family::A2Dual && a == rc0.n());
            if (!dual_n)
                for (int b : fd.orbit[a - 1])
                    if (v.epsilon(b) != fd.gamma[a] * rc0.epsilon(a))
                        fail(cell, "epsilon alignment");
        }
    }
}

void cell_kleber(VerifyCell& cell, const AffineType& t, int r, int s) {
    auto B = arr(t, {{r, s}});
    auto hw = highest_weight_rcs(B);
    for (auto& rc : hw) {
        if (!rc.is_highest_weight()) fail(cell, "enumerated rc not highest weight");
        std::string why;
        if (!rc.well_formed(&why)) fail(cell, "ill-formed: " + why);
        if (!is_dominant(rc.cartan(), rc.weight())) fail(cell, "non-dominant weight");
    }
    std::multiset<std::string> zero;
    for (auto& rc : hw) {
        bool z = true;
        for (int a = 1; a <= rc.n(); ++a)
            for (auto& str : rc.part(a).strings) z &= (str.rig == half_zero);
        if (z) zero.insert(rc.serialize());
    }
    std::multiset<std::string> closed;
    for (auto& lam : decomposition_list(t, r, s))
        closed.insert(closed_form_hw_rc(t, r, s, lam).serialize());
    if (zero != closed) fail(cell, "closed forms differ from enumeration");
}

void cell_fill_phi(VerifyCell& cell, const AffineType& t, int r, int s) {
    auto bad = verify_fill_equals_phi(t, r, s);
    if (!bad.empty()) fail(cell, bad.front());
}

void cell_statistics(VerifyCell& cell, const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    for (auto& lam : decomposition_list(t, r, s)) {
        auto u = kn_highest_weight(cd, lam);
        Half d = energy(t, r, s, u);
        auto rc = iota(t, r, s, u);
        if (rc.theta().cocharge() != d) fail(cell, "D != cc(theta(iota)) at hw");
        std::vector<WordElement> stack{u};
        std::set<std::string> seen{u.key()};
        while (!stack.empty()) {
            auto b = stack.back();
            stack.pop_back();
            if (iota(t, r, s, b).cocharge() != d) fail(cell, "cc(iota(b)) != D(b)");
            for (int a = 1; a <= cd.n; ++a) {
                auto fb = b.f(a);
                if (fb && seen.insert(fb->key()).second) stack.push_back(*fb);
            }
        }
    }
}

void cell_affine(VerifyCell& cell, const AffineType& t, int r, int s) {
    const CartanData& cd = cartan_data(t);
    auto L = arr(t, {{r, s}});
    for (auto& rc : closure(L)) {
        auto img = sigma_rc(rc);
        if (!(sigma_rc(img) == rc)) fail(cell, "sigma not an involution");
        if (img.affine_weight().coeff[1] != rc.affine_weight().coeff[0])
            fail(cell, "sigma weight twist");
    }
    for (auto& P : enumerate_pm(t, r, s)) {
        if (P.spin != 0) continue;
        auto lhs = zeta_rc(t, r, s, P);
        if (!(lhs == iota(t, r, s, zeta(t, r, s, P)))) fail(cell, "zeta_rc != iota . zeta");
    }
    ElementOps<RiggedConfiguration> ops = rc_ops();
    ops.f = [](const RiggedConfiguration& x, int a) { return a == 0 ? f0(x) : x.f(a); };
    ops.e = [](const RiggedConfiguration& x, int a) { return a == 0 ? e0(x) : x.e(a); };
    ops.eps = [](const RiggedConfiguration& x, int a) {
        if (a != 0) return ExtHalf::of(x.epsilon(a));
        int k = 0;
        auto cur = e0(x);
        while (cur) {
            ++k;
            cur = e0(*cur);
        }
        return ExtHalf::of(Half::of_int(k));
    };
    ops.phi = [](const RiggedConfiguration& x, int a) {
        if (a != 0) return ExtHalf::of(x.phi(a));
        int k = 0;
        auto cur = f0(x);
        while (cur) {
            ++k;
            cur = f0(*cur);
        }
        return ExtHalf::of(Half::of_int(k));
    };
    ops.wt = [](const RiggedConfiguration& x) { return x.affine_weight().coeff; };
    auto hw = highest_weight_rcs(L);
    std::vector<int> labels;
    for (int a = 0; a <= cd.n; ++a) labels.push_back(a);
    auto g = generate_component(hw.front(), ops, labels);
    g.affine = true;
    auto bad = check_axioms(g, affine_roots(cd));
    if (!bad.empty()) fail(cell, "affine axioms: " + bad.front());
    if (g.size() != closure(L).size()) fail(cell, "affine crystal not connected");
}

void cell_pm_roundtrip(VerifyCell& cell, const AffineType& t, int r, int s) {
    for (auto& P : enumerate_pm(t, r, s)) {
        if (P.spin != 0) continue;
        if (s_involution(s_involution(P, r), r) != P) fail(cell, "S not an involution");
        auto b = zeta(t, r, s, P);
        for (int a = 2; a <= t.rank; ++a)
            if (b.eps(a) != 0) fail(cell, "zeta image not {2..n}-highest weight");
        if (t.family == Family::B1 && r == t.rank) continue;
        auto rc = zeta_rc(t, r, s, P);
        if (!(zeta_rc_inverse(t, r, s, rc) == P)) fail(cell, "zeta_rc inverse round trip");
    }
}

void cell_conjectures(VerifyCell& cell, const AffineType& t,
                      std::vector<std::pair<int, int>> factors, bool full_closure) {
    const CartanData& cd = cartan_data(t);
    auto L = arr(t, factors);
    size_t expect = 1;
    for (auto& [r, s] : factors) expect *= kr_dimension(t, r, s);

    std::vector<std::set<std::string>> images;
    for (auto& [r, s] : factors) {
        std::set<std::string> img;
        for (auto& lam : decomposition_list(t, r, s)) {
            std::vector<WordElement> stack{kn_highest_weight(cd, lam)};
            std::set<std::string> seen{stack[0].key()};
            while (!stack.empty()) {
                auto b = stack.back();
                stack.pop_back();
                img.insert(fill(t, r, s, b).key());
                for (int a = 1; a <= cd.n; ++a) {
                    auto fb = b.f(a);
                    if (fb && seen.insert(fb->key()).second) stack.push_back(*fb);
                }
            }
        }
        images.push_back(std::move(img));
    }

    std::map<std::string, WordElement> phi_memo;
    auto phi_of = [&](const RiggedConfiguration& rc) -> const WordElement& {
        auto k = rc.serialize();
        auto it = phi_memo.find(k);
        if (it == phi_memo.end()) it = phi_memo.emplace(k, phi(rc).tableaux).first;
        return it->second;
    };
    auto check_elt = [&](const RiggedConfiguration& rc) {
        const WordElement& img = phi_of(rc);
        if (!(img.weight() == rc.weight())) fail(cell, "phi not weight preserving");
        for (size_t k = 0; k < factors.size(); ++k) {
            WordElement piece{img.family, img.n, {img.factors[k]}};
            if (!images[k].count(piece.key()))
                fail(cell, "factor piece outside the filling image");
        }
    };

    if (full_closure) {
        auto all = closure(L);
        if (all.size() != expect) fail(cell, "|RC(B)| != dim B");
        std::set<std::string> distinct;
        for (auto& rc : all) {
            check_elt(rc);
            distinct.insert(phi_of(rc).key());
            for (int a = 1; a <= cd.n; ++a) {
                auto frc = rc.f(a);
                auto fim = phi_of(rc).f(a);
                if (frc.has_value() != fim.has_value())
                    fail(cell, "phi intertwining nullness a=" + std::to_string(a));
                else if (frc && !(phi_of(*frc) == *fim))
                    fail(cell, "phi . f_a != f_a . phi");
            }
        }
        if (distinct.size() != all.size()) fail(cell, "phi not injective");
    } else {
        std::set<std::string> distinct;
        size_t cnt = 0;
        for (auto& rc : highest_weight_rcs(L)) {
            check_elt(rc);
            distinct.insert(phi_of(rc).key());
            ++cnt;
        }
        if (distinct.size() != cnt) fail(cell, "phi not injective on hw");
    }
}

void cell_rmatrix(VerifyCell& cell, const AffineType& t, std::pair<int, int> f1,
                  std::pair<int, int> f2) {
    auto L12 = arr(t, {f1, f2});
    auto L21 = arr(t, {f2, f1});
    auto hw12 = highest_weight_rcs(L12);
    auto hw21 = highest_weight_rcs(L21);
    if (hw12.size() != hw21.size()) {
        fail(cell, "hw rc counts differ between orders");
        return;
    }
    for (size_t k = 0; k < hw12.size(); ++k)
        if (hw12[k].serialize() != hw21[k].serialize()) {
            fail(cell, "hw rc sets differ between orders");
            return;
        }
    for (size_t k = 0; k < hw12.size(); ++k) {
        auto w1 = phi(hw12[k]).tableaux.weight();
        auto w2 = phi(hw21[k]).tableaux.weight();
        if (!(w1 == w2)) fail(cell, "phi images in different components across orders");
    }
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

size_t VerifyReport::failures() const {
    size_t f = 0;
    for (auto& c : cells) f += !c.pass;
    return f;
}

std::string VerifyReport::json() const {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"grid\":\"" << grid << "\",\"cells\":[";
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) os << ',';
        os << "{\"params\":\"" << cells[k].params << "\",\"status\":\""
           << (cells[k].pass ? "pass" : "fail") << "\"";
        if (!cells[k].witness.empty()) os << ",\"witness\":\"" << cells[k].witness << "\"";
        os << "}";
    }
    os << "],\"summary\":{\"cells\":" << cells.size() << ",\"failures\":" << failures()
       << ",\"status\":\"" << (passed() ? "pass" : "fail") << "\"}}";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms",         "stembridge",         "ep-phi",
        "cocharge-const", "virtual-commute",    "kleber-closed-form",
        "fill-eq-phi",    "statistics",         "affine-axioms",
        "pm-roundtrip",   "filling-conjecture", "r-matrix-identity"};
    return names;
}

std::vector<AffineType> grid_types(const VerifyOptions& opt) {
    std::vector<AffineType> out;
    for (auto f : {Family::A1, Family::B1, Family::C1, Family::D1, Family::A2Odd,
                   Family::A2Even, Family::A2Dual, Family::D2}) {
        for (int n = min_rank(f); n <= opt.rank_max; ++n) {
            AffineType t{f, n};
            if (opt.only_type && !(t == *opt.only_type)) continue;
            out.push_back(t);
        }
    }
    return out;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (!opt.allow_large && (opt.rank_max > 4 || opt.s_max > 3 || opt.factors_max > 2))
        throw std::domain_error("grid beyond the verified envelope; pass allow-large");

    std::vector<CellJob> jobs;
    auto types = grid_types(opt);
    auto param = [](const AffineType& t, int r, int s) {
        return t.str() + " B^{" + std::to_string(r) + "," + std::to_string(s) + "}";
    };

    if (suite == "axioms" || suite == "ep-phi" || suite == "cocharge-const" ||
        suite == "kleber-closed-form" || suite == "fill-eq-phi" || suite == "statistics") {
        for (auto& t : types)
            for (int r = 1; r <= t.rank; ++r)
                for (int s = 1; s <= opt.s_max; ++s) {
                    AffineType tt = t;
                    if (suite == "axioms")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_axioms(c, tt, r, s, false);
                                        }});
                    else if (suite == "ep-phi")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_ep_phi(c, tt, r, s);
                                        }});
                    else if (suite == "cocharge-const")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_cocharge(c, tt, r, s);
                                        }});
                    else if (suite == "kleber-closed-form")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_kleber(c, tt, r, s);
                                        }});
                    else if (suite == "fill-eq-phi")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_fill_phi(c, tt, r, s);
                                        }});
                    else
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_statistics(c, tt, r, s);
                                        }});
                }
    } else if (suite == "stembridge") {
        for (auto& t : types) {
            if (!cartan_data(t).simply_laced_classical()) continue;
            for (int r = 1; r <= t.rank; ++r)
                for (int s = 1; s <= opt.s_max; ++s) {
                    AffineType tt = t;
                    jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                        cell_axioms(c, tt, r, s, true);
                                    }});
                }
        }
    } else if (suite == "virtual-commute") {
        for (auto& t : types) {
            if (cartan_data(t).simply_laced_classical()) continue;
            for (int r = 1; r <= std::min(2, t.rank); ++r) {
                AffineType tt = t;
                jobs.push_back({param(t, r, 1), [tt, r](VerifyCell& c) {
                                    cell_virtual(c, tt, r, 1);
                                }});
            }
        }
    } else if (suite == "affine-axioms" || suite == "pm-roundtrip") {
        for (auto& t : types) {
            bool pm_ok = t.family == Family::D1 || t.family == Family::B1 ||
                         t.family == Family::A2Odd;
            if (!pm_ok) continue;
            int rmax = t.family == Family::D1 ? t.rank - 2 : t.rank - 1;
            for (int r = 1; r <= std::min(2, rmax); ++r)
                for (int s = 1; s <= opt.s_max; ++s) {
                    AffineType tt = t;
                    if (suite == "affine-axioms")
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_affine(c, tt, r, s);
                                        }});
                    else
                        jobs.push_back({param(t, r, s), [tt, r, s](VerifyCell& c) {
                                            cell_pm_roundtrip(c, tt, r, s);
                                        }});
                }
        }
    } else if (suite == "filling-conjecture") {
        for (auto& t : types)
            for (int s = 1; s <= opt.s_max; ++s)
                for (int r1 = 1; r1 <= t.rank; ++r1)
                    for (int r2 = r1; r2 <= t.rank; ++r2) {
                        if (opt.factors_max < 2) continue;
                        size_t d1 = kr_dimension(t, r1, s);
                        size_t d2 = kr_dimension(t, r2, s);
                        bool full = opt.allow_large || d1 * d2 <= 20000;
                        AffineType tt = t;
                        std::string p = t.str() + " B^{" + std::to_string(r1) + "," +
                                        std::to_string(s) + "}xB^{" + std::to_string(r2) +
                                        "," + std::to_string(s) + "}" +
                                        (full ? "" : " [hw]");
                        jobs.push_back(
                            {p, [tt, r1, r2, s, full](VerifyCell& c) {
                                 cell_conjectures(c, tt, {{r1, s}, {r2, s}}, full);
                             }});
                    }
    } else if (suite == "r-matrix-identity") {
        for (auto& t : types)
            for (int s1 = 1; s1 <= opt.s_max; ++s1)
                for (int s2 = s1; s2 <= opt.s_max; ++s2)
                    for (int r1 = 1; r1 <= t.rank; ++r1)
                        for (int r2 = r1; r2 <= t.rank; ++r2) {
                            if (r1 == r2 && s1 == s2) continue;
                            AffineType tt = t;
                            std::string p = t.str() + " B^{" + std::to_string(r1) + "," +
                                            std::to_string(s1) + "}<->B^{" +
                                            std::to_string(r2) + "," + std::to_string(s2) +
                                            "}";
                            jobs.push_back({p, [tt, r1, s1, r2, s2](VerifyCell& c) {
                                                cell_rmatrix(c, tt, {r1, s1}, {r2, s2});
                                            }});
                        }
    } else {
        throw std::domain_error("unknown suite: " + suite);
    }
    return run_cells(suite, opt, std::move(jobs));
}

}  // namespace rcr
