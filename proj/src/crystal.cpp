#include "rcr/crystal.hpp"

#include <sstream>

namespace rcr {

int CrystalGraph::measured_eps(int v, int i) const {
    int k = 0;
    int cur = v;
    while (true) {
        auto it = in[cur].find(i);
        if (it == in[cur].end()) break;
        cur = it->second;
        ++k;
    }
    return k;
}

int CrystalGraph::measured_phi(int v, int i) const {
    int k = 0;
    int cur = v;
    while (true) {
        auto it = out[cur].find(i);
        if (it == out[cur].end()) break;
        cur = it->second;
        ++k;
    }
    return k;
}

std::string CrystalGraph::dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (size_t v = 0; v < size(); ++v)
        os << "  n" << v << " [label=\"" << v << "\"];\n";
    for (size_t v = 0; v < size(); ++v)
        for (auto& [i, w] : out[v])
            os << "  n" << v << " -> n" << w << " [label=" << i << "];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::json() const {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (size_t v = 0; v < size(); ++v) {
        if (v) os << ',';
        os << "\"" << keys[v] << "\"";
    }
    os << "],\"edges\":[";
    bool first = true;
    for (size_t v = 0; v < size(); ++v)
        for (auto& [i, w] : out[v]) {
            if (!first) os << ',';
            os << "{\"src\":" << v << ",\"dst\":" << w << ",\"i\":" << i << "}";
            first = false;
        }
    os << "],\"highest_weight\":[";
    for (size_t k = 0; k < highest.size(); ++k) {
        if (k) os << ',';
        os << highest[k];
    }
    os << "]}";
    return os.str();
}

namespace {

Half pairing(const CrystalGraph& g, int v, int i) {
    // classical graphs: coefficient of varpi_i (labels 1..n);
    // affine graphs: coefficient of Lambda_i (labels 0..n)
    return g.affine ? g.wt[v][i] : g.wt[v][i - 1];
}

std::vector<Half> sub_root(const std::vector<Half>& w, const std::vector<Half>& alpha) {
    std::vector<Half> r = w;
    for (size_t k = 0; k < r.size(); ++k) r[k] -= alpha[k];
    return r;
}

}  // namespace

std::vector<std::string> check_axioms(const CrystalGraph& g,
                                      const std::vector<std::vector<Half>>& roots) {
    std::vector<std::string> bad;
    auto note = [&](size_t v, int i, const std::string& what) {
        bad.push_back("vertex " + std::to_string(v) + " i=" + std::to_string(i) + ": " + what);
    };
    for (size_t v = 0; v < g.size(); ++v) {
        for (size_t k = 0; k < g.labels.size(); ++k) {
            int i = g.labels[k];
            const ExtHalf& ep = g.eps[v][k];
            const ExtHalf& ph = g.phi[v][k];
            bool has_f = g.out[v].count(i) > 0;
            bool has_e = g.in[v].count(i) > 0;
            if (ph.minus_inf) {
                if (has_e || has_f) note(v, i, "phi=-inf but e/f defined");
                continue;
            }
            if (ep.minus_inf) {
                note(v, i, "eps=-inf without phi=-inf");
                continue;
            }
            if (ph.v - ep.v != pairing(g, static_cast<int>(v), i))
                note(v, i, "phi - eps != <alpha_i^v, wt>");
            if (has_f) {
                int w = g.out[v].at(i);
                if (g.eps[w][k].v != ep.v + half_one) note(v, i, "eps(f b) != eps(b)+1");
                if (g.phi[w][k].v != ph.v - half_one) note(v, i, "phi(f b) != phi(b)-1");
                if (g.wt[w] != sub_root(g.wt[v], roots[k])) note(v, i, "wt(f b) != wt(b)-alpha_i");
                // axiom (4): f b = b' iff e b' = b
                auto it = g.in[w].find(i);
                if (it == g.in[w].end() || it->second != static_cast<int>(v))
                    note(v, i, "e/f pairing broken");
            }
        }
    }
    return bad;
}

std::vector<std::string> check_regularity(const CrystalGraph& g) {
    std::vector<std::string> bad;
    for (size_t v = 0; v < g.size(); ++v)
        for (size_t k = 0; k < g.labels.size(); ++k) {
            int i = g.labels[k];
            if (g.eps[v][k].minus_inf) continue;
            if (g.eps[v][k].v != Half::of_int(g.measured_eps(static_cast<int>(v), i)))
                bad.push_back("vertex " + std::to_string(v) + ": eps_" + std::to_string(i) +
                              " != string length");
            if (g.phi[v][k].v != Half::of_int(g.measured_phi(static_cast<int>(v), i)))
                bad.push_back("vertex " + std::to_string(v) + ": phi_" + std::to_string(i) +
                              " != string length");
        }
    return bad;
}

std::vector<std::string> check_stembridge(const CrystalGraph& g, const CartanData& cd) {
    if (!cd.simply_laced_classical())
        throw std::domain_error("Stembridge check requires a simply-laced classical type");
    std::vector<std::string> bad;
    auto eps_of = [&](int v, int i) { return g.measured_eps(v, i); };
    auto phi_of = [&](int v, int i) { return g.measured_phi(v, i); };
    auto e_of = [&](int v, int i) -> std::optional<int> {
        auto it = g.in[v].find(i);
        if (it == g.in[v].end()) return std::nullopt;
        return it->second;
    };
    auto f_of = [&](int v, int i) -> std::optional<int> {
        auto it = g.out[v].find(i);
        if (it == g.out[v].end()) return std::nullopt;
        return it->second;
    };
    auto note = [&](int v, int i, int j, const std::string& what) {
        bad.push_back("vertex " + std::to_string(v) + " (i,j)=(" + std::to_string(i) + "," +
                      std::to_string(j) + "): " + what);
    };

    for (size_t vv = 0; vv < g.size(); ++vv) {
        int v = static_cast<int>(vv);
        for (int i : g.labels)
            for (int j : g.labels) {
                if (i == j) continue;
                int aij = cd.classical_cartan[i - 1][j - 1];
                auto ei = e_of(v, i);
                if (ei) {
                    int de = eps_of(*ei, j) - eps_of(v, j);
                    int dp = phi_of(*ei, j) - phi_of(v, j);
                    if (dp - de != aij) note(v, i, j, "dphi - deps != A_ij under e_i");
                    if (!(de == 0 || de == -aij) || !(dp == 0 || dp == aij))
                        note(v, i, j, "eps/phi change out of range under e_i");
                }
                auto fi = f_of(v, i);
                if (fi) {
                    int dp = phi_of(*fi, j) - phi_of(v, j);
                    if (!(dp == 0 || dp == -aij))
                        note(v, i, j, "phi change out of range under f_i");
                }
            }
        // commutation / Verma relations
        for (int i : g.labels)
            for (int j : g.labels) {
                if (i >= j) continue;
                int aij = cd.classical_cartan[i - 1][j - 1];
                auto ei = e_of(v, i);
                auto ej = e_of(v, j);
                if (ei && ej) {
                    int dij = eps_of(*ei, j) - eps_of(v, j);
                    int dji = eps_of(*ej, i) - eps_of(v, i);
                    if (dij == 0 && dji == 0) {
                        auto x = e_of(*ei, j);
                        auto y = e_of(*ej, i);
                        if (!x || !y || *x != *y) note(v, i, j, "e_i e_j != e_j e_i");
                    } else if (aij == -1 && dij == 1 && dji == 1) {
                        auto x = e_of(*ei, j);
                        if (x) x = e_of(*x, j);
                        if (x) x = e_of(*x, i);
                        auto y = e_of(*ej, i);
                        if (y) y = e_of(*y, i);
                        if (y) y = e_of(*y, j);
                        if (!x || !y || *x != *y) note(v, i, j, "e_i e_j^2 e_i != e_j e_i^2 e_j");
                    }
                }
                auto fi = f_of(v, i);
                auto fj = f_of(v, j);
                if (fi && fj) {
                    int dij = phi_of(*fi, j) - phi_of(v, j);
                    int dji = phi_of(*fj, i) - phi_of(v, i);
                    if (dij == 0 && dji == 0) {
                        auto x = f_of(*fi, j);
                        auto y = f_of(*fj, i);
                        if (!x || !y || *x != *y) note(v, i, j, "f_i f_j != f_j f_i");
                    } else if (aij == -1 && dij == 1 && dji == 1) {
                        auto x = f_of(*fi, j);
                        if (x) x = f_of(*x, j);
                        if (x) x = f_of(*x, i);
                        auto y = f_of(*fj, i);
                        if (y) y = f_of(*y, i);
                        if (y) y = f_of(*y, j);
                        if (!x || !y || *x != *y) note(v, i, j, "f_i f_j^2 f_i != f_j f_i^2 f_j");
                    }
                }
            }
    }
    return bad;
}

std::optional<std::vector<int>> find_isomorphism(const CrystalGraph& g1,
                                                 const CrystalGraph& g2) {
    if (g1.size() != g2.size() || g1.labels != g2.labels) return std::nullopt;
    // match highest weight vertices by weight (must be unique per weight)
    std::map<std::vector<Half>, int> hw2;
    for (int v : g2.highest) {
        if (hw2.count(g2.wt[v])) return std::nullopt;
        hw2[g2.wt[v]] = v;
    }
    if (g1.highest.size() != g2.highest.size()) return std::nullopt;

    std::vector<int> match(g1.size(), -1);
    std::vector<int> queue;
    for (int v : g1.highest) {
        auto it = hw2.find(g1.wt[v]);
        if (it == hw2.end()) return std::nullopt;
        match[v] = it->second;
        queue.push_back(v);
    }
    std::vector<char> seen(g1.size(), 0);
    for (int v : queue) seen[v] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        int w = match[v];
        if (g1.out[v].size() != g2.out[w].size()) return std::nullopt;
        for (auto& [i, v2] : g1.out[v]) {
            auto it = g2.out[w].find(i);
            if (it == g2.out[w].end()) return std::nullopt;
            int w2 = it->second;
            if (match[v2] == -1) {
                match[v2] = w2;
                if (!seen[v2]) {
                    seen[v2] = 1;
                    queue.push_back(v2);
                }
            } else if (match[v2] != w2) {
                return std::nullopt;
            }
        }
    }
    // totality + weight preservation + edge sets both ways
    std::vector<char> hit(g2.size(), 0);
    for (size_t v = 0; v < g1.size(); ++v) {
        if (match[v] == -1) return std::nullopt;
        if (hit[match[v]]) return std::nullopt;
        hit[match[v]] = 1;
        if (g1.wt[v] != g2.wt[match[v]]) return std::nullopt;
        if (g1.in[v].size() != g2.in[match[v]].size()) return std::nullopt;
    }
    return match;
}

std::vector<std::vector<Half>> classical_roots(const CartanData& cd) {
    std::vector<std::vector<Half>> roots;
    for (int i = 1; i <= cd.n; ++i) {
        std::vector<Half> a(cd.n);
        for (int b = 1; b <= cd.n; ++b) a[b - 1] = Half::of_int(cd.classical_cartan[b - 1][i - 1]);
        roots.push_back(std::move(a));
    }
    return roots;
}

std::vector<std::vector<Half>> affine_roots(const CartanData& cd) {
    std::vector<std::vector<Half>> roots;
    for (int i = 0; i <= cd.n; ++i) {
        std::vector<Half> a(cd.n + 1);
        for (int b = 0; b <= cd.n; ++b) a[b] = Half::of_int(cd.affine_cartan[b][i]);
        roots.push_back(std::move(a));
    }
    return roots;
}

}  // namespace rcr
