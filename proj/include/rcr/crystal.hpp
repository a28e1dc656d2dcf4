#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcr/cartan.hpp"

namespace rcr {

// epsilon/phi value with the explicit minus-infinity case of the abstract
// crystal definition (never a magic number).
struct ExtHalf {
    bool minus_inf = false;
    Half v;
    static ExtHalf minus_infinity() { return ExtHalf{true, half_zero}; }
    static ExtHalf of(Half h) { return ExtHalf{false, h}; }
    bool operator==(const ExtHalf&) const = default;
};

// Finite labeled crystal graph with per-vertex data.  Weights are raw
// coefficient vectors: classical graphs use varpi coordinates (size n),
// affine graphs Lambda coordinates (size n+1, index 0 first).
struct CrystalGraph {
    std::vector<int> labels;
    bool affine = false;
    std::vector<std::string> keys;
    std::vector<std::vector<Half>> wt;
    std::vector<std::vector<ExtHalf>> eps;  // indexed [vertex][label-pos]
    std::vector<std::vector<ExtHalf>> phi;
    // f-edges: out[v][label] = f_label(v); in[v][label] = e_label(v)
    std::vector<std::map<int, int>> out;
    std::vector<std::map<int, int>> in;
    std::vector<int> highest;  // vertices with no incoming edge for any label

    size_t size() const { return keys.size(); }
    int label_pos(int i) const {
        for (size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == i) return static_cast<int>(k);
        throw std::domain_error("label not in graph");
    }
    int measured_eps(int v, int i) const;
    int measured_phi(int v, int i) const;
    std::string dot() const;
    std::string json() const;
};

struct GraphCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ops bundle a crystal element type must provide for generation.
template <class T>
struct ElementOps {
    std::function<std::optional<T>(const T&, int)> f;
    std::function<std::optional<T>(const T&, int)> e;
    std::function<ExtHalf(const T&, int)> eps;
    std::function<ExtHalf(const T&, int)> phi;
    std::function<std::vector<Half>(const T&)> wt;
    std::function<std::string(const T&)> key;
};

// BFS closure of a seed under e_i/f_i; deterministic vertex order (layers
// sorted by (weight, key)).  Returns the graph plus the elements in vertex
// order via out_elements when non-null.
template <class T>
CrystalGraph generate_component(const T& seed, const ElementOps<T>& ops,
                                const std::vector<int>& labels,
                                std::vector<T>* out_elements = nullptr,
                                size_t cap = 4000000) {
    CrystalGraph g;
    g.labels = labels;
    std::map<std::string, int> ids;
    std::vector<T> elems;

    auto wt_key = [&](const T& t) {
        std::string s;
        for (auto h : ops.wt(t)) s += std::to_string(h.num) + ",";
        return s;
    };

    std::vector<T> layer{seed};
    ids[ops.key(seed)] = 0;
    elems.push_back(seed);
    while (!layer.empty()) {
        std::vector<T> next;
        for (const T& t : layer) {
            for (int i : labels) {
                for (int dir = 0; dir < 2; ++dir) {
                    auto r = dir == 0 ? ops.f(t, i) : ops.e(t, i);
                    if (!r) continue;
                    std::string k = ops.key(*r);
                    if (!ids.count(k)) {
                        if (elems.size() >= cap)
                            throw GraphCapExceeded("crystal component exceeds vertex cap");
                        ids[k] = -1;  // placeholder; numbered after sorting
                        next.push_back(*r);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end(), [&](const T& a, const T& b) {
            auto wa = wt_key(a), wb = wt_key(b);
            if (wa != wb) return wa < wb;
            return ops.key(a) < ops.key(b);
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [&](const T& a, const T& b) { return ops.key(a) == ops.key(b); }),
                   next.end());
        for (auto& t : next) {
            ids[ops.key(t)] = static_cast<int>(elems.size());
            elems.push_back(t);
        }
        layer = std::move(next);
    }
    // renumber pass: ids currently match elems order
    for (size_t v = 0; v < elems.size(); ++v) ids[ops.key(elems[v])] = static_cast<int>(v);

    const size_t N = elems.size();
    g.keys.resize(N);
    g.wt.resize(N);
    g.eps.assign(N, {});
    g.phi.assign(N, {});
    g.out.assign(N, {});
    g.in.assign(N, {});
    for (size_t v = 0; v < N; ++v) {
        g.keys[v] = ops.key(elems[v]);
        g.wt[v] = ops.wt(elems[v]);
        for (int i : labels) {
            g.eps[v].push_back(ops.eps(elems[v], i));
            g.phi[v].push_back(ops.phi(elems[v], i));
            auto r = ops.f(elems[v], i);
            if (r) {
                int w = ids.at(ops.key(*r));
                g.out[v][i] = w;
                g.in[w][i] = static_cast<int>(v);
            }
        }
    }
    for (size_t v = 0; v < N; ++v)
        if (g.in[v].empty()) g.highest.push_back(static_cast<int>(v));
    if (out_elements) *out_elements = std::move(elems);
    return g;
}

// Axiom suite of the abstract crystal definition, checked pointwise.
// `roots` gives alpha_i as a coefficient vector matching the graph weights;
// pairing <alpha_i^v, wt> is the i-th coefficient (classical) or Lambda_i
// coefficient (affine).
std::vector<std::string> check_axioms(const CrystalGraph& g,
                                      const std::vector<std::vector<Half>>& roots);

// Regularity: stored eps/phi equal measured string lengths.
std::vector<std::string> check_regularity(const CrystalGraph& g);

// Stembridge local axioms for a simply-laced classical Cartan matrix.
std::vector<std::string> check_stembridge(const CrystalGraph& g, const CartanData& cd);

// Edge-label- and weight-preserving isomorphism built by matching highest
// weight vertices and transporting along f-edges.
std::optional<std::vector<int>> find_isomorphism(const CrystalGraph& g1,
                                                 const CrystalGraph& g2);

// alpha_i vectors for classical graphs of this type (varpi coordinates)
std::vector<std::vector<Half>> classical_roots(const CartanData& cd);
// alpha_i vectors for affine graphs (Lambda coordinates, i = 0..n)
std::vector<std::vector<Half>> affine_roots(const CartanData& cd);

}  // namespace rcr
