#include "rcr/kleber.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rcr/virtualization.hpp"

namespace rcr {

namespace {

// dominant weights y with w - y in Q+ \ {0}, for simply-laced classical
// families A and D, together with the edge d = w - y as alpha coefficients.
struct Child {
    ClassicalWeight y;
    std::vector<int> d;
};

std::vector<int> root_coeffs(const CartanData& cd, const ClassicalWeight& w,
                             const ClassicalWeight& y) {
    // solve w - y = sum d_a alpha_a via epsilon coordinates; empty if not in Q+
    auto ew = to_epsilon(cd, w);
    auto ey = to_epsilon(cd, y);
    const int N = cd.n;
    std::vector<Half> v(N);
    for (int i = 0; i < N; ++i) v[i] = ew[i] - ey[i];
    std::vector<int> d(N, 0);
    if (cd.classical_family() == ClassicalFamily::A) {
        // gauge: eps has an implicit (N+1)-th coordinate 0, so w - y differs
        // from a root-lattice element by c*(1,...,1) with c = d_N
        Half total = half_zero;
        for (auto h : v) total += h;
        if (total.num % (2 * (N + 1)) != 0) return {};
        Half c = Half::of_halves(total.num / (N + 1));
        if (!c.is_integer() || c.num < 0) return {};
        Half run = half_zero;
        for (int a = 1; a <= N; ++a) {
            run += v[a - 1];
            Half da = run - a * c;
            if (!da.is_integer() || da.to_int() < 0) return {};
            d[a - 1] = static_cast<int>(da.to_int());
        }
        return d;
    }
    // family D
    Half run = half_zero;
    for (int a = 1; a <= N - 2; ++a) {
        run += v[a - 1];
        if (!run.is_integer() || run.to_int() < 0) return {};
        d[a - 1] = static_cast<int>(run.to_int());
    }
    Half s1 = run + v[N - 2];  // sum of first N-1 coords
    Half two_dn1 = s1 - v[N - 1];
    Half two_dn = s1 + v[N - 1];
    if (two_dn1.num % 4 != 0 || two_dn.num % 4 != 0) return {};
    std::int64_t dn1 = two_dn1.num / 4;
    std::int64_t dn = two_dn.num / 4;
    if (dn1 < 0 || dn < 0) return {};
    d[N - 2] = static_cast<int>(dn1);
    d[N - 1] = static_cast<int>(dn);
    return d;
}

// enumerate all dominant y with w - y in Q+ (y may equal w; caller filters)
std::vector<Child> dominated_weights(const CartanData& cd, const ClassicalWeight& w) {
    const int N = cd.n;
    auto ew = to_epsilon(cd, w);
    std::vector<Child> out;
    std::vector<Half> y(N);

    if (cd.classical_family() == ClassicalFamily::A) {
        // y is a partition with |y| = |w| - (N+1)c and partial sums
        // sum_{i<=a} y_i <= sum_{i<=a} w_i - a*c, for each c = d_N >= 0
        Half total = half_zero;
        for (auto h : ew) total += h;
        for (std::int64_t c = 0; Half::of_int(c * (N + 1)) <= total; ++c) {
            Half target = total - Half::of_int(c * (N + 1));
            std::function<void(int, Half, Half)> rec = [&](int i, Half remaining, Half prev) {
                if (i == N) {
                    if (remaining != half_zero) return;
                    ClassicalWeight cy = ClassicalWeight::zero(N);
                    for (int a = 1; a <= N; ++a)
                        cy.at(a) = y[a - 1] - (a < N ? y[a] : half_zero);
                    auto d = root_coeffs(cd, w, cy);
                    if (d.empty()) return;
                    out.push_back({cy, d});
                    return;
                }
                Half wsum = half_zero;
                for (int j = 0; j <= i; ++j) wsum += ew[j];
                Half cap_dom = wsum - Half::of_int(c * (i + 1));
                Half ysum_prev = half_zero;
                for (int j = 0; j < i; ++j) ysum_prev += y[j];
                for (Half v = prev; v >= half_zero; v -= half_one) {
                    if (v > remaining) continue;
                    if (ysum_prev + v > cap_dom) continue;
                    if ((remaining - v) > (N - 1 - i) * v) continue;
                    y[i] = v;
                    rec(i + 1, remaining - v, v);
                }
            };
            rec(0, target, target);
        }
        return out;
    }

    // family D: DFS over epsilon coordinates of y
    std::function<void(int)> rec = [&](int i) {
        if (i == N) {
            if ((y[N - 2] + y[N - 1]) < half_zero) return;
            ClassicalWeight cy = ClassicalWeight::zero(N);
            for (int a = 1; a <= N - 2; ++a) cy.at(a) = y[a - 1] - y[a];
            cy.at(N - 1) = y[N - 2] - y[N - 1];
            cy.at(N) = y[N - 2] + y[N - 1];
            auto d = root_coeffs(cd, w, cy);
            if (d.empty() && !(w == cy)) return;
            if (d.empty()) d.assign(N, 0);
            out.push_back({cy, d});
            return;
        }
        // y_i in ew_i - Z, bounded above by min(prev, partial-sum bound),
        // below by -(something) only for the last coordinate
        Half upper = (i == 0) ? ew[0] : y[i - 1];
        // partial sums: sum_{j<=i} y_j <= sum_{j<=i} ew_j for i <= N-2
        Half wsum = half_zero;
        for (int j = 0; j <= i; ++j) wsum += ew[j];
        Half ysum_prev = half_zero;
        for (int j = 0; j < i; ++j) ysum_prev += y[j];
        if (i <= N - 3) {
            Half cap = wsum - ysum_prev;
            if (cap < upper) upper = cap;
        }
        Half lower = half_zero;
        if (i == N - 1) {
            lower = -y[N - 2];
            // also |y_N| bounded by the d_{N-1}, d_N >= 0 constraints
        }
        // keep y_i congruent to ew_i mod 1
        Half v = upper;
        Half frac = Half::of_halves(((ew[i].num % 2) + 2) % 2);
        if (((v.num % 2) + 2) % 2 != frac.num) v -= one_half;
        for (; v >= lower; v -= half_one) {
            y[i] = v;
            if (i == N - 1) {
                rec(N);
            } else {
                rec(i + 1);
            }
        }
    };
    rec(0);
    return out;
}

ClassicalWeight addition_at_level(const CartanData& cd, const MultiplicityArray& B, int l) {
    ClassicalWeight w = ClassicalWeight::zero(cd.n);
    for (auto& [r, s] : B.factors)
        if (s >= l) w = w + cd.factor_weight(r, 1);
    return w;
}

KleberTree build_tree(const AffineType& tree_type, const AffineType& source_type,
                      const MultiplicityArray& B, const Folding* fold) {
    const CartanData& cd = cartan_data(tree_type);
    KleberTree tree;
    tree.tree_type = tree_type;
    tree.source_type = source_type;
    tree.nodes.push_back(KleberNode{ClassicalWeight::zero(cd.n), {}, 0, -1, true, {}});

    int maxs = 0;
    for (auto& [r, s] : B.factors) maxs = std::max(maxs, s);

    int l = 1;
    while (true) {
        ClassicalWeight add = addition_at_level(cd, B, l);
        for (auto& node : tree.nodes) node.weight = node.weight + add;
        bool grew = false;
        size_t ncur = tree.nodes.size();
        for (size_t x = 0; x < ncur; ++x) {
            if (tree.nodes[x].depth != l - 1) continue;
            auto kids = dominated_weights(cd, tree.nodes[x].weight);
            for (auto& ch : kids) {
                bool zero = std::all_of(ch.d.begin(), ch.d.end(), [](int v) { return v == 0; });
                if (zero) continue;
                if (tree.nodes[x].parent >= 0) {
                    // monotonicity: d_parent - d in Q+ (componentwise)
                    bool ok = true;
                    for (int a = 0; a < cd.n; ++a)
                        if (ch.d[a] > tree.nodes[x].d[a]) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                }
                if (fold) {
                    // (V1): weight symmetric across each orbit
                    bool ok = true;
                    for (int a = 1; a <= fold->source.rank && ok; ++a) {
                        const auto& orb = fold->orbit[a - 1];
                        for (size_t k = 1; k < orb.size(); ++k)
                            if (ch.y[orb[k]] != ch.y[orb[0]]) {
                                ok = false;
                                break;
                            }
                    }
                    if (!ok) continue;
                    // (V2): off-lattice levels freeze the marked components
                    // (gamma~ drives the lattice: the A2 even/dual maps do
                    // not stretch string lengths at node n)
                    for (int a = 1; a <= fold->source.rank && ok; ++a) {
                        int g = fold->gamma_tilde[a];
                        if (g <= 1 || (l - 1) % g == 0) continue;
                        // l >= 2 here, so x has a parent edge
                        for (int b : fold->orbit[a - 1]) {
                            if (ch.d[b - 1] != tree.nodes[x].d[b - 1]) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (!ok) continue;
                }
                KleberNode child;
                child.weight = ch.y;
                child.d = ch.d;
                child.depth = l;
                child.parent = static_cast<int>(x);
                tree.nodes[x].children.push_back(static_cast<int>(tree.nodes.size()));
                tree.nodes.push_back(std::move(child));
                grew = true;
            }
        }
        if (l >= maxs && !grew) break;
        ++l;
        if (l > maxs + 4 * static_cast<int>(tree.nodes.size()) + 64)
            throw std::runtime_error("Kleber tree failed to terminate");
    }

    // deterministic child order: sort children lists by weight vector
    for (auto& node : tree.nodes)
        std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            return tree.nodes[a].weight.coeff < tree.nodes[b].weight.coeff;
        });

    if (fold) {
        int gmax = *std::max_element(fold->gamma_tilde.begin(), fold->gamma_tilde.end());
        std::vector<int> marked;  // ambient components frozen by (A2)
        for (int a = 1; a <= fold->source.rank; ++a)
            if (fold->gamma_tilde[a] == gmax && gmax > 1)
                for (int b : fold->orbit[a - 1]) marked.push_back(b);
        for (auto& node : tree.nodes) {
            bool a1 = (node.depth % gmax) == 0;
            bool a2 = false;
            if (!marked.empty() && node.parent >= 0) {
                a2 = true;
                for (int b : marked)
                    if (node.d[b - 1] != 0) {
                        a2 = false;
                        break;
                    }
            }
            node.selected = a1 || a2;
        }
    }
    return tree;
}

}  // namespace

KleberTree kleber_tree(const MultiplicityArray& B) {
    const CartanData& cd = cartan_data(B.type);
    if (!cd.simply_laced_classical())
        throw std::domain_error("kleber_tree requires a simply-laced classical type");
    return build_tree(B.type, B.type, B, nullptr);
}

KleberTree virtual_kleber_tree(const MultiplicityArray& B) {
    const CartanData& cd = cartan_data(B.type);
    if (cd.simply_laced_classical())
        throw std::domain_error("virtual_kleber_tree requires a non-simply-laced type");
    const Folding& f = folding_of(B.type);
    auto amb = ambient_mult_array(f, B);
    return build_tree(f.ambient, B.type, *amb, &f);
}

std::vector<RiggedPartition> node_partitions(const KleberTree& tree, int node, int n) {
    // collect the path edge labels d_1..d_p from root to node
    std::vector<std::vector<int>> ds;
    int cur = node;
    while (tree.nodes[cur].parent >= 0) {
        ds.push_back(tree.nodes[cur].d);
        cur = tree.nodes[cur].parent;
    }
    std::reverse(ds.begin(), ds.end());
    std::vector<RiggedPartition> nu(n);
    int p = static_cast<int>(ds.size());
    for (int i = 1; i <= p; ++i)
        for (int a = 1; a <= n; ++a) {
            int m = ds[i - 1][a - 1] - (i < p ? ds[i][a - 1] : 0);
            for (int k = 0; k < m; ++k) nu[a - 1].strings.push_back({i, half_zero});
        }
    for (auto& part : nu) part.normalize();
    return nu;
}

namespace {

// enumerate all admissible rigging fillings of nu with 0 <= x <= p
void enumerate_riggings(const RiggedConfiguration& base,
                        std::vector<RiggedConfiguration>& out) {
    const CartanData& cd = base.cartan();
    struct Slot {
        int a, len, count;
        std::vector<Half> values;
    };
    std::vector<Slot> slots;
    for (int a = 1; a <= cd.n; ++a) {
        std::map<int, int> mult;
        for (auto& s : base.part(a).strings) mult[s.len]++;
        for (auto& [len, m] : mult) {
            Half p = base.vacancy(a, len);
            Slot slot{a, len, m, {}};
            bool half = (base.type().family == Family::A2Dual && a == cd.n && len % 2 == 1);
            Half v = half ? one_half : half_zero;
            for (; v <= p; v += half_one) slot.values.push_back(v);
            if (slot.values.empty()) return;  // no admissible rigging
            slots.push_back(std::move(slot));
        }
    }
    std::vector<std::vector<Half>> chosen(slots.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == slots.size()) {
            std::vector<RiggedPartition> nu(cd.n);
            for (size_t j = 0; j < slots.size(); ++j)
                for (Half v : chosen[j]) nu[slots[j].a - 1].strings.push_back({slots[j].len, v});
            out.push_back(RiggedConfiguration(base.L_ptr(), std::move(nu)));
            return;
        }
        // weakly increasing tuples of length count from values
        auto& slot = slots[k];
        std::function<void(int, size_t)> pick = [&](int left, size_t from) {
            if (left == 0) {
                rec(k + 1);
                return;
            }
            for (size_t i = from; i < slot.values.size(); ++i) {
                chosen[k].push_back(slot.values[i]);
                pick(left - 1, i);
                chosen[k].pop_back();
            }
        };
        pick(slot.count, 0);
    };
    rec(0);
}

}  // namespace

std::vector<RiggedConfiguration> highest_weight_rcs(
    std::shared_ptr<const MultiplicityArray> B) {
    const CartanData& cd = cartan_data(B->type);
    std::vector<RiggedConfiguration> out;
    std::set<std::string> seen;

    auto emit = [&](const std::vector<RiggedPartition>& nu) {
        RiggedConfiguration rc(B, nu);
        if (!seen.insert(rc.serialize()).second) return;
        std::vector<RiggedConfiguration> filled;
        enumerate_riggings(rc, filled);
        for (auto& r : filled) out.push_back(std::move(r));
    };

    if (cd.simply_laced_classical()) {
        auto tree = kleber_tree(*B);
        for (size_t v = 0; v < tree.nodes.size(); ++v)
            emit(node_partitions(tree, static_cast<int>(v), cd.n));
    } else {
        const Folding& f = folding_of(B->type);
        auto tree = virtual_kleber_tree(*B);
        for (size_t v = 0; v < tree.nodes.size(); ++v) {
            if (!tree.nodes[v].selected) continue;
            auto ambient_nu =
                node_partitions(tree, static_cast<int>(v), cartan_data(f.ambient).n);
            // devirtualize the shape: orbit equality then length division
            std::vector<RiggedPartition> nu(cd.n);
            bool ok = true;
            for (int a = 1; a <= cd.n && ok; ++a) {
                const auto& orb = f.orbit[a - 1];
                for (size_t k = 1; k < orb.size() && ok; ++k)
                    if (!(ambient_nu[orb[k] - 1] == ambient_nu[orb[0] - 1])) ok = false;
                if (!ok) break;
                const int ls = f.len_scale(a);
                for (auto& s : ambient_nu[orb[0] - 1].strings) {
                    if (s.len % ls != 0) {
                        ok = false;
                        break;
                    }
                    nu[a - 1].strings.push_back({s.len / ls, half_zero});
                }
            }
            if (!ok) continue;
            emit(nu);
        }
    }

    std::sort(out.begin(), out.end(), [](const RiggedConfiguration& a,
                                         const RiggedConfiguration& b) {
        return a.serialize() < b.serialize();
    });
    return out;
}

namespace {

// partition helpers in row-length form (decreasing)
std::vector<int> complement_rows(const std::vector<Half>& eps, int r, Half width) {
    std::vector<int> rows;
    for (int i = r; i >= 1; --i) {
        Half len = width - (i <= static_cast<int>(eps.size()) ? eps[i - 1] : half_zero);
        if (!len.is_integer()) throw std::domain_error("complement shape not integral");
        if (len.to_int() < 0) throw std::domain_error("lambda not inside the rectangle");
        if (len.to_int() > 0) rows.push_back(static_cast<int>(len.to_int()));
    }
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    return rows;
}

std::vector<int> drop_rows(std::vector<int> rows, int m) {
    // remove the first m (largest) rows
    if (m >= static_cast<int>(rows.size())) return {};
    rows.erase(rows.begin(), rows.begin() + m);
    return rows;
}

std::vector<int> half_multiplicities(const std::vector<int>& rows) {
    std::map<int, int> mult;
    for (int r : rows) mult[r]++;
    std::vector<int> out;
    for (auto& [len, m] : mult) {
        if (m % 2 != 0) throw std::domain_error("odd multiplicity; shape not halvable");
        for (int k = 0; k < m / 2; ++k) out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

std::vector<int> scale_rows(std::vector<int> rows, int num, int den) {
    for (auto& r : rows) {
        if ((r * num) % den != 0) throw std::domain_error("row not scalable");
        r = r * num / den;
    }
    return rows;
}

RiggedPartition rows_to_partition(const std::vector<int>& rows) {
    RiggedPartition p;
    for (int r : rows) p.strings.push_back({r, half_zero});
    p.normalize();
    return p;
}

}  // namespace

RiggedConfiguration closed_form_hw_rc(const AffineType& t, int r, int s,
                                      const ClassicalWeight& lambda) {
    const CartanData& cd = cartan_data(t);
    const int n = cd.n;
    auto L = std::make_shared<MultiplicityArray>(
        MultiplicityArray::of_factors(t, {{r, s}}));
    auto eps = to_epsilon(cd, lambda);

    auto trivial_check = [&]() {
        if (!(lambda == cd.factor_weight(r, s)))
            throw std::domain_error("lambda not in the classical decomposition");
        return RiggedConfiguration::empty(L);
    };

    std::vector<int> lbar;
    std::vector<RiggedPartition> nu(n);
    switch (t.family) {
        case Family::A1:
            return trivial_check();
        case Family::D1:
            if (r >= n - 1) return trivial_check();
            lbar = complement_rows(eps, r, Half::of_int(s));
            for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
            for (int a = r; a < n - 1; ++a) nu[a - 1] = rows_to_partition(lbar);
            nu[n - 2] = rows_to_partition(half_multiplicities(lbar));
            nu[n - 1] = nu[n - 2];
            break;
        case Family::C1:
            if (r == n) return trivial_check();
            lbar = complement_rows(eps, r, Half::of_int(s));
            for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
            for (int a = r; a < n; ++a) nu[a - 1] = rows_to_partition(lbar);
            nu[n - 1] = rows_to_partition(scale_rows(lbar, 1, 2));
            break;
        case Family::A2Odd:
            lbar = complement_rows(eps, r, Half::of_int(s));
            for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
            for (int a = r; a < n; ++a) nu[a - 1] = rows_to_partition(lbar);
            nu[n - 1] = rows_to_partition(half_multiplicities(lbar));
            break;
        case Family::B1:
            if (r == n) {
                lbar = complement_rows(eps, n, Half::of_halves(s));
                for (int a = 1; a < n; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, n - a));
                nu[n - 1] = rows_to_partition(scale_rows(half_multiplicities(lbar), 2, 1));
            } else {
                lbar = complement_rows(eps, r, Half::of_int(s));
                for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
                for (int a = r; a < n; ++a) nu[a - 1] = rows_to_partition(lbar);
                nu[n - 1] = rows_to_partition(scale_rows(half_multiplicities(lbar), 2, 1));
            }
            break;
        case Family::A2Even:
        case Family::A2Dual:
            lbar = complement_rows(eps, r, Half::of_int(s));
            for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
            for (int a = r; a <= n; ++a) nu[a - 1] = rows_to_partition(lbar);
            break;
        case Family::D2:
            if (r == n) return trivial_check();
            lbar = complement_rows(eps, r, Half::of_int(s));
            for (int a = 1; a < r; ++a) nu[a - 1] = rows_to_partition(drop_rows(lbar, r - a));
            for (int a = r; a <= n; ++a) nu[a - 1] = rows_to_partition(lbar);
            break;
    }
    RiggedConfiguration rc(L, std::move(nu));
    std::string why;
    if (!rc.is_highest_weight() || !rc.well_formed(&why))
        throw std::domain_error("lambda not in the classical decomposition");
    return rc;
}

std::string KleberTree::dot() const {
    std::ostringstream os;
    os << "digraph kleber {\n";
    for (size_t v = 0; v < nodes.size(); ++v) {
        os << "  n" << v << " [label=\"" << nodes[v].weight.str() << "\""
           << (nodes[v].selected ? "" : ", style=dashed") << "];\n";
        if (nodes[v].parent >= 0) {
            os << "  n" << nodes[v].parent << " -> n" << v << " [label=\"";
            for (size_t a = 0; a < nodes[v].d.size(); ++a) {
                if (a) os << ',';
                os << nodes[v].d[a];
            }
            os << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string KleberTree::json() const {
    std::ostringstream os;
    os << "{\"type\":\"" << tree_type.str() << "\",\"nodes\":[";
    for (size_t v = 0; v < nodes.size(); ++v) {
        if (v) os << ',';
        os << "{\"weight\":\"" << nodes[v].weight.str() << "\",\"depth\":" << nodes[v].depth
           << ",\"parent\":" << nodes[v].parent
           << ",\"selected\":" << (nodes[v].selected ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace rcr
