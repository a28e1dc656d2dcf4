#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rcr/rigged.hpp"

namespace rcr {

struct KleberNode {
    ClassicalWeight weight;   // final weight (ambient coordinates for the virtual tree)
    std::vector<int> d;       // edge label to parent as alpha coefficients; empty at root
    int depth = 0;
    int parent = -1;
    bool selected = true;     // virtual algorithm: (A1)/(A2) selection
    std::vector<int> children;
};

struct KleberTree {
    AffineType tree_type;  // the type the tree is built over (ambient if virtual)
    AffineType source_type;
    std::vector<KleberNode> nodes;  // nodes[0] is the root

    std::string dot() const;
    std::string json() const;
};

// Kleber tree for a simply-laced classical subalgebra (types A_n^(1), D_n^(1)).
KleberTree kleber_tree(const MultiplicityArray& B);

// Virtual Kleber tree for the non-simply-laced non-exceptional types.
KleberTree virtual_kleber_tree(const MultiplicityArray& B);

// All highest weight rigged configurations of RC(B), enumerated through the
// (virtual) Kleber algorithm with the full product of admissible riggings.
std::vector<RiggedConfiguration> highest_weight_rcs(
    std::shared_ptr<const MultiplicityArray> B);

// Closed-form highest weight rigged configuration of RC(B^{r,s}; lambda)
// from the per-type complement-shape formulas; all riggings zero.
RiggedConfiguration closed_form_hw_rc(const AffineType& t, int r, int s,
                                      const ClassicalWeight& lambda);

// nu of a plain-tree node via second differences of the path weights
std::vector<RiggedPartition> node_partitions(const KleberTree& tree, int node, int n);

}  // namespace rcr
