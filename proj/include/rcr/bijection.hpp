#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcr/rigged.hpp"
#include "rcr/tableaux.hpp"

namespace rcr {

// ls: RC(B^{r,s} (x) B*) -> RC(B^{r,1} (x) B^{r,s-1} (x) B*); identity on
// (nu, J), vacancy numbers recomputed.
RiggedConfiguration left_split(const RiggedConfiguration& rc);

// lt: RC(B^{r,1} (x) B*) -> RC(B^{1,1} (x) B^{r-1,1} (x) B*); adds a length-1
// singular string to nu^(a) for 1 <= a < r.  Non-spinor columns only.
RiggedConfiguration top_split(const RiggedConfiguration& rc);

// generic doubling/halving (eq. doubling map): lengths and riggings doubled,
// factor widths doubled; halving inverts and requires even data.
RiggedConfiguration doubling(const RiggedConfiguration& rc);
RiggedConfiguration halving(const RiggedConfiguration& rc);

// delta' on the leftmost column factor B^{h,1}: removes the top cell,
// returning the letter and the rc over B^{h-1,1} (x) B* (or B* when h = 1).
struct DeltaResult {
    RiggedConfiguration rc;
    Letter letter;
    std::string trace;  // lines "a=<idx> l=<len>" per selection
};
DeltaResult delta_step(const RiggedConfiguration& rc);

// Phi: RC(B) -> tensor product of KR tableaux, processing factors left to
// right, each rectangle column by column.
struct PhiResult {
    WordElement tableaux;
    std::vector<std::string> trace;
};
PhiResult phi(const RiggedConfiguration& rc);

// shape of the KR tableau of one factor: (rows, scale)
std::pair<int, int> kr_tableau_rows(const AffineType& t, int r);

}  // namespace rcr
