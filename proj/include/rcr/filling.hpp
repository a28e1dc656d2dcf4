#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcr/bijection.hpp"
#include "rcr/rigged.hpp"
#include "rcr/tableaux.hpp"

namespace rcr {

// classical decomposition of B^{r,s}: the list of lambda obtained by
// removing the type's diamonds from the rectangle (deduplicated, sorted)
std::vector<ClassicalWeight> decomposition_list(const AffineType& t, int r, int s);
bool in_decomposition(const AffineType& t, int r, int s, const ClassicalWeight& lambda);

// cells per removed diamond: 0 = trivial decomposition, 1 = box, 2 = domino
int diamond_cells(const AffineType& t, int r);

// filling of the classically highest weight element of B(lambda) in B^{r,s}
WordElement fill_highest_weight(const AffineType& t, int r, int s,
                                const ClassicalWeight& lambda);

// filling of an arbitrary KN tableau element of B^{r,s} (morphism transport)
WordElement fill(const AffineType& t, int r, int s, const WordElement& kn);

// natural classical crystal isomorphism iota: B^{r,s} -> RC(B^{r,s}) and its
// inverse, via highest weight matching and f-path transport
RiggedConfiguration iota(const AffineType& t, int r, int s, const WordElement& kn);
WordElement iota_inverse(const AffineType& t, int r, int s, const RiggedConfiguration& rc);

// energy D(b) for b in B^{r,s}: diamonds removed to reach its component
Half energy(const AffineType& t, int r, int s, const WordElement& kn);

// Thm check: Phi(closed_form_hw_rc(lambda)) == fill(u_lambda) over the whole
// decomposition; returns mismatching lambda names (empty = pass)
std::vector<std::string> verify_fill_equals_phi(const AffineType& t, int r, int s);

}  // namespace rcr
