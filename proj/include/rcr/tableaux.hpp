#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcr/cartan.hpp"
#include "rcr/crystal.hpp"

namespace rcr {

// Letters of B^{1,1}: a = 1..n unbarred, -a barred, 0 the zero letter
// (families B only), kEmptyLetter the element of B(0).
using Letter = int;
inline constexpr Letter kEmptyLetter = 127;

std::string letter_str(Letter x);

// crystal of the vector representation B(varpi_1) for a classical family
struct LetterCrystal {
    ClassicalFamily family;
    int n;

    std::vector<Letter> letters() const;  // in increasing KN order
    std::optional<Letter> f(Letter x, int a) const;
    std::optional<Letter> e(Letter x, int a) const;
    int eps(Letter x, int a) const;
    int phi(Letter x, int a) const;
    ClassicalWeight wt(Letter x) const;
};

// A tensor factor carried by a word element: a shape (column heights, left
// to right), a gamma scale (2 for doubled spin columns, else 1) and the
// letters in column reading order (each column read top to bottom).
struct WordFactor {
    std::vector<int> cols;
    int scale = 1;
    std::vector<Letter> letters;

    int cells() const { return static_cast<int>(letters.size()); }
    bool operator==(const WordFactor&) const = default;
};

// Crystal element: a tensor product of word factors over one classical
// family.  KN tableaux are single factors whose cols follow lambda; KR
// tableaux are rectangles.
struct WordElement {
    ClassicalFamily family;
    int n;
    std::vector<WordFactor> factors;  // leftmost first

    bool operator==(const WordElement&) const = default;

    std::vector<Letter> reading_word() const;
    std::optional<WordElement> f(int a) const;
    std::optional<WordElement> e(int a) const;
    int eps(int a) const;
    int phi(int a) const;
    ClassicalWeight weight() const;
    std::string key() const;
    std::string pretty() const;  // fixed-width text art per factor
    std::string json() const;
};

// ops bundle for generate_component
ElementOps<WordElement> word_ops();

// shape of the classical weight lambda as column heights (doubled when
// lambda is spin; returns scale accordingly).  In type D a negative last
// epsilon coordinate marks the height-n columns as nbar-flavored.
struct ShapeInfo {
    std::vector<int> cols;
    int scale = 1;
    int nbar_cols = 0;  // type D: columns of height n carrying nbar at top
};
ShapeInfo shape_of(const CartanData& cd, const ClassicalWeight& lambda);

// highest weight KN tableau of B(lambda) as a word element
WordElement kn_highest_weight(const CartanData& cd, const ClassicalWeight& lambda);

// column-strict sanity check for KN tableaux (extensional helper)
bool columns_strict(const WordElement& w);

// Appendix column virtualization maps.
// C_n column -> D_{n+1} column (identity on letters).
WordElement virtualize_column_cd(const WordElement& t);
// B_n column (one column, 0 allowed) -> D_{n+1} two-column tableau.
WordElement virtualize_column_bd(const WordElement& t);
// spin normalization: half-width +/- column of height n <-> full-width
std::vector<Letter> spin_signs_to_column(const std::vector<int>& signs);
std::vector<int> column_to_spin_signs(const std::vector<Letter>& col, int n);

}  // namespace rcr
