/**
 * @file basis.hpp
 * @brief The 24 normalized bases: labels, their classification into the
 *        six tabulated patterns, and the elementary-move graph.
 *
 * A label [i,j,k,l] is a permutation of Z4. Every label matches exactly
 * one of six patterns relative to a vertex r:
 *
 *   P1 [r,r+1,r+2,r+3]   P2 [r+1,r,r+2,r+3]   P3 [r,r+1,r+3,r+2]
 *   P4 [r+1,r,r+3,r+2]   P5 [r,r+2,r+1,r+3]   P6 [r+2,r,r+1,r+3]
 *
 * The generator representation tables are stated for even r; odd r
 * substitutes t -> t^-1. Elementary moves swap adjacent label positions:
 * swapping positions 0,1 has a diagonal transition matrix, positions 1,2
 * a lower triangular one, positions 2,3 the reversal Z.
 */
#pragma once

#include <array>
#include <vector>

#include "qtet/algebra.hpp"

namespace qtet {

struct BasisLabel {
    std::array<int, 4> v;  // permutation of {0,1,2,3}

    bool operator==(const BasisLabel&) const = default;
    bool operator<(const BasisLabel& o) const { return v < o.v; }

    int operator[](int pos) const { return v[pos]; }
    BasisLabel shifted(int k) const {
        return BasisLabel{{(v[0] + k) % 4, (v[1] + k) % 4, (v[2] + k) % 4,
                           (v[3] + k) % 4}};
    }
    // Swap label positions pos and pos+1 (pos in 0..2).
    BasisLabel swapped(int pos) const;
    std::string str() const;
};

BasisLabel basis(int i, int j, int k, int l);
// All 24 labels in lexicographic order.
const std::vector<BasisLabel>& all_bases();
// Parses "i,j,k,l".
BasisLabel parse_basis(const std::string& text);

enum class Pattern { P1, P2, P3, P4, P5, P6 };

struct PatternMatch {
    Pattern pattern;
    int r;  // base vertex; odd r inverts the t argument
};

PatternMatch classify_basis(const BasisLabel& b);

// One cell of the generator representation table: the matrix is
// optionally conjugated by Z, built from the family `tag` with the given
// orientation and t-power (before the odd-r inversion).
struct RepSpec {
    MatrixTag tag;
    Orientation orientation;
    int t_power;  // -1, 0, +1
    bool z_conjugate;
};

// Table cell for generator x_{r+offsets} in the given pattern; `slot` is
// the index of the generator among (r,r+1),(r+1,r+2),(r+2,r+3),(r+3,r),
// (r,r+2),(r+1,r+3),(r+2,r),(r+3,r+1).
const RepSpec& rep_spec(Pattern p, int slot);

// Which slot a generator occupies relative to r; throws for non-generators.
int generator_slot(const GeneratorLabel& g, int r);

// Elementary move kinds, in the deterministic tie-break order.
enum class Move { swap01, swap12, swap23 };

// Deterministic shortest path of elementary moves between two labels.
std::vector<Move> move_path(const BasisLabel& from, const BasisLabel& to);

inline BasisLabel apply_move(const BasisLabel& b, Move m) {
    switch (m) {
        case Move::swap01: return b.swapped(0);
        case Move::swap12: return b.swapped(1);
        case Move::swap23: return b.swapped(2);
    }
    throw std::logic_error("bad move");
}

}  // namespace qtet
