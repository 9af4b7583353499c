#pragma once

#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

class MoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Encounter order of the site strands: entry k is the position (2..n+1) of
// the k-th strand met when walking from strand 1 along the orientation.
using Permutation = std::vector<int>;
// Signs of the clasp crossings c_1 .. c_n.
using SignVector = std::vector<int>;

// A thin disk crossing n+1 edges of a knot diagram one after another, like a
// row of parallel strands. The disk runs from strand 1 to strand n+1; its
// "top" side is on the left of that direction. downward[i] says the edge
// runs from the top side to the bottom side. Consecutive strands share the
// face the disk passes through, and all faces visited are distinct.
struct MoveSite {
    std::vector<int> strands;
    std::vector<bool> downward;
    Permutation entry_permutation;

    int order() const { return static_cast<int>(strands.size()) - 1; }
};

// Checks the site against d and recomputes its entry permutation.
MoveSite make_site(const Diagram& d, std::vector<int> strands, std::vector<bool> downward);
// Finds crossing directions for the given strands; throws if no disk fits.
MoveSite find_site(const Diagram& d, const std::vector<int>& strands);
Permutation entry_permutation(const Diagram& d, const MoveSite& site);
// Throws MoveError if the site no longer fits d.
void check_site(const Diagram& d, const MoveSite& site);

Diagram crossing_change(const Diagram& d, int x);
Diagram smooth(const Diagram& d, int x);

// Adds a one-crossing kink on edge `label`, curling to the right or left of
// the edge direction, with the kink's first passage over or under.
Diagram insert_kink(const Diagram& d, int label, bool right_side, bool over_first);

// Replaces the neighbourhood of marks A and B by the twisted tangle; see
// construction.hpp for the contract. k counts full twists in each of the two
// twist regions.
MarkedDiagram insert_twist_region(const MarkedDiagram& m, int k);

// Record of an applied special C_n-move, enough to undo it.
struct CnApplication {
    std::vector<int> inner;   // crossing ids created by the move
    std::vector<int> top;     // per strand, the edge entering the move region from the top side
    std::vector<int> bottom;  // per strand, the edge on the bottom side
    // Clasp j (strand 1 with strand j+1): one crossing id from every full
    // twist of strand 1 around strand j+1, in the order strand 1 meets them.
    // The first has the requested clasp sign; later ones alternate with it.
    std::vector<std::vector<int>> clasps;
};

struct CnResult {
    Diagram diagram;
    CnApplication applied;
};

// Strand 1 is rerouted along the nested commutator of meridians of strands
// 2..n+1; the clasp with strand j+1 gets sign signs[j-1].
Diagram special_cn_move(const Diagram& d, const MoveSite& site, const SignVector& signs);
CnResult special_cn_move_tracked(const Diagram& d, const MoveSite& site, const SignVector& signs);
// Crossing change at clasp j (1-based): flips the recorded crossing of each
// of its twists, which unclasps strand j+1 and undoes the move up to R2.
Diagram change_clasp(const Diagram& d, const CnApplication& applied, int j);
// Puts back parallel strands where the move was applied.
Diagram inverse_special_cn_move(const Diagram& d, const CnApplication& applied);

struct TranspositionResult {
    Diagram diagram;
    MoveSite site;
};

// Exchanges the positions of site strands s1 and s2 (1-based, both >= 2) by
// inserting a braid and its inverse next to the site (regular isotopy only).
TranspositionResult strand_transposition(const Diagram& d, const MoveSite& site, int s1, int s2);

// Pure braid word on the site strands: generator i (1-based) with exponent +-1,
// left strand over for +1.
struct BraidLetter {
    int gen = 1;
    int exp = 1;
};
CnResult insert_braid(const Diagram& d, const MoveSite& site, const std::vector<BraidLetter>& word);

}  // namespace gordian
