#pragma once

#include <chromix/core.hpp>

#include <vector>

namespace chromix {

// One Hamiltonian cycle of the Walecki decomposition of K_{2p+1}.  Vertices
// are 0..2p-1 (residues mod 2p) plus 2p standing for the hub "inf".  The
// sequence lists the 2p+1 vertices in cycle order starting at the hub:
//   inf, j, j+1, j-1, j+2, j-2, ..., j+(p-1), j-(p-1), j+p   (mod 2p)
// and the cycle closes from the last entry back to the hub.
struct WaleckiCycle {
    int p = 0;
    int j = 0;
    std::vector<int> sequence;
};

auto walecki_cycle(int p, int j) -> WaleckiCycle;

// Universal target on 2p+1 vertices, p = 2n+m >= 2: arc type a (even) orients
// cycles C_{a-2} and C_{a-1} along their listed sequences; edge type a takes
// cycle C_{a-1} undirected.  All p cycles are used exactly once.
auto walecki_target(const Signature & sig) -> NmGraph;

// 15-vertex (0,3) target on Z_5 x Z_3: (i,j) ~ (i',j') iff i != i'; the edge
// type is 1+j+j' (mod 3, 0 read as 3) when i'-i is a nonzero square mod 5,
// else 2+j+j' (mod 3, 0 read as 3).  Vertex (i,j) has index 3i+j.
auto t03() -> NmGraph;

// 21-vertex (1,1) target on Z_7 x Z_3, squares = {1,2,4} mod 7:
//   j' = j,     i'-i square:   arc (i,j) -> (i',j')
//   j' = j + 1, i'-i square:   edge
//   j' = j + 1, i'-i nonsquare: arc (i',j') -> (i,j)
// Vertex (i,j) has index 3i+j.
auto t11() -> NmGraph;

// Every non-adjacent pair gains the adjacency v in N^fill(u), u < v.
auto complete_augment(const NmGraph & h, int fill) -> NmGraph;

} // namespace chromix
