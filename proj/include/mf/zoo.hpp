#pragma once

#include "mf/graph.hpp"

namespace mf::zoo {

Multigraph complete(int n);
Multigraph cycle(int n);
Multigraph path(int n);
Multigraph star(int leaves);

/// Two vertices joined by three parallel edges.
Multigraph k23();
Multigraph k4();
Multigraph k33();
Multigraph prism();
Multigraph cube();

/// Outer n-cycle u0..u_{n-1}, spokes u_i v_i, inner edges v_i v_{i+k}.
/// Vertices 0..n-1 are the outer cycle, n..2n-1 the inner.
Multigraph generalized_petersen(int n, int k);

Multigraph petersen();      // generalized_petersen(5, 2)
Multigraph dodecahedron();  // generalized_petersen(10, 2)

/// Incidence graph of the Fano plane: points 0..6, lines 7..13 where line i
/// covers points {i, i+1, i+3} mod 7.
Multigraph heawood();

/// Three heptagons with steps 1, 2, 3 plus a hub heptad: vertices a_i = i,
/// b_i = 7+i, c_i = 14+i, d_i = 21+i; edges a_i a_{i+1}, b_i b_{i+2},
/// c_i c_{i+3}, and d_i to each of a_i, b_i, c_i.
Multigraph coxeter();

/// Even cycle v0..v_{n-1} plus the n/2 diagonals v_i v_{i+n/2}.
Multigraph moebius_ladder(int n);

}  // namespace mf::zoo
