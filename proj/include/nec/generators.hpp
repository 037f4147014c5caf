#pragma once

#include "nec/network.hpp"

namespace nec {

/// Combination network: N relay nodes fed by one channel each, and one
/// dedicated sink per k-subset of relays (subsets in lexicographic order).
Network make_combination(int n, int k);

/// Three-node relay network: s feeds i and t directly, i forwards to t.
Network make_g1();

/// Two-hop bottleneck: four parallel channels s->i, four parallel i->t.
Network make_g2();

/// Two relay layers: four disjoint s->i_k->j_k->t lines.
Network make_g3();

} // namespace nec
