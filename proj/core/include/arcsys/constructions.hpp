#pragma once

#include "arcsys/arc_system.hpp"
#include "arcsys/taut.hpp"

namespace arcsys {

// Gap crossed by the polynomial arcs at an integer root m.
int root_gap(int m);

ArcClass alpha_below(int n);                             // the ray left of p
ArcClass alpha_abc(int n, int a, int b, int c);          // a < b < c, or 0 < a < b = c = n-2
ArcClass alpha_ij(int n, int i, int j);                  // 1 <= i < j <= n-2
ArcClass gamma_arc(int n, int k);
// The polygonal and polynomial pictures themselves, unreduced, with crossing
// points ordered by their x coordinate on the line p = -1, r_i = i - 1/2.
EmbeddedArc alpha_abc_drawing(int n, int a, int b, int c);
EmbeddedArc alpha_ij_drawing(int n, int i, int j);                        // r_k -> r_{k+1}, 1 <= k <= n-3

ArcSystem max_two_system(int n);
ArcSystem zero_system(int n);

}  // namespace arcsys
