#pragma once

#include "polylab/integer.hpp"
#include "polylab/poly.hpp"
#include "polylab/polytope.hpp"

#include <span>

namespace polylab {

/**
 * A delta-vector together with its shape data. The window keeps its full
 * length d + 1 because trailing zeros carry the degree/codegree information.
 */
struct DeltaReport {
    IntVector delta;
    long dim = 0;
    long degree = 0;    // s = max { i : delta_i != 0 }
    long codegree = 1;  // l = d + 1 - s
    bool unimodal = false;
    bool symmetric = false;
    bool alternatingly_increasing = false;
    /// Last index of the interleaved chain h_0 <= h_s <= h_1 <= ..., i.e. floor((s + 1) / 2).
    long chain_top = 0;

    IntPoly poly() const { return IntPoly(delta); }
};

/// Fills the degree and flags for a window of length d + 1.
DeltaReport make_report(IntVector window);

/// delta_k = sum_{m=0}^{k} (-1)^m C(d+1, m) #((k-m)P), k = 0..d.
DeltaReport delta_vector(const LatticePolytope& p);

/// Eulerian polynomial Eul(n, t) = delta(l^{n+1}, t) for n >= 0.
/// Eul(-1, t) is the formal symbol 1/t and has no polynomial form; see eulerian_times_t.
IntPoly eulerian(long n);

/// t * Eul(n, t) for n >= -1 (so n = -1 gives the constant 1).
IntPoly eulerian_times_t(long n);

struct APoly {
    long i = 0;
    long j = 0;
    IntPoly poly;
};

/// A(i, j, t) = (1-t)^{i+2} sum_{n>=0} t^n n^{j+1} (n+1)^{i-j} for 0 <= i, -1 <= j <= i.
APoly a_poly(long i, long j);

/// delta-window of P x [0,1] from the window h of a d-polytope P:
/// delta_i = (i+1) h_i + (d+1-i) h_{i-1}.
IntVector product_with_segment(std::span<const Int> h, long d);

/// delta(simplex^k x segment^i) where simplex is the standard triangle, from
/// #(n (simplex^k x segment^i)) = ((n+1)(n+2)/2)^k (n+1)^i.
DeltaReport delta_simplex_product(long k, long i);

/// Weakly increasing then weakly decreasing.
bool is_unimodal(std::span<const Int> w);

/// w_i = w_{d-i} for i = 0..d (entries past the window count as zero).
bool is_symmetric(std::span<const Int> w, long d);

/// h_0 <= h_s <= h_1 <= h_{s-1} <= ... up to the middle of 0..s.
bool is_alternatingly_increasing(std::span<const Int> w, long s);

struct ChainCheck {
    bool holds = true;
    /// False when d < 3 or delta_d = 0; the chain then holds vacuously.
    bool applicable = false;
};

/// delta_0 <= delta_d <= delta_1 <= delta_{d-1} <= delta_2.
ChainCheck check_interior_chain(const DeltaReport& report);

/// Symmetric delta-vector; requires a full-dimensional polytope, else false.
bool is_translate_of_reflexive(const LatticePolytope& p);

}  // namespace polylab
