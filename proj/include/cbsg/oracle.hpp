#pragma once

/// Brute-force reference implementations used to certify the main algorithms
/// on small instances. Deliberately simple: dilation-by-dilation rasterization
/// from the body definition, no cone/skeleton/guarantee machinery. Truncation
/// caps are explicit everywhere; the caller certifies their completeness.

#include <optional>
#include <unordered_set>
#include <vector>

#include "cbsg/body.hpp"
#include "cbsg/vec.hpp"

namespace cbsg {

/// All lattice points of ∪_{i<=cap} i·F, by per-dilation bounding-box scans.
struct TruncatedSemigroup {
    Body body;
    long long cap = 0;
    std::vector<LatticePoint> points;  // sorted lexicographically, includes O
    std::unordered_set<LatticePoint, LatticePointHash> index;

    static TruncatedSemigroup build(const Body& body, long long cap);
    bool contains(const LatticePoint& p) const { return index.count(p) != 0; }
};

/// P ∈ k·F for some 0 <= k <= cap, tested directly from the body inequality.
bool brute_member(const Body& body, const LatticePoint& P, long long cap);

/// Points of the truncation not expressible as a sum of two nonzero points.
std::vector<LatticePoint> brute_min_generators(const Body& body, long long cap);

struct BruteDecision {
    bool holds = false;                   // Cohen-Macaulay (of S, resp. of Sbar)
    std::optional<LatticePoint> witness;  // violating gap when !holds
};

/// Corollary scan: a gap a (within x^2+y^2 <= radius2) with both a+n1 and
/// a+n2 members violates Cohen-Macaulayness.
BruteDecision brute_cm_check(const Body& body, long long radius2, long long cap);

/// Same scan with Sbar membership and the least Sbar ray elements as test
/// vectors; by the Buchsbaum characterization this decides Buchsbaumness of S.
BruteDecision brute_sbar_cm(const Body& body, long long radius2, long long cap);

}  // namespace cbsg
