#pragma once

/// Affine convex polygonal semigroups: the skeleton construction that
/// decomposes the cone into two boundary strips, two finite wedges near the
/// origin and a translated cone behind an apex point, plus the decision
/// procedures built on it (gap comparison, Cohen-Macaulayness, Buchsbaumness,
/// minimal generators) and the two guaranteed-Buchsbaum family constructors.

#include "cbsg/circle_semigroup.hpp"  // SbarWitness
#include "cbsg/semigroup.hpp"

namespace cbsg {

/// Per-ray skeleton data. For a point contact at vertex P: the least index j
/// such that j·(P->prev edge) meets (j+1)·(P->next edge), the meeting point
/// V(h) = h·P + offset for h >= j (all on one line parallel to the ray), the
/// point where that line crosses the other ray, the repeating open triangle
/// ("gap cell") whose translates carry every strip gap, and the wedge hull
/// {O, jP, V(j), crossing}. A segment contact contributes no strip; its wedge
/// degenerates to {O} and the parallel line is the ray itself.
struct SkeletonSide {
    bool point_contact = false;

    Vec2Q vertex;       // contact vertex P (point contact)
    long long j = 0;    // least overlap index
    Vec2Q offset;       // V(h) = h*vertex + offset
    Vec2Q nu_other;     // (line through the V's) ∩ (other ray)
    long long period = 1;  // least t with t*vertex integral; n = t*vertex
    std::vector<Vec2Q> wedge;  // hull points; {O} for segment contact

    Rational seg_lo, seg_hi;  // contact parameters (segment contact)
    long long overlap = 1;    // least k with k*seg_hi >= (k+1)*seg_lo

    Vec2Q meet(long long h) const { return Rational(h) * vertex + offset; }
    /// Open triangle {mu*P, (mu+1)*P, V(mu)}; its lattice points are gaps of
    /// both S and Sbar. Valid for mu >= j.
    std::vector<Vec2Q> gap_cell(long long mu) const;
};

struct Skeleton {
    SkeletonSide side1, side2;
    int case_id = 0;  // 1: seg/seg, 2: point/point, 3: point/seg, 4: seg/point
    Vec2Q apex;       // intersection of the two parallel lines (O in case 1)
    long long core_index = 0;   // shared dilation index used for the core triangle
    std::vector<Vec2Q> core;    // triangle localizing every apex-region gap
    LatticePoint n1, n2;        // least semigroup elements on the rays
};

Skeleton polygon_skeleton(const Semigroup& sg);

/// Decides int(cone) = int(Sbar) over the finite witness regions of the
/// applicable case. Strip-cell lattice points are automatically outside Sbar;
/// wedge and core points are tested via member_sbar.
struct GapComparison {
    bool equal = false;
    int case_id = 0;
    std::vector<LatticePoint> strip_gaps1, strip_gaps2;  // one period of cells
    std::vector<LatticePoint> wedge_gaps;                // interior S-gaps in the wedges
    std::vector<LatticePoint> wedge_sbar_gaps;           //   ... outside Sbar
    std::vector<LatticePoint> apex_gaps;                 // S-gaps in core ∩ apex region
    std::vector<LatticePoint> apex_sbar_gaps;            //   ... outside Sbar
};

GapComparison polygon_gap_comparison(const Semigroup& sg);

/// Interior gap structure for reporting: a finite part plus, per point-contact
/// ray, one period of strip cells repeating with step n.
struct PolygonGaps {
    std::vector<LatticePoint> finite;
    std::vector<LatticePoint> strip_reps1, strip_reps2;
    LatticePoint strip_step1, strip_step2;
};

PolygonGaps polygon_interior_gaps(const Semigroup& sg);

struct CohenMacaulayResult {
    bool cohen_macaulay = false;
    std::optional<LatticePoint> witness;     // a gap with both a+n1, a+n2 in S
    std::vector<LatticePoint> violations;    // all explicit witnesses found
};

CohenMacaulayResult polygon_is_cohen_macaulay(const Semigroup& sg);

struct PolygonBuchsbaumCertificate {
    bool verdict = false;
    enum Branch { InteriorEqual, InteriorDiffers } branch = InteriorEqual;
    GapComparison comparison;
    RayReport ray1, ray2;                 // Sbar ∩ tau_j reports
    LatticePoint nprime1, nprime2;        // least Sbar elements on the rays
    std::vector<LatticePoint> upsilon_prime;  // wedge points outside Sbar whose
                                              // n'-translates both land in Sbar
    std::vector<SbarWitness> apex_witnesses;  // apex-region S-gaps with Sbar status
    bool apex_in_sbar = false;                // every apex-region gap lies in Sbar
};

PolygonBuchsbaumCertificate polygon_is_buchsbaum(const Semigroup& sg);

/// Seeded constructors for the two guaranteed-Buchsbaum families.
ConvexPolygon make_triangle_family(unsigned long long seed);
ConvexPolygon make_aligned_quad_family(unsigned long long seed);

/// Dispatch targets used by Semigroup (see semigroup.hpp).
GeneratorSet polygon_min_generators_impl(const Semigroup& sg);
long long polygon_sbar_stable_index(const Semigroup& sg, int which);

}  // namespace cbsg
