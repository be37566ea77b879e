#pragma once

/// Affine circle semigroups: affineness, the membership guarantee bound, the
/// finite interior gap set, minimal generators, and the Buchsbaum decision.

#include <string>

#include "cbsg/semigroup.hpp"

namespace cbsg {

struct CircleAffineness {
    bool affine = false;
    std::string reason;            // set when not affine
    std::vector<Vec2Q> witnesses;  // one rational point of F ∩ tau_j per ray
};

/// Affine iff every extremal-ray contact holds a rational point: tangent
/// contacts demand |c|^2 - r^2 to be the square of a rational, chord contacts
/// always qualify (a minimal-denominator rational in the chord is exhibited).
CircleAffineness circle_affineness(const RationalCircle& circle);

/// Certified membership guarantee: every nonzero cone lattice point a with
/// form1(a)·form2(a) >= bound belongs to the semigroup, and the interior
/// residual {form1 >= 1, form2 >= 1, product < bound} is bounded.
struct CircleBound {
    LatticePoint form1, form2;  // primitive integer forms, >= 0 on the cone
    Rational bound;
    bool factored = false;  // cone quadratic split over two rational tangent forms
    Rational kappa;         // Delta = kappa * form1 * form2 when factored
    // Duality data: form1 >= alpha1 * coneform1, form2 >= beta2 * coneform2 on the cone.
    Rational alpha1, beta2;

    Rational product(const LatticePoint& a) const {
        return Rational(form1.x * a.x + form1.y * a.y) * Rational(form2.x * a.x + form2.y * a.y);
    }
    bool guarantees(const LatticePoint& a) const { return !a.is_origin() && product(a) >= bound; }
};

CircleBound circle_guarantee_bound(const Semigroup& sg);

/// int(cone) \ int(S), sorted by squared distance then lexicographically.
std::vector<LatticePoint> circle_interior_gaps(const Semigroup& sg);

/// Same scan with an enlarged residual region (product <= cap); enlarging the
/// region never changes the result, which the tests exercise.
std::vector<LatticePoint> circle_interior_gaps_capped(const Semigroup& sg, const Rational& cap);

/// A lattice point together with its Sbar membership.
struct SbarWitness {
    LatticePoint point;
    bool in_sbar;
};

struct CircleBuchsbaumCertificate {
    bool verdict = false;
    std::vector<SbarWitness> gaps;  // interior gaps with their Sbar membership
    RayReport ray1, ray2;           // Sbar ∩ tau_j reports
};

/// The characterization: Buchsbaum iff every interior gap lies in Sbar and
/// Sbar ∩ tau_j is generated by one element for j = 1, 2.
CircleBuchsbaumCertificate circle_is_buchsbaum(const Semigroup& sg);

/// Dispatch targets used by Semigroup (see semigroup.hpp).
GeneratorSet circle_min_generators_impl(const Semigroup& sg);
long long circle_sbar_stable_index(const Semigroup& sg, int which);

}  // namespace cbsg
