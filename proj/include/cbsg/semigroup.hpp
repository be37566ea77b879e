#pragma once

/// The convex body semigroup F* = ∪_{i>=0} (i·F) ∩ N² and its companions:
/// per-point dilation intervals, membership, the auxiliary semigroup
/// Sbar = {a : a + n_i ∈ S for every minimal generator n_i}, and the
/// restriction of either semigroup to an extremal ray.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cbsg/cone.hpp"

namespace cbsg {

/// The exact real set {k >= 0 : P ∈ k·F}. `unbounded` marks intervals of the
/// form [lo, ∞) (possible only when the origin lies in F).
struct DilationInterval {
    bool empty = true;
    Surd lo;
    std::optional<Surd> hi;  // nullopt = unbounded above
    bool unbounded() const { return !empty && !hi; }

    /// Smallest integer k >= kmin inside the interval, if any.
    std::optional<long long> first_integer(long long kmin) const;
};

DilationInterval dilation_interval(const Body& body, const LatticePoint& P);

/// Membership in the semigroup of `body`; k = 0 is admitted only for P = O.
bool body_member(const Body& body, const LatticePoint& P);

struct GeneratorSet {
    std::vector<LatticePoint> elements;  // minimal generators, lexicographic
    LatticePoint ray1, ray2;             // least elements of S ∩ tau_j
};

/// S ∩ tau (or Sbar ∩ tau) in units of the primitive direction: membership of
/// s·p is `prefix[s]` for 1 <= s < tail_start and `pattern[(s-tail_start) mod
/// period]` beyond. Every represented set is closed under addition.
struct RaySemigroup {
    LatticePoint primitive;
    std::vector<bool> prefix;  // index 0 unused
    long long tail_start = 1;
    long long period = 1;
    std::vector<bool> pattern;

    long long min_member = 0;                   // least s >= 1 in the set
    std::vector<long long> minimal_multiples;   // generators of the numerical set
    bool single_generator = false;
    LatticePoint generator;                     // min_member · primitive
    bool weak_criterion = false;                // primitive itself belongs (s = 1)

    bool member_s(long long s) const;
    /// s-values in [1, tail_start) missing from the set.
    std::vector<long long> prefix_gaps() const;
};

/// Certificate payload for one ray of a decision.
struct RayReport {
    LatticePoint generator;
    bool single_generator = false;
    bool weak_criterion = false;  // the primitive cone generator itself belongs
    std::vector<long long> minimal_multiples;
};

inline RayReport make_ray_report(const RaySemigroup& r) {
    return {r.generator, r.single_generator, r.weak_criterion, r.minimal_multiples};
}

class Semigroup {
public:
    explicit Semigroup(Body body);

    const Body& body() const { return body_; }
    const Cone& cone() const { return cone_; }
    bool is_circle_body() const { return is_circle(body_); }

    DilationInterval dilation(const LatticePoint& P) const { return dilation_interval(body_, P); }
    bool member(const LatticePoint& P) const { return body_member(body_, P); }

    /// Minimal generating set; computed once, concurrent callers see one result.
    const GeneratorSet& generators() const;

    /// P ∈ Sbar, i.e. P + n ∈ S for every minimal generator n.
    bool member_sbar(const LatticePoint& P) const;

    /// which ∈ {1, 2}; in_sbar selects Sbar ∩ tau instead of S ∩ tau.
    const RaySemigroup& ray(int which, bool in_sbar) const;

private:
    Body body_;
    Cone cone_;
    mutable std::mutex mu_;
    mutable std::optional<GeneratorSet> gens_;
    mutable std::optional<RaySemigroup> rays_[2][2];
};

/// Implemented by the circle/polygon analysis modules (dispatched by body kind).
GeneratorSet compute_min_generators(const Semigroup& sg);

/// For a point-contact ray: index s* beyond which membership of s·p in Sbar is
/// exactly periodic with period = the S-ray modulus. Body-kind specific.
long long sbar_stable_index(const Semigroup& sg, int which);

/// Builders shared by the analysis modules.
RaySemigroup build_ray_semigroup(const Semigroup& sg, int which, bool in_sbar);

}  // namespace cbsg
