#include "cbsg/circle_semigroup.hpp"
#include "cbsg/polygon_semigroup.hpp"

namespace cbsg {

GeneratorSet compute_min_generators(const Semigroup& sg) {
    return sg.is_circle_body() ? circle_min_generators_impl(sg) : polygon_min_generators_impl(sg);
}

long long sbar_stable_index(const Semigroup& sg, int which) {
    return sg.is_circle_body() ? circle_sbar_stable_index(sg, which)
                               : polygon_sbar_stable_index(sg, which);
}

}  // namespace cbsg
