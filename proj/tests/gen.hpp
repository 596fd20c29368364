#pragma once

// Hand-rolled generators for the property tests. All draws go through tits::Rng so a
// failing case reproduces from its seed.

#include "tits/symplectic.hpp"

#include <numeric>

namespace gen {

using tits::Int;
using tits::Rng;
using tits::Vec4;

inline Vec4 vector(Rng& rng, long bound) {
    return tits::vec(rng.range(-bound, bound), rng.range(-bound, bound), rng.range(-bound, bound),
                     rng.range(-bound, bound));
}

inline Vec4 nonzero(Rng& rng, long bound) {
    for (;;) {
        Vec4 v = vector(rng, bound);
        if (v != Vec4{0, 0, 0, 0}) return v;
    }
}

inline Vec4 primitive(Rng& rng, long bound) {
    for (;;) {
        Vec4 v = nonzero(rng, bound);
        if (tits::is_primitive(v)) return v;
    }
}

inline long squarefree(Rng& rng, long hi) {
    for (;;) {
        long t = rng.range(1, hi);
        if (tits::square_factor(t) == 0) return t;
    }
}

/// Primitive vector pushed by a random member word, so entries get large.
inline Vec4 big_primitive(Rng& rng, const tits::GroupSpec& g, long bound) {
    Vec4 v = primitive(rng, bound);
    return tits::random_word(g, rng, 8).apply(v);
}

inline std::vector<tits::GroupSpec> sample_groups() {
    using tits::GroupSpec;
    return {GroupSpec::circ(1),  GroupSpec::circ(6),  GroupSpec::circ(10), GroupSpec::circ(15),
            GroupSpec::lev(1),   GroupSpec::lev(2),   GroupSpec::lev(6),   GroupSpec::lev(10),
            GroupSpec::lev(15),  GroupSpec::pq(3, 2), GroupSpec::pq(5, 2), GroupSpec::pq(3, 3),
            GroupSpec::pq(5, 3), GroupSpec::pq(3, 5), GroupSpec::pq(5, 5)};
}

}  // namespace gen
