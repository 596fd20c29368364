#pragma once

#include "tits/intlinalg.hpp"

#include <vector>

namespace tits {

/// Class in 𝓜(r) = 𝓝(r)/±1; (a,b) is the lexicographic minimum of the orbit.
struct ResidueClassM {
    long r = 1, a = 0, b = 0;
    auto operator<=>(const ResidueClassM&) const = default;
};

/// Class in 𝓞(n) = 𝓝(n)/ℤₙ^×; (a,b) is the lexicographic minimum of the orbit.
struct ResidueClassO {
    long n = 1, a = 0, b = 0;
    auto operator<=>(const ResidueClassO&) const = default;
};

long t_divisor(const Vec4& v, long t);
bool is_long(const Vec4& v, long p);

ResidueClassM class_M(const Int& a, const Int& b, long r);
ResidueClassO class_O(const Int& a, const Int& b, long n);

std::vector<long> divisors(long t);
std::vector<long> prime_factors(long n);
long euler_phi(long n);
/// n²∏(1−ℓ⁻²) over primes ℓ | n; equals |𝓝(n)| for n ≥ 1.
Int jordan2(long n);
Int nu(long n);
Int nu_tilde(long n);
Int phi_tilde(long n);
Int psi(long t);
long mu(long t);

std::vector<std::pair<long, long>> enumerate_N(long n);
std::vector<ResidueClassM> enumerate_M(long n);
std::vector<ResidueClassO> enumerate_O(long n);

}  // namespace tits
