#include "tits/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tits {

long t_divisor(const Vec4& v, long t) {
    if (!is_primitive(v)) throw DomainError("t_divisor: non-primitive vector " + to_string(v));
    Int g = gcd_many({v[0], v[2], Int(t)});
    return g.get_si();
}

bool is_long(const Vec4& v, long p) { return t_divisor(v, p) == p; }

ResidueClassM class_M(const Int& a0, const Int& b0, long r) {
    if (r < 1) throw DomainError("class_M: modulus < 1");
    long a = mod_long(a0, r), b = mod_long(b0, r);
    if (std::gcd(std::gcd(a, b), r) != 1) throw DomainError("class_M: torsion pair");
    std::pair<long, long> x{a, b}, y{(r - a) % r, (r - b) % r};
    auto m = std::min(x, y);
    return {r, m.first, m.second};
}

ResidueClassO class_O(const Int& a0, const Int& b0, long n) {
    if (n < 1) throw DomainError("class_O: modulus < 1");
    long a = mod_long(a0, n), b = mod_long(b0, n);
    if (std::gcd(std::gcd(a, b), n) != 1) throw DomainError("class_O: torsion pair");
    std::pair<long, long> best{a, b};
    for (long u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        best = std::min(best, std::pair<long, long>{u * a % n, u * b % n});
    }
    return {n, best.first, best.second};
}

std::vector<long> divisors(long t) {
    if (t < 1) throw DomainError("divisors: t < 1");
    std::vector<long> d;
    for (long r = 1; r <= t; ++r)
        if (t % r == 0) d.push_back(r);
    return d;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> f;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

long euler_phi(long n) {
    long r = n;
    for (long l : prime_factors(n)) r = r / l * (l - 1);
    return r;
}

Int jordan2(long n) {
    if (n < 1) throw DomainError("jordan2: n < 1");
    Int r = Int(n) * n;
    for (long l : prime_factors(n)) r = r / (l * l) * (l * l - 1);
    return r;
}

Int nu(long n) {
    if (n <= 2) return n == 1 ? 1 : 3;
    return jordan2(n) / 2;
}

Int nu_tilde(long n) {
    if (n <= 2) return n == 1 ? 1 : 3;
    return jordan2(n) / euler_phi(n);
}

Int phi_tilde(long n) {
    if (n <= 2) return 1;
    return Int(euler_phi(n) / 2);
}

Int psi(long t) {
    Int s = 0;
    for (long r : divisors(t)) s += nu(r);
    return s;
}

long mu(long t) { return static_cast<long>(divisors(t).size()); }

std::vector<std::pair<long, long>> enumerate_N(long n) {
    if (n < 1) throw DomainError("enumerate_N: n < 1");
    std::vector<std::pair<long, long>> out;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            if (std::gcd(std::gcd(a, b), n) == 1) out.emplace_back(a, b);
    return out;
}

std::vector<ResidueClassM> enumerate_M(long n) {
    std::set<ResidueClassM> s;
    for (auto [a, b] : enumerate_N(n)) s.insert(class_M(a, b, n));
    return {s.begin(), s.end()};
}

std::vector<ResidueClassO> enumerate_O(long n) {
    std::set<ResidueClassO> s;
    for (auto [a, b] : enumerate_N(n)) s.insert(class_O(a, b, n));
    return {s.begin(), s.end()};
}

}  // namespace tits
