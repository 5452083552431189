#pragma once

#include <numeric>

#include "skein/errors.hpp"

namespace skein {

// The root of unity data: A = exp(2*pi*i*kprime/N) of odd order N >= 3,
// k = 2*kprime and q = A^2 of multiplicative order N.
struct RootData {
    long N = 3;
    long kprime = 1;

    RootData() = default;
    RootData(long N_, long kprime_) : N(N_), kprime(kprime_) {
        if (N < 3 || N % 2 == 0) throw inadmissible_error("N must be odd and >= 3");
        if (kprime < 1 || kprime >= N || std::gcd(kprime, N) != 1)
            throw inadmissible_error("kprime must lie in 1..N-1 and be coprime to N");
    }

    long k() const { return 2 * kprime; }

    bool operator==(const RootData& o) const { return N == o.N && kprime == o.kprime; }
};

} // namespace skein
