#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubefree/int128.hpp"

namespace cubefree {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

struct PrimePower {
    u64 p;
    u32 e;
};

// Full factorization by trial division over primes <= trial_bound, then
// cofactor analysis (1, prime, or prime squared). Returns nullopt when the
// cofactor cannot be resolved within that budget; never a wrong answer.
std::optional<std::vector<PrimePower>> full_factorize(u128 n, u64 trial_bound = 1000000);

}  // namespace cubefree
