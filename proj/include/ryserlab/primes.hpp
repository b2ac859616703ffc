#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryserlab/errors.hpp"

namespace ryserlab::primes {

// Sieve of Eratosthenes, built once and immutable. Queries beyond the limit
// fall back to trial division by sieved primes (valid up to limit^2).
class Sieve {
public:
    explicit Sieve(uint64_t limit);

    uint64_t limit() const { return limit_; }
    bool is_prime(uint64_t n) const;
    const std::vector<uint64_t>& primes() const { return primes_; }

private:
    uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<uint64_t> primes_;
};

// Shared default sieve, limit 2^22.
const Sieve& default_sieve();

bool is_prime(uint64_t n);

struct PrimePowerFact {
    uint64_t n = 0;
    uint64_t p = 0;  // base, 0 when not a prime power
    int k = 0;       // exponent, 0 when not a prime power
    bool is_prime_power = false;
};

PrimePowerFact is_prime_power(uint64_t n);

// A sequence (p_1,...,p_k) of prime powers with p_i >= 1 + sum_{j<i} p_j for
// i >= 2. Builds an r-partite construction with r = 1 + sum p_i and a cover
// lower bound of r - k.
struct ChainDecomposition {
    std::vector<long long> primes;
    long long r = 0;
    int d = 0;  // k - 1

    long long guarantee() const { return r - (long long)primes.size(); }

    friend bool operator==(const ChainDecomposition&,
                           const ChainDecomposition&) = default;
};

// Validates the growth and prime-power conditions; throws
// ChainConditionViolated naming the failing 1-based index.
ChainDecomposition validate_chain(const std::vector<long long>& ps,
                                  bool primes_only = false);

// Lexicographically least valid chain of length k summing to r-1, or nullopt.
std::optional<ChainDecomposition> find_chain(long long r, int k,
                                             bool allow_prime_powers);

// Exact finite census of the decomposition argument at odd t:
//   w     primes p3 in (t/2, 3t/4]
//   z     integers in [t/4, t/2) that are not a sum of two primes
//   y     integers in [t/4, t/2) of the form 2p, p prime
//   good  the integers t - p3 in [t/4, t/2) that split as p1 + p2, p1 < p2
// witness is one full triple (p1, p2, p3) with p3 >= 1 + p1 + p2, smallest
// p3 first and then smallest p1.
struct GoodIntegerCensus {
    long long t = 0;
    long long w = 0;
    long long z = 0;
    long long y = 0;
    std::vector<long long> good;
    std::optional<std::array<long long, 3>> witness;
};

GoodIntegerCensus good_census(long long t);  // t odd, t >= 5

// Chain (p1,p2,p3) for even r >= 6 via good_census(r-1); nullopt if the
// census has no witness.
std::optional<ChainDecomposition> decompose_even_r(long long r);

// One line of the batch census report: t w y z |good| witness.
std::string census_row(const GoodIntegerCensus& c);

}  // namespace ryserlab::primes
