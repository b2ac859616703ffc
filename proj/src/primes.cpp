#include "ryserlab/primes.hpp"

#include <algorithm>

namespace ryserlab::primes {

Sieve::Sieve(uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
    composite_[0] = true;
    if (limit >= 1) composite_[1] = true;
    for (uint64_t i = 2; i * i <= limit; i++) {
        if (composite_[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
    }
    for (uint64_t i = 2; i <= limit; i++)
        if (!composite_[i]) primes_.push_back(i);
}

bool Sieve::is_prime(uint64_t n) const {
    if (n <= limit_) return n >= 2 && !composite_[n];
    if (n > limit_ * limit_)
        throw PreconditionViolated("primality query beyond sieve range");
    for (uint64_t p : primes_) {
        if (p * p > n) break;
        if (n % p == 0) return false;
    }
    return true;
}

const Sieve& default_sieve() {
    static const Sieve sieve(1ULL << 22);
    return sieve;
}

bool is_prime(uint64_t n) { return default_sieve().is_prime(n); }

PrimePowerFact is_prime_power(uint64_t n) {
    PrimePowerFact fact;
    fact.n = n;
    if (n < 2) return fact;
    const Sieve& sieve = default_sieve();
    uint64_t base = 0;
    for (uint64_t p : sieve.primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            base = p;
            break;
        }
    }
    if (base == 0) {
        if (n > sieve.limit() * sieve.limit())
            throw PreconditionViolated("prime power query beyond sieve range");
        fact.p = n;  // no factor up to sqrt(n): n is prime
        fact.k = 1;
        fact.is_prime_power = true;
        return fact;
    }
    uint64_t m = n;
    int k = 0;
    while (m % base == 0) {
        m /= base;
        k++;
    }
    if (m == 1) {
        fact.p = base;
        fact.k = k;
        fact.is_prime_power = true;
    }
    return fact;
}

ChainDecomposition validate_chain(const std::vector<long long>& ps,
                                  bool primes_only) {
    if (ps.empty())
        throw ChainConditionViolated(0, "chain must have at least one entry");
    long long sum = 0;
    for (size_t i = 0; i < ps.size(); i++) {
        long long p = ps[i];
        if (p < 2 || !is_prime_power((uint64_t)p).is_prime_power)
            throw ChainConditionViolated((int)i + 1,
                                         std::to_string(p) + " is not a prime power");
        if (primes_only && !is_prime((uint64_t)p))
            throw ChainConditionViolated((int)i + 1,
                                         std::to_string(p) + " is not prime");
        if (i > 0 && p < sum + 1)
            throw ChainConditionViolated(
                (int)i + 1, std::to_string(p) + " < 1 + sum of earlier entries (" +
                                std::to_string(sum + 1) + ")");
        sum += p;
    }
    ChainDecomposition chain;
    chain.primes = ps;
    chain.r = sum + 1;
    chain.d = (int)ps.size() - 1;
    return chain;
}

namespace {

bool chain_entry_ok(long long p, bool allow_prime_powers) {
    if (allow_prime_powers) return is_prime_power((uint64_t)p).is_prime_power;
    return is_prime((uint64_t)p);
}

// Minimal total of `parts` further entries when the prefix sums to `s`:
// each next entry must be at least s+1.
long long min_tail_total(long long s, int parts) {
    long long total = 0;
    for (int i = 0; i < parts; i++) {
        long long next = s + 1;
        total += next;
        s += next;
    }
    return total;
}

bool find_chain_rec(long long remaining, int parts, long long prefix_sum,
                    bool allow_prime_powers, std::vector<long long>& acc) {
    if (parts == 1) {
        if (remaining >= std::max(prefix_sum + 1, 2LL) &&
            chain_entry_ok(remaining, allow_prime_powers)) {
            acc.push_back(remaining);
            return true;
        }
        return false;
    }
    long long lo = acc.empty() ? 2 : prefix_sum + 1;
    for (long long p = lo; p <= remaining; p++) {
        if (min_tail_total(prefix_sum + p, parts - 1) > remaining - p) break;
        if (!chain_entry_ok(p, allow_prime_powers)) continue;
        acc.push_back(p);
        if (find_chain_rec(remaining - p, parts - 1, prefix_sum + p,
                           allow_prime_powers, acc))
            return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::optional<ChainDecomposition> find_chain(long long r, int k,
                                             bool allow_prime_powers) {
    if (r < 3 || k < 1) throw PreconditionViolated("find_chain needs r >= 3, k >= 1");
    std::vector<long long> acc;
    if (!find_chain_rec(r - 1, k, 0, allow_prime_powers, acc))
        return std::nullopt;
    return validate_chain(acc, !allow_prime_powers);
}

GoodIntegerCensus good_census(long long t) {
    if (t % 2 == 0 || t < 5)
        throw PreconditionViolated("good_census needs odd t >= 5");
    const Sieve& sieve = default_sieve();
    GoodIntegerCensus c;
    c.t = t;

    // t odd, so t/4, t/2 and 3t/4 are never integers and the half-open
    // interval choices below are unambiguous.
    long long u_lo = t / 4 + 1;        // least integer > t/4
    long long u_hi = (t - 1) / 2;      // greatest integer < t/2
    long long p3_lo = (t + 1) / 2;     // least integer > t/2
    long long p3_hi = (3 * t) / 4;     // greatest integer <= 3t/4

    auto sum_of_two_primes = [&](long long u) {
        for (long long a = 2; 2 * a <= u; a++)
            if (sieve.is_prime(a) && sieve.is_prime(u - a)) return true;
        return false;
    };
    auto least_distinct_split = [&](long long u) -> long long {
        for (long long a = 2; 2 * a < u; a++)
            if (sieve.is_prime(a) && sieve.is_prime(u - a)) return a;
        return 0;
    };

    for (long long u = u_lo; u <= u_hi; u++) {
        if (!sum_of_two_primes(u)) c.z++;
        if (u % 2 == 0 && sieve.is_prime(u / 2)) c.y++;
    }
    for (long long p3 = p3_lo; p3 <= p3_hi; p3++) {
        if (!sieve.is_prime(p3)) continue;
        c.w++;
        long long u = t - p3;
        long long p1 = least_distinct_split(u);
        if (p1 == 0) continue;
        c.good.push_back(u);
        if (!c.witness) c.witness = {{p1, u - p1, p3}};
    }
    std::sort(c.good.begin(), c.good.end());
    return c;
}

std::optional<ChainDecomposition> decompose_even_r(long long r) {
    if (r % 2 != 0 || r < 6)
        throw PreconditionViolated("decompose_even_r needs even r >= 6");
    GoodIntegerCensus c = good_census(r - 1);
    if (!c.witness) return std::nullopt;
    auto [p1, p2, p3] = *c.witness;
    return validate_chain({p1, p2, p3}, /*primes_only=*/true);
}

std::string census_row(const GoodIntegerCensus& c) {
    std::string row = std::to_string(c.t) + " " + std::to_string(c.w) + " " +
                      std::to_string(c.y) + " " + std::to_string(c.z) + " " +
                      std::to_string((long long)c.good.size()) + " ";
    if (c.witness) {
        auto [p1, p2, p3] = *c.witness;
        row += "(" + std::to_string(p1) + "," + std::to_string(p2) + "," +
               std::to_string(p3) + ")";
    } else {
        row += "-";
    }
    return row;
}

}  // namespace ryserlab::primes
