#ifndef OCTAVIC_NUMERIC_HPP
#define OCTAVIC_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace octavic {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy; the CLI maps these onto exit codes.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct math_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational are canonical
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Parses "p", "p/q" or a decimal like "1.5" into an exact rational.
Rat parse_rational(const std::string& s);

/// "p/q" if q != 1, else "p".
std::string rat_to_string(const Rat& q);

/// Decimal expansion with the given number of fractional digits, truncated toward zero.
std::string rat_to_decimal(const Rat& q, int digits);

// splitmix64: tiny deterministic generator, identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] via rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= lim);
        return lo + static_cast<std::int64_t>(r % n);
    }

private:
    std::uint64_t state_;
};

}  // namespace octavic

#endif
