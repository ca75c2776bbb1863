#ifndef OCTAVIC_EXACT_LINEAR_HPP
#define OCTAVIC_EXACT_LINEAR_HPP

#include <cstdint>
#include <vector>

#include "octavic/numeric.hpp"

namespace octavic {

struct ExactSolution {
    std::vector<Rat> x;
    bool unique;  // rank == number of columns
};

/// Exact solution of A x = b (m >= n) by fraction-free elimination.
/// Free variables (if any) are set to zero and `unique` is false.
/// Throws validation_error naming the offending row when inconsistent.
ExactSolution solve_exact_linear(const std::vector<std::vector<Rat>>& A,
                                 const std::vector<Rat>& b);

/// Multimodular solver for large integer systems: solves modulo 62-bit
/// primes, CRT-combines, and reconstructs rational coordinates. Full column
/// rank modulo any single prime certifies full column rank over Q, so the
/// uniqueness report is exact. Callers are expected to verify the returned
/// solution exactly against held-out data.
ExactSolution solve_multimodular(const std::vector<std::vector<Int>>& A,
                                 const std::vector<Int>& b);

/// Rational reconstruction of a (mod m): finds num/den with
/// |num|, den <= sqrt(m/2) and num = a*den (mod m). Returns false if none.
bool rational_reconstruct(const Int& a, const Int& m, Rat& out);

namespace modp {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
/// k-th 62-bit prime of a fixed descending sequence (deterministic).
std::uint64_t nth_prime62(int k);
/// n mod p as an unsigned residue.
std::uint64_t reduce(const Int& n, std::uint64_t p);
}  // namespace modp

}  // namespace octavic

#endif
