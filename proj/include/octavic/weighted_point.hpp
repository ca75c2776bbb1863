#ifndef OCTAVIC_WEIGHTED_POINT_HPP
#define OCTAVIC_WEIGHTED_POINT_HPP

#include <array>
#include <string>
#include <vector>

#include "octavic/numeric.hpp"

namespace octavic {

/// Point of the weighted projective space with weights (2,3,4,5,6,7,8),
/// coordinates ordered (J2,...,J8). lambda acts by J_i -> lambda^i J_i.
class WeightedPoint {
public:
    static constexpr int kNumCoords = 7;

    explicit WeightedPoint(std::array<Rat, kNumCoords> coords);

    /// Coordinate by weight, i in 2..8.
    const Rat& coord(int weight) const { return coords_[static_cast<size_t>(weight - 2)]; }
    const std::array<Rat, kNumCoords>& coords() const { return coords_; }

    bool is_integral() const;
    /// Weights i with J_i != 0.
    std::vector<int> support() const;

    bool operator==(const WeightedPoint& o) const = default;

    std::string to_json() const;
    static WeightedPoint from_json(const std::string& text);
    std::string to_string() const;

private:
    std::array<Rat, kNumCoords> coords_;
};

/// Exact value max |J_i|^(1/i) / divisor, kept as an integer witness pair so
/// that every comparison is exact; the decimal rendering is display-only.
class HeightValue {
public:
    HeightValue(int witness_index, Int witness_abs, Int divisor);

    int witness_index() const { return index_; }
    const Int& witness_abs() const { return abs_; }
    const Int& divisor() const { return divisor_; }

    /// Exact comparison with a rational bound: value <= h.
    bool leq(const Rat& h) const;
    /// Exact three-way comparison with another height.
    int compare(const HeightValue& o) const;
    bool operator==(const HeightValue& o) const { return compare(o) == 0; }
    bool operator<(const HeightValue& o) const { return compare(o) < 0; }

    /// Truncated decimal approximation for display.
    std::string to_decimal(int digits = 6) const;
    double to_double() const;

private:
    int index_;   // weight realizing the max, 2..8
    Int abs_;     // |J_index|
    Int divisor_; // product of removed primes (1 for minimal tuples)
};

/// Scale by the smallest positive rational lambda clearing all denominators.
WeightedPoint reduce_to_integral(const WeightedPoint& p);

/// Repeatedly divide out primes q with q^i | J_i for every i. Idempotent.
WeightedPoint minimal_tuple(const WeightedPoint& p);

/// Weighted moduli height of an integral point.
HeightValue height(const WeightedPoint& p);

/// |J_i| <= h^i for all i, in exact integer arithmetic.
bool height_leq(const WeightedPoint& p, const Rat& h);

/// Remove every real radical twist lambda = q^(a/g), g = gcd(support),
/// with lambda^i integral and dividing J_i. Signs are untouched; the unit
/// orbit is resolved by normalize_convention. Idempotent.
WeightedPoint absolute_minimal(const WeightedPoint& p);

/// Orbit of p under the unit twists lambda = exp(i*pi*s/g), s = 0..2g-1:
/// the sign patterns J_i -> (-1)^(s*i/g) J_i. Distinct members only,
/// in ascending order of s.
std::vector<WeightedPoint> unit_twists(const WeightedPoint& p);

struct NormalizedPoint {
    WeightedPoint point;
    bool tie_flagged;  // rules (i)+(ii) tied; graded-lex key decided
};

/// Conventional representative of the unit-twist orbit: most positive
/// coordinates, then greatest sum(i * J_i), then graded-lex largest.
NormalizedPoint normalize_convention(const WeightedPoint& p);

/// Full reduction chain to the canonical representative of the lambda orbit.
WeightedPoint canonical_form(const WeightedPoint& p);

bool is_twist(const WeightedPoint& p, const WeightedPoint& q);

/// Exact prime factorization of |n|, primes ascending. n must be nonzero.
std::vector<std::pair<Int, int>> factorize(const Int& n);

}  // namespace octavic

#endif
