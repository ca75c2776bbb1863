#ifndef OCTAVIC_RELATIONS_HPP
#define OCTAVIC_RELATIONS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octavic/numeric.hpp"
#include "octavic/weighted_point.hpp"

namespace octavic {

/// Monomial in J2..J8 as an exponent vector (e2,...,e8).
struct WeightedMonomial {
    std::array<int, 7> e{};

    int weighted_degree() const {
        int d = 0;
        for (int i = 0; i < 7; ++i) d += (i + 2) * e[static_cast<size_t>(i)];
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool operator==(const WeightedMonomial& o) const = default;
};

/// All exponent vectors with sum(weights[i] * e[i]) == d, in graded-lex
/// order: total degree descending, then lexicographically descending.
std::vector<std::vector<int>> weighted_monomials(int d, const std::vector<int>& weights);

/// Exact-coefficient polynomial in J2..J8, stored as an ordered term list.
struct RelationPoly {
    std::vector<std::pair<WeightedMonomial, Rat>> terms;
    int weighted_degree = 0;

    Rat evaluate(const std::array<Rat, 7>& J) const;
    bool empty() const { return terms.empty(); }
};

struct Provenance {
    std::uint64_t seed = 0;
    int samples = 0;
    std::string hash;        // content hash of the two coefficient maps
    std::string validation;  // short held-out validation report
};

/// The degree-5 monic syzygy F (weighted degree 40) together with the
/// discriminant expression P (weighted degree 14, J8-linear basis).
struct RelationSet {
    RelationPoly syzygy;
    RelationPoly disc_expr;
    Provenance provenance;

    bool initialized() const { return !syzygy.empty(); }
    /// SHA-256 of the canonical serialization of both coefficient maps.
    std::string content_hash() const;

    std::string to_json() const;
    static RelationSet from_json(const std::string& text);
    void save(const std::string& path) const;
    /// Loads and re-verifies the embedded content hash.
    static RelationSet load(const std::string& path);
};

struct DeriveOptions {
    int syzygy_samples = 0;   // 0: 2x unknowns + held_out
    int disc_samples = 0;     // 0: 2x unknowns + held_out
    int held_out = 200;
    int coeff_bound = 2;      // sampling bound for random octavics
    std::uint64_t seed = 42;
};

/// Reconstructs the monic syzygy by exact interpolation on random octavics.
/// The solve must be unique (full column rank certified modulo a prime) and
/// the result is validated with exact zero residues on held-out samples.
RelationPoly derive_syzygy(int samples, std::uint64_t seed, int coeff_bound = 2,
                           int held_out = 200, std::string* report = nullptr);

/// Reconstructs P with P(J2..J8) = J14 on invariant tuples, exact held-out
/// validation included.
RelationPoly derive_disc_expr(int samples, std::uint64_t seed, int coeff_bound = 2,
                              int held_out = 200, std::string* report = nullptr);

/// Both derivations plus provenance and content hash.
RelationSet derive_relations(const DeriveOptions& opt);

/// F(t) == 0, exactly. Throws validation_error if relations are absent.
bool syzygy_check(const RelationSet& rel, const WeightedPoint& t);

/// P(t) != 0, exactly. Throws validation_error if relations are absent.
bool disc_check(const RelationSet& rel, const WeightedPoint& t);

/// Number of unknowns of each interpolation problem (basis sizes).
int syzygy_unknown_count();
int disc_unknown_count();

}  // namespace octavic

#endif
