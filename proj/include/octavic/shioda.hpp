#ifndef OCTAVIC_SHIODA_HPP
#define OCTAVIC_SHIODA_HPP

#include <array>
#include <string>

#include "octavic/binary_form.hpp"
#include "octavic/weighted_point.hpp"

namespace octavic {

/// The transvectant covariants of a binary octavic:
///   g=(f,f)^4  k=(f,f)^6  h=(k,k)^2  m=(f,k)^4
///   n=(f,h)^4  p=(g,k)^4  q=(g,h)^4
struct CovariantSet {
    BinaryForm g, k, h, m, n, p, q;
};

/// Integer-normalized invariants J2..J10 plus the discriminant J14.
/// For integer-coefficient input J2..J10 are integers; J14 keeps the
/// Res(f_X,f_Y)/8^8 normalization (recorded in output metadata).
struct InvariantTuple {
    Rat J2, J3, J4, J5, J6, J7, J8, J9, J10, J14;

    std::array<Rat, 7> point_coords() const { return {J2, J3, J4, J5, J6, J7, J8}; }
    std::string to_json() const;
    static InvariantTuple from_json(const std::string& text);
};

CovariantSet covariants(const BinaryForm& f);

InvariantTuple shioda_invariants(const BinaryForm& f);

/// [J2:...:J8] with weights (2,...,8). Throws math_domain_error when the
/// discriminant vanishes (singular curve) or the tuple is identically zero.
WeightedPoint moduli_point(const BinaryForm& f);

}  // namespace octavic

#endif
