#ifndef OCTAVIC_BINARY_FORM_HPP
#define OCTAVIC_BINARY_FORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "octavic/numeric.hpp"

namespace octavic {

/// Homogeneous binary form f(X,Y) = sum_{i=0}^{d} c[i] X^i Y^(d-i)
/// with exact rational coefficients.
class BinaryForm {
public:
    BinaryForm() : degree_(0), coeffs_(1, Rat(0)) {}

    BinaryForm(int degree, std::vector<Rat> coeffs);

    int degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    bool is_zero() const;
    bool operator==(const BinaryForm& o) const = default;

    /// Single coefficient of a degree-0 form (full-level transvectants).
    const Rat& scalar_value() const;

    std::string to_string() const;

private:
    int degree_;
    std::vector<Rat> coeffs_;
};

/// 2x2 coordinate-change matrix [[a,b],[c,d]].
struct Matrix2 {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
};

BinaryForm make_form(int degree, const std::vector<Rat>& coeffs);

/// Degree-8 homogenization of y^2 = poly(x), poly of degree 7 or 8.
/// coeffs[i] is the coefficient of x^i. A degree-7 polynomial gets a_8 = 0
/// (branch point at infinity).
BinaryForm from_hyperelliptic(const std::vector<Rat>& poly_coeffs);

BinaryForm derivative_x(const BinaryForm& f);
BinaryForm derivative_y(const BinaryForm& f);

BinaryForm add(const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const BinaryForm& f, const Rat& s);
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

/// Level-r transvectant
///   (f,g)^r = (m-r)!(n-r)!/(m! n!) * sum_k (-1)^k C(r,k)
///             d^r f/dX^(r-k) dY^k  *  d^r g/dX^k dY^(r-k)
/// of degree deg f + deg g - 2r.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

/// f^M(X,Y) = f(aX+bY, cX+dY), expanded exactly. M must be invertible.
BinaryForm gl2_action(const BinaryForm& f, const Matrix2& M);

/// Resultant of two binary forms taken at their declared degrees
/// (leading zeros allowed; roots at infinity are handled projectively).
Rat form_resultant(const BinaryForm& p, const BinaryForm& q);

/// Discriminant normalization used throughout: Res(df/dX, df/dY) / 8^8.
/// Zero iff the octavic has a repeated projective root.
Rat discriminant(const BinaryForm& f);

/// Deterministic pseudo-random form, integer coefficients uniform in
/// [-bound, bound], re-drawn if identically zero.
BinaryForm random_form(int degree, int bound, std::uint64_t seed);

/// JSON array of "p/q" strings, index i = coefficient of X^i Y^(d-i).
std::string form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const std::string& text);

}  // namespace octavic

#endif
