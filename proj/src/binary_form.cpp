#include "octavic/binary_form.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace octavic {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) throw input_error("negative degree");
    if (coeffs_.size() != static_cast<size_t>(degree_) + 1)
        throw input_error("coefficient count " + std::to_string(coeffs_.size()) +
                          " does not match degree " + std::to_string(degree_));
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

const Rat& BinaryForm::scalar_value() const {
    if (degree_ != 0) throw math_domain_error("form of degree > 0 has no scalar value");
    return coeffs_[0];
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        int ydeg = degree_ - i;
        if (a != 1 || (i == 0 && ydeg == 0)) os << rat_to_string(a);
        if (i > 0) os << "X" << (i > 1 ? "^" + std::to_string(i) : "");
        if (ydeg > 0) os << "Y" << (ydeg > 1 ? "^" + std::to_string(ydeg) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm make_form(int degree, const std::vector<Rat>& coeffs) {
    return BinaryForm(degree, coeffs);
}

BinaryForm from_hyperelliptic(const std::vector<Rat>& poly_coeffs) {
    int deg = static_cast<int>(poly_coeffs.size()) - 1;
    while (deg >= 0 && poly_coeffs[static_cast<size_t>(deg)] == 0) --deg;
    if (deg != 7 && deg != 8)
        throw input_error("right-hand side must have degree 7 or 8 (genus 3), got degree " +
                          std::to_string(deg));
    std::vector<Rat> c(9, Rat(0));
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = poly_coeffs[static_cast<size_t>(i)];
    return BinaryForm(8, std::move(c));
}

BinaryForm derivative_x(const BinaryForm& f) {
    int d = f.degree();
    if (d == 0) return BinaryForm(0, {Rat(0)});
    std::vector<Rat> c(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) c[static_cast<size_t>(j)] = Rat(j + 1) * f.coeff(j + 1);
    return BinaryForm(d - 1, std::move(c));
}

BinaryForm derivative_y(const BinaryForm& f) {
    int d = f.degree();
    if (d == 0) return BinaryForm(0, {Rat(0)});
    std::vector<Rat> c(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) c[static_cast<size_t>(j)] = Rat(d - j) * f.coeff(j);
    return BinaryForm(d - 1, std::move(c));
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw input_error("degree mismatch in form addition");
    std::vector<Rat> c(f.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
    return BinaryForm(f.degree(), std::move(c));
}

BinaryForm scale(const BinaryForm& f, const Rat& s) {
    std::vector<Rat> c(f.coeffs());
    for (auto& x : c) x *= s;
    return BinaryForm(f.degree(), std::move(c));
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
    std::vector<Rat> c(static_cast<size_t>(f.degree() + g.degree()) + 1, Rat(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        for (int j = 0; j <= g.degree(); ++j) {
            if (g.coeff(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += f.coeff(i) * g.coeff(j);
        }
    }
    return BinaryForm(f.degree() + g.degree(), std::move(c));
}

namespace {

BinaryForm iterated_partial(const BinaryForm& f, int nx, int ny) {
    BinaryForm r = f;
    for (int i = 0; i < nx; ++i) r = derivative_x(r);
    for (int i = 0; i < ny; ++i) r = derivative_y(r);
    return r;
}

}  // namespace

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
    int n = f.degree(), m = g.degree();
    if (r < 0 || r > n || r > m)
        throw input_error("transvectant level " + std::to_string(r) +
                          " out of range for degrees " + std::to_string(n) + "," +
                          std::to_string(m));
    Rat pref(factorial(static_cast<unsigned long>(m - r)) *
                 factorial(static_cast<unsigned long>(n - r)),
             factorial(static_cast<unsigned long>(m)) *
                 factorial(static_cast<unsigned long>(n)));
    pref.canonicalize();
    int dout = n + m - 2 * r;
    std::vector<Rat> acc(static_cast<size_t>(dout) + 1, Rat(0));
    for (int k = 0; k <= r; ++k) {
        BinaryForm t = multiply(iterated_partial(f, r - k, k), iterated_partial(g, k, r - k));
        Rat sgn = Rat(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)));
        if (k % 2) sgn = -sgn;
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += sgn * t.coeffs()[i];
    }
    for (auto& c : acc) c *= pref;
    return BinaryForm(dout, std::move(acc));
}

BinaryForm gl2_action(const BinaryForm& f, const Matrix2& M) {
    if (M.det() == 0) throw input_error("coordinate change matrix is singular");
    int d = f.degree();
    // powers of (aX + bY) and (cX + dY)
    std::vector<BinaryForm> pu, pv;
    pu.reserve(static_cast<size_t>(d) + 1);
    pv.reserve(static_cast<size_t>(d) + 1);
    pu.emplace_back(0, std::vector<Rat>{Rat(1)});
    pv.emplace_back(0, std::vector<Rat>{Rat(1)});
    BinaryForm u(1, {M.b, M.a});  // aX + bY: coeff of X is index 1
    BinaryForm v(1, {M.d, M.c});
    for (int i = 1; i <= d; ++i) {
        pu.push_back(multiply(pu.back(), u));
        pv.push_back(multiply(pv.back(), v));
    }
    std::vector<Rat> acc(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i) == 0) continue;
        BinaryForm term = multiply(pu[static_cast<size_t>(i)], pv[static_cast<size_t>(d - i)]);
        for (size_t j = 0; j < acc.size(); ++j) acc[j] += f.coeff(i) * term.coeffs()[j];
    }
    return BinaryForm(d, std::move(acc));
}

namespace {

// Fraction-free Bareiss determinant.
Rat bareiss_det(std::vector<std::vector<Rat>> A) {
    const size_t n = A.size();
    if (n == 0) return Rat(1);
    int sign = 1;
    Rat prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && A[piv][k] == 0) ++piv;
            if (piv == n) return Rat(0);
            std::swap(A[k], A[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

}  // namespace

Rat form_resultant(const BinaryForm& p, const BinaryForm& q) {
    const int dp = p.degree(), dq = q.degree();
    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    // Sylvester matrix in the univariate view poly(x) = sum c[i] x^i.
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i)
            M[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = p.coeff(dp - i);
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i)
            M[static_cast<size_t>(dq + r)][static_cast<size_t>(r + i)] = q.coeff(dq - i);
    return bareiss_det(std::move(M));
}

Rat discriminant(const BinaryForm& f) {
    if (f.degree() != 8) throw input_error("discriminant requires a degree-8 form");
    if (f.is_zero()) throw input_error("discriminant of the zero form");
    Rat r = form_resultant(derivative_x(f), derivative_y(f));
    return r / Rat(int_pow(Int(8), 8));
}

BinaryForm random_form(int degree, int bound, std::uint64_t seed) {
    if (bound < 1) throw input_error("coefficient bound must be >= 1");
    SplitMix64 rng(seed);
    for (;;) {
        std::vector<Rat> c(static_cast<size_t>(degree) + 1);
        bool nonzero = false;
        for (auto& x : c) {
            std::int64_t v = rng.uniform(-bound, bound);
            x = Rat(static_cast<long>(v));
            if (v != 0) nonzero = true;
        }
        if (nonzero) return BinaryForm(degree, std::move(c));
    }
}

std::string form_to_json(const BinaryForm& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rat_to_string(c));
    return arr.dump();
}

BinaryForm form_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array() || arr.empty()) throw input_error("form JSON must be a non-empty array");
    std::vector<Rat> c;
    for (const auto& e : arr) c.push_back(parse_rational(e.get<std::string>()));
    return BinaryForm(static_cast<int>(c.size()) - 1, std::move(c));
}

}  // namespace octavic
