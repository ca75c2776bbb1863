#include "octavic/weighted_point.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace octavic {

WeightedPoint::WeightedPoint(std::array<Rat, kNumCoords> coords) : coords_(std::move(coords)) {
    bool all_zero = true;
    for (const auto& c : coords_)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) throw input_error("the all-zero tuple is not a weighted projective point");
}

bool WeightedPoint::is_integral() const {
    for (const auto& c : coords_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<int> WeightedPoint::support() const {
    std::vector<int> s;
    for (int i = 0; i < kNumCoords; ++i)
        if (coords_[static_cast<size_t>(i)] != 0) s.push_back(i + 2);
    return s;
}

std::string WeightedPoint::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coords_) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p())
            arr.push_back(c.get_num().get_si());
        else
            arr.push_back(rat_to_string(c));
    }
    return arr.dump();
}

WeightedPoint WeightedPoint::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array() || arr.size() != kNumCoords)
        throw input_error("weighted point JSON must be an array of 7 entries");
    std::array<Rat, kNumCoords> c;
    for (size_t i = 0; i < kNumCoords; ++i) {
        if (arr[i].is_number_integer())
            c[i] = Rat(static_cast<long>(arr[i].get<std::int64_t>()));
        else
            c[i] = parse_rational(arr[i].get<std::string>());
    }
    return WeightedPoint(c);
}

std::string WeightedPoint::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < kNumCoords; ++i) {
        if (i) os << " : ";
        os << rat_to_string(coords_[static_cast<size_t>(i)]);
    }
    os << "]";
    return os.str();
}

HeightValue::HeightValue(int witness_index, Int witness_abs, Int divisor)
    : index_(witness_index), abs_(std::move(witness_abs)), divisor_(std::move(divisor)) {
    if (index_ < 2 || index_ > 8) throw input_error("height witness index out of range");
    if (abs_ < 0 || divisor_ < 1) throw input_error("bad height witness");
}

bool HeightValue::leq(const Rat& h) const {
    if (h <= 0) return false;
    // |J|^(1/i)/D <= h  <=>  |J| * den(h)^i <= (num(h) * D)^i
    const auto i = static_cast<unsigned long>(index_);
    return abs_ * int_pow(h.get_den(), i) <= int_pow(h.get_num() * divisor_, i);
}

int HeightValue::compare(const HeightValue& o) const {
    // |a|^(1/i)/Da vs |b|^(1/j)/Db  <=>  |a|^j Db^(ij) vs |b|^i Da^(ij)
    const auto i = static_cast<unsigned long>(index_);
    const auto j = static_cast<unsigned long>(o.index_);
    Int lhs = int_pow(abs_, j) * int_pow(o.divisor_, i * j);
    Int rhs = int_pow(o.abs_, i) * int_pow(divisor_, i * j);
    return cmp(lhs, rhs);
}

std::string HeightValue::to_decimal(int digits) const {
    // floor of 10^digits * |J|^(1/i) / D, via an integer i-th root
    const auto i = static_cast<unsigned long>(index_);
    Int scaled = abs_ * int_pow(Int(10) , static_cast<unsigned long>(digits) * i) /
                 int_pow(divisor_, i);
    Int root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), i);
    std::string d = root.get_str();
    if (static_cast<int>(d.size()) <= digits) d.insert(0, static_cast<size_t>(digits) + 1 - d.size(), '0');
    d.insert(d.size() - static_cast<size_t>(digits), ".");
    return d;
}

double HeightValue::to_double() const {
    return std::pow(abs_.get_d(), 1.0 / index_) / divisor_.get_d();
}

// --- factorization ----------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    // deterministic witness set for n < 3.3 * 10^24
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho_u64(std::uint64_t n) {
    if (!(n & 1)) return 2;
    SplitMix64 rng(n ^ 0xD1B54A32D192ED03ULL);
    for (;;) {
        std::uint64_t x = rng.next() % n, y = x;
        std::uint64_t c = rng.next() % n;
        if (c == 0) c = 1;
        std::uint64_t d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_rho_u64(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n_in) {
    Int n = abs(n_in);
    if (n == 0) throw input_error("factorize(0)");
    std::vector<std::pair<Int, int>> out;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { n /= static_cast<unsigned long>(p); ++e; }
        if (e) out.emplace_back(Int(static_cast<unsigned long>(p)), e);
    }
    // trial division with a 2-3 wheel
    std::uint64_t d = 17;
    static constexpr std::uint64_t kTrialLimit = 1000000;
    while (d <= kTrialLimit && n > 1) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) { n /= static_cast<unsigned long>(d); ++e; }
            out.emplace_back(Int(static_cast<unsigned long>(d)), e);
        }
        d += (d % 6 == 5) ? 2 : 4;
        Int dd = Int(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
        if (dd > n) break;
    }
    if (n > 1) {
        if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
            std::uint64_t v = 0;
            mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
            std::vector<std::uint64_t> ps;
            factor_u64(v, ps);
            std::sort(ps.begin(), ps.end());
            for (size_t i = 0; i < ps.size();) {
                size_t j = i;
                while (j < ps.size() && ps[j] == ps[i]) ++j;
                Int p;
                mpz_import(p.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &ps[i]);
                out.emplace_back(p, static_cast<int>(j - i));
                i = j;
            }
        } else {
            // beyond 64 bits: n survived trial division to 10^6, so rely on
            // GMP primality plus recursive rho with mpz arithmetic
            if (mpz_probab_prime_p(n.get_mpz_t(), 64)) {
                out.emplace_back(n, 1);
            } else {
                Int x = 2, y = 2, dgcd = 1, c = 1;
                while (dgcd == 1 || dgcd == n) {
                    x = (x * x + c) % n;
                    y = (y * y + c) % n;
                    y = (y * y + c) % n;
                    Int diff = abs(x - y);
                    if (diff == 0) { c += 1; x = 2; y = 2; dgcd = 1; continue; }
                    mpz_gcd(dgcd.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                }
                for (const auto& [p, e] : factorize(dgcd)) out.emplace_back(p, e);
                for (const auto& [p, e] : factorize(n / dgcd)) {
                    auto it = std::find_if(out.begin(), out.end(),
                                           [&](const auto& pe) { return pe.first == p; });
                    if (it != out.end()) it->second += e;
                    else out.emplace_back(p, e);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// --- reductions --------------------------------------------------------------

namespace {

int valuation(const Int& n, const Int& q) {
    if (n == 0) throw input_error("valuation of 0");
    Int m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) { m /= q; ++v; }
    return v;
}

std::array<Rat, WeightedPoint::kNumCoords> coords_copy(const WeightedPoint& p) {
    return p.coords();
}

int support_gcd(const WeightedPoint& p) {
    int g = 0;
    for (int w : p.support()) g = std::gcd(g, w);
    return g;
}

}  // namespace

WeightedPoint reduce_to_integral(const WeightedPoint& p) {
    // lambda = prod q^e_q with e_q = max_i ceil(v_q(den(J_i)) / i)
    Int den_lcm(1);
    for (const auto& c : p.coords()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    if (den_lcm == 1) return p;
    Rat lambda(1);
    for (const auto& [q, e_unused] : factorize(den_lcm)) {
        int e = 0;
        for (int w = 2; w <= 8; ++w) {
            const Rat& c = p.coord(w);
            if (c == 0) continue;
            int vd = valuation(c.get_den(), q);
            if (vd > 0) e = std::max(e, (vd + w - 1) / w);
        }
        for (int k = 0; k < e; ++k) lambda *= Rat(q);
    }
    auto c = coords_copy(p);
    for (int w = 2; w <= 8; ++w)
        c[static_cast<size_t>(w - 2)] *= rat_pow(lambda, static_cast<unsigned long>(w));
    return WeightedPoint(c);
}

WeightedPoint minimal_tuple(const WeightedPoint& p) {
    if (!p.is_integral()) throw input_error("minimal_tuple requires an integral point");
    Int g(0);
    for (const auto& c : p.coords())
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    auto c = coords_copy(p);
    if (g > 1) {
        for (const auto& [q, e_unused] : factorize(g)) {
            // largest t with q^(t*i) | J_i for all i in the support
            int t = -1;
            for (int w = 2; w <= 8; ++w) {
                const Rat& x = c[static_cast<size_t>(w - 2)];
                if (x == 0) continue;
                int tq = valuation(x.get_num(), q) / w;
                t = (t < 0) ? tq : std::min(t, tq);
            }
            if (t > 0) {
                for (int w = 2; w <= 8; ++w) {
                    Rat& x = c[static_cast<size_t>(w - 2)];
                    if (x != 0) x /= Rat(int_pow(q, static_cast<unsigned long>(t * w)));
                }
            }
        }
    }
    return WeightedPoint(c);
}

HeightValue height(const WeightedPoint& p) {
    if (!p.is_integral()) throw input_error("height requires an integral point");
    // witness of max |J_i|^(1/i)
    int best_w = 0;
    Int best_abs(0);
    for (int w = 2; w <= 8; ++w) {
        Int a = abs(p.coord(w).get_num());
        if (p.coord(w) == 0) continue;
        if (best_w == 0) { best_w = w; best_abs = a; continue; }
        // a^(1/w) > best^(1/best_w) <=> a^best_w > best^w
        if (int_pow(a, static_cast<unsigned long>(best_w)) >
            int_pow(best_abs, static_cast<unsigned long>(w))) {
            best_w = w;
            best_abs = a;
        }
    }
    // divisor: product (with multiplicity) of primes removable per Eq-style reduction
    Int divisor(1);
    Int g(0);
    for (const auto& c : p.coords())
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    if (g > 1) {
        for (const auto& [q, e_unused] : factorize(g)) {
            int t = -1;
            for (int w = 2; w <= 8; ++w) {
                if (p.coord(w) == 0) continue;
                int tq = valuation(p.coord(w).get_num(), q) / w;
                t = (t < 0) ? tq : std::min(t, tq);
            }
            for (int k = 0; k < t; ++k) divisor *= q;
        }
    }
    return HeightValue(best_w, best_abs, divisor);
}

bool height_leq(const WeightedPoint& p, const Rat& h) {
    if (!p.is_integral()) throw input_error("height_leq requires an integral point");
    if (h <= 0) return false;
    for (int w = 2; w <= 8; ++w) {
        const auto e = static_cast<unsigned long>(w);
        Int lhs = abs(p.coord(w).get_num()) * int_pow(h.get_den(), e);
        if (lhs > int_pow(h.get_num(), e)) return false;
    }
    return true;
}

WeightedPoint absolute_minimal(const WeightedPoint& p) {
    if (!p.is_integral()) throw input_error("absolute_minimal requires an integral point");
    const int g = support_gcd(p);
    Int coord_gcd(0);
    for (const auto& c : p.coords())
        if (c != 0) mpz_gcd(coord_gcd.get_mpz_t(), coord_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    auto c = coords_copy(p);
    if (coord_gcd > 1) {
        for (const auto& [q, e_unused] : factorize(coord_gcd)) {
            // a = min over support of floor(v_q(J_i) * g / i); reduce by lambda = q^(a/g)
            int a = -1;
            for (int w : p.support()) {
                int vq = valuation(p.coord(w).get_num(), q);
                int cand = vq * g / w;
                a = (a < 0) ? cand : std::min(a, cand);
            }
            if (a > 0) {
                for (int w : p.support()) {
                    c[static_cast<size_t>(w - 2)] /=
                        Rat(int_pow(q, static_cast<unsigned long>(a * w / g)));
                }
            }
        }
    }
    return WeightedPoint(c);
}

std::vector<WeightedPoint> unit_twists(const WeightedPoint& p) {
    if (!p.is_integral()) throw input_error("unit_twists requires an integral point");
    const int g = support_gcd(p);
    std::vector<WeightedPoint> orbit;
    for (int s = 0; s < 2 * g; ++s) {
        auto c = coords_copy(p);
        for (int w : p.support()) {
            if ((s * w / g) % 2) c[static_cast<size_t>(w - 2)] = -c[static_cast<size_t>(w - 2)];
        }
        WeightedPoint cand(c);
        if (std::find(orbit.begin(), orbit.end(), cand) == orbit.end())
            orbit.push_back(std::move(cand));
    }
    return orbit;
}

namespace {

int positive_count(const WeightedPoint& p) {
    int n = 0;
    for (const auto& c : p.coords())
        if (c > 0) ++n;
    return n;
}

Rat weighted_sum(const WeightedPoint& p) {
    Rat s(0);
    for (int w = 2; w <= 8; ++w) s += Rat(static_cast<long>(w)) * p.coord(w);
    return s;
}

// lexicographic comparison of coordinate tuples
int lex_compare(const WeightedPoint& a, const WeightedPoint& b) {
    for (int w = 2; w <= 8; ++w) {
        int c = cmp(a.coord(w), b.coord(w));
        if (c) return c;
    }
    return 0;
}

}  // namespace

NormalizedPoint normalize_convention(const WeightedPoint& p) {
    auto orbit = unit_twists(p);
    const WeightedPoint* best = &orbit[0];
    bool tie = false;
    for (size_t i = 1; i < orbit.size(); ++i) {
        const WeightedPoint& cand = orbit[i];
        int dpos = positive_count(cand) - positive_count(*best);
        if (dpos > 0) { best = &cand; tie = false; continue; }
        if (dpos < 0) continue;
        int dsum = cmp(weighted_sum(cand), weighted_sum(*best));
        if (dsum > 0) { best = &cand; tie = false; continue; }
        if (dsum < 0) continue;
        tie = true;
        if (lex_compare(cand, *best) > 0) best = &cand;
    }
    return NormalizedPoint{*best, tie};
}

WeightedPoint canonical_form(const WeightedPoint& p) {
    return normalize_convention(absolute_minimal(minimal_tuple(reduce_to_integral(p)))).point;
}

bool is_twist(const WeightedPoint& p, const WeightedPoint& q) {
    return canonical_form(p) == canonical_form(q);
}

}  // namespace octavic
