#include "octavic/exact_linear.hpp"

#include <algorithm>

namespace octavic {

ExactSolution solve_exact_linear(const std::vector<std::vector<Rat>>& A_in,
                                 const std::vector<Rat>& b_in) {
    const size_t m = A_in.size();
    if (m == 0) throw input_error("empty system");
    const size_t n = A_in[0].size();
    if (m < n) throw input_error("system needs at least as many rows as columns");
    if (b_in.size() != m) throw input_error("rhs length mismatch");

    // integerize rows (row scaling preserves the solution set), augmented rhs
    std::vector<std::vector<Int>> A(m, std::vector<Int>(n + 1));
    std::vector<size_t> orig_row(m);
    for (size_t i = 0; i < m; ++i) {
        if (A_in[i].size() != n) throw input_error("ragged matrix");
        Int l(1);
        for (const auto& q : A_in[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b_in[i].get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) {
            Rat v = A_in[i][j] * l;
            A[i][j] = v.get_num();
        }
        Rat v = b_in[i] * l;
        A[i][n] = v.get_num();
        orig_row[i] = i;
    }

    // fraction-free Bareiss elimination with column skips
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    Int prev(1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = r;
        while (piv < m && A[piv][c] == 0) ++piv;
        if (piv == m) continue;  // free column
        if (piv != r) {
            std::swap(A[piv], A[r]);
            std::swap(orig_row[piv], orig_row[r]);
        }
        for (size_t i = r + 1; i < m; ++i) {
            for (size_t j = c + 1; j <= n; ++j) {
                Int t = A[i][j] * A[r][c] - A[i][c] * A[r][j];
                mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][c] = 0;
        }
        prev = A[r][c];
        pivots.emplace_back(r, c);
        ++r;
    }

    // rows below the rank must have zero rhs
    for (size_t i = r; i < m; ++i) {
        if (A[i][n] != 0)
            throw validation_error("inconsistent linear system: residual in row " +
                                   std::to_string(orig_row[i]));
    }

    // back substitution; free variables fixed at zero
    std::vector<Rat> x(n, Rat(0));
    for (size_t k = pivots.size(); k-- > 0;) {
        auto [pr, pc] = pivots[k];
        Rat acc(A[pr][n]);
        for (size_t j = pc + 1; j < n; ++j) {
            if (A[pr][j] != 0 && x[j] != 0) acc -= Rat(A[pr][j]) * x[j];
        }
        acc /= Rat(A[pr][pc]);
        x[pc] = acc;
    }
    return ExactSolution{std::move(x), pivots.size() == n};
}

namespace modp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t nth_prime62(int k) {
    std::uint64_t c = (1ULL << 62) - 1;
    int found = 0;
    for (;; c -= 2) {
        if (is_prime(c)) {
            if (found == k) return c;
            ++found;
        }
    }
}

std::uint64_t reduce(const Int& n, std::uint64_t p) {
    Int r = n % Int(static_cast<unsigned long>(p));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    return r.get_ui();
}

}  // namespace modp

bool rational_reconstruct(const Int& a_in, const Int& m, Rat& out) {
    Int a = a_in % m;
    if (a < 0) a += m;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0) return false;
    Int den = abs(s1);
    if (den > bound) return false;
    Int num = (s1 < 0) ? Int(-r1) : r1;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(num == 0 && den == 1)) {
        if (num == 0) { out = Rat(0); return true; }
        return false;
    }
    out = Rat(num, den);
    out.canonicalize();
    return true;
}

namespace {

// Gaussian elimination mod p on the rows [0, block); remaining rows are
// verified by substitution. Returns true and fills x when the system has
// full column rank and every row is consistent.
bool gauss_modp(std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b,
                std::uint64_t p, std::vector<std::uint64_t>& x, bool& rank_deficient) {
    const size_t m = A.size(), n = A[0].size();
    rank_deficient = false;
    size_t r = 0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = r;
        while (piv < m && A[piv][c] == 0) ++piv;
        if (piv == m) { rank_deficient = true; return false; }
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        const std::uint64_t ipiv = modp::inv(A[r][c], p);
        for (size_t j = c; j < n; ++j) A[r][j] = modp::mulmod(A[r][j], ipiv, p);
        b[r] = modp::mulmod(b[r], ipiv, p);
        for (size_t i = r + 1; i < m; ++i) {
            const std::uint64_t f = A[i][c];
            if (!f) continue;
            for (size_t j = c; j < n; ++j) {
                std::uint64_t t = modp::mulmod(f, A[r][j], p);
                A[i][j] = (A[i][j] + p - t) % p;
            }
            std::uint64_t t = modp::mulmod(f, b[r], p);
            b[i] = (b[i] + p - t) % p;
        }
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (b[i] != 0) return false;  // inconsistent mod p
    x.assign(n, 0);
    for (size_t i = n; i-- > 0;) {
        std::uint64_t acc = b[i];
        for (size_t j = i + 1; j < n; ++j) {
            std::uint64_t t = modp::mulmod(A[i][j], x[j], p);
            acc = (acc + p - t) % p;
        }
        x[i] = acc;  // pivot normalized to 1
    }
    return true;
}

bool solve_modp(const std::vector<std::vector<std::uint64_t>>& A_in,
                const std::vector<std::uint64_t>& b_in, std::uint64_t p,
                std::vector<std::uint64_t>& x, bool& rank_deficient) {
    const size_t m = A_in.size(), n = A_in[0].size();
    const size_t block = std::min(m, n + 32);
    rank_deficient = false;
    bool ok = gauss_modp({A_in.begin(), A_in.begin() + static_cast<std::ptrdiff_t>(block)},
                         {b_in.begin(), b_in.begin() + static_cast<std::ptrdiff_t>(block)}, p, x,
                         rank_deficient);
    if (!ok && rank_deficient && block < m) {
        // the leading block may be degenerate for this prime; retry with all rows
        ok = gauss_modp(A_in, b_in, p, x, rank_deficient);
    }
    if (!ok) return false;
    // substitute into the rows outside the elimination block
    for (size_t i = block; i < m; ++i) {
        std::uint64_t acc = 0;
        for (size_t j = 0; j < n; ++j)
            acc = (acc + modp::mulmod(A_in[i][j], x[j], p)) % p;
        if (acc != b_in[i]) return false;
    }
    return true;
}

}  // namespace

ExactSolution solve_multimodular(const std::vector<std::vector<Int>>& A,
                                 const std::vector<Int>& b) {
    const size_t m = A.size();
    if (m == 0) throw input_error("empty system");
    const size_t n = A[0].size();
    if (m < n) throw input_error("system needs at least as many rows as columns");

    std::vector<Int> crt_x(n, 0);
    Int modulus(1);
    int prime_idx = 0, bad_primes = 0, used = 0;
    std::vector<Rat> sol(n);

    while (true) {
        const std::uint64_t p = modp::nth_prime62(prime_idx++);
        std::vector<std::vector<std::uint64_t>> Ap(m, std::vector<std::uint64_t>(n));
        std::vector<std::uint64_t> bp(m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) Ap[i][j] = modp::reduce(A[i][j], p);
            bp[i] = modp::reduce(b[i], p);
        }
        std::vector<std::uint64_t> xp;
        bool rank_deficient = false;
        if (!solve_modp(Ap, bp, p, xp, rank_deficient)) {
            ++bad_primes;
            if (rank_deficient && bad_primes >= 3)
                throw validation_error("linear system is rank-deficient: sampling degeneracy, re-seed");
            if (bad_primes >= 8)
                throw validation_error("multimodular solve failed for 8 primes: inconsistent system");
            continue;
        }
        // CRT combine
        const Int P(static_cast<unsigned long>(p));
        if (modulus == 1) {
            for (size_t j = 0; j < n; ++j) crt_x[j] = Int(static_cast<unsigned long>(xp[j]));
            modulus = P;
        } else {
            Int minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
            for (size_t j = 0; j < n; ++j) {
                Int delta = (Int(static_cast<unsigned long>(xp[j])) - crt_x[j]) % P;
                if (delta < 0) delta += P;
                Int t = delta * minv % P;
                crt_x[j] += modulus * t;
            }
            modulus *= P;
        }
        ++used;
        if (used < 2) continue;
        bool ok = true;
        for (size_t j = 0; j < n; ++j) {
            if (!rational_reconstruct(crt_x[j], modulus, sol[j])) { ok = false; break; }
        }
        if (ok) {
            // certify with one fresh prime before returning
            const std::uint64_t q = modp::nth_prime62(prime_idx);
            bool certified = true;
            std::vector<std::uint64_t> xq(n);
            for (size_t j = 0; j < n && certified; ++j) {
                std::uint64_t den = modp::reduce(Int(sol[j].get_den()), q);
                if (den == 0) { certified = false; break; }
                xq[j] = modp::mulmod(modp::reduce(Int(sol[j].get_num()), q), modp::inv(den, q), q);
            }
            for (size_t i = 0; i < m && certified; ++i) {
                std::uint64_t acc = 0;
                for (size_t j = 0; j < n; ++j) {
                    std::uint64_t aij = modp::reduce(A[i][j], q);
                    acc = (acc + modp::mulmod(aij, xq[j], q)) % q;
                }
                if (acc != modp::reduce(b[i], q)) certified = false;
            }
            if (certified) return ExactSolution{std::move(sol), true};
        }
        if (used > 64) throw validation_error("rational reconstruction did not converge");
    }
}

}  // namespace octavic
