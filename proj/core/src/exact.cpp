#include "seaweed/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "seaweed/errors.hpp"

namespace seaweed {

std::size_t bareiss_rank(Matrix<Integer> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> bareiss_solve(Matrix<Integer> a, std::span<const Integer> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "bareiss_solve expects a square system");
    }
    Matrix<Integer> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && aug(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        aug.swap_rows(pivot, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                aug(i, j) = aug(k, k) * aug(i, j) - aug(i, k) * aug(k, j);
                mpz_divexact(aug(i, j).get_mpz_t(), aug(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            aug(i, k) = 0;
        }
        prev = aug(k, k);
    }
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(aug(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(aug(ii, j)) * x[j];
        acc /= Rational(aug(ii, ii));
        acc.canonicalize();
        x[ii] = acc;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Modular characteristic polynomial

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& v, u64 p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

// Hessenberg reduction followed by the usual three-term recurrence; O(D^3).
std::vector<u64> charpoly_mod(const Matrix<Integer>& m, u64 p) {
    const std::size_t n = m.rows();
    Matrix<u64> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = reduce(m(i, j), p);

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h(pivot, j) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            h.swap_rows(pivot, j + 1);
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
        }
        const u64 inv = invmod(h(j + 1, j), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            const u64 u = mulmod(h(i, j), inv, p);
            if (u == 0) continue;
            for (std::size_t k = 0; k < n; ++k) h(i, k) = submod(h(i, k), mulmod(u, h(j + 1, k), p), p);
            for (std::size_t k = 0; k < n; ++k) h(k, j + 1) = addmod(h(k, j + 1), mulmod(u, h(k, i), p), p);
        }
    }

    // polys[k] = charpoly of the leading k x k block, low degree first.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t c = k - 1;
        std::vector<u64> next(k + 1, 0);
        const auto& prev = polys[k - 1];
        for (std::size_t t = 0; t < prev.size(); ++t) {
            next[t + 1] = addmod(next[t + 1], prev[t], p);
            next[t] = submod(next[t], mulmod(h(c, c), prev[t], p), p);
        }
        u64 chain = 1;
        for (std::size_t i = c; i-- > 0;) {
            chain = mulmod(chain, h(i + 1, i), p);
            if (chain == 0) break;
            const u64 coeff = mulmod(h(i, c), chain, p);
            if (coeff == 0) continue;
            for (std::size_t t = 0; t < polys[i].size(); ++t)
                next[t] = submod(next[t], mulmod(coeff, polys[i][t], p), p);
        }
        polys[k] = std::move(next);
    }
    return polys[n];
}

std::vector<u64> primes_below_2_62(std::size_t count) {
    std::vector<u64> out;
    u64 candidate = (u64{1} << 62) - 1;
    while (out.size() < count) {
        if (is_prime_u64(candidate)) out.push_back(candidate);
        candidate -= 2;
    }
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<Integer> charpoly(const Matrix<Integer>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::LengthMismatch, "charpoly expects a square matrix");
    if (n == 0) return {Integer(1)};

    Integer max_entry = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer a = abs(m(i, j));
            if (a > max_entry) max_entry = a;
        }
    // |c_k| <= D!/(D-k)! * max^k <= (D * max)^D; need the modulus above twice that.
    Integer base = max_entry * static_cast<unsigned long>(n);
    const std::size_t bound_bits = mpz_sizeinbase(base.get_mpz_t(), 2) * n + 2;
    const std::size_t num_primes = bound_bits / 61 + 1;
    static const std::vector<u64> kPrimes = primes_below_2_62(64);
    std::vector<u64> primes = num_primes <= kPrimes.size() ? std::vector<u64>(kPrimes.begin(), kPrimes.begin() + num_primes)
                                                           : primes_below_2_62(num_primes);

    std::vector<Integer> coeffs(n + 1, 0);
    Integer modulus = 1;
    for (u64 p : primes) {
        const std::vector<u64> residues = charpoly_mod(m, p);
        const u64 modulus_mod_p = reduce(modulus, p);
        const u64 inv = invmod(modulus_mod_p, p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 current = reduce(coeffs[k], p);
            const u64 delta = mulmod(submod(residues[k], current, p), inv, p);
            coeffs[k] += modulus * Integer(static_cast<unsigned long>(delta));
        }
        modulus *= Integer(static_cast<unsigned long>(p));
    }
    const Integer half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half) c -= modulus;
    return coeffs;
}

std::vector<std::pair<long long, long long>> extract_scaled_integer_roots(std::vector<Integer>& poly,
                                                                          const Integer& scale,
                                                                          long long bound) {
    std::vector<std::pair<long long, long long>> roots;
    for (long long k = -bound; k <= bound; ++k) {
        const Integer mu = scale * Integer(static_cast<long>(k));
        long long mult = 0;
        while (poly.size() > 1) {
            // Synthetic division by (x - mu); remainder must vanish.
            const std::size_t deg = poly.size() - 1;
            std::vector<Integer> quotient(deg);
            Integer carry = poly[deg];
            for (std::size_t t = deg; t-- > 0;) {
                quotient[t] = carry;
                carry = poly[t] + carry * mu;
            }
            if (carry != 0) break;
            poly = std::move(quotient);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(k, mult);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Sparse elimination

void SparseLinearSystem::add_row(std::vector<Term> terms, Rational rhs) {
    for (const auto& t : terms) {
        if (t.var < 0 || t.var >= num_vars_) {
            throw Error(ErrorCode::InvalidArgument, "sparse row references variable out of range");
        }
    }
    rows_.push_back(Row{std::move(terms), std::move(rhs)});
}

SparseLinearSystem::Solution SparseLinearSystem::solve() const {
    struct Live {
        std::map<int, Rational> terms;
        Rational rhs;
        std::size_t origin;
    };
    std::vector<Live> live;
    live.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Live row{{}, rows_[i].rhs, i};
        for (const auto& t : rows_[i].terms) {
            row.terms[t.var] += t.coeff;
            if (row.terms[t.var] == 0) row.terms.erase(t.var);
        }
        live.push_back(std::move(row));
    }

    Solution sol;
    struct Pivot {
        int var;
        std::map<int, Rational> rest;  // coefficients of other variables, pivot normalised to 1
        Rational rhs;
    };
    std::vector<Pivot> pivots;
    std::vector<char> pinned(static_cast<std::size_t>(num_vars_), 0);
    std::vector<char> done(live.size(), 0);

    for (;;) {
        std::size_t best = live.size();
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (done[i]) continue;
            if (live[i].terms.empty()) {
                done[i] = 1;
                if (live[i].rhs != 0 && !sol.bad_row) sol.bad_row = live[i].origin;
                continue;
            }
            if (best == live.size() || live[i].terms.size() < live[best].terms.size()) best = i;
        }
        if (best == live.size()) break;
        done[best] = 1;
        Live& row = live[best];
        const int var = row.terms.begin()->first;
        const Rational lead = row.terms.begin()->second;
        Pivot pv{var, {}, row.rhs / lead};
        for (auto it = std::next(row.terms.begin()); it != row.terms.end(); ++it) pv.rest[it->first] = it->second / lead;

        for (std::size_t i = 0; i < live.size(); ++i) {
            if (done[i]) continue;
            auto hit = live[i].terms.find(var);
            if (hit == live[i].terms.end()) continue;
            const Rational factor = hit->second;
            live[i].terms.erase(hit);
            for (const auto& [v, c] : pv.rest) {
                Rational& slot = live[i].terms[v];
                slot -= factor * c;
                if (slot == 0) live[i].terms.erase(v);
            }
            live[i].rhs -= factor * pv.rhs;
        }
        pinned[static_cast<std::size_t>(var)] = 1;
        pivots.push_back(std::move(pv));
    }

    if (sol.bad_row) {
        sol.status = Status::Inconsistent;
        return sol;
    }
    for (int v = 0; v < num_vars_; ++v)
        if (!pinned[static_cast<std::size_t>(v)]) sol.free_vars.push_back(v);
    if (!sol.free_vars.empty()) {
        sol.status = Status::Underdetermined;
        return sol;
    }

    sol.values.assign(static_cast<std::size_t>(num_vars_), Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rational value = it->rhs;
        for (const auto& [v, c] : it->rest) value -= c * sol.values[static_cast<std::size_t>(v)];
        value.canonicalize();
        sol.values[static_cast<std::size_t>(it->var)] = value;
    }
    return sol;
}

}  // namespace seaweed
