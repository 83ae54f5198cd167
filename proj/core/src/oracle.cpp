#include "seaweed/oracle.hpp"

#include <map>
#include <numeric>
#include <random>

#include "seaweed/errors.hpp"

namespace seaweed {

std::string BasisLabel::to_string() const {
    return cartan ? "h" + std::to_string(cartan_index) : root.to_string();
}

namespace {

IntMatrix zero(int n) { return IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)); }

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    const std::size_t n = x.rows();
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const long v = x(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += v * y(k, j);
        }
    return out;
}

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix a = mul(x, y);
    const IntMatrix b = mul(y, x);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

IntMatrix transpose(const IntMatrix& x) {
    IntMatrix t(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) t(j, i) = x(i, j);
    return t;
}

bool is_zero(const IntMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(i, j) != 0) return false;
    return true;
}

struct Ambient {
    int size = 0;
    std::vector<std::vector<int>> weight;  // orthogonal coordinates per position
    IntMatrix j;                           // invariant form (B/C only)
    IntMatrix j_inv;
};

Ambient make_ambient(const RootSystemSpec& spec) {
    const int n = spec.rank();
    const int coords = spec.ambient_coords();
    Ambient amb;
    auto unit = [&](int c, int sgn) {
        std::vector<int> w(static_cast<std::size_t>(coords), 0);
        if (c >= 0) w[static_cast<std::size_t>(c)] = sgn;
        return w;
    };
    switch (spec.family()) {
        case Family::A:
            amb.size = n + 1;
            for (int p = 0; p <= n; ++p) amb.weight.push_back(unit(p, 1));
            return amb;
        case Family::C:
            amb.size = 2 * n;
            for (int p = 0; p < n; ++p) amb.weight.push_back(unit(p, 1));
            for (int p = n; p < 2 * n; ++p) amb.weight.push_back(unit(2 * n - 1 - p, -1));
            amb.j = zero(amb.size);
            for (int p = 0; p < 2 * n; ++p)
                amb.j(static_cast<std::size_t>(p), static_cast<std::size_t>(2 * n - 1 - p)) = p < n ? 1 : -1;
            amb.j_inv = amb.j;
            for (int p = 0; p < 2 * n; ++p)
                amb.j_inv(static_cast<std::size_t>(p), static_cast<std::size_t>(2 * n - 1 - p)) *= -1;
            return amb;
        case Family::B:
            amb.size = 2 * n + 1;
            for (int p = 0; p < n; ++p) amb.weight.push_back(unit(p, 1));
            amb.weight.push_back(unit(-1, 0));
            for (int p = n + 1; p <= 2 * n; ++p) amb.weight.push_back(unit(2 * n - p, -1));
            amb.j = zero(amb.size);
            for (int p = 0; p <= 2 * n; ++p) amb.j(static_cast<std::size_t>(p), static_cast<std::size_t>(2 * n - p)) = 1;
            amb.j_inv = amb.j;
            return amb;
    }
    return amb;
}

bool in_algebra(const Ambient& amb, Family family, const IntMatrix& x) {
    if (family == Family::A) {
        long trace = 0;
        for (std::size_t i = 0; i < x.rows(); ++i) trace += x(i, i);
        return trace == 0;
    }
    IntMatrix lhs = mul(transpose(x), amb.j);
    const IntMatrix rhs = mul(amb.j, x);
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) lhs(i, j) += rhs(i, j);
    return is_zero(lhs);
}

// Root vector for the weight w_a - w_b realised by positions (a, b).
IntMatrix root_vector(const Ambient& amb, Family family, std::size_t a, std::size_t b) {
    IntMatrix y = zero(amb.size);
    y(a, b) = 1;
    if (family == Family::A) return y;
    IntMatrix x = mul(mul(amb.j_inv, transpose(y)), amb.j);
    long g = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            x(i, j) = y(i, j) - x(i, j);
            g = std::gcd(g, x(i, j));
        }
    if (g == 0) throw Error(ErrorCode::InternalClosureFailure, "root vector vanished");
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) /= g;
    return x;
}

std::vector<int> signed_coeffs(const Root& r) {
    std::vector<int> c = r.coeffs;
    if (r.sign == RootSign::Negative)
        for (int& v : c) v = -v;
    return c;
}

bool supported_in(const Root& r, const Seaweed& s, Side side) {
    for (int i : support(r))
        if (!s.in_side(side, i)) return false;
    return true;
}

// Clears denominators row by row; rank and solution sets are unchanged.
Matrix<Integer> integer_rows(const Matrix<Rational>& m, std::vector<Rational>* rhs = nullptr,
                             std::vector<Integer>* rhs_out = nullptr) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * l;
            out(i, j) = v.get_num();
        }
        if (rhs) {
            Rational v = (*rhs)[i] * l;
            rhs_out->push_back(v.get_num());
        }
    }
    return out;
}

}  // namespace

MatrixAlgebra realize(const Seaweed& s) {
    const auto& spec = s.spec();
    const int n = spec.rank();
    const Family family = spec.family();
    const Ambient amb = make_ambient(spec);

    std::map<std::vector<int>, Root> root_of_coords;
    for (const auto& r : positive_roots(spec)) {
        root_of_coords.emplace(to_orthogonal(spec, r), r);
        root_of_coords.emplace(to_orthogonal(spec, r.negated()), r.negated());
    }
    std::map<std::vector<int>, std::pair<std::size_t, std::size_t>> positions;
    for (std::size_t a = 0; a < static_cast<std::size_t>(amb.size); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(amb.size); ++b) {
            if (a == b) continue;
            std::vector<int> d(amb.weight[a].size());
            for (std::size_t c = 0; c < d.size(); ++c) d[c] = amb.weight[a][c] - amb.weight[b][c];
            auto it = root_of_coords.find(d);
            if (it != root_of_coords.end()) positions.emplace(signed_coeffs(it->second), std::pair{a, b});
        }

    MatrixAlgebra alg(s);
    alg.ambient_ = amb.size;
    for (int k = 0; k < n; ++k) {
        IntMatrix h = zero(amb.size);
        const auto p = static_cast<std::size_t>(k);
        h(p, p) = 1;
        const std::size_t q = family == Family::A ? p + 1 : static_cast<std::size_t>(amb.size) - 1 - p;
        h(q, q) = -1;
        alg.labels_.push_back({true, k + 1, {}});
        alg.matrices_.push_back(std::move(h));
    }
    auto add_root = [&](const Root& r) {
        const auto it = positions.find(signed_coeffs(r));
        if (it == positions.end()) throw Error(ErrorCode::InternalClosureFailure, "no matrix entry for root " + r.to_string());
        IntMatrix x = root_vector(amb, family, it->second.first, it->second.second);
        if (!in_algebra(amb, family, x))
            throw Error(ErrorCode::InternalClosureFailure, "root vector for " + r.to_string() + " is not in the algebra");
        alg.labels_.push_back({false, 0, r});
        alg.matrices_.push_back(std::move(x));
    };
    for (const auto& r : positive_roots(spec))
        if (supported_in(r, s, Side::Top)) add_root(r);
    for (const auto& r : positive_roots(spec))
        if (supported_in(r, s, Side::Bottom)) add_root(r.negated());

    const std::size_t dim = alg.labels_.size();
    std::map<std::vector<int>, std::size_t> by_weight;
    for (std::size_t i = n; i < dim; ++i) by_weight.emplace(signed_coeffs(alg.labels_[i].root), i);
    auto weight_of = [&](std::size_t i) {
        return alg.labels_[i].cartan ? std::vector<int>(static_cast<std::size_t>(n), 0) : signed_coeffs(alg.labels_[i].root);
    };

    alg.table_.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const IntMatrix z = commutator(alg.matrices_[i], alg.matrices_[j]);
            auto& terms = alg.table_[i * dim + j];
            if (is_zero(z)) continue;
            auto w = weight_of(i);
            const auto wj = weight_of(j);
            bool zero_weight = true;
            for (std::size_t c = 0; c < w.size(); ++c) {
                w[c] += wj[c];
                zero_weight = zero_weight && w[c] == 0;
            }
            auto fail = [&] {
                throw Error(ErrorCode::InternalClosureFailure, "[" + alg.labels_[i].to_string() + ", " +
                                                                   alg.labels_[j].to_string() + "] leaves the span");
            };
            if (zero_weight) {
                std::vector<long> c(static_cast<std::size_t>(n));
                long run = 0;
                for (std::size_t k = 0; k < c.size(); ++k) {
                    run += z(k, k);
                    c[k] = family == Family::A ? run : z(k, k);
                }
                IntMatrix back = zero(amb.size);
                for (std::size_t k = 0; k < c.size(); ++k)
                    for (std::size_t p = 0; p < back.rows(); ++p) back(p, p) += c[k] * alg.matrices_[k](p, p);
                if (!(back == z)) fail();
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (c[k] != 0) terms.push_back({static_cast<int>(k), Rational(c[k])});
                continue;
            }
            const auto it = by_weight.find(w);
            if (it == by_weight.end()) fail();
            const IntMatrix& x = alg.matrices_[it->second];
            Rational lambda;
            bool found = false;
            for (std::size_t p = 0; p < x.rows() && !found; ++p)
                for (std::size_t q = 0; q < x.cols() && !found; ++q)
                    if (x(p, q) != 0) {
                        lambda = Rational(z(p, q), x(p, q));
                        lambda.canonicalize();
                        found = true;
                    }
            for (std::size_t p = 0; p < x.rows(); ++p)
                for (std::size_t q = 0; q < x.cols(); ++q)
                    if (Rational(z(p, q)) != lambda * x(p, q)) fail();
            terms.push_back({static_cast<int>(it->second), lambda});
        }
    }
    return alg;
}

Functional random_functional(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    Functional f;
    f.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) f.emplace_back(coeff(rng));
    return f;
}

Matrix<Rational> kirillov_matrix(const MatrixAlgebra& alg, const Functional& f) {
    const std::size_t dim = alg.dim();
    if (f.size() != dim) throw Error(ErrorCode::LengthMismatch, "functional length differs from the algebra dimension");
    Matrix<Rational> b(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& t : alg.bracket(i, j)) b(i, j) += t.coeff * f[static_cast<std::size_t>(t.index)];
    return b;
}

int index(const MatrixAlgebra& alg, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "index needs at least one trial");
    std::mt19937_64 seeds(seed);
    std::size_t best = 0;
    for (int t = 0; t < trials && best < alg.dim(); ++t) {
        const auto f = random_functional(alg.dim(), seeds());
        best = std::max(best, bareiss_rank(integer_rows(kirillov_matrix(alg, f))));
    }
    return static_cast<int>(alg.dim() - best);
}

Functional sample_frobenius_functional(const MatrixAlgebra& alg, std::uint64_t seed, int retries) {
    std::mt19937_64 seeds(seed);
    for (int t = 0; t < retries; ++t) {
        auto f = random_functional(alg.dim(), seeds());
        if (bareiss_rank(integer_rows(kirillov_matrix(alg, f))) == alg.dim()) return f;
    }
    throw Error(ErrorCode::RetryLimitExceeded, "no nondegenerate Kirillov form after " + std::to_string(retries) +
                                                   " samples for " + to_literal(alg.seaweed()));
}

std::vector<Rational> principal_element(const MatrixAlgebra& alg, const Functional& f) {
    const Matrix<Rational> b = kirillov_matrix(alg, f);
    const std::size_t dim = alg.dim();
    // Row j of the system: sum_i c_i B[i][j] = F_j.
    Matrix<Rational> bt(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) bt(j, i) = b(i, j);
    std::vector<Rational> rhs = f;
    std::vector<Integer> rhs_int;
    const auto system = integer_rows(bt, &rhs, &rhs_int);
    auto c = bareiss_solve(system, rhs_int);
    if (!c) throw Error(ErrorCode::SingularForm, "Kirillov form is singular for the given functional");
    for (std::size_t j = 0; j < dim; ++j) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < dim; ++i) lhs += (*c)[i] * b(i, j);
        if (lhs != f[j]) throw Error(ErrorCode::SingularForm, "principal element fails F([F^, x]) = F(x)");
    }
    return *c;
}

Matrix<Rational> ad_matrix(const MatrixAlgebra& alg, const std::vector<Rational>& element) {
    const std::size_t dim = alg.dim();
    if (element.size() != dim) throw Error(ErrorCode::LengthMismatch, "element length differs from the algebra dimension");
    Matrix<Rational> a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (element[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& t : alg.bracket(i, j)) a(static_cast<std::size_t>(t.index), j) += element[i] * t.coeff;
    }
    return a;
}

EigenvalueMultiset ad_spectrum(const MatrixAlgebra& alg, const std::vector<Rational>& element) {
    const Matrix<Rational> a = ad_matrix(alg, element);
    const std::size_t dim = alg.dim();
    Integer d = 1;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den_mpz_t());
    Matrix<Integer> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Rational v = a(i, j) * d;
            m(i, j) = v.get_num();
        }
    // Sum of squared eigenvalues is tr(A^2); real eigenvalues are bounded by its root.
    Rational tr2 = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) tr2 += a(i, j) * a(j, i);
    long bound = 0;
    if (tr2 > 0) {
        Integer fl = tr2.get_num() / tr2.get_den();
        bound = Integer(sqrt(fl)).get_si() + 1;
    }
    auto poly = charpoly(m);
    const auto roots = extract_scaled_integer_roots(poly, d, bound);
    if (poly.size() > 1) {
        throw Error(ErrorCode::NonIntegerSpectrum, "characteristic polynomial of ad has a factor of degree " +
                                                       std::to_string(poly.size() - 1) + " without integer roots");
    }
    EigenvalueMultiset out;
    for (const auto& [k, mult] : roots) out.add(k, mult);
    return out;
}

EigenvalueMultiset oracle_spectrum(const Seaweed& s, std::uint64_t seed) {
    const MatrixAlgebra alg = realize(s);
    const Functional f = sample_frobenius_functional(alg, seed);
    return ad_spectrum(alg, principal_element(alg, f));
}

}  // namespace seaweed
