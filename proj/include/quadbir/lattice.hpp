#pragma once

// Integer lattice machinery: Smith normal form with unimodular
// transforms, discriminant groups of nondegenerate Gram matrices, the
// order-p even-overlattice test behind the saturation argument, and the
// residue criterion that turns "multiplication by 5 on Z/12" into a
// contradiction with +-Id.

#include <quadbir/integers.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadbir {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    IntMatrix out(rows, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

/// Exact determinant via fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::domain_error("determinant: matrix must be square");
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap == k) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

struct SmithDecomposition {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal with d_i | d_{i+1}
    IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form U M V = D by unimodular row/column reduction.  The
/// returned transforms are verified (U M V = D, |det U| = |det V| = 1);
/// failure would be a bug, not bad input.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::domain_error("smith_normal_form: ragged matrix");

    IntMatrix d = m;
    IntMatrix u = identity_matrix(rows);
    IntMatrix v = identity_matrix(cols);

    const auto rowSwap = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    const auto rowSub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
    };
    const auto colSwap = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < rows; ++t) std::swap(d[t][i], d[t][j]);
        for (std::size_t t = 0; t < cols; ++t) std::swap(v[t][i], v[t][j]);
    };
    const auto colSub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t t = 0; t < rows; ++t) d[t][dst] -= q * d[t][src];
        for (std::size_t t = 0; t < cols; ++t) v[t][dst] -= q * v[t][src];
    };

    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: nonzero entry of minimal absolute value in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d[i][j] != 0 &&
                    (!found || abs_int(d[i][j]) < abs_int(d[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) rowSwap(t, pi);
        if (pj != t) colSwap(t, pj);

        for (;;) {
            bool again = false;
            // Euclidean steps shrink remainders until row t and column t
            // are clear beyond the pivot.
            for (std::size_t i = t + 1; i < rows && !again; ++i)
                if (d[i][t] != 0) {
                    rowSub(i, t, d[i][t] / d[t][t]);
                    if (d[i][t] != 0) {
                        rowSwap(t, i);
                        again = true;
                    }
                }
            if (again) continue;
            for (std::size_t j = t + 1; j < cols && !again; ++j)
                if (d[t][j] != 0) {
                    colSub(j, t, d[t][j] / d[t][t]);
                    if (d[t][j] != 0) {
                        colSwap(t, j);
                        again = true;
                    }
                }
            if (again) continue;
            // Divisibility: the pivot must divide the trailing block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        rowSub(t, i, Int(-1));  // pull row i into row t
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    for (std::size_t t = 0; t < steps; ++t)
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }

    if (matrix_product(matrix_product(u, m), v) != d)
        throw std::logic_error("smith_normal_form: transform check failed");
    if (rows > 0 && abs_int(determinant(u)) != 1)
        throw std::logic_error("smith_normal_form: U is not unimodular");
    if (cols > 0 && abs_int(determinant(v)) != 1)
        throw std::logic_error("smith_normal_form: V is not unimodular");
    return {std::move(u), std::move(d), std::move(v)};
}

/// Diagonal of the Smith normal form (non-negative, divisibility chain,
/// trivial factors included).
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
    const SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> factors;
    const std::size_t steps = snf.d.size() == 0
                                  ? 0
                                  : (snf.d.size() < snf.d[0].size() ? snf.d.size()
                                                                    : snf.d[0].size());
    for (std::size_t t = 0; t < steps; ++t) factors.push_back(snf.d[t][t]);
    return factors;
}

// ---------------------------------------------------------------------------

/// Integer symmetric bilinear form with named generators.
struct GramLattice {
    std::vector<std::string> labels;
    IntMatrix gram;

    [[nodiscard]] std::size_t rank() const { return gram.size(); }
};

inline GramLattice make_gram_lattice(std::vector<std::string> labels, IntMatrix gram) {
    const std::size_t n = gram.size();
    if (labels.size() != n)
        throw std::domain_error("make_gram_lattice: one label per generator required");
    for (const auto& row : gram)
        if (row.size() != n) throw std::domain_error("make_gram_lattice: gram must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::domain_error("make_gram_lattice: gram must be symmetric");
    return {std::move(labels), std::move(gram)};
}

/// Finite abelian group in invariant-factor form; factors > 1, each
/// dividing the next.
struct FiniteAbelianGroup {
    std::vector<Int> factors;

    [[nodiscard]] Int order() const {
        Int o = 1;
        for (const auto& f : factors) o *= f;
        return o;
    }

    [[nodiscard]] std::string str() const {
        if (factors.empty()) return "trivial";
        std::string out;
        for (const auto& f : factors) {
            if (!out.empty()) out += " x ";
            out += "Z/" + f.str();
        }
        return out;
    }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Discriminant group L*/L of a nondegenerate lattice: the cokernel of
/// the Gram matrix.  Its order is |det(gram)|.
inline FiniteAbelianGroup discriminant_group(const GramLattice& lattice) {
    if (determinant(lattice.gram) == 0)
        throw std::domain_error("discriminant_group: degenerate form");
    FiniteAbelianGroup g;
    for (auto& f : invariant_factors(lattice.gram))
        if (f > 1) g.factors.push_back(std::move(f));
    return g;
}

/// True (contradiction) iff multiplication by c on Z/n cannot be +-Id.
inline bool isometry_contradiction(const Int& modulus, const Int& multiplier) {
    if (modulus < 1) throw std::domain_error("isometry_contradiction: modulus must be >= 1");
    Int c = multiplier % modulus;
    if (c < 0) c += modulus;
    return c != 1 % modulus && c != (modulus - 1) % modulus;
}

// ---------------------------------------------------------------------------
// Saturation of a sublattice inside an even ambient lattice.

struct SaturationCandidate {
    std::vector<Int> vec;         // residues mod p, first nonzero entry 1
    bool excludedByPrimitivity;   // candidate would divide a primitive generator
};

struct SaturationReport {
    bool saturated;
    Int prime;
    std::vector<SaturationCandidate> candidates;
};

namespace detail {

inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

}  // namespace detail

/// Tests whether the lattice can sit with index p inside a larger even
/// lattice.  A class v/p adjoins to an even overlattice iff gram.v = 0
/// (mod p) and v^T.gram.v = 0 (mod 2p^2); candidates are enumerated up to
/// scalar (the quadratic condition is evaluated on the standard lift,
/// which is lift-independent for an even Gram matrix).  A candidate
/// supported only on generators listed as primitive in the ambient
/// lattice is excluded: the overlattice would make such a generator
/// divisible by p.  The sublattice is saturated iff every candidate is
/// excluded.
inline SaturationReport saturation_check(const GramLattice& lattice,
                                         const std::set<std::size_t>& primitiveGenerators,
                                         const Int& p) {
    if (!detail::is_prime(p)) throw std::domain_error("saturation_check: p must be prime");
    if (determinant(lattice.gram) == 0)
        throw std::domain_error("saturation_check: degenerate form");
    for (const auto idx : primitiveGenerators)
        if (idx >= lattice.rank())
            throw std::domain_error("saturation_check: primitive generator index out of range");

    const std::size_t n = lattice.rank();
    SaturationReport report{true, p, {}};

    std::vector<Int> v(n, 0);
    // Representatives up to scalar: first nonzero coordinate equal to 1.
    const auto nextVector = [&]() {
        for (std::size_t i = n; i-- > 0;) {
            if (++v[i] < p) return true;
            v[i] = 0;
        }
        return false;
    };
    while (nextVector()) {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;

        bool inKernel = true;
        for (std::size_t i = 0; i < n && inKernel; ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += lattice.gram[i][j] * v[j];
            if (dot % p != 0) inKernel = false;
        }
        if (!inKernel) continue;

        Int q = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q += v[i] * lattice.gram[i][j] * v[j];
        if (q % (2 * p * p) != 0) continue;

        bool onlyPrimitive = true;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0 && primitiveGenerators.count(i) == 0) onlyPrimitive = false;
        report.candidates.push_back({v, onlyPrimitive});
        if (!onlyPrimitive) report.saturated = false;
    }
    return report;
}

/// Possible indices of an overlattice with the same rank: positive i with
/// i^2 dividing |det(gram)|, since disc scales by the square of the index.
inline std::vector<Int> index_candidates(const GramLattice& lattice) {
    const Int det = abs_int(determinant(lattice.gram));
    if (det == 0) throw std::domain_error("index_candidates: degenerate form");
    std::vector<Int> out;
    for (Int i = 1; i * i <= det; ++i)
        if (det % (i * i) == 0) out.push_back(i);
    return out;
}

}  // namespace quadbir
