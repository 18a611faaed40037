#pragma once

// Exact intersection numbers on the blow-up X = Bl_B(Q^k) of a smooth
// quadric of dimension k = 3 or 4 along a smooth center B.  Pic(X) is
// free on the hyperplane pullback H and the exceptional divisor E, and
// every top intersection product is determined by the numerical
// invariants of the center, so everything here is integer arithmetic.

#include <quadbir/integers.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadbir {

/// Numerical invariants of the blow-up center: a curve of degree d and
/// genus g when k = 3, a surface with degree d, H_S.K_S and c_2(S) when
/// k = 4.
struct BaseLocusNumbers {
    int k = 0;
    Int degree;
    Int genus;  // k = 3 only
    Int hk;     // k = 4 only
    Int c2;     // k = 4 only

    static BaseLocusNumbers curve(Int degree, Int genus) {
        if (degree < 1) throw std::domain_error("BaseLocusNumbers: degree must be >= 1");
        if (genus < 0) throw std::domain_error("BaseLocusNumbers: genus must be >= 0");
        BaseLocusNumbers b;
        b.k = 3;
        b.degree = std::move(degree);
        b.genus = std::move(genus);
        return b;
    }

    static BaseLocusNumbers surface(Int degree, Int hk, Int c2) {
        if (degree < 1) throw std::domain_error("BaseLocusNumbers: degree must be >= 1");
        BaseLocusNumbers b;
        b.k = 4;
        b.degree = std::move(degree);
        b.hk = std::move(hk);
        b.c2 = std::move(c2);
        return b;
    }
};

/// Integer divisor class aH + bE on the blow-up.
struct DivisorClass {
    Int h;
    Int e;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {x.h + y.h, x.e + y.e};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {x.h - y.h, x.e - y.e};
    }
    friend DivisorClass operator-(const DivisorClass& x) { return {-x.h, -x.e}; }
    friend DivisorClass operator*(const Int& c, const DivisorClass& x) {
        return {c * x.h, c * x.e};
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Integer curve class cl + df, where l is a general line of the quadric
/// pulled back to X and f a fiber of the exceptional divisor.
struct CurveClass {
    Int l;
    Int f;

    friend CurveClass operator+(const CurveClass& x, const CurveClass& y) {
        return {x.l + y.l, x.f + y.f};
    }
    friend CurveClass operator*(const Int& c, const CurveClass& x) {
        return {c * x.l, c * x.f};
    }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

namespace detail {

inline std::string format_term(const Int& coeff, const std::string& sym, bool leading) {
    std::string out;
    if (coeff < 0)
        out += leading ? "-" : " - ";
    else if (!leading)
        out += " + ";
    Int a = abs_int(coeff);
    if (a != 1 || sym.empty()) out += a.str();
    out += sym;
    return out;
}

inline std::string format_pair(const Int& x, const std::string& sx, const Int& y,
                               const std::string& sy) {
    std::string out;
    if (x != 0) out += format_term(x, sx, true);
    if (y != 0) out += format_term(y, sy, out.empty());
    if (out.empty()) out = "0";
    return out;
}

}  // namespace detail

inline std::string to_string(const DivisorClass& d) {
    return detail::format_pair(d.h, "H", d.e, "E");
}

inline std::string to_string(const CurveClass& c) {
    return detail::format_pair(c.l, "l", c.f, "f");
}

/// Top intersection number H^i E^(k-i) on X, from the standard blow-up
/// tables.  For k = 3: H^3 = 2, H^2 E = 0, H E^2 = -d, E^3 = -2g + 2 - 3d.
/// For k = 4: H^4 = 2, H^3 E = 0, H^2 E^2 = -d, H E^3 = -H_S.K_S - 4d,
/// E^4 = -9d - c_2(S) - 4 H_S.K_S.
inline Int top_monomial(const BaseLocusNumbers& base, int i) {
    if (i < 0 || i > base.k)
        throw std::domain_error("top_monomial: exponent outside [0, k]");
    if (base.k == 3) {
        switch (i) {
            case 3: return 2;
            case 2: return 0;
            case 1: return -base.degree;
            default: return -2 * base.genus + 2 - 3 * base.degree;
        }
    }
    if (base.k == 4) {
        switch (i) {
            case 4: return 2;
            case 3: return 0;
            case 2: return -base.degree;
            case 1: return -base.hk - 4 * base.degree;
            default: return -9 * base.degree - base.c2 - 4 * base.hk;
        }
    }
    throw std::domain_error("top_monomial: k must be 3 or 4");
}

/// Product of exactly k divisor classes, expanded multilinearly against
/// top_monomial.  Symmetric in its arguments.
inline Int intersect(const BaseLocusNumbers& base, const std::vector<DivisorClass>& factors) {
    if (static_cast<int>(factors.size()) != base.k)
        throw std::domain_error("intersect: expected exactly k factors");
    Int total = 0;
    for (unsigned mask = 0; mask < (1u << base.k); ++mask) {
        Int coeff = 1;
        int hExp = 0;
        for (int j = 0; j < base.k && coeff != 0; ++j) {
            if (mask & (1u << j)) {
                coeff *= factors[static_cast<std::size_t>(j)].h;
                ++hExp;
            } else {
                coeff *= factors[static_cast<std::size_t>(j)].e;
            }
        }
        if (coeff != 0) total += coeff * top_monomial(base, hExp);
    }
    return total;
}

/// Divisor/curve pairing: H.l = 1, H.f = 0, E.l = 0, E.f = -1.
inline Int pairing(const DivisorClass& divisor, const CurveClass& curve) {
    return divisor.h * curve.l - divisor.e * curve.f;
}

/// K_X = -kH + (k - r - 1)E for a center of dimension r in Q^k.
inline DivisorClass canonical_class(int k, int r) {
    if (k != 3 && k != 4) throw std::domain_error("canonical_class: k must be 3 or 4");
    if (r < 1 || r > k - 2) throw std::domain_error("canonical_class: need 1 <= r <= k-2");
    return {Int(-k), Int(k - r - 1)};
}

// ---------------------------------------------------------------------------
// Formal polynomials in the commuting symbols H and E.  Carrier type for
// expressions like (3H - E)^4; normalization makes equality structural.

struct DivisorMonomial {
    Int coeff;
    int hExp = 0;
    int eExp = 0;

    friend bool operator==(const DivisorMonomial&, const DivisorMonomial&) = default;
};

class DivisorPolynomial {
  public:
    DivisorPolynomial() = default;
    explicit DivisorPolynomial(std::vector<DivisorMonomial> terms) : terms_(std::move(terms)) {
        normalize();
    }

    static DivisorPolynomial constant(Int c) {
        return DivisorPolynomial({{std::move(c), 0, 0}});
    }
    static DivisorPolynomial linear(const DivisorClass& d) {
        return DivisorPolynomial({{d.h, 1, 0}, {d.e, 0, 1}});
    }

    [[nodiscard]] const std::vector<DivisorMonomial>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] bool is_homogeneous(int degree) const {
        for (const auto& t : terms_)
            if (t.hExp + t.eExp != degree) return false;
        return true;
    }

    friend DivisorPolynomial operator+(const DivisorPolynomial& x, const DivisorPolynomial& y) {
        std::vector<DivisorMonomial> terms = x.terms_;
        terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
        return DivisorPolynomial(std::move(terms));
    }

    friend DivisorPolynomial operator-(const DivisorPolynomial& x, const DivisorPolynomial& y) {
        std::vector<DivisorMonomial> terms = x.terms_;
        for (const auto& t : y.terms_) terms.push_back({-t.coeff, t.hExp, t.eExp});
        return DivisorPolynomial(std::move(terms));
    }

    friend DivisorPolynomial operator*(const DivisorPolynomial& x, const DivisorPolynomial& y) {
        std::vector<DivisorMonomial> terms;
        terms.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& a : x.terms_)
            for (const auto& b : y.terms_)
                terms.push_back({a.coeff * b.coeff, a.hExp + b.hExp, a.eExp + b.eExp});
        return DivisorPolynomial(std::move(terms));
    }

    friend bool operator==(const DivisorPolynomial&, const DivisorPolynomial&) = default;

    /// Evaluates a degree-k homogeneous polynomial against top_monomial.
    [[nodiscard]] Int evaluate(const BaseLocusNumbers& base) const {
        Int total = 0;
        for (const auto& t : terms_) {
            if (t.hExp + t.eExp != base.k)
                throw std::domain_error("DivisorPolynomial::evaluate: monomial of degree != k");
            total += t.coeff * top_monomial(base, t.hExp);
        }
        return total;
    }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            std::string sym;
            if (t.hExp == 1) sym += "H";
            else if (t.hExp > 1) sym += "H^" + std::to_string(t.hExp);
            if (t.eExp == 1) sym += "E";
            else if (t.eExp > 1) sym += "E^" + std::to_string(t.eExp);
            out += detail::format_term(t.coeff, sym, out.empty());
        }
        return out;
    }

  private:
    // Sorted by total degree, then by decreasing H-exponent; like terms
    // merged and zero terms dropped.
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
            const int da = a.hExp + a.eExp, db = b.hExp + b.eExp;
            if (da != db) return da < db;
            return a.hExp > b.hExp;
        });
        std::vector<DivisorMonomial> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().hExp == t.hExp && merged.back().eExp == t.eExp)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const auto& t) { return t.coeff == 0; });
        terms_ = std::move(merged);
    }

    std::vector<DivisorMonomial> terms_;
};

/// Binomial expansion of (aH + bE)^n.
inline DivisorPolynomial expand_power(const DivisorClass& d, int n) {
    if (n < 0) throw std::domain_error("expand_power: exponent must be >= 0");
    std::vector<DivisorMonomial> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    Int binom = 1;  // C(n, j), updated incrementally
    for (int j = 0; j <= n; ++j) {
        Int coeff = binom;
        for (int t = 0; t < j; ++t) coeff *= d.h;
        for (int t = 0; t < n - j; ++t) coeff *= d.e;
        terms.push_back({std::move(coeff), j, n - j});
        binom = binom * (n - j) / (j + 1);
    }
    return DivisorPolynomial(std::move(terms));
}

}  // namespace quadbir
