#pragma once

// Numerical invariants of congruences of lines, i.e. smooth surfaces in
// the four-dimensional smooth quadric.  A congruence is specified by its
// bidegree (a, b), its sectional genus and chi(O_S); the remaining
// invariants are consequences of adjunction, Noether's formula and the
// Chern class of the normal bundle, and are derived on construction so a
// record can never be internally inconsistent.

#include <quadbir/integers.hpp>

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadbir {

/// Thrown when an invariant tuple is arithmetically impossible.
struct InvalidInvariants : std::domain_error {
    using std::domain_error::domain_error;
};

struct Congruence {
    Int a, b;    // bidegree
    Int pi;      // sectional genus
    Int chiO;    // chi(O_S)
    Int d;       // degree a + b
    Int hk;      // H_S.K_S
    Int c2;      // topological Euler number c_2(S)
    Int Ksq;     // K_S^2

    friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Builds the invariant record.  H_S.K_S comes from adjunction
/// 2pi - 2 = d + H_S.K_S; c_2 and K^2 are solved from the linear pair
/// {Noether; K^2 = c_2 - 4 H_S.K_S - 7d + d^2 - 2ab}.
inline Congruence make_congruence(const Int& a, const Int& b, const Int& pi, const Int& chiO) {
    if (a < 0 || b < 0)
        throw std::domain_error("make_congruence: bidegree components must be >= 0");
    if (a + b < 1) throw std::domain_error("make_congruence: degree must be >= 1");
    if (pi < 0) throw std::domain_error("make_congruence: sectional genus must be >= 0");
    Congruence c;
    c.a = a;
    c.b = b;
    c.pi = pi;
    c.chiO = chiO;
    c.d = a + b;
    c.hk = 2 * pi - 2 - c.d;
    const Int twoC2 = 12 * chiO + 4 * c.hk + 7 * c.d - c.d * c.d + 2 * a * b;
    if (twoC2 % 2 != 0)
        throw InvalidInvariants("make_congruence: c2 is not an integer for this tuple");
    c.c2 = twoC2 / 2;
    c.Ksq = 12 * chiO - c.c2;
    return c;
}

/// Chern data of the normal bundle N_{S/Q^4}:
/// c_1 = K_S + 4 H_S, c_2 = 7d + 4 H_S.K_S - c_2(S) + K_S^2.
struct NormalBundleChern {
    Int c1K;  // coefficient of K_S in c_1
    Int c1H;  // coefficient of H_S in c_1
    Int c2N;
};

inline NormalBundleChern chern_normal_bundle(const Congruence& c) {
    return {1, 4, 7 * c.d + 4 * c.hk - c.c2 + c.Ksq};
}

/// Riemann-Roch for a vector bundle V on a surface:
/// chi(V) = rk(V) chi(O_S) + (c_1(V)^2 - c_1(V).K_S)/2 - c_2(V).
inline Int chi_vector_bundle(const Int& rk, const Int& c1sq, const Int& c1K, const Int& c2V,
                             const Int& chiO) {
    const Int diff = c1sq - c1K;
    if (diff % 2 != 0)
        throw std::domain_error("chi_vector_bundle: c1^2 - c1.K must be even");
    return rk * chiO + diff / 2 - c2V;
}

/// Closed formula chi(N_{S/Q^4}) = 6d - a^2 - b^2 + 2(2pi - 2) + 2 chi(O_S).
inline Int chi_normal_bundle(const Congruence& c) {
    return 6 * c.d - c.a * c.a - c.b * c.b + 2 * (2 * c.pi - 2) + 2 * c.chiO;
}

/// The same Euler characteristic through the generic Riemann-Roch route.
/// Must agree with chi_normal_bundle for every valid congruence.
inline Int chi_normal_bundle_riemann_roch(const Congruence& c) {
    const NormalBundleChern nb = chern_normal_bundle(c);
    const Int c1sq = c.Ksq + 8 * c.hk + 16 * c.d;  // (K + 4H)^2
    const Int c1K = c.Ksq + 4 * c.hk;              // (K + 4H).K
    return chi_vector_bundle(2, c1sq, c1K, nb.c2N, c.chiO);
}

/// Maximal sectional genus pi_1(d) of a non-degenerate congruence of
/// degree d.  Integral on every branch.
inline Int max_sectional_genus(const Int& d) {
    Int num = d * d - 4 * d;
    switch (static_cast<int>(d % 4)) {
        case 0: num += 8; break;
        case 2: num += 4; break;
        default: num += 3; break;  // d odd
    }
    return num / 8;
}

/// Lower bound for the arithmetic genus when the maximal sectional genus
/// is attained.  Exact rational; callers may take the ceiling.
inline Rat pa_lower_bound(const Int& d) {
    if (d < 9) throw std::domain_error("pa_lower_bound: defined for degree >= 9");
    Int num = d * d * d - 12 * d * d;
    switch (static_cast<int>(d % 4)) {
        case 0: num += 56 * d - 96; break;
        case 1: num += 41 * d - 30; break;
        case 2: num += 44 * d - 48; break;
        default: num += 41 * d - 42; break;
    }
    return Rat(num, 96);
}

// ---------------------------------------------------------------------------
// Hilbert polynomial P(t) = (d/2) t^2 - (H_S.K_S / 2) t + chi(O_S).

struct HilbertPoly {
    Rat quad;
    Rat lin;
    Int cst;

    friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

inline HilbertPoly hilbert_polynomial(const Congruence& c) {
    return {Rat(c.d, 2), Rat(-c.hk, 2), c.chiO};
}

struct SurfaceNumbers {
    Int d;
    Int pi;
    Int chiO;

    friend bool operator==(const SurfaceNumbers&, const SurfaceNumbers&) = default;
};

inline SurfaceNumbers from_hilbert_polynomial(const HilbertPoly& p) {
    if (p.quad <= 0)
        throw std::domain_error("from_hilbert_polynomial: leading coefficient must be > 0");
    const Rat dR = 2 * p.quad;
    const Rat hkR = -2 * p.lin;
    if (boost::multiprecision::denominator(dR) != 1 ||
        boost::multiprecision::denominator(hkR) != 1)
        throw std::domain_error("from_hilbert_polynomial: coefficients must lie in (1/2)Z");
    const Int d = boost::multiprecision::numerator(dR);
    const Int hk = boost::multiprecision::numerator(hkR);
    const Int twoPi = d + hk + 2;
    if (twoPi % 2 != 0)
        throw std::domain_error("from_hilbert_polynomial: sectional genus is not an integer");
    return {d, twoPi / 2, p.cst};
}

// ---------------------------------------------------------------------------
// Catalog of non-degenerate smooth surfaces of degree 10 in Q^4.  Only
// data the classification theorem states is stored: bidegrees, sectional
// genus where given, and a description.  The Z_E type splits into I/II by
// whether the surface lies on a quadratic complex.

enum class SurfaceType {
    Enriques37,
    ZA,
    ZB,
    CA,
    CB,
    CC,
    ZC,
    ZD,
    ZE_I,
    ZE_II,
    ZF,
};

struct TypeEntry {
    SurfaceType type;
    std::string label;
    Int a, b;
    std::optional<Int> pi;
    std::optional<Int> chi;
    std::string description;
};

/// Embedded catalog; the authoritative copy.
inline const std::vector<TypeEntry>& degree10_catalog() {
    static const std::vector<TypeEntry> catalog = {
        {SurfaceType::Enriques37, "Enriques(3,7)", 3, 7, std::nullopt, std::nullopt,
         "minimal Enriques surface"},
        {SurfaceType::ZA, "Z_A", 4, 6, std::nullopt, std::nullopt,
         "plane blown up in 12 points"},
        {SurfaceType::ZB, "Z_B", 4, 6, std::nullopt, std::nullopt,
         "K3 surface blown up in one point"},
        {SurfaceType::CA, "C_A", 5, 5, Int(4), std::nullopt,
         "elliptic ruled surface with degree-2 fibers"},
        {SurfaceType::CB, "C_B", 5, 5, Int(5), std::nullopt,
         "elliptic ruled surface with degree-2 fibers"},
        {SurfaceType::CC, "C_C", 5, 5, Int(6), std::nullopt,
         "elliptic ruled surface with degree-2 fibers"},
        {SurfaceType::ZC, "Z_C", 5, 5, std::nullopt, std::nullopt,
         "plane blown up in 13 points"},
        {SurfaceType::ZD, "Z_D", 5, 5, std::nullopt, std::nullopt,
         "plane blown up in 17 points"},
        {SurfaceType::ZE_I, "Z_E_I", 5, 5, std::nullopt, std::nullopt,
         "K3 surface blown up in two points, on a quadratic complex"},
        {SurfaceType::ZE_II, "Z_E_II", 5, 5, std::nullopt, std::nullopt,
         "K3 surface blown up in two points, on no quadratic complex"},
        {SurfaceType::ZF, "Z_F", 5, 5, Int(8), std::nullopt,
         "minimal elliptic surface"},
    };
    return catalog;
}

/// Loads a catalog from a plain-text table: one row per type with columns
/// label, a, b, pi, chi ('-' for an absent value, '#' starts a comment).
inline std::vector<TypeEntry> parse_type_catalog(std::istream& in) {
    std::vector<TypeEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string label, aTok, bTok, piTok, chiTok;
        if (!(row >> label)) continue;  // blank line
        if (!(row >> aTok >> bTok >> piTok >> chiTok))
            throw std::domain_error("parse_type_catalog: expected 5 columns, got fewer: " + line);
        const TypeEntry* known = nullptr;
        for (const auto& e : degree10_catalog())
            if (e.label == label) known = &e;
        if (known == nullptr)
            throw std::domain_error("parse_type_catalog: unknown type label " + label);
        const auto opt = [](const std::string& tok) -> std::optional<Int> {
            if (tok == "-") return std::nullopt;
            return Int(tok);
        };
        TypeEntry e = *known;
        e.a = Int(aTok);
        e.b = Int(bTok);
        e.pi = opt(piTok);
        e.chi = opt(chiTok);
        out.push_back(std::move(e));
    }
    return out;
}

/// Candidate types for a degree-10 congruence.  Filters the catalog by
/// bidegree and stated invariants; chi(O_S) = 2 together with Hilbert
/// polynomial 5t^2 - t + 2 pins the surface to a blown-up K3 (type Z_B or
/// Z_E), and the quadratic-complex flag separates Z_E_I from Z_E_II.
inline std::vector<TypeEntry> degree10_type_candidates(const Congruence& c,
                                                       bool inQuadraticComplex,
                                                       bool degenerate) {
    if (c.d != 10)
        throw std::domain_error("degree10_type_candidates: catalog covers degree 10 only");
    if (degenerate) return {};  // the catalog classifies non-degenerate surfaces
    const Int lo = c.a < c.b ? c.a : c.b;
    const Int hi = c.a < c.b ? c.b : c.a;
    std::vector<TypeEntry> out;
    for (const auto& e : degree10_catalog()) {
        if (e.a != lo || e.b != hi) continue;
        if (e.pi && *e.pi != c.pi) continue;
        if (e.chi && *e.chi != c.chiO) continue;
        out.push_back(e);
    }
    if (c.chiO == 2 && hilbert_polynomial(c) == HilbertPoly{Rat(5), Rat(-1), Int(2)}) {
        std::erase_if(out, [](const TypeEntry& e) {
            return e.type != SurfaceType::ZB && e.type != SurfaceType::ZE_I &&
                   e.type != SurfaceType::ZE_II;
        });
    }
    std::erase_if(out, [&](const TypeEntry& e) {
        if (e.type == SurfaceType::ZE_I) return !inQuadraticComplex;
        if (e.type == SurfaceType::ZE_II) return inQuadraticComplex;
        return false;
    });
    return out;
}

}  // namespace quadbir
