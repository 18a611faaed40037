#pragma once

// Rewriting system for algebraic codimension-2 cycles on the fourfold
// that is simultaneously the blow-up of two quadrics: once along a
// surface carrying (-1)-lines d, d', once along a surface carrying
// delta, delta'.  The two pullback squares H^2, H'^2, the surface
// classes H_S, H_T, the exceptional squares E^2, E'^2 and the lines are
// related by
//
//   H' = 3H - E,            H  = 3H' - E',
//   HE = H_S,               H'E' = H_T,
//   3H^2 - H_S = 3H'^2 - H_T,
//   E^2  = -5 H^2  + d + d' + 4 H_S,
//   E'^2 = -5 H'^2 + delta + delta' + 4 H_T.
//
// Linear elimination lands every expression in the basis
// {H^2, H_S, d, d', delta}; the relations pin down delta + delta' but not
// delta and delta' separately, so delta' is carried as
// (delta + delta') - delta.

#include <quadbir/integers.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadbir {

enum class CycleSymbol : int {
    HSq,         // H^2
    HPrimeSq,    // H'^2
    HS,          // H_S
    HT,          // H_T
    ESq,         // E^2
    EPrimeSq,    // E'^2
    D,           // d
    DPrime,      // d'
    Delta,       // delta
    DeltaPrime,  // delta'
    DeltaSum,    // delta + delta'
};

inline constexpr std::size_t kCycleSymbolCount = 11;

inline const char* cycle_symbol_name(CycleSymbol s) {
    switch (s) {
        case CycleSymbol::HSq: return "H^2";
        case CycleSymbol::HPrimeSq: return "H'^2";
        case CycleSymbol::HS: return "H_S";
        case CycleSymbol::HT: return "H_T";
        case CycleSymbol::ESq: return "E^2";
        case CycleSymbol::EPrimeSq: return "E'^2";
        case CycleSymbol::D: return "d";
        case CycleSymbol::DPrime: return "d'";
        case CycleSymbol::Delta: return "delta";
        case CycleSymbol::DeltaPrime: return "delta'";
        case CycleSymbol::DeltaSum: return "delta+delta'";
    }
    return "?";
}

/// Formal integer combination of the cycle symbols.
class CycleExpression {
  public:
    CycleExpression() = default;

    static CycleExpression unit(CycleSymbol s) {
        CycleExpression e;
        e[s] = 1;
        return e;
    }

    Int& operator[](CycleSymbol s) { return coeff_[static_cast<std::size_t>(s)]; }
    const Int& operator[](CycleSymbol s) const { return coeff_[static_cast<std::size_t>(s)]; }

    friend CycleExpression operator+(const CycleExpression& x, const CycleExpression& y) {
        CycleExpression out;
        for (std::size_t i = 0; i < kCycleSymbolCount; ++i)
            out.coeff_[i] = x.coeff_[i] + y.coeff_[i];
        return out;
    }
    friend CycleExpression operator-(const CycleExpression& x, const CycleExpression& y) {
        CycleExpression out;
        for (std::size_t i = 0; i < kCycleSymbolCount; ++i)
            out.coeff_[i] = x.coeff_[i] - y.coeff_[i];
        return out;
    }
    friend CycleExpression operator*(const Int& c, const CycleExpression& x) {
        CycleExpression out;
        for (std::size_t i = 0; i < kCycleSymbolCount; ++i) out.coeff_[i] = c * x.coeff_[i];
        return out;
    }
    friend bool operator==(const CycleExpression&, const CycleExpression&) = default;

  private:
    std::array<Int, kCycleSymbolCount> coeff_{};
};

/// Coordinates in the reduction basis {H^2, H_S, d, d', delta}.
struct ReducedCycle {
    Int hSq, hS, d, dPrime, delta;

    [[nodiscard]] bool is_zero() const {
        return hSq == 0 && hS == 0 && d == 0 && dPrime == 0 && delta == 0;
    }

    friend ReducedCycle operator+(const ReducedCycle& x, const ReducedCycle& y) {
        return {x.hSq + y.hSq, x.hS + y.hS, x.d + y.d, x.dPrime + y.dPrime, x.delta + y.delta};
    }
    friend ReducedCycle operator-(const ReducedCycle& x, const ReducedCycle& y) {
        return {x.hSq - y.hSq, x.hS - y.hS, x.d - y.d, x.dPrime - y.dPrime, x.delta - y.delta};
    }
    friend ReducedCycle operator*(const Int& c, const ReducedCycle& x) {
        return {c * x.hSq, c * x.hS, c * x.d, c * x.dPrime, c * x.delta};
    }
    friend bool operator==(const ReducedCycle&, const ReducedCycle&) = default;

    [[nodiscard]] std::string str() const {
        std::string out;
        const auto term = [&](const Int& c, const char* sym) {
            if (c == 0) return;
            if (c < 0)
                out += out.empty() ? "-" : " - ";
            else if (!out.empty())
                out += " + ";
            const Int a = abs_int(c);
            if (a != 1) out += a.str();
            out += sym;
        };
        term(hSq, "H^2");
        term(hS, "H_S");
        term(d, "d");
        term(dPrime, "d'");
        term(delta, "delta");
        if (out.empty()) out = "0";
        return out;
    }
};

/// Embeds basis coordinates back as a formal expression.
inline CycleExpression to_expression(const ReducedCycle& r) {
    CycleExpression e;
    e[CycleSymbol::HSq] = r.hSq;
    e[CycleSymbol::HS] = r.hS;
    e[CycleSymbol::D] = r.d;
    e[CycleSymbol::DPrime] = r.dPrime;
    e[CycleSymbol::Delta] = r.delta;
    return e;
}

/// Coefficients of the exceptional-square relation
/// E^2 = eH.H^2 + eD.d + eDp.d' + eHS.H_S (and its primed twin).  The
/// default is the relation set above; tests perturb it to exercise the
/// failure path of the checker.
struct CycleRelations {
    Int eH = -5;
    Int eD = 1;
    Int eDp = 1;
    Int eHS = 4;
};

/// Linear, idempotent elimination onto {H^2, H_S, d, d', delta}.
class CycleReducer {
  public:
    explicit CycleReducer(const CycleRelations& rel = {}) {
        const auto basis = [](int slot) {
            ReducedCycle r{0, 0, 0, 0, 0};
            (slot == 0 ? r.hSq : slot == 1 ? r.hS : slot == 2 ? r.d : slot == 3 ? r.dPrime
                                                                                : r.delta) = 1;
            return r;
        };
        const ReducedCycle hSq = basis(0), hS = basis(1), d = basis(2), dPrime = basis(3),
                           delta = basis(4);

        const ReducedCycle eSq =
            rel.eH * hSq + rel.eD * d + rel.eDp * dPrime + rel.eHS * hS;
        // H'^2 = (3H - E)^2 = 9H^2 - 6H_S + E^2
        const ReducedCycle hPrimeSq = Int(9) * hSq - Int(6) * hS + eSq;
        // H_T = 3H'^2 - 3H^2 + H_S
        const ReducedCycle hT = Int(3) * hPrimeSq - Int(3) * hSq + hS;
        // H^2 = (3H' - E')^2 = 9H'^2 - 6H_T + E'^2 combined with the primed
        // twin gives H^2 = 4H'^2 - 2H_T + (delta + delta')
        const ReducedCycle deltaSum = hSq - Int(4) * hPrimeSq + Int(2) * hT;
        const ReducedCycle deltaPrime = deltaSum - delta;
        const ReducedCycle ePrimeSq =
            rel.eH * hPrimeSq + rel.eD * delta + rel.eDp * deltaPrime + rel.eHS * hT;

        table_[static_cast<std::size_t>(CycleSymbol::HSq)] = hSq;
        table_[static_cast<std::size_t>(CycleSymbol::HPrimeSq)] = hPrimeSq;
        table_[static_cast<std::size_t>(CycleSymbol::HS)] = hS;
        table_[static_cast<std::size_t>(CycleSymbol::HT)] = hT;
        table_[static_cast<std::size_t>(CycleSymbol::ESq)] = eSq;
        table_[static_cast<std::size_t>(CycleSymbol::EPrimeSq)] = ePrimeSq;
        table_[static_cast<std::size_t>(CycleSymbol::D)] = d;
        table_[static_cast<std::size_t>(CycleSymbol::DPrime)] = dPrime;
        table_[static_cast<std::size_t>(CycleSymbol::Delta)] = delta;
        table_[static_cast<std::size_t>(CycleSymbol::DeltaPrime)] = deltaPrime;
        table_[static_cast<std::size_t>(CycleSymbol::DeltaSum)] = deltaSum;
    }

    [[nodiscard]] ReducedCycle reduce(CycleSymbol s) const {
        return table_[static_cast<std::size_t>(s)];
    }

    [[nodiscard]] ReducedCycle reduce(const CycleExpression& e) const {
        ReducedCycle out{0, 0, 0, 0, 0};
        for (std::size_t i = 0; i < kCycleSymbolCount; ++i) {
            const Int& c = e[static_cast<CycleSymbol>(i)];
            if (c != 0) out = out + c * table_[i];
        }
        return out;
    }

  private:
    std::array<ReducedCycle, kCycleSymbolCount> table_;
};

enum class MultDirection { Forward, Reverse };

struct MultByFiveCheck {
    bool holds;
    Int multiplier;        // residue class of the generator image
    ReducedCycle residual; // zero iff the identity holds
    std::string identity;  // the identity that was checked
};

/// Checks the generator identity behind the discriminant-group action:
/// H_S + d + d' = 12H'^2 - 12H_T + 5(H_T + delta + delta'), so the
/// order-12 generator (H_S + d + d')/12 maps to 5 times the order-12
/// generator (H_T + delta + delta')/12.  Reverse swaps the two sides,
/// which must hold by the symmetry of the relation set.
inline MultByFiveCheck verify_mult_by_5(const CycleReducer& reducer = CycleReducer(),
                                        MultDirection direction = MultDirection::Forward) {
    using S = CycleSymbol;
    CycleExpression lhs, target;
    std::string identity;
    if (direction == MultDirection::Forward) {
        lhs[S::HPrimeSq] = 12;
        lhs[S::HT] = -12 + 5;
        lhs[S::Delta] = 5;
        lhs[S::DeltaPrime] = 5;
        target[S::HS] = 1;
        target[S::D] = 1;
        target[S::DPrime] = 1;
        identity = "12H'^2 - 12H_T + 5(H_T+delta+delta') = H_S + d + d'";
    } else {
        lhs[S::HSq] = 12;
        lhs[S::HS] = -12 + 5;
        lhs[S::D] = 5;
        lhs[S::DPrime] = 5;
        target[S::HT] = 1;
        target[S::Delta] = 1;
        target[S::DeltaPrime] = 1;
        identity = "12H^2 - 12H_S + 5(H_S+d+d') = H_T + delta + delta'";
    }
    const ReducedCycle residual = reducer.reduce(lhs) - reducer.reduce(target);
    return {residual.is_zero(), 5, residual, identity};
}

}  // namespace quadbir
