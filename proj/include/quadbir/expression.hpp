#pragma once

// Recursive-descent parser for divisor-class expressions such as
// "(3H-E)^2*(8H-3E)^2".  Grammar:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*        (juxtaposition multiplies)
//   factor := atom ('^' uint)?
//   atom   := 'H' | "H'" | 'E' | integer | '(' expr ')'
//
// H' stands for the pullback of the hyperplane class under the inverse
// map and expands as nH - E, with n taken from the active profile.

#include <quadbir/integers.hpp>
#include <quadbir/intersection.hpp>

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadbir::expr {

struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}
};

struct Node {
    enum class Kind { Sum, Product, Power, SymbolH, SymbolHPrime, SymbolE, Literal };

    Kind kind = Kind::Literal;
    std::vector<Node> children;  // Sum, Product, Power (single child)
    std::vector<int> signs;      // Sum: +1 / -1 per child
    Int value;                   // Literal
    int exponent = 0;            // Power

    friend bool operator==(const Node&, const Node&) = default;
};

namespace detail {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    Node run() {
        Node e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    Node expr() {
        Node sum;
        sum.kind = Node::Kind::Sum;
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        sum.children.push_back(term());
        sum.signs.push_back(sign);
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            sum.children.push_back(term());
            sum.signs.push_back(c == '+' ? 1 : -1);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
        return sum;
    }

    Node term() {
        Node prod;
        prod.kind = Node::Kind::Product;
        prod.children.push_back(factor());
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                prod.children.push_back(factor());
            } else if (c == 'H' || c == 'E' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                prod.children.push_back(factor());
            } else {
                break;
            }
        }
        if (prod.children.size() == 1) return std::move(prod.children[0]);
        return prod;
    }

    Node factor() {
        Node base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a non-negative exponent after '^'", pos_);
        Node power;
        power.kind = Node::Kind::Power;
        power.exponent = static_cast<int>(integer());
        power.children.push_back(std::move(base));
        return power;
    }

    Node atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Node inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'H') {
            ++pos_;
            Node n;
            if (peek() == '\'') {
                ++pos_;
                n.kind = Node::Kind::SymbolHPrime;
            } else {
                n.kind = Node::Kind::SymbolH;
            }
            return n;
        }
        if (c == 'E') {
            ++pos_;
            Node n;
            n.kind = Node::Kind::SymbolE;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Node n;
            n.kind = Node::Kind::Literal;
            n.value = integer();
            return n;
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Int integer() {
        Int v = 0;
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = 10 * v + (peek() - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[nodiscard]] char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Node parse(std::string_view source) { return detail::Parser(source).run(); }

/// Canonical printing; re-parsing the result yields the same polynomial.
inline std::string to_string(const Node& n) {
    switch (n.kind) {
        case Node::Kind::SymbolH: return "H";
        case Node::Kind::SymbolHPrime: return "H'";
        case Node::Kind::SymbolE: return "E";
        case Node::Kind::Literal: return n.value.str();
        case Node::Kind::Power: {
            const Node& base = n.children[0];
            const bool wrap = base.kind == Node::Kind::Sum ||
                              base.kind == Node::Kind::Product ||
                              base.kind == Node::Kind::Power;
            const std::string b = to_string(base);
            return (wrap ? "(" + b + ")" : b) + "^" + std::to_string(n.exponent);
        }
        case Node::Kind::Product: {
            std::string out;
            for (const Node& child : n.children) {
                if (!out.empty()) out += "*";
                const bool wrap = child.kind == Node::Kind::Sum;
                const std::string c = to_string(child);
                out += wrap ? "(" + c + ")" : c;
            }
            return out;
        }
        case Node::Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (n.signs[i] < 0)
                    out += i == 0 ? "-" : " - ";
                else if (i > 0)
                    out += " + ";
                const bool wrap = n.children[i].kind == Node::Kind::Sum;
                const std::string c = to_string(n.children[i]);
                out += wrap ? "(" + c + ")" : c;
            }
            return out;
        }
    }
    return "";
}

/// Expands an AST to a polynomial in H, E, substituting
/// H' = hPrimeDegree * H - E.
inline DivisorPolynomial expand(const Node& n, const Int& hPrimeDegree) {
    switch (n.kind) {
        case Node::Kind::SymbolH:
            return DivisorPolynomial::linear({1, 0});
        case Node::Kind::SymbolHPrime:
            return DivisorPolynomial::linear({hPrimeDegree, -1});
        case Node::Kind::SymbolE:
            return DivisorPolynomial::linear({0, 1});
        case Node::Kind::Literal:
            return DivisorPolynomial::constant(n.value);
        case Node::Kind::Power: {
            DivisorPolynomial out = DivisorPolynomial::constant(1);
            const DivisorPolynomial base = expand(n.children[0], hPrimeDegree);
            for (int i = 0; i < n.exponent; ++i) out = out * base;
            return out;
        }
        case Node::Kind::Product: {
            DivisorPolynomial out = DivisorPolynomial::constant(1);
            for (const Node& child : n.children) out = out * expand(child, hPrimeDegree);
            return out;
        }
        case Node::Kind::Sum: {
            DivisorPolynomial out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                const DivisorPolynomial child = expand(n.children[i], hPrimeDegree);
                out = n.signs[i] > 0 ? out + child : out - child;
            }
            return out;
        }
    }
    return {};
}

/// Parses, expands, checks homogeneity of degree k, and evaluates against
/// the intersection tables.
inline Int evaluate(std::string_view source, const BaseLocusNumbers& base,
                    const Int& hPrimeDegree) {
    const Node ast = parse(source);
    const DivisorPolynomial poly = expand(ast, hPrimeDegree);
    for (const auto& t : poly.terms())
        if (t.hExp + t.eExp != base.k) {
            std::string monomial;
            if (t.hExp > 0) monomial += "H^" + std::to_string(t.hExp);
            if (t.eExp > 0) monomial += (monomial.empty() ? "" : "*") + std::string("E^") +
                                        std::to_string(t.eExp);
            if (monomial.empty()) monomial = "1";
            throw std::domain_error("expression is not homogeneous of degree " +
                                    std::to_string(base.k) + ": offending monomial " + monomial);
        }
    return poly.evaluate(base);
}

}  // namespace quadbir::expr
