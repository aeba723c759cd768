#ifndef HYPERSUM_MULTIPOLY_HPP
#define HYPERSUM_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum::exact {

// Symbol tables are tiny (at most four active symbols per computation) and
// shared by every polynomial in one computation, so a pointer compare usually
// decides compatibility.
class SymbolTable {
public:
    static constexpr std::size_t max_symbols = 4;

    static std::shared_ptr<const SymbolTable> make(std::initializer_list<std::string> names);
    static std::shared_ptr<const SymbolTable> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of `name`; throws SymbolMismatchError when absent.
    std::size_t index(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
        return a.names_ == b.names_;
    }

private:
    explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using Symbols = std::shared_ptr<const SymbolTable>;

// Dense fixed-width exponent vector; unused slots stay zero.
struct Monomial {
    std::array<std::uint16_t, SymbolTable::max_symbols> e{0, 0, 0, 0};

    unsigned degree() const {
        return unsigned(e[0]) + unsigned(e[1]) + unsigned(e[2]) + unsigned(e[3]);
    }
    std::uint64_t packed() const {
        return (std::uint64_t(e[0]) << 48) | (std::uint64_t(e[1]) << 32) |
               (std::uint64_t(e[2]) << 16) | std::uint64_t(e[3]);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic, used both for canonical term order and printing.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.packed() < b.packed();
}

// Multivariate polynomial over Rational in a fixed symbol table.  Terms are
// kept sorted grlex-descending with no zero coefficients; the zero polynomial
// has an empty term list.
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    explicit MultiPoly(Symbols syms) : syms_(std::move(syms)) {}

    static MultiPoly zero(Symbols syms) { return MultiPoly(std::move(syms)); }
    static MultiPoly constant(Symbols syms, Rational c);
    static MultiPoly variable(Symbols syms, const std::string& name, unsigned exponent = 1);

    const Symbols& symbols() const { return syms_; }
    std::span<const Term> terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
    }
    // Requires is_constant().
    Rational constant_value() const;

    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const Rational& c);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Exact evaluation; `point` is indexed by the symbol table order.
    Rational eval(std::span<const Rational> point) const;

    // Positive rational c such that (*this)/c has coprime integer coefficients.
    // Requires a nonzero polynomial.
    Rational content() const;

    // Componentwise minimum exponent over all terms (the largest monomial
    // dividing every term).  Requires a nonzero polynomial.
    Monomial min_exponents() const;
    void divide_by_monomial(const Monomial& m);

    Rational leading_coefficient() const;

    // Canonical sum-of-monomials string, grlex-descending, e.g. "a^2*b - 1/2*a + 5".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

    static void require_same_symbols(const MultiPoly& a, const MultiPoly& b);

private:
    Symbols syms_;
    std::vector<Term> terms_;   // grlex descending, no zero coefficients
};

} // namespace hypersum::exact

#endif
