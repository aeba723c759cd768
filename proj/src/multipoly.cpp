#include "hypersum/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hypersum::exact {

std::shared_ptr<const SymbolTable> SymbolTable::make(std::initializer_list<std::string> names) {
    return make(std::vector<std::string>(names));
}

std::shared_ptr<const SymbolTable> SymbolTable::make(std::vector<std::string> names) {
    if (names.size() > max_symbols)
        throw InvalidParamsError("symbol table limited to 4 symbols");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw InvalidParamsError("duplicate symbol \"" + names[i] + "\"");
    return std::shared_ptr<const SymbolTable>(new SymbolTable(std::move(names)));
}

std::size_t SymbolTable::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw SymbolMismatchError("symbol \"" + name + "\" not in table");
}

bool SymbolTable::contains(const std::string& name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

void MultiPoly::require_same_symbols(const MultiPoly& a, const MultiPoly& b) {
    if (a.syms_ == b.syms_) return;
    if (a.syms_ && b.syms_ && *a.syms_ == *b.syms_) return;
    throw SymbolMismatchError();
}

MultiPoly MultiPoly::constant(Symbols syms, Rational c) {
    MultiPoly p(std::move(syms));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(Symbols syms, const std::string& name, unsigned exponent) {
    std::size_t idx = syms->index(name);
    MultiPoly p(std::move(syms));
    if (exponent == 0) return constant(p.syms_, Rational(1));
    Monomial m;
    m.e[idx] = static_cast<std::uint16_t>(exponent);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].coeff;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(syms_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

namespace {

// Merge of two grlex-descending term lists; `negate` subtracts.
std::vector<MultiPoly::Term> merge_terms(std::span<const MultiPoly::Term> a,
                                         std::span<const MultiPoly::Term> b, bool negate) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono == b[j].mono) {
            Rational c = negate ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_less(b[j].mono, a[i].mono)) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.push_back({b[j].mono, negate ? -b[j].coeff : b[j].coeff});
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, negate ? -b[j].coeff : b[j].coeff});
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_symbols(*this, o);
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_symbols(*this, o);
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_same_symbols(a, b);
    MultiPoly r(a.syms_);
    if (a.terms_.empty() || b.terms_.empty()) return r;

    // Accumulate into a hash map keyed by the packed exponent vector, then
    // sort once.  Exponent sums are range-checked against the 16-bit slots.
    std::unordered_map<std::uint64_t, MultiPoly::Term> acc;
    acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m;
            for (std::size_t s = 0; s < SymbolTable::max_symbols; ++s) {
                unsigned sum = unsigned(ta.mono.e[s]) + unsigned(tb.mono.e[s]);
                if (sum > 0xffffu) throw InvalidParamsError("monomial exponent overflow");
                m.e[s] = static_cast<std::uint16_t>(sum);
            }
            auto [it, inserted] = acc.try_emplace(m.packed(), MultiPoly::Term{m, ta.coeff * tb.coeff});
            if (!inserted) it->second.coeff += ta.coeff * tb.coeff;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [key, term] : acc)
        if (!term.coeff.is_zero()) r.terms_.push_back(std::move(term));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const MultiPoly::Term& x, const MultiPoly::Term& y) {
                  return grlex_less(y.mono, x.mono);
              });
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_same_symbols(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != syms_->size())
        throw InvalidParamsError("evaluation point arity mismatch");
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t s = 0; s < syms_->size(); ++s)
            if (t.mono.e[s] != 0) v *= point[s].pow(t.mono.e[s]);
        total += v;
    }
    return total;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) throw InvalidParamsError("content of zero polynomial");
    // gcd of numerators over lcm of denominators.
    mpz_class num_gcd = terms_[0].coeff.numerator();
    mpz_class den_lcm = terms_[0].coeff.denominator();
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), terms_[i].coeff.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), terms_[i].coeff.denominator().get_mpz_t());
    }
    num_gcd = abs(num_gcd);
    return Rational(num_gcd, den_lcm);
}

Monomial MultiPoly::min_exponents() const {
    if (terms_.empty()) throw InvalidParamsError("min_exponents of zero polynomial");
    Monomial m = terms_[0].mono;
    for (const auto& t : terms_)
        for (std::size_t s = 0; s < SymbolTable::max_symbols; ++s)
            m.e[s] = std::min(m.e[s], t.mono.e[s]);
    return m;
}

void MultiPoly::divide_by_monomial(const Monomial& m) {
    for (auto& t : terms_)
        for (std::size_t s = 0; s < SymbolTable::max_symbols; ++s) {
            if (t.mono.e[s] < m.e[s]) throw InvalidParamsError("monomial does not divide polynomial");
            t.mono.e[s] = static_cast<std::uint16_t>(t.mono.e[s] - m.e[s]);
        }
}

Rational MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].coeff;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;

        bool has_vars = t.mono.degree() > 0;
        if (!has_vars) {
            os << c.to_string();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.to_string();
            printed = true;
        }
        for (std::size_t s = 0; s < syms_->size(); ++s) {
            if (t.mono.e[s] == 0) continue;
            if (printed) os << "*";
            os << syms_->name(s);
            if (t.mono.e[s] > 1) os << "^" << t.mono.e[s];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.to_string();
}

} // namespace hypersum::exact
