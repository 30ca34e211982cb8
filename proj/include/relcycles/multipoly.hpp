#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "relcycles/error.hpp"
#include "relcycles/local.hpp"
#include "relcycles/scalar.hpp"

namespace relcycles {

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector. Entries may be negative when a MultiPoly is used as a
/// Laurent polynomial (relforms); everywhere else they are >= 0.
struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    std::int16_t& operator[](std::size_t i) { return e[i]; }
    std::int16_t operator[](std::size_t i) const { return e[i]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
        return m;
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    static Monomial unit(std::size_t var, int power = 1) {
        Monomial m;
        m.e[var] = static_cast<std::int16_t>(power);
        return m;
    }
    /// max_i e_i over the first n entries (0 for n == 0).
    int max_entry(std::size_t n) const {
        int best = 0;
        for (std::size_t i = 0; i < n; ++i) best = std::max<int>(best, e[i]);
        return best;
    }
    int sum(std::size_t n) const {
        int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += e[i];
        return s;
    }
};

/// Sparse polynomial in `nvars` variables with coefficients C. C must provide
/// C::zero(Field), C::one(Field), field(), is_zero(), ring operators and ==.
/// No zero coefficients are stored; the std::map ordering makes equality syntactic.
template <class C>
class MultiPoly {
public:
    using Terms = std::map<Monomial, C>;

    MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {
        if (nvars > kMaxVars) throw Error(ErrorKind::BadIndex, "too many variables: " + std::to_string(nvars));
    }

    static MultiPoly constant(const C& c, std::size_t nvars) {
        MultiPoly p(c.field(), nvars);
        p.add_term(Monomial{}, c);
        return p;
    }
    static MultiPoly one(Field f, std::size_t nvars) { return constant(C::one(f), nvars); }
    static MultiPoly variable(Field f, std::size_t nvars, std::size_t var) {
        MultiPoly p(f, nvars);
        p.add_term(Monomial::unit(var), C::one(f));
        return p;
    }

    Field field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C::zero(field_) : it->second;
    }
    C constant_term() const { return coeff(Monomial{}); }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly out(field_, nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_compatible(b);
        MultiPoly out(a.field_, a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const C& c) const {
        MultiPoly out(field_, nvars_);
        if (c.is_zero()) return out;
        for (const auto& [m, v] : terms_) out.add_term(m, v * c);
        return out;
    }
    MultiPoly shifted(const Monomial& by) const {
        MultiPoly out(field_, nvars_);
        for (const auto& [m, v] : terms_) out.terms_.emplace(m * by, v);
        return out;
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly result = one(field_, nvars_);
        MultiPoly base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Largest exponent of `var` (0 for the zero polynomial).
    int degree_in(std::size_t var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
        return d;
    }
    bool involves(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m[var] != 0) return true;
        return false;
    }

    /// Substitute a constant for `var`, removing it (later variables shift down).
    MultiPoly substitute_and_drop(std::size_t var, const C& value) const {
        check_var(var);
        MultiPoly out(field_, nvars_ - 1);
        for (const auto& [m, c] : terms_) {
            C v = c * value.pow(m[var]);
            out.add_term(drop(m, var), v);
        }
        return out;
    }
    /// Insert a fresh variable at position `var` (later variables shift up).
    MultiPoly insert_variable(std::size_t var) const {
        if (var > nvars_ || nvars_ + 1 > kMaxVars) throw Error(ErrorKind::BadIndex, "insert position " + std::to_string(var));
        MultiPoly out(field_, nvars_ + 1);
        for (const auto& [m, c] : terms_) {
            Monomial n;
            for (std::size_t i = 0, j = 0; i < nvars_ + 1; ++i) n[i] = (i == var) ? 0 : m[j++];
            out.terms_.emplace(n, c);
        }
        return out;
    }
    /// Reinterpret in a wider ring (extra variables appended, unused).
    MultiPoly widened(std::size_t nvars) const {
        MultiPoly out(field_, nvars);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c);
        return out;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "v" + std::to_string(i);
                if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
            }
            const std::string cs = it->second.to_string();
            if (mono.empty()) os << cs;
            else if (cs == "1") os << mono;
            else os << "(" << cs << ")*" << mono;
        }
        return os.str();
    }

    static Monomial drop(const Monomial& m, std::size_t var) {
        Monomial n;
        for (std::size_t i = 0, j = 0; i < kMaxVars; ++i)
            if (i != var) n[j++] = m[i];
        return n;
    }

private:
    void require_compatible(const MultiPoly& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "multivariate operands");
        if (nvars_ != o.nvars_) throw Error(ErrorKind::BadIndex, "arity mismatch " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
    }
    void check_var(std::size_t var) const {
        if (var >= nvars_) throw Error(ErrorKind::BadIndex, "variable " + std::to_string(var) + " of " + std::to_string(nvars_));
    }

    Field field_;
    std::size_t nvars_;
    Terms terms_;
};

using SparsePoly = MultiPoly<Scalar>;
using LocalPoly = MultiPoly<LocalElem>;

/// Exact substitution of 0/1 values into a polynomial over A. Unassigned
/// variables stay symbolic; assigned ones are removed (indices shift down).
LocalPoly evaluate(const LocalPoly& f, const std::map<std::size_t, int>& assignment);

} // namespace relcycles
