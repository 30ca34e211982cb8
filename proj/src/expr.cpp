#include "relcycles/expr.hpp"

#include <cctype>

namespace relcycles {

const std::vector<std::string>& expression_variable_names() {
    static const std::vector<std::string> names = {"x", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "y"};
    return names;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, Field field) : text_(text), field_(field) {}

    RationalExpr parse() {
        RationalExpr e = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly one() const { return SparsePoly::one(field_, kExprVars); }

    RationalExpr add(const RationalExpr& a, const RationalExpr& b, bool subtract) const {
        if (a.den == b.den) return {subtract ? a.num - b.num : a.num + b.num, a.den};
        SparsePoly left = a.num * b.den;
        SparsePoly right = b.num * a.den;
        return {subtract ? left - right : left + right, a.den * b.den};
    }

    RationalExpr expression() {
        RationalExpr acc = term();
        for (;;) {
            if (accept('+')) acc = add(acc, term(), false);
            else if (accept('-')) acc = add(acc, term(), true);
            else return acc;
        }
    }

    RationalExpr term() {
        RationalExpr acc = unary();
        for (;;) {
            if (accept('*')) {
                RationalExpr r = unary();
                acc = {acc.num * r.num, acc.den * r.den};
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RationalExpr r = unary();
                if (r.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = {acc.num * r.den, acc.den * r.num};
            } else {
                return acc;
            }
        }
    }

    RationalExpr unary() {
        if (accept('-')) {
            RationalExpr r = unary();
            return {-r.num, r.den};
        }
        if (accept('+')) return unary();
        return power();
    }

    RationalExpr power() {
        RationalExpr base = primary();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        skip_space();
        const long e = integer_literal();
        if (e > 1000) fail("exponent too large");
        RationalExpr r = {base.num.pow(static_cast<unsigned>(e)), base.den.pow(static_cast<unsigned>(e))};
        if (negative) {
            if (r.num.is_zero()) fail("negative power of zero");
            std::swap(r.num, r.den);
        }
        return r;
    }

    long integer_literal() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 100'000'000) fail("integer literal too large");
            v = v * 10 + (text_[pos_++] - '0');
        }
        return v;
    }

    RationalExpr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalExpr e = expression();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
            const Scalar v(field_, mpq_class(mpz_class(digits)));
            return {SparsePoly::constant(v, kExprVars), one()};
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            const std::size_t var = c == 'x' ? kVarX : kVarY;
            return {SparsePoly::variable(field_, kExprVars, var), one()};
        }
        if (c == 't') {
            ++pos_;
            if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9') fail("expected t1..t9");
            const std::size_t var = kVarT1 + static_cast<std::size_t>(text_[pos_++] - '1');
            return {SparsePoly::variable(field_, kExprVars, var), one()};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Field field_;
    std::size_t pos_ = 0;
};

} // namespace

RationalExpr parse_expression(std::string_view text, Field field) { return Parser(text, field).parse(); }

UPoly to_univariate(const SparsePoly& p, std::size_t var) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(p.degree_in(var)) + 1, Scalar::zero(p.field()));
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (i != var && m[i] != 0)
                throw Error(ErrorKind::InvalidArgument, "expected a polynomial in " + expression_variable_names().at(var) + " only");
        if (m[var] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
        coeffs[static_cast<std::size_t>(m[var])] += c;
    }
    return UPoly(p.field(), std::move(coeffs));
}

LocalElem to_local_elem(const RationalExpr& e) {
    return LocalElem(to_univariate(e.num, kVarX), to_univariate(e.den, kVarX));
}

LocalPoly to_t_poly(const RationalExpr& e, std::size_t arity) {
    if (arity > 9) throw Error(ErrorKind::BadIndex, "arity above 9");
    const Field f = e.num.field();
    const UPoly den = to_univariate(e.den, kVarX);
    // Group numerator terms by their t-monomial, collecting x-polynomials.
    std::map<Monomial, std::vector<Scalar>> grouped;
    for (const auto& [m, c] : e.num.terms()) {
        if (m[kVarY] != 0) throw Error(ErrorKind::InvalidArgument, "y does not belong to the t-polynomial ring");
        Monomial tm;
        for (std::size_t k = 0; k < 9; ++k) {
            if (m[kVarT1 + k] == 0) continue;
            if (k >= arity)
                throw Error(ErrorKind::BadIndex, "t" + std::to_string(k + 1) + " exceeds arity " + std::to_string(arity));
            tm[k] = m[kVarT1 + k];
        }
        auto& xs = grouped.try_emplace(tm).first->second;
        const auto d = static_cast<std::size_t>(m[kVarX]);
        if (xs.size() <= d) xs.resize(d + 1, Scalar::zero(f));
        xs[d] += c;
    }
    LocalPoly out(f, arity);
    for (auto& [tm, xs] : grouped) out.add_term(tm, LocalElem(UPoly(f, std::move(xs)), den));
    return out;
}

LocalPoly evaluate(const LocalPoly& f, const std::map<std::size_t, int>& assignment) {
    LocalPoly out = f;
    for (auto it = assignment.rbegin(); it != assignment.rend(); ++it) {
        if (it->first >= out.nvars()) throw Error(ErrorKind::BadIndex, "variable index " + std::to_string(it->first));
        if (it->second != 0 && it->second != 1) throw Error(ErrorKind::InvalidArgument, "assignments are restricted to {0,1}");
        out = out.substitute_and_drop(it->first, it->second ? LocalElem::one(f.field()) : LocalElem::zero(f.field()));
    }
    return out;
}

} // namespace relcycles
