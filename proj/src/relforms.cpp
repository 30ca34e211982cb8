#include "relcycles/relforms.hpp"

#include <bit>
#include <sstream>

#include "relcycles/error.hpp"

namespace relcycles::relforms {

namespace {

constexpr WedgeMask bit(std::size_t i) { return static_cast<WedgeMask>(1u << i); }

// Sign of moving e_j to its sorted place in e_j ^ e_mask.
int insertion_sign(std::size_t j, WedgeMask mask) {
    const int below = std::popcount(static_cast<unsigned>(mask & (bit(j) - 1)));
    return below % 2 ? -1 : 1;
}

// Sign of e_a ^ e_b relative to e_{a|b}; 0 when they share a symbol.
int wedge_sign(WedgeMask a, WedgeMask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (std::size_t i = 0; i < kMaxFormVars; ++i)
        if (a & bit(i)) inversions += std::popcount(static_cast<unsigned>(b & (bit(i) - 1)));
    return inversions % 2 ? -1 : 1;
}

// D_j = x_j d/dx_j (log) or d/dx_j on a Laurent polynomial.
SparsePoly derivation(const SparsePoly& c, std::size_t j, bool log) {
    SparsePoly out(c.field(), c.nvars());
    for (const auto& [m, v] : c.terms()) {
        const int e = m[j];
        if (e == 0) continue;
        Monomial n = m;
        if (!log) n[j] = static_cast<std::int16_t>(e - 1);
        out.add_term(n, v * Scalar(c.field(), e));
    }
    return out;
}

bool is_polynomial(const SparsePoly& c) {
    for (const auto& [m, v] : c.terms())
        for (std::size_t i = 0; i < c.nvars(); ++i)
            if (m[i] < 0) return false;
    return true;
}

SparsePoly variable_power(const Ambient& amb, std::size_t i, int power) {
    SparsePoly out(amb.field, amb.nvars);
    out.add_term(Monomial::unit(i, power), Scalar::one(amb.field));
    return out;
}

void check_coordinate(const Ambient& amb, std::size_t i) {
    if (i >= amb.nvars) throw Error(ErrorKind::BadIndex, "coordinate " + std::to_string(i) + " of " + std::to_string(amb.nvars));
}

std::string coefficient_string(const SparsePoly& c, const std::vector<std::string>& names) {
    const std::string s = c.to_string(names);
    return c.size() == 1 ? s : "(" + s + ")";
}

} // namespace

Ambient Ambient::make(Field field, std::size_t nvars, std::vector<int> mult, std::vector<bool> in_F,
                      std::vector<std::string> names) {
    if (nvars < 1 || nvars > kMaxFormVars)
        throw Error(ErrorKind::InvalidArgument, "form ambient needs 1..4 variables, got " + std::to_string(nvars));
    if (mult.empty()) mult.assign(nvars, 0);
    if (in_F.empty()) in_F.assign(nvars, false);
    if (names.empty())
        for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    if (mult.size() != nvars || in_F.size() != nvars || names.size() != nvars)
        throw Error(ErrorKind::InvalidArgument, "ambient data must have one entry per variable");
    for (int m : mult)
        if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity " + std::to_string(m));
    return Ambient{field, nvars, std::move(mult), std::move(in_F), std::move(names)};
}

LogForm LogForm::function(const Ambient& amb, const SparsePoly& c) {
    LogForm out(amb);
    out.add_term(0, c);
    return out;
}

LogForm LogForm::basis(const Ambient& amb, std::size_t i) {
    check_coordinate(amb, i);
    LogForm out(amb);
    out.add_term(bit(i), SparsePoly::one(amb.field, amb.nvars));
    return out;
}

LogForm LogForm::dx(const Ambient& amb, std::size_t i) {
    check_coordinate(amb, i);
    LogForm out(amb);
    out.add_term(bit(i), amb.is_log(i) ? variable_power(amb, i, 1) : SparsePoly::one(amb.field, amb.nvars));
    return out;
}

LogForm LogForm::dlog(const Ambient& amb, std::size_t i) {
    check_coordinate(amb, i);
    LogForm out(amb);
    out.add_term(bit(i), amb.is_log(i) ? SparsePoly::one(amb.field, amb.nvars) : variable_power(amb, i, -1));
    return out;
}

SparsePoly LogForm::monomial(const Ambient& amb, const std::vector<int>& e, const Scalar& c) {
    if (e.size() != amb.nvars) throw Error(ErrorKind::InvalidArgument, "exponent vector length");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = static_cast<std::int16_t>(e[i]);
    SparsePoly out(amb.field, amb.nvars);
    out.add_term(m, c);
    return out;
}

SparsePoly LogForm::coefficient(WedgeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? SparsePoly(amb_.field, amb_.nvars) : it->second;
}

void LogForm::add_term(WedgeMask mask, const SparsePoly& c) {
    if (mask >> amb_.nvars) throw Error(ErrorKind::BadIndex, "wedge symbol beyond the ambient variables");
    if (!(c.field() == amb_.field) ) throw Error(ErrorKind::FieldMismatch, "form coefficient");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LogForm::require_same(const LogForm& o) const {
    if (!(amb_ == o.amb_)) throw Error(ErrorKind::InvalidArgument, "forms on different ambients");
}

LogForm& LogForm::operator+=(const LogForm& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LogForm& LogForm::operator-=(const LogForm& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LogForm LogForm::operator-() const {
    LogForm out(amb_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

LogForm LogForm::times(const SparsePoly& c) const {
    LogForm out(amb_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

LogForm LogForm::times(const Scalar& c) const {
    LogForm out(amb_);
    for (const auto& [m, v] : terms_) out.add_term(m, v.scaled(c));
    return out;
}

LogForm LogForm::restricted(std::size_t var) const {
    check_coordinate(amb_, var);
    LogForm out(amb_);
    for (const auto& [mask, c] : terms_) {
        SparsePoly r(amb_.field, amb_.nvars);
        for (const auto& [m, v] : c.terms())
            if (m[var] < 1) r.add_term(m, v);
        out.add_term(mask, r);
    }
    return out;
}

std::string LogForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string symbols;
        for (std::size_t i = 0; i < amb_.nvars; ++i) {
            if (!(mask & bit(i))) continue;
            if (!symbols.empty()) symbols += " ^ ";
            symbols += (amb_.is_log(i) ? "dlog(" : "d(") + amb_.names[i] + ")";
        }
        const bool unit = c == SparsePoly::one(amb_.field, amb_.nvars);
        if (symbols.empty()) os << coefficient_string(c, amb_.names);
        else if (unit) os << symbols;
        else os << coefficient_string(c, amb_.names) << " * " << symbols;
    }
    return os.str();
}

int wedge_degree(WedgeMask mask) noexcept { return std::popcount(static_cast<unsigned>(mask)); }

LogForm wedge(const LogForm& a, const LogForm& b) {
    if (!(a.ambient() == b.ambient())) throw Error(ErrorKind::InvalidArgument, "wedge of forms on different ambients");
    LogForm out(a.ambient());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const int sign = wedge_sign(ma, mb);
            if (sign == 0) continue;
            const SparsePoly c = ca * cb;
            out.add_term(static_cast<WedgeMask>(ma | mb), sign > 0 ? c : -c);
        }
    }
    return out;
}

LogForm ext_d(const LogForm& w) {
    const Ambient& amb = w.ambient();
    LogForm out(amb);
    for (const auto& [mask, c] : w.terms()) {
        for (std::size_t j = 0; j < amb.nvars; ++j) {
            if (mask & bit(j)) continue;
            const SparsePoly dc = derivation(c, j, amb.is_log(j));
            out.add_term(static_cast<WedgeMask>(mask | bit(j)), insertion_sign(j, mask) > 0 ? dc : -dc);
        }
    }
    return out;
}

bool in_relative_module(const LogForm& w) {
    const Ambient& amb = w.ambient();
    for (const auto& [mask, c] : w.terms())
        for (const auto& [m, v] : c.terms())
            for (std::size_t i = 0; i < amb.nvars; ++i)
                if (m[i] < amb.mult[i]) return false;
    return true;
}

LocalizedForm LocalizedForm::of(const LogForm& w) {
    return LocalizedForm{w, SparsePoly::one(w.ambient().field, w.ambient().nvars)};
}

LocalizedForm& LocalizedForm::operator+=(const LocalizedForm& o) {
    numer = numer.times(o.denom) + o.numer.times(denom);
    denom = denom * o.denom;
    return *this;
}

LocalizedForm& LocalizedForm::operator-=(const LocalizedForm& o) {
    numer = numer.times(o.denom) - o.numer.times(denom);
    denom = denom * o.denom;
    return *this;
}

std::string LocalizedForm::to_string() const {
    return "(" + numer.to_string() + ") / (" + denom.to_string(numer.ambient().names) + ")";
}

LocalizedForm wedge(const LocalizedForm& a, const LocalizedForm& b) {
    return LocalizedForm{wedge(a.numer, b.numer), a.denom * b.denom};
}

bool equivalent(const LocalizedForm& a, const LocalizedForm& b) {
    return a.numer.times(b.denom) == b.numer.times(a.denom);
}

LocalizedForm dlog_of(const Ambient& amb, const SparsePoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "dlog of zero");
    return LocalizedForm{ext_d(LogForm::function(amb, f)), f};
}

LocalizedForm fundamental_cocycle(const Ambient& amb, const std::vector<SparsePoly>& fs) {
    LocalizedForm out = LocalizedForm::of(LogForm::function(amb, SparsePoly::one(amb.field, amb.nvars)));
    for (const SparsePoly& f : fs) out = wedge(out, dlog_of(amb, f));
    return out;
}

std::string DlogCertificate::to_string() const {
    const auto& names = numerator.ambient().names;
    return "dlog(f/s) = " + lhs.to_string() + "\nnumerator: " + numerator.to_string() + "\ndenominator: " +
           denominator.to_string(names) + "\nin_module: " + (in_module ? "true" : "false");
}

DlogCertificate dlog_modulus_check(const Ambient& amb, std::size_t s, std::size_t pi, const SparsePoly& a,
                                   const std::vector<SparsePoly>& extras) {
    check_coordinate(amb, s);
    check_coordinate(amb, pi);
    if (s == pi) throw Error(ErrorKind::InvalidArgument, "s and pi must be distinct coordinates");
    const SparsePoly sv = variable_power(amb, s, 1);
    const SparsePoly piv = variable_power(amb, pi, 1);
    const SparsePoly f = sv + piv * a;
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "f = s + pi a vanishes");

    DlogCertificate cert{dlog_of(amb, f) - dlog_of(amb, sv), LocalizedForm::of(LogForm(amb)), LogForm(amb), f, false};

    const LocalizedForm dlog_s = dlog_of(amb, sv);
    const LocalizedForm dlog_pi = dlog_of(amb, piv);
    const LocalizedForm a_fn = LocalizedForm::of(LogForm::function(amb, a));
    LocalizedForm bracket = LocalizedForm::of(ext_d(LogForm::function(amb, a)));
    bracket -= wedge(a_fn, dlog_s);
    bracket += wedge(a_fn, dlog_pi);
    cert.rhs = wedge(LocalizedForm{LogForm::function(amb, piv), f}, bracket);
    if (!equivalent(cert.lhs, cert.rhs))
        throw Error(ErrorKind::InternalInvariantViolation, "dlog(f/s) identity fails for a = " + a.to_string(amb.names));

    // In the log basis dlog s and dlog pi have unit coefficients, so the bracket is polynomial.
    LogForm core = ext_d(LogForm::function(amb, a));
    core -= wedge(LogForm::function(amb, a), LogForm::dlog(amb, s));
    core += wedge(LogForm::function(amb, a), LogForm::dlog(amb, pi));
    if (!equivalent(cert.rhs, LocalizedForm{core.times(piv), f}))
        throw Error(ErrorKind::InternalInvariantViolation, "bracket of the dlog identity is not polynomial");
    cert.numerator = core.times(piv);
    for (const SparsePoly& e : extras) {
        const LocalizedForm de = dlog_of(amb, e);
        cert.numerator = wedge(cert.numerator, de.numer);
        cert.denominator = cert.denominator * de.denom;
    }
    cert.in_module = in_relative_module(cert.numerator);
    return cert;
}

TwistedPiece::TwistedPiece(std::vector<int> m, std::size_t nu, const LogForm& form)
    : m_(std::move(m)), nu_(nu), form_(form.ambient()) {
    const Ambient& amb = form.ambient();
    check_coordinate(amb, nu);
    if (m_.size() != amb.nvars) throw Error(ErrorKind::InvalidArgument, "twist index length");
    if (!amb.is_log(nu)) throw Error(ErrorKind::InvalidArgument, "nu must index a component of D + F");
    for (std::size_t i = 0; i < amb.nvars; ++i)
        if (m_[i] != 0 && !amb.is_log(i)) throw Error(ErrorKind::InvalidArgument, "twist off D + F at coordinate " + std::to_string(i));
    form_ = form.restricted(nu);
}

std::string TwistedPiece::to_string() const {
    std::string twist;
    const Ambient& amb = form_.ambient();
    for (std::size_t i = 0; i < amb.nvars; ++i) {
        if (m_[i] == 0) continue;
        if (!twist.empty()) twist += "*";
        twist += amb.names[i] + "^" + std::to_string(m_[i]);
    }
    if (twist.empty()) twist = "1";
    return twist + " (x) [" + form_.to_string() + "] mod " + amb.names[nu_];
}

TwistedPiece twisted_d(const TwistedPiece& w) {
    const Ambient& amb = w.form().ambient();
    LogForm out = ext_d(w.form());
    for (std::size_t i = 0; i < amb.nvars; ++i)
        if (w.m()[i] != 0) out += wedge(LogForm::basis(amb, i), w.form()).times(Scalar(amb.field, w.m()[i]));
    return w.with_form(out);
}

TwistedPiece residue(const TwistedPiece& w) {
    const Ambient& amb = w.form().ambient();
    LogForm out(amb);
    const WedgeMask b = bit(w.nu());
    for (const auto& [mask, c] : w.form().terms()) {
        if (!(mask & b)) continue;
        out.add_term(static_cast<WedgeMask>(mask & ~b), insertion_sign(w.nu(), mask) > 0 ? c : -c);
    }
    return w.with_form(out);
}

HomotopyCheck homotopy_identity_check(const TwistedPiece& w) {
    const Ambient& amb = w.form().ambient();
    const LogForm lhs = twisted_d(residue(w)).form() + residue(twisted_d(w)).form();
    const LogForm rhs = w.form().times(Scalar(amb.field, w.m()[w.nu()]));
    return HomotopyCheck{lhs == rhs, lhs, rhs};
}

namespace {

void monomials_rec(std::size_t nvars, std::size_t skip, int budget, std::size_t i, std::vector<int>& e,
                   std::vector<std::vector<int>>& out) {
    if (i == nvars) {
        out.push_back(e);
        return;
    }
    const int top = i == skip ? 0 : budget;
    for (int k = 0; k <= top; ++k) {
        e[i] = k;
        monomials_rec(nvars, skip, budget - k, i + 1, e, out);
    }
    e[i] = 0;
}

std::vector<std::vector<int>> monomials(std::size_t nvars, std::size_t skip, int max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(nvars, 0);
    monomials_rec(nvars, skip, max_degree, 0, e, out);
    return out;
}

} // namespace

std::vector<TwistedPiece> twisted_monomial_basis(const Ambient& amb, const std::vector<int>& m, std::size_t nu, int max_degree) {
    std::vector<TwistedPiece> out;
    const auto monos = monomials(amb.nvars, nu, max_degree);
    for (unsigned mask = 0; mask < (1u << amb.nvars); ++mask) {
        for (const auto& e : monos) {
            LogForm w(amb);
            w.add_term(static_cast<WedgeMask>(mask), LogForm::monomial(amb, e, Scalar::one(amb.field)));
            out.emplace_back(m, nu, w);
        }
    }
    return out;
}

std::string ContainmentCertificate::to_string() const {
    std::string orders;
    for (int k : pole_orders) orders += (orders.empty() ? "" : ",") + std::to_string(k);
    return std::string(member ? "member" : "not a member") + "; pole orders (" + orders + "); rewritten: " + rewritten.to_string();
}

ContainmentCertificate closed_form_containment(const LogForm& w) {
    const Ambient& amb = w.ambient();
    for (const auto& [mask, c] : w.terms())
        if (wedge_degree(mask) != 1) throw Error(ErrorKind::PreconditionFailed, "containment needs a 1-form");
    if (!ext_d(w).is_zero()) throw Error(ErrorKind::PreconditionFailed, "form is not closed: d w = " + ext_d(w).to_string());
    // w in Omega^1(D): the dx_i coefficient times prod x^n is polynomial.
    for (const auto& [mask, c] : w.terms()) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
        for (const auto& [m, v] : c.terms()) {
            for (std::size_t j = 0; j < amb.nvars; ++j) {
                const int e = m[j] - (j == i && amb.is_log(i) ? 1 : 0) + amb.mult[j];
                if (e < 0) throw Error(ErrorKind::PreconditionFailed, "form has a pole beyond D along " + amb.names[j]);
            }
        }
    }
    ContainmentCertificate cert{true, std::vector<int>(amb.nvars, 0), LogForm(amb)};
    std::vector<int> shift(amb.nvars, 0);
    for (std::size_t i = 0; i < amb.nvars; ++i)
        if (amb.mult[i] > 0) shift[i] = cert.pole_orders[i] = amb.mult[i] - 1;
    // Target Omega^1(log D): same log symbols, no vanishing condition.
    std::vector<bool> log_flags(amb.nvars);
    for (std::size_t i = 0; i < amb.nvars; ++i) log_flags[i] = amb.is_log(i);
    cert.rewritten = LogForm(Ambient::make(amb.field, amb.nvars, {}, log_flags, amb.names));
    const SparsePoly clear = LogForm::monomial(amb, shift, Scalar::one(amb.field));
    for (const auto& [mask, c] : w.terms()) {
        const SparsePoly r = c * clear;
        if (!is_polynomial(r)) cert.member = false;
        cert.rewritten.add_term(mask, r);
    }
    return cert;
}

std::vector<LogForm> containment_generators(const Ambient& amb, int max_u_degree) {
    std::vector<LogForm> out;
    const auto us = monomials(amb.nvars, amb.nvars, max_u_degree);
    for (std::size_t i = 0; i < amb.nvars; ++i) {
        const int n = amb.mult[i];
        if (n == 0) continue;
        for (int j = 1; j <= n - 1; ++j) {
            for (auto e : us) {
                e[i] -= j;
                out.push_back(ext_d(LogForm::function(amb, LogForm::monomial(amb, e, Scalar::one(amb.field)))));
            }
        }
        out.push_back(LogForm::dlog(amb, i).times(variable_power(amb, i, -(n - 1))));
    }
    return out;
}

SparsePoly random_poly(const Ambient& amb, Rng& rng, int max_degree, int terms) {
    SparsePoly out(amb.field, amb.nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(amb.nvars, 0);
        int budget = static_cast<int>(rng.between(0, max_degree));
        for (std::size_t i = 0; i < amb.nvars && budget > 0; ++i) {
            const int k = static_cast<int>(rng.between(0, budget));
            e[rng.below(amb.nvars)] += k;
            budget -= k;
        }
        out += LogForm::monomial(amb, e, rng.scalar(amb.field));
    }
    return out;
}

LogForm random_form(const Ambient& amb, Rng& rng, int r, int max_degree) {
    if (r < 0 || static_cast<std::size_t>(r) > amb.nvars) throw Error(ErrorKind::InvalidArgument, "form degree " + std::to_string(r));
    LogForm out(amb);
    for (unsigned mask = 0; mask < (1u << amb.nvars); ++mask)
        if (wedge_degree(static_cast<WedgeMask>(mask)) == r) out.add_term(static_cast<WedgeMask>(mask), random_poly(amb, rng, max_degree));
    return out;
}

} // namespace relcycles::relforms
