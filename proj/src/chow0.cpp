#include "relcycles/chow0.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relcycles/error.hpp"
#include "relcycles/expr.hpp"
#include "relcycles/factor.hpp"

namespace relcycles::chow0 {

namespace {

UPoly one_poly(Field f) { return UPoly::constant(Scalar::one(f)); }

UPoly lcm(const UPoly& a, const UPoly& b) { return (a / gcd(a, b) * b).monic(); }

void require_same_field(Field a, Field b, const char* what) {
    if (!(a == b)) throw Error(ErrorKind::FieldMismatch, what);
}

// Local uniformizer expansion of P: the polynomial to reduce modulo, and the
// image of a finite point polynomial in that chart.
UPoly chart_image(const UPoly& pi, const ClosedPoint& at) { return at.is_infinity() ? pi.reversed() : pi; }

UPoly chart_modulus(const ClosedPoint& p, long n) {
    if (p.is_infinity()) return UPoly::monomial(Scalar::one(p.field()), static_cast<std::size_t>(n));
    return p.polynomial().pow(static_cast<unsigned long>(n));
}

} // namespace

// ---------------------------------------------------------------- points

ClosedPoint ClosedPoint::finite(UPoly pi) {
    if (pi.degree() < 1 || !pi.leading().is_one())
        throw Error(ErrorKind::InvalidArgument, "point polynomial must be monic of positive degree: " + pi.to_string());
    if (pi.field().is_rationals() && pi.degree() != 1)
        throw Error(ErrorKind::Unsupported, "over Q only rational points are supported: " + pi.to_string());
    if (!is_irreducible(pi)) throw Error(ErrorKind::InvalidArgument, "point polynomial is reducible: " + pi.to_string());
    const Field f = pi.field();
    return ClosedPoint(f, std::move(pi));
}

ClosedPoint ClosedPoint::rational(const Scalar& c) {
    return ClosedPoint(c.field(), UPoly::x(c.field()) - UPoly::constant(c));
}

const UPoly& ClosedPoint::polynomial() const {
    if (!pi_) throw Error(ErrorKind::InvalidArgument, "the point at infinity has no polynomial");
    return *pi_;
}

std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
    return *a.pi_ <=> *b.pi_;
}

std::string ClosedPoint::to_string() const {
    if (!pi_) return "[inf]";
    if (pi_->degree() == 1) return "[" + (-pi_->coeff(0)).to_string() + "]";
    return "[" + pi_->to_string() + "]";
}

// ---------------------------------------------------------------- divisors

Divisor Divisor::point(const ClosedPoint& p, long mult) {
    Divisor d(p.field());
    d.add(p, mult);
    return d;
}

long Divisor::coefficient(const ClosedPoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : terms_) d += m * p.degree();
    return d;
}

bool Divisor::meets(const Divisor& other) const {
    for (const auto& [p, m] : terms_)
        if (other.terms_.count(p)) return true;
    return false;
}

Divisor& Divisor::add(const ClosedPoint& p, long mult) {
    require_same_field(field_, p.field(), "divisor point");
    if (mult == 0) return *this;
    long& v = terms_[p];
    v += mult;
    if (v == 0) terms_.erase(p);
    return *this;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, m] : o.terms_) add(p, m);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, m] : o.terms_) add(p, -m);
    return *this;
}

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::scaled(long k) const {
    Divisor out(field_);
    for (const auto& [p, m] : terms_) out.add(p, k * m);
    return out;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, m] : terms_) {
        if (first) s += m < 0 ? "-" : "";
        else s += m < 0 ? " - " : " + ";
        s += std::to_string(m < 0 ? -m : m) + "*" + p.to_string();
        first = false;
    }
    return s;
}

void require_modulus(const Divisor& d) {
    if (d.is_zero() || !d.is_effective()) throw Error(ErrorKind::InvalidArgument, "modulus must be a nonzero effective divisor: " + d.to_string());
}

Divisor parse_divisor(const std::string& text, Field field) {
    Divisor out(field);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(1, pos + 1, msg);
    };
    skip();
    if (pos == text.size()) throw fail("empty divisor");
    long sign = 1;
    if (text[pos] == '-') {
        sign = -1;
        ++pos;
        skip();
    }
    while (pos < text.size()) {
        long mult = 1;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            mult = std::stol(text.substr(pos, end - pos));
            pos = end;
            skip();
            if (pos >= text.size() || text[pos] != '*') throw fail("expected '*' after multiplicity");
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
        const std::size_t close = text.find(']', pos);
        if (close == std::string::npos) throw fail("unterminated '['");
        std::string body = text.substr(pos + 1, close - pos - 1);
        body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }), body.end());
        if (mult <= 0) throw fail("multiplicity must be positive");
        if (body == "inf") {
            out.add(ClosedPoint::infinity(field), sign * mult);
        } else {
            const RationalExpr e = parse_expression(body, field);
            if (!e.den.is_zero() && (e.den.size() != 1 || !e.den.constant_term().is_one() || e.num.involves(kVarY)))
                throw fail("point must be given by a polynomial in x");
            for (std::size_t v = 1; v < kExprVars; ++v)
                if (e.num.involves(v)) throw fail("point must be given by a polynomial in x");
            const UPoly p = to_univariate(e.num, kVarX);
            if (p.degree() <= 0) out.add(ClosedPoint::rational(p.coeff(0)), sign * mult);
            else out.add(ClosedPoint::finite(p.monic()), sign * mult);
        }
        pos = close + 1;
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip();
        if (pos == text.size()) throw fail("expected a term after the sign");
    }
    return out;
}

// ---------------------------------------------------------------- rational functions

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field(), "rational function");
    if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = one_poly(num_.field());
        return;
    }
    const UPoly g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
    const Scalar lc = den_.leading().inverse();
    num_ *= lc;
    den_ *= lc;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::pow(unsigned long e) const { return RationalFunction(num_.pow(e), den_.pow(e)); }

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

long valuation(const RationalFunction& g, const ClosedPoint& p) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of the zero function");
    if (p.is_infinity()) return g.den().degree() - g.num().degree();
    return valuation_at(g.num(), p.polynomial()) - valuation_at(g.den(), p.polynomial());
}

Divisor principal_divisor(const RationalFunction& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroFunction, "divisor of the zero function");
    const Field f = g.field();
    Divisor d(f);
    for (const auto& [pi, e] : factor(g.num()).factors) d.add(ClosedPoint::finite(pi), e);
    for (const auto& [pi, e] : factor(g.den()).factors) d.add(ClosedPoint::finite(pi), -e);
    d.add(ClosedPoint::infinity(f), g.den().degree() - g.num().degree());
    return d;
}

bool in_G(const RationalFunction& g, const Divisor& modulus) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroFunction, "in_G of the zero function");
    require_same_field(g.field(), modulus.field(), "in_G");
    const UPoly diff = g.num() - g.den();
    for (const auto& [p, n] : modulus.terms()) {
        if (p.is_infinity()) {
            // Unit at infinity and deg den - deg(num - den) >= n.
            if (g.num().degree() != g.den().degree()) return false;
            if (!diff.is_zero() && g.den().degree() - diff.degree() < n) return false;
        } else {
            if (valuation_at(g.den(), p.polynomial()) != 0) return false;
            if (!diff.is_zero() && valuation_at(diff, p.polynomial()) < n) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- residue classes

ResidueClass::ResidueClass(std::vector<Component> components) : comps_(std::move(components)) {
    for (auto& c : comps_) {
        c.value = c.value % c.modulus;
        if (gcd(c.value, c.modulus).degree() != 0)
            throw Error(ErrorKind::InternalInvariantViolation, "residue component at " + c.point.to_string() + " is not a unit");
    }
    normalize();
}

ResidueClass ResidueClass::trivial(const Divisor& modulus) {
    std::vector<Component> comps;
    for (const auto& [p, n] : modulus.terms()) comps.push_back({p, chart_modulus(p, n), one_poly(modulus.field())});
    return ResidueClass(std::move(comps));
}

void ResidueClass::normalize() {
    if (comps_.empty()) return;
    const UPoly& first = comps_.front().value;
    const Scalar lowest = first.coeff(static_cast<std::size_t>(first.valuation()));
    if (lowest.is_one()) return;
    const Scalar inv = lowest.inverse();
    for (auto& c : comps_) c.value *= inv;
}

bool ResidueClass::is_trivial() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.value.degree() == 0 && c.value.leading().is_one(); });
}

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
    if (a.comps_.size() != b.comps_.size()) throw Error(ErrorKind::InvalidArgument, "residue classes for different moduli");
    std::vector<ResidueClass::Component> out;
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
        if (!(a.comps_[i].point == b.comps_[i].point) || !(a.comps_[i].modulus == b.comps_[i].modulus))
            throw Error(ErrorKind::InvalidArgument, "residue classes for different moduli");
        out.push_back({a.comps_[i].point, a.comps_[i].modulus, (a.comps_[i].value * b.comps_[i].value) % a.comps_[i].modulus});
    }
    return ResidueClass(std::move(out));
}

ResidueClass ResidueClass::inverse() const {
    std::vector<Component> out;
    for (const auto& c : comps_) out.push_back({c.point, c.modulus, inverse_mod(c.value, c.modulus)});
    return ResidueClass(std::move(out));
}

bool operator==(const ResidueClass& a, const ResidueClass& b) {
    if (a.comps_.size() != b.comps_.size()) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        if (!(a.comps_[i].point == b.comps_[i].point) || !(a.comps_[i].value == b.comps_[i].value)) return false;
    return true;
}

std::string ResidueClass::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += ", ";
        s += comps_[i].point.to_string() + ": " + comps_[i].value.to_string(comps_[i].point.is_infinity() ? "u" : "x");
    }
    return s + ")";
}

std::string ChowClass::to_string() const { return "deg " + std::to_string(degree) + " " + residue.to_string(); }

// ---------------------------------------------------------------- classes

ClosedPoint default_base_point(const Divisor& modulus) {
    const Field f = modulus.field();
    const ClosedPoint inf = ClosedPoint::infinity(f);
    if (!modulus.coefficient(inf)) return inf;
    const long limit = f.is_rationals() ? static_cast<long>(modulus.terms().size()) + 1 : static_cast<long>(f.characteristic());
    for (long c = 0; c < limit; ++c) {
        const ClosedPoint p = ClosedPoint::rational(Scalar(f, c));
        if (!modulus.coefficient(p)) return p;
    }
    throw Error(ErrorKind::NoBasePoint, "every degree-1 point lies on the modulus " + modulus.to_string());
}

ChowClass chow_class(const Divisor& alpha, const Divisor& modulus, const std::optional<ClosedPoint>& base_in) {
    require_modulus(modulus);
    require_same_field(alpha.field(), modulus.field(), "chow_class");
    if (alpha.meets(modulus)) throw Error(ErrorKind::PreconditionFailed, "cycle meets the modulus: " + alpha.to_string());
    const ClosedPoint base = base_in ? *base_in : default_base_point(modulus);
    if (base.degree() != 1 || modulus.coefficient(base))
        throw Error(ErrorKind::PreconditionFailed, "base point must be a degree-1 point off the modulus: " + base.to_string());
    const long deg = alpha.degree();
    std::vector<ResidueClass::Component> comps;
    for (const auto& [p, n] : modulus.terms()) {
        const UPoly m = chart_modulus(p, n);
        UPoly value = one_poly(alpha.field()) % m;
        // h = prod pi_P^{a_P} * (x - b)^{-deg alpha}; at infinity every factor is read in u = 1/x.
        for (const auto& [q, a] : alpha.terms())
            if (!q.is_infinity()) value = (value * pow_mod(chart_image(q.polynomial(), p), a, m)) % m;
        if (!base.is_infinity() && deg != 0) value = (value * pow_mod(chart_image(base.polynomial(), p), -deg, m)) % m;
        comps.push_back({p, m, value});
    }
    return ChowClass{deg, ResidueClass(std::move(comps))};
}

bool equal_in_chow(const Divisor& alpha, const Divisor& beta, const Divisor& modulus) {
    return chow_class(alpha, modulus) == chow_class(beta, modulus);
}

mpz_class group_order(const Divisor& modulus, std::uint64_t q) {
    require_modulus(modulus);
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "group_order needs q >= 2");
    mpz_class num = 1;
    const mpz_class qq = static_cast<unsigned long>(q);
    for (const auto& [p, n] : modulus.terms()) {
        mpz_class qd;
        mpz_pow_ui(qd.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(p.degree()));
        mpz_class lift;
        mpz_pow_ui(lift.get_mpz_t(), qd.get_mpz_t(), static_cast<unsigned long>(n - 1));
        num *= lift * (qd - 1);
    }
    return num / (qq - 1);
}

std::vector<ClosedPoint> points_off(const Divisor& modulus, long bound) {
    const Field f = modulus.field();
    if (f.is_rationals()) throw Error(ErrorKind::Unsupported, "point enumeration needs a finite field");
    std::vector<ClosedPoint> out;
    for (long d = 1; d <= bound; ++d)
        for (UPoly& pi : monic_irreducibles(f, d)) {
            ClosedPoint p = ClosedPoint::finite(std::move(pi));
            if (!modulus.coefficient(p)) out.push_back(std::move(p));
        }
    const ClosedPoint inf = ClosedPoint::infinity(f);
    if (!modulus.coefficient(inf)) out.push_back(inf);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- oracle

namespace {

IntMatrix relation_rows(const Divisor& modulus, const std::vector<ClosedPoint>& support, long height, std::size_t& count) {
    const Field f = modulus.field();
    std::map<ClosedPoint, std::size_t> index;
    for (std::size_t i = 0; i < support.size(); ++i) index.emplace(support[i], i);
    UPoly m = one_poly(f);
    long n_inf = 0;
    for (const auto& [p, n] : modulus.terms()) {
        if (p.is_infinity()) n_inf = n;
        else m *= p.polynomial().pow(static_cast<unsigned long>(n));
    }
    std::set<IntVector> rows;
    const long room = height - m.degree();
    if (room < 0) return {};
    const std::vector<UPoly> multipliers = polynomials_up_to(f, room);
    for (long dd = 0; dd <= height; ++dd) {
        for (const UPoly& den : monic_polynomials(f, dd)) {
            for (const UPoly& a : multipliers) {
                if (a.is_zero()) continue;
                const UPoly shift = m * a;
                if (n_inf && den.degree() - shift.degree() < n_inf) continue;
                const UPoly num = den + shift;
                if (num.is_zero()) continue;
                const RationalFunction g(num, den);
                if (!in_G(g, modulus)) continue;
                IntVector row(support.size(), 0);
                bool inside = true;
                const Divisor div = principal_divisor(g);
                for (const auto& [p, v] : div.terms()) {
                    auto it = index.find(p);
                    if (it == index.end()) {
                        inside = false;
                        break;
                    }
                    row[it->second] = v;
                }
                if (inside) rows.insert(std::move(row));
            }
        }
    }
    count = rows.size();
    return IntMatrix(rows.begin(), rows.end());
}

} // namespace

ChowOracle::ChowOracle(const Divisor& modulus, long degree_bound, long relation_height)
    : modulus_(modulus),
      support_(points_off(modulus, degree_bound)),
      index_([this] {
          std::map<ClosedPoint, std::size_t> idx;
          for (std::size_t i = 0; i < support_.size(); ++i) idx.emplace(support_[i], i);
          return idx;
      }()),
      smith_(relation_rows(modulus, support_, relation_height, relations_), support_.size()) {}

std::vector<mpz_class> ChowOracle::invariant_factors() const {
    std::vector<mpz_class> out;
    for (std::size_t t = 0; t < smith_.rank(); ++t)
        if (smith_.invariants()[t] > 1) out.push_back(smith_.invariants()[t]);
    return out;
}

std::vector<Divisor> ChowOracle::generators() const {
    std::vector<Divisor> out;
    for (std::size_t t = 0; t < smith_.rank(); ++t) {
        if (smith_.invariants()[t] <= 1) continue;
        Divisor d(modulus_.field());
        for (std::size_t k = 0; k < support_.size(); ++k) d.add(support_[k], smith_.v_inverse()[t][k].get_si());
        out.push_back(std::move(d));
    }
    return out;
}

IntVector ChowOracle::classify(const Divisor& alpha) const {
    IntVector v(support_.size(), 0);
    for (const auto& [p, m] : alpha.terms()) {
        auto it = index_.find(p);
        if (it == index_.end()) throw Error(ErrorKind::PreconditionFailed, "cycle leaves the oracle support at " + p.to_string());
        v[it->second] = m;
    }
    return smith_.reduce(v);
}

ChowOracle brute_force_chow(const Divisor& modulus, std::uint64_t q, long degree_bound, long relation_height) {
    require_modulus(modulus);
    if (q > 9) throw Error(ErrorKind::ResourceBound, "oracle limited to q <= 9");
    if (!is_prime_number(q)) throw Error(ErrorKind::Unsupported, "oracle supports prime q only, got " + std::to_string(q));
    if (!(modulus.field() == Field::prime(static_cast<std::uint32_t>(q))))
        throw Error(ErrorKind::FieldMismatch, "modulus is not defined over F_" + std::to_string(q));
    if (degree_bound < 1 || degree_bound > 4) throw Error(ErrorKind::ResourceBound, "degree bound must lie in [1, 4]");
    for (const auto& [p, n] : modulus.terms())
        if (p.degree() > 2) throw Error(ErrorKind::ResourceBound, "oracle limited to modulus points of degree <= 2");
    if (relation_height < 0) relation_height = degree_bound;
    if (relation_height > 5) throw Error(ErrorKind::ResourceBound, "relation height must be <= 5");
    return ChowOracle(modulus, degree_bound, relation_height);
}

namespace {

void effective_of_degree(const std::vector<ClosedPoint>& pts, std::size_t from, long degree, Divisor& cur, std::vector<Divisor>& out) {
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
        if (pts[i].degree() > degree) continue;
        cur.add(pts[i], 1);
        effective_of_degree(pts, i, degree - pts[i].degree(), cur, out);
        cur.add(pts[i], -1);
    }
}

} // namespace

SeparationReport check_separation(const ChowOracle& oracle, const Divisor& modulus, long max_degree) {
    SeparationReport report;
    std::map<IntVector, std::string> by_oracle;
    std::map<std::string, IntVector> by_invariant;
    std::map<IntVector, Divisor> witness;
    auto visit = [&](const Divisor& alpha) {
        ++report.cycles;
        const IntVector key = oracle.classify(alpha);
        const std::string inv = chow_class(alpha, modulus).to_string();
        auto [it, fresh] = by_oracle.emplace(key, inv);
        auto [jt, fresh_inv] = by_invariant.emplace(inv, key);
        if (fresh) witness.emplace(key, alpha);
        if ((!fresh && it->second != inv) || (!fresh_inv && jt->second != key)) {
            if (report.consistent) report.counterexample = std::make_pair(alpha, witness.at(fresh ? jt->second : key));
            report.consistent = false;
        }
    };
    visit(Divisor(modulus.field()));
    for (long d = 1; d <= max_degree; ++d) {
        std::vector<Divisor> eff;
        Divisor cur(modulus.field());
        effective_of_degree(oracle.support(), 0, d, cur, eff);
        for (std::size_t i = 0; i < eff.size(); ++i)
            for (std::size_t j = i + 1; j < eff.size(); ++j) visit(eff[i] - eff[j]);
    }
    report.oracle_classes = by_oracle.size();
    report.invariant_classes = by_invariant.size();
    return report;
}

// ---------------------------------------------------------------- curves

CurveCycle::CurveCycle(std::vector<RationalFunction> coeffs, const Divisor& modulus) : a_(std::move(coeffs)) {
    require_modulus(modulus);
    if (a_.size() < 2) throw Error(ErrorKind::NotAdmissible, "cycle needs degree >= 1 in y");
    if (!(a_[0] == RationalFunction::one(modulus.field()))) throw Error(ErrorKind::NotAdmissible, "leading coefficient a_0 must be 1");
    for (std::size_t nu = 1; nu < a_.size(); ++nu) {
        if (a_[nu].is_zero()) continue;
        for (const auto& [p, n] : modulus.terms()) {
            const long need = static_cast<long>(nu) * n;
            if (valuation(a_[nu], p) < need)
                throw Error(ErrorKind::NotAdmissible, "a_" + std::to_string(nu) + " = " + a_[nu].to_string() + " has order " +
                                                          std::to_string(valuation(a_[nu], p)) + " < " + std::to_string(need) + " at " + p.to_string());
        }
    }
}

std::string CurveCycle::to_string() const {
    const std::size_t m = degree_in_y();
    std::string s;
    for (std::size_t nu = 0; nu <= m; ++nu) {
        if (a_[nu].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string mono = m - nu == 0 ? "" : (m - nu == 1 ? "(1-y)" : "(1-y)^" + std::to_string(m - nu));
        if (nu == 0) s += mono.empty() ? "1" : mono;
        else s += "(" + a_[nu].to_string() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    return s;
}

RationalFunction norm_of_coordinate(const CurveCycle& f) {
    RationalFunction n = RationalFunction::one(f.coeffs()[0].field());
    n -= n;
    for (const auto& a : f.coeffs()) n += a;
    return n;
}

CurveCycle graph_cycle(const RationalFunction& g, const Divisor& modulus) {
    if (g.is_zero() || !in_G(g, modulus)) throw Error(ErrorKind::NotInG, g.to_string() + " is not in G(P^1, " + modulus.to_string() + ")");
    return CurveCycle({RationalFunction::one(g.field()), g - RationalFunction::one(g.field())}, modulus);
}

Divisor cycle_boundary(const CurveCycle& f) {
    const Field field = f.coeffs()[0].field();
    const std::size_t m = f.degree_in_y();
    UPoly l = one_poly(field);
    for (const auto& a : f.coeffs()) l = lcm(l, a.den());
    // F(x, y) = L * f in k[x, y]; variable 0 is x, variable 1 is y.
    auto lift = [&](const UPoly& p) {
        SparsePoly out(field, 2);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(Monomial::unit(0, static_cast<int>(i)), p.coeffs()[i]);
        return out;
    };
    const SparsePoly s = SparsePoly::one(field, 2) - SparsePoly::variable(field, 2, 1);
    SparsePoly big(field, 2);
    for (std::size_t nu = 0; nu <= m; ++nu) {
        const auto& a = f.coeffs()[nu];
        if (a.is_zero()) continue;
        big += lift(a.num() * (l / a.den())) * s.pow(static_cast<unsigned>(m - nu));
    }
    // V meets y = 0 along F(x, 0) and y = inf along the top y-coefficient.
    // Vertical components divide both and cancel; x = inf is read off the
    // homogenizing degree.
    const UPoly at_zero = to_univariate(big.substitute_and_drop(1, Scalar::zero(field)), 0);
    SparsePoly top(field, 1);
    long x_degree = 0;
    for (const auto& [mono, c] : big.terms()) {
        x_degree = std::max<long>(x_degree, mono[0]);
        if (mono[1] == static_cast<int>(m)) top.add_term(Monomial::unit(0, mono[0]), c);
    }
    const UPoly at_inf = to_univariate(top, 0);
    Divisor d(field);
    for (const auto& [pi, e] : factor(at_zero).factors) d.add(ClosedPoint::finite(pi), e);
    for (const auto& [pi, e] : factor(at_inf).factors) d.add(ClosedPoint::finite(pi), -e);
    d.add(ClosedPoint::infinity(field), (x_degree - at_zero.degree()) - (x_degree - at_inf.degree()));
    return d;
}

namespace {

struct ModulusParts {
    UPoly finite;
    long at_inf = 0;
    std::vector<UPoly> primes;
};

ModulusParts split(const Divisor& modulus) {
    ModulusParts parts{one_poly(modulus.field()), 0, {}};
    for (const auto& [p, n] : modulus.terms()) {
        if (p.is_infinity()) {
            parts.at_inf = n;
        } else {
            parts.finite *= p.polynomial().pow(static_cast<unsigned long>(n));
            parts.primes.push_back(p.polynomial());
        }
    }
    return parts;
}

// Random r with denominator prime to |D| and order >= nu * n_inf at infinity.
RationalFunction random_tail(const ModulusParts& parts, long nu, Rng& rng, Field field) {
    const UPoly mult = parts.finite.pow(static_cast<unsigned long>(nu));
    for (;;) {
        const UPoly num = rng.upoly(field, 2);
        if (num.is_zero()) continue;
        long den_degree = rng.between(0, 2);
        if (parts.at_inf) den_degree = (mult * num).degree() + nu * parts.at_inf + rng.between(0, 1);
        UPoly den = UPoly::monomial(Scalar::one(field), static_cast<std::size_t>(den_degree));
        if (den_degree > 0) den += rng.upoly(field, den_degree - 1);
        bool coprime = true;
        for (const auto& pi : parts.primes) coprime &= gcd(den, pi).degree() == 0;
        if (!coprime) continue;
        return RationalFunction(mult * num, den);
    }
}

} // namespace

RationalFunction random_G_element(const Divisor& modulus, Rng& rng) {
    require_modulus(modulus);
    const ModulusParts parts = split(modulus);
    return RationalFunction::one(modulus.field()) + random_tail(parts, 1, rng, modulus.field());
}

CurveCycle random_curve_cycle(const Divisor& modulus, Rng& rng, std::size_t max_m) {
    require_modulus(modulus);
    const Field field = modulus.field();
    const ModulusParts parts = split(modulus);
    const std::size_t m = static_cast<std::size_t>(rng.between(1, static_cast<long>(std::max<std::size_t>(max_m, 1))));
    std::vector<RationalFunction> a{RationalFunction::one(field)};
    for (std::size_t nu = 1; nu <= m; ++nu) a.push_back(random_tail(parts, static_cast<long>(nu), rng, field));
    return CurveCycle(std::move(a), modulus);
}

} // namespace relcycles::chow0
