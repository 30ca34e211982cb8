#include "relcycles/suites.hpp"

#include <chrono>
#include <sstream>

#include "relcycles/chow0.hpp"
#include "relcycles/error.hpp"
#include "relcycles/relforms.hpp"
#include "relcycles/weight1.hpp"

namespace relcycles::suites {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Independent stream per (seed, a, b).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (a + 1) + 0xBF58476D1CE4E5B9ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

const char* eps_name(cubical::FaceValue eps) { return eps == cubical::FaceValue::Zero ? "0" : "inf"; }

} // namespace

void Check::record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) counterexample = describe();
}

void Check::attempt(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const Error& e) {
        error = e.what();
    }
    record(ok, [&] { return error.empty() ? describe() : describe() + " (threw " + error + ")"; });
}

Check& Report::check(const std::string& name) {
    for (Check& c : checks)
        if (c.name == name) return c;
    Check c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
}

bool Report::passed() const {
    for (const Check& c : checks)
        if (c.failures > 0) return false;
    return true;
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "tsv") return Format::Tsv;
    if (text == "text") return Format::Text;
    throw Error(ErrorKind::InvalidArgument, "unknown output format '" + text + "' (json, tsv, text)");
}

Json to_json(const Report& report, bool timing) {
    Json j;
    j["schema"] = 1;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["config"] = report.config;
    Json checks = Json::array();
    for (const Check& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["checked"] = c.checked;
        cj["failures"] = c.failures;
        cj["counterexample"] = c.failures ? Json(c.counterexample) : Json(nullptr);
        if (!c.skipped.empty()) cj["skipped"] = c.skipped;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["results"] = report.results;
    j["passed"] = report.passed();
    if (timing) j["wall_seconds"] = report.wall_seconds;
    return j;
}

std::string render(const Report& report, Format format, bool timing) {
    std::ostringstream os;
    switch (format) {
    case Format::Json:
        os << to_json(report, timing).dump(2) << "\n";
        break;
    case Format::Tsv:
        os << "check\tchecked\tfailures\tstatus\tcounterexample\n";
        for (const Check& c : report.checks)
            os << c.name << "\t" << c.checked << "\t" << c.failures << "\t"
               << (c.failures ? "FAIL" : c.skipped.empty() ? "PASS" : "SKIP") << "\t"
               << (c.failures ? c.counterexample : c.skipped) << "\n";
        for (const auto& [key, value] : report.results.items()) os << "#result\t" << key << "\t" << value.dump() << "\n";
        if (timing) os << "#wall_seconds\t" << report.wall_seconds << "\n";
        break;
    case Format::Text:
        os << "suite: " << report.suite << "\nseed: " << report.seed << "\nconfig: " << report.config.dump() << "\n";
        for (const Check& c : report.checks) {
            os << (c.failures ? "FAIL " : "PASS ") << c.name << ": " << c.checked << " checked, " << c.failures << " failed";
            if (!c.skipped.empty()) os << " (skipped: " << c.skipped << ")";
            os << "\n";
            if (c.failures) os << "  first counterexample: " << c.counterexample << "\n";
        }
        for (const auto& [key, value] : report.results.items()) os << key << ": " << value.dump() << "\n";
        if (timing) os << "wall time: " << report.wall_seconds << " s\n";
        os << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
        break;
    }
    return os.str();
}

Field parse_field(const std::string& text) {
    if (text == "Q" || text == "q") return Field::rationals();
    std::size_t used = 0;
    unsigned long p = 0;
    try {
        p = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || used == 0) throw Error(ErrorKind::InvalidArgument, "field must be Q or a prime, got '" + text + "'");
    return Field::prime(static_cast<std::uint32_t>(p));
}

std::string field_name(Field f) { return f.is_rationals() ? "Q" : std::to_string(f.characteristic()); }

Report run_cubical_suite(const CubicalConfig& cfg) {
    using namespace cubical;
    const auto start = Clock::now();
    Report r;
    r.suite = "cubical-verify";
    r.seed = cfg.seed;
    r.config = {{"primes", cfg.primes}, {"exponents", cfg.exponents}, {"max_arity", cfg.max_arity},
                {"samples", cfg.samples}, {"norm", cfg.norm == WeightNorm::Max ? "max" : "sum"}};
    if (cfg.max_arity < 1 || cfg.max_arity > 8) throw Error(ErrorKind::InvalidArgument, "max arity must lie in 1..8");

    Check& admissible = r.check("admissibility_preserved");
    Check& face_face = r.check("face_face_commutation");
    Check& face_degen = r.check("face_degeneracy");
    Check& invol = r.check("involution_squared");
    Check& face_invol = r.check("face_involution");
    Check& face_mul = r.check("face_multiplicative");
    Check& mu = r.check("mu_faces");
    Check& bdry = r.check("boundary_squared");

    for (std::uint32_t p : cfg.primes) {
        for (long e : cfg.exponents) {
            const Context ctx{Field::prime(p), ModulusIdeal(e), cfg.norm};
            AdmissibleGenerator gen(ctx, sub_seed(cfg.seed, p, static_cast<std::uint64_t>(e)));
            for (std::size_t n = 1; n <= cfg.max_arity; ++n) {
                for (std::size_t k = 0; k < cfg.samples; ++k) {
                    const AdmissiblePoly f = gen(n), g = gen(n);
                    auto where = [&, n](const std::string& what) {
                        return [=, &f] { return "p=" + std::to_string(p) + " e=" + std::to_string(e) + " n=" + std::to_string(n) + " f=" + f.to_string() + " " + what; };
                    };
                    auto adm = [&](const AdmissiblePoly& h) { return is_admissible(h.coeffs(), ctx.ideal, ctx.norm); };

                    admissible.attempt([&] { return adm(f * g); }, where("product with " + g.to_string()));
                    for (std::size_t i = 1; i <= n; ++i) {
                        const std::string at = "i=" + std::to_string(i);
                        admissible.attempt([&] { return adm(involution(f, i)); }, where("involution " + at));
                        invol.attempt([&] { return involution(involution(f, i), i) == f; }, where(at));
                        face_invol.attempt([&] {
                            return face(involution(f, i), i, FaceValue::Zero) == face(f, i, FaceValue::Infinity) &&
                                   face(involution(f, i), i, FaceValue::Infinity) == face(f, i, FaceValue::Zero);
                        }, where(at));
                        for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity}) {
                            const std::string ate = at + " eps=" + eps_name(eps);
                            admissible.attempt([&] { return adm(face(f, i, eps)); }, where("face " + ate));
                            face_mul.attempt([&] { return face(f * g, i, eps) == face(f, i, eps) * face(g, i, eps); },
                                             where(ate + " g=" + g.to_string()));
                            for (std::size_t j = i + 1; j <= n; ++j)
                                for (FaceValue del : {FaceValue::Zero, FaceValue::Infinity})
                                    face_face.attempt([&] { return face(face(f, j, del), i, eps) == face(face(f, i, eps), j - 1, del); },
                                                      where(ate + " j=" + std::to_string(j) + " del=" + eps_name(del)));
                        }
                    }
                    for (std::size_t j = 1; j <= n + 1; ++j) {
                        const AdmissiblePoly d = degeneracy(f, j);
                        admissible.attempt([&] { return adm(d); }, where("degeneracy j=" + std::to_string(j)));
                        for (std::size_t i = 1; i <= n + 1; ++i) {
                            for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity}) {
                                face_degen.attempt([&] {
                                    const AdmissiblePoly lhs = face(d, i, eps);
                                    if (i == j) return lhs == f;
                                    if (i < j) return lhs == degeneracy(face(f, i, eps), j - 1);
                                    return lhs == degeneracy(face(f, i - 1, eps), j);
                                }, where("i=" + std::to_string(i) + " j=" + std::to_string(j) + " eps=" + eps_name(eps)));
                            }
                        }
                    }
                    if (n == 1) {
                        const AdmissiblePoly m = mu_star(f);
                        admissible.attempt([&] { return adm(m); }, where("mu_star"));
                        for (std::size_t i = 1; i <= 2; ++i)
                            mu.attempt([&] {
                                return face(m, i, FaceValue::Zero) == f &&
                                       face(m, i, FaceValue::Infinity) == degeneracy(face(f, 1, FaceValue::Infinity), 1);
                            }, where("i=" + std::to_string(i)));
                    }
                    if (n >= 2) bdry.attempt([&] { return boundary(boundary(CubicalFraction::quotient(f, g))).is_unit(); },
                                             where("g=" + g.to_string()));
                }
            }
        }
    }
    if (cfg.max_arity < 2) bdry.skipped = "needs arity >= 2";
    r.wall_seconds = seconds_since(start);
    return r;
}

Report run_weight1_suite(const Weight1Config& cfg) {
    using namespace weight1;
    const auto start = Clock::now();
    Report r;
    r.suite = "weight1-verify";
    r.seed = cfg.seed;
    r.config = {{"field", field_name(cfg.field)}, {"exponent", cfg.exponent}, {"trials", cfg.trials}, {"cycles3", cfg.cycles3}};
    const Context ctx{cfg.field, ModulusIdeal(cfg.exponent), cubical::WeightNorm::Max};
    cubical::AdmissibleGenerator gen(ctx, sub_seed(cfg.seed, 1));

    Check& eq11 = r.check("homotopy_face_identities");
    Check& hom = r.check("delta_homomorphism");
    Check& sec = r.check("delta_unit_section");
    Check& exact = r.check("exactness_witness");
    Check& con2 = r.check("contraction_witness_n2");
    Check& con3 = r.check("contraction_witness_n3");

    for (std::size_t k = 0; k < cfg.trials; ++k) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const CubicalFraction c = CubicalFraction::quotient(gen(n), gen(n));
            eq11.attempt([&] { return verify_eq11(c).passed(); }, [&] { return c.to_string() + ": " + verify_eq11(c).to_string(); });
        }
        const CubicalFraction f = CubicalFraction::of(gen(1)), g = CubicalFraction::of(gen(1));
        hom.attempt([&] { return delta(f * g).value() == delta(f).value() * delta(g).value(); },
                    [&] { return "f=" + f.to_string() + " g=" + g.to_string(); });
        const LocalElem u = gen.one_unit();
        sec.attempt([&] { return delta(unit_section(UnitOneClass(u, ctx.ideal), ctx)).value() == u; },
                    [&] { return "u=" + u.to_string(); });

        const auto [a, b] = delta_matched_pair(gen);
        const CubicalFraction fa = CubicalFraction::of(a), fb = CubicalFraction::of(b);
        exact.attempt([&] {
            const CubicalFraction w = exactness_witness(fa, fb);
            return delta(fa) == delta(fb) && cubical::in_normalized(w) && cubical::face(w, 1, FaceValue::Zero) == fa / fb;
        }, [&] { return "f=" + a.to_string() + " g=" + b.to_string(); });

        const CubicalFraction c2 = random_np2_cycle(gen);
        con2.attempt([&] {
            const CubicalFraction w = contraction_witness(c2);
            return cubical::in_normalized(w) && cubical::face(w, 1, FaceValue::Zero) == c2;
        }, [&] { return "cycle=" + c2.to_string(); });
    }
    for (std::size_t k = 0; k < cfg.cycles3; ++k) {
        const CubicalFraction c3 = random_np3_cycle(gen);
        con3.attempt([&] {
            const CubicalFraction w = contraction_witness(c3);
            return cubical::in_normalized(w) && cubical::face(w, 1, FaceValue::Zero) == c3;
        }, [&] { return "cycle=" + c3.to_string(); });
    }
    if (cfg.cycles3 == 0) con3.skipped = "no 3-cycles requested";
    r.wall_seconds = seconds_since(start);
    return r;
}

Report run_chow_suite(const ChowConfig& cfg) {
    using namespace chow0;
    const auto start = Clock::now();
    Report r;
    r.suite = "chow0";
    r.seed = cfg.seed;
    r.config = {{"q", cfg.q}, {"modulus", cfg.modulus}, {"oracle", cfg.oracle}, {"degree_bound", cfg.degree_bound},
                {"separation_degree", cfg.separation_degree}, {"relation_trials", cfg.relation_trials},
                {"curve_trials", cfg.curve_trials}};
    const Field field = Field::prime(cfg.q);
    const Divisor d = parse_divisor(cfg.modulus, field);
    require_modulus(d);
    const mpz_class order = group_order(d, cfg.q);
    r.results["modulus"] = d.to_string();
    r.results["order"] = order.get_str();

    if (cfg.oracle) {
        const ChowOracle o = brute_force_chow(d, cfg.q, cfg.degree_bound);
        const bool match = o.free_rank() == 1 && o.order() == order;
        r.results["oracle_order"] = o.free_rank() == 1 ? Json(o.order().get_str()) : Json(nullptr);
        r.results["match"] = match;
        Json inv = Json::array();
        for (const mpz_class& t : o.invariant_factors()) inv.push_back(t.get_str());
        r.results["invariant_factors"] = inv;
        r.results["support_size"] = o.support().size();
        r.results["relation_count"] = o.relation_count();
        r.check("oracle_order").record(match, [&] {
            return "oracle order " + o.order().get_str() + " (free rank " + std::to_string(o.free_rank()) + ") vs " + order.get_str();
        });
        const SeparationReport rep = check_separation(o, d, cfg.separation_degree);
        r.results["separation_cycles"] = rep.cycles;
        r.results["oracle_classes"] = rep.oracle_classes;
        r.results["invariant_classes"] = rep.invariant_classes;
        Check& sep = r.check("separation");
        sep.record(rep.consistent && rep.oracle_classes == rep.invariant_classes, [&] {
            if (rep.counterexample) return rep.counterexample->first.to_string() + " vs " + rep.counterexample->second.to_string();
            return std::to_string(rep.oracle_classes) + " oracle classes vs " + std::to_string(rep.invariant_classes);
        });
        sep.checked = rep.cycles;
    }

    Rng rng(sub_seed(cfg.seed, cfg.q, 2));
    Check& sound = r.check("relation_soundness");
    for (std::size_t k = 0; k < cfg.relation_trials; ++k) {
        const RationalFunction g = random_G_element(d, rng);
        sound.attempt([&] {
            const ChowClass c = chow_class(principal_divisor(g), d);
            return in_G(g, d) && c.degree == 0 && c.residue.is_trivial();
        }, [&] { return "g=" + g.to_string(); });
    }
    if (cfg.relation_trials == 0) sound.skipped = "no relation trials requested";
    if (cfg.curve_trials > 0) {
        Check& bd = r.check("boundary_equals_div_norm");
        Rng crng(sub_seed(cfg.seed, cfg.q, 3));
        for (std::size_t k = 0; k < cfg.curve_trials; ++k) {
            const CurveCycle f = random_curve_cycle(d, crng);
            bd.attempt([&] { return cycle_boundary(f) == principal_divisor(norm_of_coordinate(f)); },
                       [&] { return "f=" + f.to_string(); });
        }
    }
    r.wall_seconds = seconds_since(start);
    return r;
}

Report run_forms_suite(const FormsConfig& cfg) {
    using namespace relforms;
    const auto start = Clock::now();
    Report r;
    r.suite = "forms-verify";
    r.seed = cfg.seed;
    std::vector<int> mult = cfg.mult;
    std::vector<bool> in_F = cfg.in_F;
    if (mult.size() > cfg.nvars || in_F.size() > cfg.nvars)
        throw Error(ErrorKind::InvalidArgument, "more multiplicities or F flags than variables");
    mult.resize(cfg.nvars, 0);
    in_F.resize(cfg.nvars, false);
    r.config = {{"field", field_name(cfg.field)}, {"vars", cfg.nvars}, {"mult", mult}, {"F", in_F},
                {"degree", cfg.degree}, {"trials", cfg.trials}};
    const Ambient amb = Ambient::make(cfg.field, cfg.nvars, mult, in_F);
    const Field f = cfg.field;
    Rng rng(sub_seed(cfg.seed, 4));

    std::optional<std::size_t> nu;
    for (std::size_t i = 0; i < amb.nvars && !nu; ++i)
        if (amb.mult[i] > 0) nu = i;
    for (std::size_t i = 0; i < amb.nvars && !nu; ++i)
        if (amb.is_log(i)) nu = i;

    Check& dd = r.check("d_squared");
    Check& tdd = r.check("twisted_d_squared");
    for (std::size_t k = 0; k < cfg.trials; ++k) {
        const int deg = static_cast<int>(rng.below(amb.nvars + 1));
        const LogForm w = random_form(amb, rng, deg, cfg.degree);
        dd.attempt([&] { return ext_d(ext_d(w)).is_zero(); }, [&] { return w.to_string(); });
        if (nu) {
            const TwistedPiece t(mult, *nu, w);
            tdd.attempt([&] { return twisted_d(twisted_d(t)).form().is_zero(); }, [&] { return t.to_string(); });
        }
    }
    if (!nu) tdd.skipped = "no component of D + F to restrict to";

    Check& cocycle = r.check("fundamental_cocycle_multiplicative");
    for (std::size_t k = 0; k < cfg.trials; ++k) {
        const SparsePoly a = random_poly(amb, rng, cfg.degree) + SparsePoly::one(f, amb.nvars);
        const SparsePoly b = random_poly(amb, rng, cfg.degree) + LogForm::monomial(amb, std::vector<int>(amb.nvars, 1), Scalar::one(f));
        if (a.is_zero() || b.is_zero()) continue;
        cocycle.attempt([&] { return equivalent(fundamental_cocycle(amb, {a * b}), fundamental_cocycle(amb, {a}) + fundamental_cocycle(amb, {b})); },
                        [&] { return "f=" + a.to_string(amb.names) + " g=" + b.to_string(amb.names); });
    }

    for (std::size_t nv : {2u, 3u}) {
        const Ambient local = nv == 2 ? Ambient::make(f, 2, {0, 1}, {true, false}, {"s", "p"})
                                      : Ambient::make(f, 3, {0, 1, 0}, {true, false, false}, {"s", "p", "z"});
        Check& c = r.check("dlog_identity_" + std::to_string(nv) + "vars");
        for (std::size_t k = 0; k < cfg.trials; ++k) {
            const SparsePoly a = random_poly(local, rng, cfg.degree);
            std::vector<SparsePoly> extras;
            if (nv == 3 && rng.chance(1, 2)) {
                const SparsePoly e = random_poly(local, rng, cfg.degree) + LogForm::monomial(local, {0, 0, 1}, Scalar::one(f));
                if (!e.is_zero()) extras.push_back(e);
            }
            c.attempt([&] {
                const DlogCertificate cert = dlog_modulus_check(local, 0, 1, a, extras);
                return cert.in_module && equivalent(cert.lhs, cert.rhs);
            }, [&] { return "a=" + a.to_string(local.names); });
        }
    }

    Check& homotopy = r.check("homotopy_identity_basis");
    Check& primitive = r.check("twisted_primitive");
    if (nu) {
        std::size_t skipped_primitive = 0;
        for (int mnu : {1, 2, 3}) {
            std::vector<int> m = mult;
            m[*nu] = mnu;
            for (const TwistedPiece& w : twisted_monomial_basis(amb, m, *nu, 3))
                homotopy.attempt([&] { return homotopy_identity_check(w).passed; }, [&] { return w.to_string(); });
            const Scalar m_scalar(f, mnu);
            if (m_scalar.is_zero()) {
                ++skipped_primitive;
                continue;
            }
            for (std::size_t k = 0; k < cfg.trials; ++k) {
                const int deg = static_cast<int>(rng.below(amb.nvars));
                const TwistedPiece closed = twisted_d(TwistedPiece(m, *nu, random_form(amb, rng, deg, cfg.degree)));
                primitive.attempt([&] {
                    const TwistedPiece res = residue(closed);
                    return twisted_d(res.with_form(res.form().times(Scalar::one(f) / m_scalar))) == closed;
                }, [&] { return closed.to_string(); });
            }
        }
        if (skipped_primitive) primitive.skipped = std::to_string(skipped_primitive) + " twist(s) with m_nu divisible by the characteristic";
    } else {
        homotopy.skipped = primitive.skipped = "no component of D + F to restrict to";
    }

    Check& contain = r.check("closed_form_containment");
    const std::vector<LogForm> gens = containment_generators(amb, cfg.degree);
    auto certified = [](const LogForm& w) {
        const ContainmentCertificate c = closed_form_containment(w);
        return c.member && in_relative_module(c.rewritten);
    };
    for (const LogForm& g : gens) contain.attempt([&] { return certified(g); }, [&] { return g.to_string(); });
    if (!gens.empty()) {
        for (std::size_t k = 0; k < cfg.trials; ++k) {
            LogForm sum(amb);
            for (int t = 0; t < 4; ++t) sum += gens[rng.below(gens.size())].times(Scalar(f, rng.between(-3, 3)));
            if (sum.is_zero()) continue;
            contain.attempt([&] { return certified(sum); }, [&] { return sum.to_string(); });
        }
    } else {
        contain.skipped = "D is empty; no generators";
    }
    r.results["containment_generators"] = gens.size();
    r.wall_seconds = seconds_since(start);
    return r;
}

} // namespace relcycles::suites
