#include "ahecke/suites.hpp"

#include "ahecke/characters.hpp"
#include "ahecke/coxeter_complex.hpp"
#include "ahecke/dualities.hpp"
#include "ahecke/error.hpp"
#include "ahecke/hecke.hpp"
#include "ahecke/hecke_modules.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

namespace ahecke {

namespace {

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out;
}

std::string join(const std::vector<int>& v, int offset = 0) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + offset);
    return out;
}

std::shared_ptr<const WeylGroup> weyl_of(const Instance& in) {
    return WeylGroup::create(std::make_shared<RootDatum>(in.type, in.rank, in.lattice));
}

std::shared_ptr<const HeckeContext> context_of(const Instance& in) {
    auto rd = std::make_shared<RootDatum>(in.type, in.rank, in.lattice);
    auto aff = std::make_shared<AffineWeylGroup>(WeylGroup::create(rd));
    return HeckeContext::create(aff, in.lambda ? *in.lambda : ParamAssignment::equal(*rd));
}

Specialization spec_of(const HeckeContext& c, std::vector<Rational> q) {
    q.resize(c.params().num_symbols, q.back());
    return Specialization::from_q(q);
}

// Three fixed points of the torus, away from 0 and the roots of unity.
std::vector<std::vector<Rational>> torus_points(int n) {
    std::vector<std::vector<Rational>> pts;
    for (int k = 0; k < 3; ++k) {
        std::vector<Rational> t;
        for (int i = 0; i < n; ++i) t.emplace_back(((i + k) % 2 ? -1 : 1) * (2 + 3 * k + i), 3 + k + 2 * i);
        for (auto& c : t) c.canonicalize();
        pts.push_back(t);
    }
    return pts;
}

std::string point_name(const std::vector<Rational>& t) { return "t=(" + join(t) + ")"; }

using Body = std::function<void(VerificationReport&)>;

VerificationReport guarded(const std::string& suite, const Instance& in, const Body& body) {
    VerificationReport r;
    r.suite = suite;
    r.instance = describe(in);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const Error& e) {
        r.add({"hypotheses of " + suite, "instance", e.what(), "satisfied", false});
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// One-dimensional modules, modules induced from one-dimensional modules of every proper parabolic,
// and the two-dimensional dihedral module when some m(s, t) = 4.
std::vector<FiniteHeckeModule> test_modules(std::shared_ptr<const CoxeterSystem> sys, const std::vector<Rational>& q) {
    const int n = sys->num_generators();
    std::vector<FiniteHeckeModule> out;
    for (const auto& J : all_subsets(n)) {
        for (int mask = 0; mask < (1 << J.size()); ++mask) {
            std::vector<int> choice(n, 1);
            for (std::size_t k = 0; k < J.size(); ++k) choice[J[k]] = (mask >> k) & 1 ? -1 : 1;
            std::optional<FiniteHeckeModule> m;
            try {
                m = FiniteHeckeModule::one_dim(sys, q, J, choice);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotAModule) throw;
                continue;
            }
            if (static_cast<int>(J.size()) == n)
                out.push_back(*m);
            else
                out.push_back(induce_module(*m));
        }
    }
    if (n == 2) {
        const WeylGroup& w = sys->group();
        int st = w.mul(sys->generator(0), sys->generator(1)), order = 1;
        for (int g = st; g != w.identity(); g = w.mul(g, st)) ++order;
        if (order == 4) out.push_back(dihedral_order4_module(sys, q));
    }
    return out;
}

std::vector<SimpleSet> proper_nonempty(int n) {
    std::vector<SimpleSet> out;
    for (const auto& I : all_subsets(n))
        if (!I.empty() && static_cast<int>(I.size()) < n) out.push_back(I);
    return out;
}

}  // namespace

Instance apply_datum_file(Instance base, const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        base.type = parse_cartan_type(j.at("cartan_type").get<std::string>());
        base.rank = j.at("rank").get<int>();
        base.lattice = parse_lattice_kind(j.at("lattice_kind").get<std::string>());
        if (j.contains("lambda")) {
            ParamAssignment p;
            p.lambda = j.at("lambda").get<std::vector<int>>();
            p.lambda_star = j.contains("lambda_star") ? j.at("lambda_star").get<std::vector<int>>() : p.lambda;
            base.lambda = p;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Usage, std::string("bad datum file: ") + e.what());
    }
    return base;
}

std::vector<std::pair<std::string, std::string>> describe(const Instance& in, const std::string& extra_key,
                                                          const std::string& extra_value) {
    std::vector<std::pair<std::string, std::string>> d{
        {"type", cartan_type_name(in.type) + std::to_string(in.rank)},
        {"lattice", lattice_kind_name(in.lattice)},
        {"q", join(in.q)},
    };
    if (in.lambda) {
        d.emplace_back("lambda", join(in.lambda->lambda));
        d.emplace_back("lambda_star", join(in.lambda->lambda_star));
    }
    d.emplace_back("bound", std::to_string(in.bound));
    if (in.I0) d.emplace_back("I0", join(*in.I0, 1));
    d.emplace_back("p", join(in.p));
    d.emplace_back("corrupt_sign", in.corrupt ? "true" : "false");
    if (!extra_key.empty()) d.emplace_back(extra_key, extra_value);
    return d;
}

std::vector<Rational> finite_params(const RootDatum& rd, const std::vector<Rational>& q) {
    std::vector<int> orbits;
    for (int i = 0; i < rd.rank(); ++i) {
        int o = rd.orbit(rd.simple(i));
        if (std::find(orbits.begin(), orbits.end(), o) == orbits.end()) orbits.push_back(o);
    }
    std::vector<Rational> out;
    for (int i = 0; i < rd.rank(); ++i) {
        auto k = static_cast<std::size_t>(std::find(orbits.begin(), orbits.end(), rd.orbit(rd.simple(i))) - orbits.begin());
        out.push_back(q[std::min(k, q.size() - 1)]);
    }
    return out;
}

VerificationReport run_solomon(const Instance& in) {
    return guarded("solomon", in, [&](VerificationReport& r) {
        auto w = weyl_of(in);
        auto chars = irreducible_characters(w->whole());
        for (std::size_t k = 0; k < chars.size(); ++k) r.add(solomon_check(chars[k], "chi" + std::to_string(k + 1), in.corrupt));
        r.notes.push_back(std::to_string(chars.size()) + " irreducible characters");
    });
}

VerificationReport run_hl_char(const Instance& in) {
    return guarded("hl-char", in, [&](VerificationReport& r) {
        auto w = weyl_of(in);
        std::vector<SimpleSet> sets = in.I0 ? std::vector<SimpleSet>{*in.I0} : proper_nonempty(in.rank);
        for (const auto& i0 : sets) {
            auto n = w->normalizer(i0);
            auto subgroups = all_subgroups(*n);
            for (std::size_t k = 0; k < subgroups.size(); ++k) {
                const auto& h = subgroups[k];
                std::vector<ClassFunction> chars;
                std::string kind = "chi";
                try {
                    chars = irreducible_characters(h);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::IllegalCharacter) throw;
                    chars = class_indicators(h);
                    kind = "1_class";
                    r.notes.push_back("I0=" + subset_name(i0) + " H" + std::to_string(k + 1) +
                                      ": character table not rational, class indicators used");
                }
                for (std::size_t c = 0; c < chars.size(); ++c)
                    r.add(hl_character_check(i0, h, chars[c],
                                             "I0=" + subset_name(i0) + " H" + std::to_string(k + 1) + " (order " +
                                                 std::to_string(h->order()) + ") " + kind + std::to_string(c + 1),
                                             in.corrupt));
            }
            r.notes.push_back("I0=" + subset_name(i0) + ": " + std::to_string(subgroups.size()) +
                              " subgroups of the normalizer of order " + std::to_string(n->order()));
        }
    });
}

VerificationReport run_kato_finite(const Instance& in) {
    return guarded("kato-finite", in, [&](VerificationReport& r) {
        auto w = weyl_of(in);
        auto sys = CoxeterSystem::of_weyl(w);
        auto q = finite_params(w->datum(), in.q);
        auto mods = test_modules(sys, q);
        for (const auto& m : mods) {
            m.validate();
            r.add(kato_finite_check(m, in.corrupt));
        }
        r.notes.push_back(std::to_string(mods.size()) + " modules, parameters per generator " + join(q));
    });
}

VerificationReport run_kato_affine(const Instance& in) {
    return guarded("kato-affine", in, [&](VerificationReport& r) {
        auto ctx = context_of(in);
        auto spec = spec_of(*ctx, in.q);
        for (const auto& t : torus_points(in.rank)) {
            auto m = principal_series(ctx, spec, t);
            m.validate();
            r.add(kato_affine_check(m, in.bound, in.corrupt));
            r.notes.push_back("principal series at " + point_name(t));
        }
        r.notes.push_back("witnesses T_gamma T_w, gamma in Omega, l(w) <= " + std::to_string(in.bound) + ": " +
                          std::to_string(witness_family(ctx->affine(), in.bound).size()) + " per module");
    });
}

VerificationReport run_intertwiner(const Instance& in) {
    return guarded("intertwiner", in, [&](VerificationReport& r) {
        auto ctx = context_of(in);
        auto spec = spec_of(*ctx, in.q);
        for (const auto& t : torus_points(in.rank)) {
            auto m = principal_series(ctx, spec, t);
            r.add(chi_intertwiner_check(m, in.corrupt));
            r.notes.push_back("principal series at " + point_name(t));
        }
    });
}

VerificationReport run_involution(const Instance& in) {
    return guarded("involution", in, [&](VerificationReport& r) {
        auto ctx = context_of(in);
        const AffineWeylGroup& aff = ctx->affine();
        const WeylGroup& w = ctx->finite();
        auto family = witness_family(aff, in.bound);
        auto st = [&](const HeckeElement& h) { return star(h, in.corrupt); };

        for (const auto& x : family) {
            auto t = im_basis(ctx, x);
            bool twice = st(st(t)) == t;
            r.add({"star^2 = id", aff.to_string(x), twice ? "T_w" : st(st(t)).to_string(), "T_w", twice});
            auto expect = t_inverse(ctx, x) * (ctx->q_of(x) * LaurentPoly(w.sign(x.fin)));
            auto got = st(kappa(t));
            r.add({"kappa(T_w)^* = (-1)^l(w_fin) q(w) T_w^-1", aff.to_string(x), got.to_string(), expect.to_string(),
                   got == expect});
        }

        // All pairs in rank one, otherwise pairs with l(a) + l(b) <= bound.
        const int pair_bound = in.rank == 1 ? 2 * in.bound : in.bound;
        for (const auto& a : family) {
            auto ta = im_basis(ctx, a);
            auto sa = st(ta);
            int checked = 0, good = 0;
            for (const auto& b : family) {
                if (aff.length(a) + aff.length(b) > pair_bound) continue;
                auto tb = im_basis(ctx, b);
                ++checked;
                if (st(hecke_mul(ta, tb)) == hecke_mul(sa, st(tb))) ++good;
            }
            r.add({"(T_a T_b)^* = T_a^* T_b^*", aff.to_string(a), std::to_string(good) + " of " + std::to_string(checked),
                   std::to_string(checked) + " of " + std::to_string(checked), good == checked});
        }

        int parity_ok = 0;
        auto big = witness_family(aff, in.bound + 2);
        for (const auto& x : big)
            if (parity_check(*ctx, x)) ++parity_ok;
        r.add({"l(w_Omega) + l(w) = l(w_fin) mod 2", "l(w) <= " + std::to_string(in.bound + 2), std::to_string(parity_ok),
               std::to_string(big.size()), parity_ok == static_cast<int>(big.size())});

        // theta_x^* = T_{w0} theta_{w0 x} T_{w0}^{-1} on the box |x_i| <= 2.
        auto w0 = aff.from_finite(w.longest());
        auto tw0 = im_basis(ctx, w0), tw0_inv = t_inverse(ctx, w0);
        IntVec x(in.rank, -2);
        while (true) {
            auto lhs = st(theta_im(ctx, x));
            auto rhs = hecke_mul(hecke_mul(tw0, theta_im(ctx, w.act(w.longest(), x))), tw0_inv);
            std::string name = "x=(" + join(x) + ")";
            r.add({"theta_x^* = T_w0 theta_{w0 x} T_w0^-1", name, lhs == rhs ? "equal" : lhs.to_string(),
                   lhs == rhs ? "equal" : rhs.to_string(), lhs == rhs});
            int k = 0;
            while (k < in.rank && x[k] == 2) x[k++] = -2;
            if (k == in.rank) break;
            ++x[k];
        }
        r.notes.push_back("symbolic coefficients; star^2, kappa and multiplicativity on l(w) <= " +
                          std::to_string(in.bound) + " times Omega");
    });
}

VerificationReport run_hl_analogue(const Instance& in) {
    return guarded("hl-analogue", in, [&](VerificationReport& r) {
        auto w = weyl_of(in);
        const bool degenerate = !in.I0 || in.I0->empty();
        auto rd = degenerate ? RamificationDatum::build(w, {}, RamificationMode::Degenerate, in.q)
                             : RamificationDatum::build(w, *in.I0, RamificationMode::FullStabilizer, in.p);
        r.add(rd.invariant_records());
        auto sys = rd.r_lambda();
        auto mods = test_modules(sys, rd.generator_params());
        for (const auto& m : mods) {
            auto hl = hl_analogue_check(rd, m, &r.notes, in.corrupt);
            if (degenerate) {
                auto kato = kato_finite_check(m, in.corrupt);
                for (std::size_t k = 0; k < hl.size(); ++k)
                    r.add({"degenerate datum reproduces finite Kato " + m.label(), hl[k].witness, hl[k].lhs, kato[k].lhs,
                           hl[k].lhs == kato[k].lhs});
            }
            r.add(std::move(hl));
        }
        std::string gens;
        for (int k = 0; k < sys->num_generators(); ++k) gens += (k ? "," : "") + w->word_string(sys->generator(k));
        r.notes.push_back(std::string(degenerate ? "degenerate" : "full stabilizer") + " datum: |W(Lambda)| = " +
                          std::to_string(rd.w_lambda()->order()) + ", |R(Lambda)| = " + std::to_string(sys->order()) +
                          ", S(Lambda) = {" + gens + "}, p = " + join(rd.generator_params()) + ", " +
                          std::to_string(mods.size()) + " modules");
    });
}

VerificationReport run_complex(const Instance& in) {
    return guarded("complex", in, [&](VerificationReport& r) {
        auto w = weyl_of(in);
        std::vector<SimpleSet> sets;
        if (in.I0) {
            sets.push_back(*in.I0);
        } else {
            sets.push_back({});
            for (const auto& I : proper_nonempty(in.rank)) sets.push_back(I);
        }
        for (const auto& i0 : sets) {
            auto cx = i0.empty() ? CoxeterComplex::full(w) : CoxeterComplex::sub(w, i0);
            r.add(complex_checks(cx, in.corrupt));
            ChainComplexQ cc(cx);
            std::string b;
            for (auto x : cc.betti()) b += (b.empty() ? "" : ",") + std::to_string(x);
            r.notes.push_back((i0.empty() ? std::string("full complex") : "I0=" + subset_name(i0)) + ": " +
                              std::to_string(cx.size()) + " simplices, Betti numbers (" + b + ")");
        }
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"solomon",     "hl-char",    "kato-finite", "kato-affine",
                                                "intertwiner", "involution", "hl-analogue", "complex"};
    return names;
}

VerificationReport run_suite(const std::string& name, const Instance& in) {
    if (name == "solomon") return run_solomon(in);
    if (name == "hl-char") return run_hl_char(in);
    if (name == "kato-finite") return run_kato_finite(in);
    if (name == "kato-affine" || name == "kato") return run_kato_affine(in);
    if (name == "intertwiner") return run_intertwiner(in);
    if (name == "involution") return run_involution(in);
    if (name == "hl-analogue") return run_hl_analogue(in);
    if (name == "complex") return run_complex(in);
    fail(ErrorKind::Usage, "unknown suite " + name);
}

}  // namespace ahecke
