#include <functional>
#include <map>

#include "commands.hpp"
#include "radhom/radfunctor.hpp"

namespace radhom::cli {

namespace {

using Check = std::function<Report(const json&, Reader&, const CommandOptions&)>;

Report semiring_axioms(const json& c, Reader& reader, const CommandOptions&) {
    return verify_semiring_axioms(*build_radical_semiring(reader.ring(field(c, "ring", ""), "/ring"))->semiring());
}

Report semimodule_axioms(const json& c, Reader& reader, const CommandOptions&) {
    return verify_semimodule_axioms(*radical_carrier(reader.module(field(c, "module", ""), "/module")));
}

Report functor_laws(const json& c, Reader& reader, const CommandOptions&) {
    const auto& ms = field(c, "modules", "");
    if (!ms.is_array() || ms.size() != 3) throw InputError("SchemaError", "/modules", "expected three modules");
    auto a = reader.module(ms[0], "/modules/0"), b = reader.module(ms[1], "/modules/1"),
         d = reader.module(ms[2], "/modules/2");
    std::pair<ModuleHom, ModuleHom> p{reader.hom(a, b, field(c, "f", ""), "/f"),
                                      reader.hom(b, d, field(c, "g", ""), "/g")};
    return check_functor_laws(std::span(&p, 1));
}

Report homology_functor(const json& c, Reader& reader, const CommandOptions&) {
    const auto& cs = field(c, "complexes", "");
    if (!cs.is_array() || cs.size() != 3) throw InputError("SchemaError", "/complexes", "expected three complexes");
    auto a = reader.complex(cs[0], "/complexes/0"), b = reader.complex(cs[1], "/complexes/1"),
         d = reader.complex(cs[2], "/complexes/2");
    auto phi = reader.complex_map(a, b, field(c, "phi", ""), "/phi");
    auto psi = reader.complex_map(phi.target, d, field(c, "psi", ""), "/psi");
    auto rphi = apply_radical(phi), rpsi = apply_radical(psi), rcomp = apply_radical(compose_maps(psi, phi));
    auto rid = apply_radical(identity_map(phi.source));
    Report rep;
    for (int n = 0; n <= rphi.top(); ++n) {
        const auto w = "degree " + std::to_string(n);
        auto hid = induced_homology_map(rid, n);
        if (!(hid == semi_identity(hid.source()))) rep.add("H_n(R(id)) = id", w);
        auto lhs = semi_compose(induced_homology_map(rpsi, n), induced_homology_map(rphi, n));
        if (!(lhs == induced_homology_map(rcomp, n))) rep.add("H_n(R(psi)) H_n(R(phi)) = H_n(R(psi phi))", w);
    }
    return rep;
}

Report homotopy(const json& c, Reader& reader, const CommandOptions&) {
    auto src = reader.complex(field(c, "source", ""), "/source");
    auto tgt = reader.complex(field(c, "target", ""), "/target");
    auto phi = reader.complex_map(src, tgt, field(c, "phi", ""), "/phi");
    auto psi = reader.complex_map(src, tgt, field(c, "psi", ""), "/psi");
    const auto& sj = field(c, "s", "");
    ModuleHomotopy s;
    for (int n = 0; n <= phi.top(); ++n) {
        auto target = n < phi.target.top() ? phi.target.module(n + 1) : zero_module(phi.target.ring());
        s.push_back(reader.hom(phi.source.module(n), target, sj.at(static_cast<std::size_t>(n)),
                               "/s/" + std::to_string(n)));
    }
    auto tr = radical_homotopy_transport(phi, psi, s);
    const auto conclusion = c.value("conclusion", std::string("both"));
    Report rep;
    if (conclusion != "homology") rep.merge(tr.pair_report);
    if (conclusion != "pair") rep.merge(tr.homology_report);
    return rep;
}

Report snake(const json& c, Reader& reader, const CommandOptions&) {
    auto ses = reader.short_exact_seq(c, "");
    auto rep = check_snake_hypotheses(ses);
    if (!rep.ok()) return rep;
    auto les = long_exact_sequence(ses);
    rep.merge(les.exactness);
    rep.merge(les.violations);
    rep.merge(les.defects);
    const int acyclic = is_radical_acyclic(ses.left()) + is_radical_acyclic(ses.middle()) +
                        is_radical_acyclic(ses.right());
    if (acyclic == 2) rep.add("two acyclic complexes force the third", "");
    return rep;
}

Report naturality(const json& c, Reader& reader, const CommandOptions&) {
    auto top = reader.short_exact_seq(field(c, "top", ""), "/top");
    auto bottom = reader.short_exact_seq(field(c, "bottom", ""), "/bottom");
    auto bl = reader.complex_map(top.left(), bottom.left(), field(c, "beta_left", ""), "/beta_left");
    auto b = reader.complex_map(top.middle(), bottom.middle(), field(c, "beta", ""), "/beta");
    auto br = reader.complex_map(top.right(), bottom.right(), field(c, "beta_right", ""), "/beta_right");
    return naturality_check(top, bottom, bl, b, br);
}

Report resolution(const json& c, Reader& reader, const CommandOptions& opts) {
    auto r = reader.resolution(field(c, "resolution", ""), "/resolution");
    auto rep = verify_radical_resolution(r, opts.max_basis, opts.search());
    Report out = rep.defects;
    auto h0 = resolution_h0_check(r, opts.search());
    if (!h0.h0_iso_quotient) out.add("H_0 = R(P_0) / ker R(g)", "");
    return out;
}

Report lift(const json& c, Reader& reader, const CommandOptions& opts) {
    auto r = reader.resolution(field(c, "source", ""), "/source");
    auto r2 = reader.resolution(field(c, "target", ""), "/target");
    auto g = reader.hom(r.target(), r2.target(), field(c, "g", ""), "/g");
    auto a = lift_map(g, r, r2, {0, opts.search()});
    auto b = lift_map(g, r, r2, {opts.seed == 0 ? 1 : opts.seed, opts.search()});
    Report rep = a.violations;
    rep.merge(b.violations);
    if (!a.map || !b.map) return rep;
    auto hc = homotopy_between_lifts(*a.map, *b.map, r, r2, opts.max_basis, opts.search());
    rep.merge(hc.violations);
    if (!hc.pair) rep.add("homotopy pair constructed", "");
    return rep;
}

Report homology_values(const json& c, Reader& reader, const CommandOptions&) {
    auto rc = apply_radical(reader.complex(field(c, "complex", ""), "/complex"));
    auto expect = index_array(field(c, "expect", ""), "/expect");
    Report rep;
    if (static_cast<int>(expect.size()) != rc.top() + 1) throw InputError("SchemaError", "/expect", "one count per degree");
    for (int n = 0; n <= rc.top(); ++n) {
        const int got = homology(rc, n).class_count();
        if (got != expect[static_cast<std::size_t>(n)])
            rep.add("H_n class count", "degree " + std::to_string(n) + ": " + std::to_string(got));
    }
    return rep;
}

Report radical_acyclic(const json& c, Reader& reader, const CommandOptions&) {
    Report rep;
    if (!is_radical_acyclic(reader.complex(field(c, "complex", ""), "/complex"))) rep.add("radical acyclic", "");
    return rep;
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table{
        {"semiring-axioms", semiring_axioms}, {"semimodule-axioms", semimodule_axioms},
        {"functor-laws", functor_laws},       {"homology-functor", homology_functor},
        {"homotopy", homotopy},               {"snake", snake},
        {"naturality", naturality},           {"resolution", resolution},
        {"lift", lift},                       {"homology-values", homology_values},
        {"radical-acyclic", radical_acyclic}};
    return table;
}

}  // namespace

CommandResult cmd_verify_paper(const json& in, Reader& reader, const CommandOptions& opts) {
    const auto& list = field(in, "checks", "");
    if (!list.is_array()) throw InputError("SchemaError", "/checks", "expected an array");
    CommandResult res;
    json results = json::array();
    int passed = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& c = list[i];
        const auto where = "/checks/" + std::to_string(i);
        const auto name = c.value("name", where);
        const auto kind = c.value("kind", std::string());
        json failures = json::array();
        auto it = checks().find(kind);
        if (it == checks().end()) {
            failures.push_back(json{{"law", "known check kind"}, {"witness", kind}});
        } else {
            try {
                failures = to_json(located(where, [&] { return it->second(c, reader, opts); }));
            } catch (const InputError& e) {
                failures.push_back(json{{"law", e.kind}, {"witness", where + e.location + ": " + e.what()}});
            } catch (const std::exception& e) {
                failures.push_back(json{{"law", "error"}, {"witness", e.what()}});
            }
        }
        const bool pass = failures.empty();
        passed += pass;
        results.push_back(json{{"name", name}, {"kind", kind}, {"pass", pass}, {"failures", std::move(failures)}});
    }
    const int failed = static_cast<int>(list.size()) - passed;
    res.output = json{{"checks", std::move(results)}, {"passed", passed}, {"failed", failed}};
    res.violations = failed;
    return res;
}

}  // namespace radhom::cli
