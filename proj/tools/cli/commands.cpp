#include "commands.hpp"

#include <functional>
#include <map>

#include "radhom/radfunctor.hpp"

namespace radhom::cli {

namespace {

int count(const Report& r) { return static_cast<int>(r.violations.size()); }

json ideal_list(const std::vector<IdealSet>& ideals) {
    json out = json::array();
    for (const auto& i : ideals) out.push_back(to_json(i.elements));
    return out;
}

json submodule_list(const std::vector<SubmoduleSet>& subs) {
    json out = json::array();
    for (const auto& s : subs) out.push_back(to_json(s.elements));
    return out;
}

json radical_objects(const ChainComplex& c) {
    json out = json::array();
    for (int n = 0; n <= c.top(); ++n) out.push_back(submodule_list(radical_semimodule(c.module(n))->elements()));
    return out;
}

json homology_json(const HomologyData& h) {
    json classes = json::array();
    for (const auto& cls : h.quotient.classes) {
        json members = json::array();
        for (Elem e : cls) members.push_back(h.cycle_module.embed[static_cast<std::size_t>(e)]);
        classes.push_back(std::move(members));
    }
    json reps = json::array();
    for (int c = 0; c < h.class_count(); ++c) reps.push_back(h.representative(c));
    return json{{"degree", h.degree},
                {"cycles", json(h.cycles.sorted())},
                {"boundaries", json(h.boundaries.sorted())},
                {"class_count", h.class_count()},
                {"classes", std::move(classes)},
                {"reps", std::move(reps)}};
}

json maps_json(const SemiComplexMap& m) {
    json out = json::array();
    for (const auto& c : m.components) out.push_back(to_json(c));
    return out;
}

ModuleHomotopy read_homotopy(Reader& reader, const ComplexMap& phi, const json& j, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != phi.top() + 1)
        throw InputError("SchemaError", where, "expected " + std::to_string(phi.top() + 1) + " components");
    ModuleHomotopy s;
    for (int n = 0; n <= phi.top(); ++n) {
        auto target = n < phi.target.top() ? phi.target.module(n + 1) : zero_module(phi.target.ring());
        s.push_back(reader.hom(phi.source.module(n), target, j[static_cast<std::size_t>(n)],
                               where + "/" + std::to_string(n)));
    }
    return s;
}

json resolution_json(const ResolutionReport& rep) {
    json certs = json::array();
    for (const auto& v : rep.verdicts) {
        if (!v.certified()) {
            certs.push_back(nullptr);
            continue;
        }
        const auto& w = v.certificate->witness;
        certs.push_back(json{{"basis_size", v.certificate->basis_size()},
                             {"surjection", to_json(w.surjection)},
                             {"injection", to_json(w.injection)}});
    }
    return json{{"defects", to_json(rep.defects)}, {"notes", to_json(rep.notes)}, {"certificates", std::move(certs)}};
}

json h0_json(const H0Report& h) {
    return json{{"h0_classes", h.h0_classes},
                {"quotient_classes", h.quotient_classes},
                {"target_size", h.target_size},
                {"h0_iso_quotient", h.h0_iso_quotient},
                {"h0_iso_target", h.h0_iso_target},
                {"quotient_iso_target", h.quotient_iso_target},
                {"h0_iso_p0", h.h0_iso_p0}};
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"ring-info", "module-radicals", "semimodule-quotient",
                                                "complex-homology", "snake", "homotopy",
                                                "resolve-lift", "verify-paper"};
    return names;
}

CommandResult run_command(const std::string& name, const json& input, Reader& reader, const CommandOptions& opts) {
    using Fn = CommandResult (*)(const json&, Reader&, const CommandOptions&);
    static const std::map<std::string, Fn> table{
        {"ring-info", cmd_ring_info},         {"module-radicals", cmd_module_radicals},
        {"semimodule-quotient", cmd_semimodule_quotient}, {"complex-homology", cmd_complex_homology},
        {"snake", cmd_snake},                 {"homotopy", cmd_homotopy},
        {"resolve-lift", cmd_resolve_lift},   {"verify-paper", cmd_verify_paper}};
    auto it = table.find(name);
    if (it == table.end()) throw InputError("SchemaError", "", "unknown command \"" + name + "\"");
    return located("", [&] { return it->second(input, reader, opts); });
}

CommandResult cmd_ring_info(const json& in, Reader& reader, const CommandOptions&) {
    auto r = reader.ring(in, "");
    auto ideals = enumerate_ideals(r);
    std::vector<IdealSet> primes;
    for (const auto& i : ideals)
        if (is_prime_ideal(i)) primes.push_back(i);
    auto rs = build_radical_semiring(r);
    auto axioms = verify_semiring_axioms(*rs->semiring());
    CommandResult res;
    res.output = json{{"size", r->size()},
                      {"counts",
                       {{"ideals", ideals.size()}, {"primes", primes.size()}, {"radicals", rs->elements().size()}}},
                      {"ideals", ideal_list(ideals)},
                      {"primes", ideal_list(primes)},
                      {"radicals", ideal_list(rs->elements())},
                      {"radical_semiring", semiring_tables(*rs->semiring())},
                      {"axioms", to_json(axioms)}};
    res.violations = count(axioms);
    return res;
}

CommandResult cmd_module_radicals(const json& in, Reader& reader, const CommandOptions&) {
    auto m = reader.module(in, "");
    auto subs = enumerate_submodules(m);
    auto rs = radical_semimodule(m);
    std::vector<SubmoduleSet> primes;
    json radical_of = json::array();
    for (const auto& s : subs) {
        if (is_prime_submodule(s)) primes.push_back(s);
        auto at = rs->index_of(radical_of_submodule(s));
        if (!at) throw InternalConsistencyError("radical missing from R(M)");
        radical_of.push_back(*at);
    }
    auto axioms = verify_semimodule_axioms(*rs->carrier());
    CommandResult res;
    res.output = json{{"size", m->size()},
                      {"counts",
                       {{"submodules", subs.size()}, {"primes", primes.size()}, {"radicals", rs->elements().size()}}},
                      {"submodules", submodule_list(subs)},
                      {"primes", submodule_list(primes)},
                      {"radical_of", std::move(radical_of)},
                      {"radical_module", is_radical_module(m)},
                      {"radical_semimodule", radical_semimodule_json(m, in)},
                      {"axioms", to_json(axioms)}};
    res.violations = count(axioms);
    return res;
}

CommandResult cmd_semimodule_quotient(const json& in, Reader& reader, const CommandOptions&) {
    auto sm = reader.semimodule(field(in, "semimodule", ""), "/semimodule");
    auto check = verify_semiring_axioms(*sm->scalars());
    check.merge(verify_semimodule_axioms(*sm));
    if (!check.ok())
        throw InputError("AxiomError", "/semimodule",
                         "semimodule axiom violated: " + check.violations.front().law + " at " +
                             check.violations.front().witness);
    auto gens = index_array(field(in, "generators", ""), "/generators");
    auto sub = located("/generators", [&] { return subsemimodule_generated(sm, gens); });
    auto q = bourne_quotient(sm, sub);
    CommandResult res;
    res.output = json{{"sub", json(sub.sorted())},
                      {"subtractive", is_subtractive(sub)},
                      {"quotient", quotient_json(q)},
                      {"tables", semimodule_tables(*q.quotient)}};
    return res;
}

CommandResult cmd_complex_homology(const json& in, Reader& reader, const CommandOptions&) {
    auto c = reader.complex(in, "");
    auto rc = apply_radical(c);
    json degrees = json::array(), counts = json::array();
    for (int n = 0; n <= rc.top(); ++n) {
        auto h = homology(rc, n);
        counts.push_back(h.class_count());
        degrees.push_back(homology_json(h));
    }
    CommandResult res;
    res.output = json{{"objects", radical_objects(c)},
                      {"class_counts", std::move(counts)},
                      {"degrees", std::move(degrees)},
                      {"radical_acyclic", is_acyclic(rc)}};
    return res;
}

CommandResult cmd_snake(const json& in, Reader& reader, const CommandOptions&) {
    auto ses = reader.short_exact_seq(in, "");
    auto hyp = check_snake_hypotheses(ses);
    CommandResult res;
    auto& out = res.output;
    out["hypotheses"] = to_json(hyp);
    const bool acyclic[3] = {is_radical_acyclic(ses.left()), is_radical_acyclic(ses.middle()),
                             is_radical_acyclic(ses.right())};
    out["acyclic"] = json{{"left", acyclic[0]}, {"middle", acyclic[1]}, {"right", acyclic[2]}};
    if (!hyp.ok()) {
        out["status"] = "hypotheses not satisfied";
        return res;
    }
    auto les = long_exact_sequence(ses);
    json seq = json::array();
    for (const auto& m : les.maps) seq.push_back(json{{"label", m.label}, {"map", to_json(m.map)}});
    json conn = json::array();
    for (const auto& c : les.connecting)
        conn.push_back(json{{"degree", c.degree},
                            {"map", c.map ? to_json(*c.map) : json(nullptr)},
                            {"violations", to_json(c.violations)},
                            {"defects", to_json(c.defects)}});
    const int acyclic_count = acyclic[0] + acyclic[1] + acyclic[2];
    const bool two_of_three = acyclic_count != 2;
    out["sequence"] = std::move(seq);
    out["connecting"] = std::move(conn);
    out["exactness"] = to_json(les.exactness);
    out["violations"] = to_json(les.violations);
    out["defects"] = to_json(les.defects);
    out["two_of_three"] = two_of_three;
    out["status"] = les.ok() ? "exact at all junctions" : "not exact";
    res.violations = count(les.exactness) + count(les.violations) + count(les.defects) + (two_of_three ? 0 : 1);
    return res;
}

CommandResult cmd_homotopy(const json& in, Reader& reader, const CommandOptions& opts) {
    auto src = reader.complex(field(in, "source", ""), "/source");
    auto tgt = reader.complex(field(in, "target", ""), "/target");
    auto phi = reader.complex_map(src, tgt, field(in, "phi", ""), "/phi");
    auto psi = reader.complex_map(src, tgt, field(in, "psi", ""), "/psi");
    if (phi.top() != psi.top()) throw InputError("SchemaError", "/psi", "phi and psi differ in length");
    auto rphi = apply_radical(phi), rpsi = apply_radical(psi);

    CommandResult res;
    auto& out = res.output;
    json hphi = json::array(), hpsi = json::array();
    Report homology_equal;
    for (int n = 0; n <= rphi.top(); ++n) {
        auto hs = homology(rphi.source, n), ht = homology(rphi.target, n);
        auto a = induced_homology_map(rphi, hs, ht), b = induced_homology_map(rpsi, hs, ht);
        if (!(a == b)) homology_equal.add("H_n(R(phi)) = H_n(R(psi))", "degree " + std::to_string(n));
        hphi.push_back(to_json(a));
        hpsi.push_back(to_json(b));
    }
    out["homology"] = json{{"phi", std::move(hphi)}, {"psi", std::move(hpsi)}};

    if (in.contains("s")) {
        auto s = read_homotopy(reader, phi, in["s"], "/s");
        auto pre = module_homotopy_violations(phi, psi, s);
        if (!pre.ok())
            throw InputError("PreconditionError", "/s",
                             "maps are not homotopic via s: " + pre.violations.front().law + ", " +
                                 pre.violations.front().witness);
        auto tr = radical_homotopy_transport(phi, psi, s);
        out["pair"] = homotopy_pair_json(tr.pair);
        out["pair_identity"] = to_json(tr.pair_report);
        out["homology_equal"] = to_json(tr.homology_report);
        res.violations = count(tr.pair_report) + count(tr.homology_report);
    } else {
        auto found = find_homotopy_pair(rphi, rpsi, opts.search());
        out["search"] = json{{"found", found.pair.has_value()},
                             {"bound_exceeded", found.bound_exceeded},
                             {"pair", found.pair ? homotopy_pair_json(*found.pair) : json(nullptr)}};
        out["homology_equal"] = to_json(homology_equal);
    }
    return res;
}

CommandResult cmd_resolve_lift(const json& in, Reader& reader, const CommandOptions& opts) {
    auto r = reader.resolution(field(in, "source", ""), "/source");
    auto r2 = reader.resolution(field(in, "target", ""), "/target");
    auto g = reader.hom(r.target(), r2.target(), field(in, "g", ""), "/g");

    CommandResult res;
    auto& out = res.output;
    auto rep = verify_radical_resolution(r, opts.max_basis, opts.search());
    auto rep2 = verify_radical_resolution(r2, opts.max_basis, opts.search());
    out["resolutions"] = json{{"source", resolution_json(rep)}, {"target", resolution_json(rep2)}};
    out["h0"] = json{{"source", h0_json(resolution_h0_check(r, opts.search()))},
                     {"target", h0_json(resolution_h0_check(r2, opts.search()))}};
    res.violations = count(rep.defects) + count(rep2.defects);
    if (!rep.ok() || !rep2.ok()) {
        out["status"] = "resolution defects";
        return res;
    }

    LiftOptions canonical{0, opts.search()}, seeded{opts.seed, opts.search()};
    auto a = lift_map(g, r, r2, canonical);
    auto b = lift_map(g, r, r2, seeded);
    res.violations += count(a.violations) + count(b.violations);
    out["lift"] = a.map ? maps_json(*a.map) : json(nullptr);
    out["lift_seeded"] = b.map ? maps_json(*b.map) : json(nullptr);
    out["lift_violations"] = to_json(a.violations);
    if (!a.map || !b.map) {
        out["status"] = "no lift";
        return res;
    }
    auto hc = homotopy_between_lifts(*a.map, *b.map, r, r2, opts.max_basis, opts.search());
    out["homotopy"] = json{{"pair", hc.pair ? homotopy_pair_json(*hc.pair) : json(nullptr)},
                           {"violations", to_json(hc.violations)},
                           {"notes", hc.notes}};
    res.violations += count(hc.violations);
    out["status"] = res.violations == 0 ? "lifted" : "violations";
    return res;
}

}  // namespace radhom::cli
