#include "io.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "radhom/radfunctor.hpp"

namespace radhom::cli {

namespace fs = std::filesystem;

namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

Table table_field(const json& j, const char* key, const std::string& where) {
    const auto& rows = field(j, key, where);
    const auto loc = child(where, key);
    if (!rows.is_array()) throw InputError("SchemaError", loc, "expected an array of rows");
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(index_array(rows[i], child(loc, i)));
    return located(loc, [&] { return Table::from_rows(out); });
}

const json& array_field(const json& j, const char* key, const std::string& where) {
    const auto& a = field(j, key, where);
    if (!a.is_array()) throw InputError("SchemaError", child(where, key), "expected an array");
    return a;
}

std::string kind_of(const json& j, const std::string& where) {
    const auto& k = field(j, "kind", where);
    if (!k.is_string()) throw InputError("SchemaError", child(where, "kind"), "expected a string");
    return k.get<std::string>();
}

std::vector<Elem> generators(const json& j, const std::string& where) {
    return index_array(field(j, "generators", where), child(where, "generators"));
}

json ring_key(const FiniteRing& r) {
    return json{{"kind", "ring"},
                {"add", to_json(r.add_table())},
                {"mul", to_json(r.mul_table())},
                {"zero", r.zero()},
                {"one", r.one()}};
}

json module_key(const FiniteModule& m) {
    return json{{"kind", "module"},
                {"ring", ring_key(*m.ring())},
                {"add", to_json(m.add_table())},
                {"action", to_json(m.action_table())},
                {"zero", m.zero()}};
}

std::vector<Subset> members_from(const json& arr, int size) {
    std::vector<Subset> out;
    for (const auto& m : arr) {
        Subset s(size);
        for (const auto& e : m) {
            const auto x = e.get<Elem>();
            if (x < 0 || x >= size) throw ShapeError("cached member out of range");
            s.insert(x);
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Loads a matching entry into seed, or computes and stores the lattice.
void cache_lattice(const fs::path& dir, const json& key, int size, const std::function<void(std::vector<Subset>)>& seed,
                   const std::function<std::vector<Subset>()>& compute) {
    const auto text = key.dump();
    std::ostringstream name;
    name << key["kind"].get<std::string>() << '-' << std::hex << std::hash<std::string>{}(text) << ".json";
    const auto path = dir / name.str();
    if (std::ifstream in(path); in) {
        try {
            auto entry = json::parse(in);
            if (entry.at("version") == LatticeCache::format_version && entry.at("key").get<std::string>() == text) {
                seed(members_from(entry.at("members"), size));
                return;
            }
        } catch (const std::exception&) {
            // unreadable or stale: recompute below
        }
    }
    json members = json::array();
    for (const auto& s : compute()) members.push_back(to_json(s));
    json entry{{"version", LatticeCache::format_version}, {"key", text}, {"members", std::move(members)}};
    std::error_code ec;
    fs::create_directories(dir, ec);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << entry.dump() << '\n';
    }
    fs::rename(tmp, path, ec);
}

}  // namespace

LatticeCache LatticeCache::from_env(bool disabled) {
    if (disabled) return LatticeCache(std::nullopt);
    const char* dir = std::getenv("RADHOM_CACHE_DIR");
    if (!dir || !*dir) return LatticeCache(std::nullopt);
    return LatticeCache(fs::path(dir));
}

void LatticeCache::prime(const RingPtr& ring) const {
    if (!dir_) return;
    cache_lattice(
        *dir_, ring_key(*ring), ring->size(), [&](std::vector<Subset> m) { seed_ideal_lattice(ring, std::move(m)); },
        [&] { return ideal_lattice(ring); });
}

void LatticeCache::prime(const ModulePtr& module) const {
    if (!dir_) return;
    prime(module->ring());
    cache_lattice(
        *dir_, module_key(*module), module->size(),
        [&](std::vector<Subset> m) { seed_submodule_lattice(module, std::move(m)); },
        [&] { return submodule_lattice(module); });
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError("SchemaError", where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError("SchemaError", where, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
    const auto& v = field(j, key, where);
    if (!v.is_number_integer()) throw InputError("SchemaError", child(where, key), "expected an integer");
    return v.get<int>();
}

std::vector<Elem> index_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError("SchemaError", where, "expected an array of indices");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw InputError("SchemaError", child(where, i), "expected an integer");
        out.push_back(j[i].get<Elem>());
    }
    return out;
}

RingPtr Reader::ring(const json& j, const std::string& where) {
    const auto key = j.dump();
    if (auto it = rings_.find(key); it != rings_.end()) return it->second;
    const auto kind = kind_of(j, where);
    RingPtr r;
    if (kind == "zn") {
        const int n = int_field(j, "n", where);
        r = located(child(where, "n"), [&] { return make_cyclic_ring(n); });
    } else if (kind == "product") {
        const auto& fs = array_field(j, "factors", where);
        if (fs.empty()) throw InputError("SchemaError", child(where, "factors"), "product needs a factor");
        r = ring(fs[0], child(child(where, "factors"), 0));
        for (std::size_t i = 1; i < fs.size(); ++i) {
            auto next = ring(fs[i], child(child(where, "factors"), i));
            r = make_product_ring(r, next);
        }
    } else if (kind == "table") {
        auto add = table_field(j, "add", where);
        auto mul = table_field(j, "mul", where);
        const int size = int_field(j, "size", where), zero = int_field(j, "zero", where),
                  one = int_field(j, "one", where);
        if (add.rows() != size) throw InputError("SchemaError", child(where, "add"), "table size differs from size");
        r = located(where, [&] { return make_table_ring(std::move(add), std::move(mul), zero, one); });
    } else {
        throw InputError("SchemaError", child(where, "kind"), "unknown ring kind \"" + kind + "\"");
    }
    cache_.prime(r);
    rings_.emplace(key, r);
    return r;
}

ModulePtr Reader::module(const json& j, const std::string& where) {
    const auto key = j.dump();
    if (auto it = modules_.find(key); it != modules_.end()) return it->second;
    const auto kind = kind_of(j, where);
    ModulePtr m;
    if (kind == "ring-as-module") {
        m = ring_as_module(ring(field(j, "ring", where), child(where, "ring")));
    } else if (kind == "zero") {
        m = zero_module(ring(field(j, "ring", where), child(where, "ring")));
    } else if (kind == "free") {
        auto r = ring(field(j, "ring", where), child(where, "ring"));
        const int k = int_field(j, "rank", where);
        m = located(child(where, "rank"), [&] { return free_module(r, k); });
    } else if (kind == "sum") {
        const auto& ss = array_field(j, "summands", where);
        if (ss.empty()) throw InputError("SchemaError", child(where, "summands"), "sum needs a summand");
        m = module(ss[0], child(child(where, "summands"), 0));
        for (std::size_t i = 1; i < ss.size(); ++i) {
            auto next = module(ss[i], child(child(where, "summands"), i));
            m = located(child(child(where, "summands"), i), [&] { return direct_sum(m, next); });
        }
    } else if (kind == "table") {
        auto r = ring(field(j, "ring", where), child(where, "ring"));
        auto add = table_field(j, "add", where);
        auto action = table_field(j, "action", where);
        const int size = int_field(j, "size", where), zero = int_field(j, "zero", where);
        if (add.rows() != size) throw InputError("SchemaError", child(where, "add"), "table size differs from size");
        m = located(where, [&] { return make_module(r, std::move(add), std::move(action), zero); });
    } else if (kind == "quotient" || kind == "submodule") {
        auto parent = module(field(j, "module", where), child(where, "module"));
        auto gens = generators(j, where);
        auto sub = located(child(where, "generators"), [&] { return submodule_generated(parent, gens); });
        m = kind == "quotient" ? quotient_module(sub).module : submodule_as_module(sub).module;
    } else {
        throw InputError("SchemaError", child(where, "kind"), "unknown module kind \"" + kind + "\"");
    }
    cache_.prime(m);
    modules_.emplace(key, m);
    return m;
}

ModuleHom Reader::hom(const ModulePtr& source, const ModulePtr& target, const json& j, const std::string& where) {
    auto map = index_array(j, where);
    return located(where, [&] { return check_module_hom(source, target, std::move(map)); });
}

ChainComplex Reader::complex(const json& j, const std::string& where) {
    const auto& ms = array_field(j, "modules", where);
    const auto& ds = array_field(j, "diffs", where);
    if (ms.empty()) throw InputError("SchemaError", child(where, "modules"), "complex needs a module");
    if (ds.size() + 1 != ms.size())
        throw InputError("SchemaError", child(where, "diffs"), "expected one diff per module above degree 0");
    std::vector<ModulePtr> modules;
    for (std::size_t i = 0; i < ms.size(); ++i) modules.push_back(module(ms[i], child(child(where, "modules"), i)));
    std::vector<ModuleHom> diffs;
    for (std::size_t i = 0; i < ds.size(); ++i)
        diffs.push_back(hom(modules[i + 1], modules[i], ds[i], child(child(where, "diffs"), i)));
    return located(where, [&] { return make_complex(std::move(modules), std::move(diffs)); });
}

ComplexMap Reader::complex_map(const ChainComplex& source, const ChainComplex& target, const json& j,
                               const std::string& where) {
    if (!j.is_array()) throw InputError("SchemaError", where, "expected an array of components");
    const int top = std::max({source.top(), target.top(), static_cast<int>(j.size()) - 1});
    if (static_cast<int>(j.size()) != top + 1)
        throw InputError("SchemaError", where, "expected " + std::to_string(top + 1) + " components");
    auto s = pad_complex(source, top), t = pad_complex(target, top);
    std::vector<ModuleHom> comps;
    for (int n = 0; n <= top; ++n)
        comps.push_back(hom(s.module(n), t.module(n), j[static_cast<std::size_t>(n)], child(where, static_cast<std::size_t>(n))));
    return located(where, [&] { return make_complex_map(s, t, std::move(comps)); });
}

ShortExactSeq Reader::short_exact_seq(const json& j, const std::string& where) {
    auto left = complex(field(j, "left", where), child(where, "left"));
    auto middle = complex(field(j, "middle", where), child(where, "middle"));
    auto right = complex(field(j, "right", where), child(where, "right"));
    auto phi = complex_map(left, middle, field(j, "phi", where), child(where, "phi"));
    auto psi = complex_map(phi.target, right, field(j, "psi", where), child(where, "psi"));
    return located(where, [&] { return make_short_exact_seq(phi, psi); });
}

RadicalResolution Reader::resolution(const json& j, const std::string& where) {
    auto c = complex(j, where);
    auto target = module(field(j, "target", where), child(where, "target"));
    auto aug = hom(c.module(0), target, field(j, "aug", where), child(where, "aug"));
    return located(where, [&] { return make_resolution(std::move(c), std::move(aug)); });
}

SemiringPtr Reader::semiring(const json& j, const std::string& where) {
    const auto kind = kind_of(j, where);
    if (kind == "boolean") return boolean_semiring();
    if (kind == "radical") return build_radical_semiring(ring(field(j, "ring", where), child(where, "ring")))->semiring();
    if (kind == "table") {
        auto add = table_field(j, "add", where);
        auto mul = table_field(j, "mul", where);
        const int size = int_field(j, "size", where), zero = int_field(j, "zero", where),
                  one = int_field(j, "one", where);
        if (add.rows() != size) throw InputError("SchemaError", child(where, "add"), "table size differs from size");
        return located(where, [&] {
            return std::make_shared<const FiniteSemiring>(std::move(add), std::move(mul), zero, one);
        });
    }
    throw InputError("SchemaError", child(where, "kind"), "unknown semiring kind \"" + kind + "\"");
}

SemimodulePtr Reader::semimodule(const json& j, const std::string& where) {
    const auto kind = kind_of(j, where);
    if (kind == "radical") return radical_carrier(module(field(j, "module", where), child(where, "module")));
    if (kind == "semiring")
        return semiring_as_semimodule(semiring(field(j, "semiring", where), child(where, "semiring")));
    if (kind == "table") {
        auto s = semiring(field(j, "semiring", where), child(where, "semiring"));
        auto add = table_field(j, "add", where);
        auto action = table_field(j, "action", where);
        const int size = int_field(j, "size", where), zero = int_field(j, "zero", where);
        if (add.rows() != size) throw InputError("SchemaError", child(where, "add"), "table size differs from size");
        return located(where, [&] {
            return std::make_shared<const FiniteSemimodule>(s, std::move(add), std::move(action), zero);
        });
    }
    throw InputError("SchemaError", child(where, "kind"), "unknown semimodule kind \"" + kind + "\"");
}

json to_json(const Subset& s) { return json(s.elements()); }

json to_json(const Report& r) {
    json out = json::array();
    for (const auto& v : r.violations) out.push_back(json{{"law", v.law}, {"witness", v.witness}});
    return out;
}

json to_json(const Table& t) { return json(t.to_rows()); }

json to_json(const SemiHom& h) { return json(h.map()); }

json semiring_tables(const FiniteSemiring& s) {
    return json{{"size", s.size()},
                {"add", to_json(s.add_table())},
                {"mul", to_json(s.mul_table())},
                {"zero", s.zero()},
                {"one", s.one()}};
}

json semimodule_tables(const FiniteSemimodule& m) {
    return json{{"size", m.size()}, {"add", to_json(m.add_table())}, {"action", to_json(m.action_table())},
                {"zero", m.zero()}};
}

json radical_semimodule_json(const ModulePtr& m, const json& spec) {
    auto rs = radical_semimodule(m);
    json elements = json::array();
    for (const auto& n : rs->elements()) elements.push_back(to_json(n.elements));
    return json{{"module", spec}, {"elements", std::move(elements)}, {"tables", semimodule_tables(*rs->carrier())}};
}

json quotient_json(const BourneQuotient& q) { return json{{"classes", q.classes}, {"reps", q.reps}}; }

json homotopy_pair_json(const HomotopyPair& p) {
    json s = json::array(), t = json::array();
    for (const auto& h : p.s) s.push_back(to_json(h));
    for (const auto& h : p.t) t.push_back(to_json(h));
    return json{{"s", std::move(s)}, {"t", std::move(t)}};
}

}  // namespace radhom::cli
