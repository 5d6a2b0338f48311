#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "radhom/chainhom.hpp"
#include "radhom/resolutions.hpp"

namespace radhom::cli {

using json = nlohmann::ordered_json;

/// Bad input document: kind is the core error class (or "SchemaError"),
/// location a JSON pointer into the input.
class InputError : public std::runtime_error {
public:
    InputError(std::string kind, std::string location, const std::string& message)
        : std::runtime_error(message), kind(std::move(kind)), location(std::move(location)) {}

    std::string kind;
    std::string location;
};

/// Persistent store for ideal and submodule lattices. Entries are keyed by
/// a hash of the canonical table text plus a format version; an entry whose
/// version or key text differs is ignored and overwritten.
class LatticeCache {
public:
    static constexpr int format_version = 1;

    /// Disabled when dir is empty.
    explicit LatticeCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}
    /// RADHOM_CACHE_DIR, unless disabled.
    static LatticeCache from_env(bool disabled);

    bool enabled() const { return dir_.has_value(); }
    void prime(const RingPtr& ring) const;
    void prime(const ModulePtr& module) const;

private:
    std::optional<std::filesystem::path> dir_;
};

/// Builds core objects from spec documents. Identical specs within one
/// reader share one object, so lattices are computed once per job.
class Reader {
public:
    explicit Reader(const LatticeCache& cache) : cache_(cache) {}

    RingPtr ring(const json& j, const std::string& where);
    ModulePtr module(const json& j, const std::string& where);
    ModuleHom hom(const ModulePtr& source, const ModulePtr& target, const json& j, const std::string& where);
    ChainComplex complex(const json& j, const std::string& where);
    ComplexMap complex_map(const ChainComplex& source, const ChainComplex& target, const json& j,
                           const std::string& where);
    ShortExactSeq short_exact_seq(const json& j, const std::string& where);
    RadicalResolution resolution(const json& j, const std::string& where);
    SemiringPtr semiring(const json& j, const std::string& where);
    SemimodulePtr semimodule(const json& j, const std::string& where);

private:
    const LatticeCache& cache_;
    std::map<std::string, RingPtr> rings_;
    std::map<std::string, ModulePtr> modules_;
};

// Field access with locations.
const json& field(const json& j, const char* key, const std::string& where);
int int_field(const json& j, const char* key, const std::string& where);
std::vector<Elem> index_array(const json& j, const std::string& where);

/// Runs f, turning core exceptions into InputError at the given location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const AxiomError& e) {
        throw InputError("AxiomError", where, e.what());
    } catch (const ShapeError& e) {
        throw InputError("ShapeError", where, e.what());
    } catch (const PreconditionError& e) {
        throw InputError("PreconditionError", where, e.what());
    } catch (const SearchBoundExceeded& e) {
        throw InputError("SearchBoundExceeded", where, e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError("SchemaError", where, e.what());
    }
}

// Output.
json to_json(const Subset& s);
json to_json(const Report& r);
json to_json(const Table& t);
json to_json(const SemiHom& h);
json semiring_tables(const FiniteSemiring& s);
json semimodule_tables(const FiniteSemimodule& m);
json radical_semimodule_json(const ModulePtr& m, const json& spec);
json quotient_json(const BourneQuotient& q);
json homotopy_pair_json(const HomotopyPair& p);

}  // namespace radhom::cli
