#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io.hpp"

namespace radhom::cli {

struct CommandOptions {
    int max_basis = 3;
    std::size_t hom_bound = 1'000'000;
    std::uint64_t seed = 0;

    SearchOptions search() const {
        SearchOptions o;
        o.hom_bound = hom_bound;
        return o;
    }
};

/// output is the report document; violations counts theorem-violation
/// entries (exit status 1 when nonzero).
struct CommandResult {
    json output;
    int violations = 0;
};

const std::vector<std::string>& command_names();

/// Throws InputError on invalid input.
CommandResult run_command(const std::string& name, const json& input, Reader& reader, const CommandOptions& opts);

CommandResult cmd_ring_info(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_module_radicals(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_semimodule_quotient(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_complex_homology(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_snake(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_homotopy(const json& in, Reader& reader, const CommandOptions& opts);
CommandResult cmd_resolve_lift(const json& in, Reader& reader, const CommandOptions& opts);
/// Input {"checks": [...]}; one pass/fail entry per check.
CommandResult cmd_verify_paper(const json& in, Reader& reader, const CommandOptions& opts);

}  // namespace radhom::cli
