#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drinfeld/factor.hpp"
#include "drinfeld/family.hpp"

namespace drinfeld::cli {

enum class Format { Json, Csv };

struct SessionConfig {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t s = 1;
    /// Polynomial in u over F_p, e.g. "u^2+u+1".
    std::optional<std::string> modulus;
    std::string family = "r=2;g1=z";
    /// Orbit steps for heights, torsion decisions and membership.
    std::uint64_t budget_iter = 64;
    /// Divisor pairs for rational root search.
    std::uint64_t budget_div = 100'000;
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::Json;
};

/// Builds F_{q^s} from p, e, s and the optional modulus.
FieldPtr make_field(const SessionConfig& config);

enum class ElementKind { Constant, RatFunc, ParamPoly, FqPoly };
using Element = std::variant<FqElem, RatFunc, ParamPoly, FqPoly>;

/// Throws ParseError on malformed text.
Element parse_element(std::string_view text, ElementKind kind, const FieldPtr& field);

struct CommandResult {
    /// 0 success, 1 input error, 2 budget exhausted or undecided.
    int exit_code = 0;
    std::string output;
};

/// args[0] is the command name; global flags may appear anywhere.
CommandResult run_command(const std::vector<std::string>& args);

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

}  // namespace drinfeld::cli
