#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gammafuzz/enumerate.hpp"
#include "gammafuzz/verify.hpp"

namespace gammafuzz::cli {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;

struct GlobalOptions {
    bool json = false;
    std::uint64_t budget = default_candidate_budget;
    bool zero_convention = true;
    unsigned threads = 1;
};

/// Candidate budget from GAMMAFUZZ_BUDGET, or the library default when the
/// variable is unset. Throws std::invalid_argument on a malformed value.
std::uint64_t budget_from_environment();

int cmd_validate(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Exit 0 when the subset is an ideal of `kind` (with mu(0) = 1 unless the
/// zero convention is lifted), 1 otherwise.
int cmd_check_ideal(const std::string& path, const std::string& subset, IdealKind kind, const GlobalOptions& opts,
                    std::ostream& out, std::ostream& err);

/// op is one of sum, prod, compose, meet. Operands are subset names from the
/// document, "theta", "one", or inline lists such as "[1,1/2]".
int cmd_op(const std::string& path, const std::string& op, const std::string& lhs, const std::string& rhs,
           const GlobalOptions& opts, std::ostream& out, std::ostream& err);

int cmd_enumerate(const std::string& path, const std::optional<std::string>& chain, IdealKind kind,
                  const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Exit 0 when no law fails, 1 when any fails, 2 on input errors.
int cmd_verify(const std::string& path, const std::optional<std::string>& chain, const std::vector<std::string>& laws,
               const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Exit 0 when regular, 1 when not.
int cmd_regular(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Report document for a suite run.
std::string reports_to_json(const std::string& structure, const Chain& chain, const std::vector<VerifyReport>& reports);

} // namespace gammafuzz::cli
