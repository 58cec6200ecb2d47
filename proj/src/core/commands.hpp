// Command runners: one function per CLI subcommand, each returning a
// complete report envelope plus the data an exit-code policy needs.
// The CLI and the C API are both thin shells over these.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace normcert {

struct CommandResult {
    ordered_json report;
    // 1 = nondegenerate, 0 = degenerate, -1 = not a verdict command.
    int verdict = -1;
    // False when a self-check the theory guarantees did not hold
    // (failing prime certificate, witness that does not verify).
    bool certificate_ok = true;
};

CommandResult cmd_matrix(const std::string& group_spec);
CommandResult cmd_check(const std::string& group_spec,
                        const std::string& basis,
                        const std::optional<std::vector<long>>& multiplicities);
CommandResult cmd_witness(const std::string& group_spec);
CommandResult cmd_certify_prime(long p,
                                const std::optional<std::vector<long>>& a);
CommandResult cmd_lemma2(long k, const std::string& v1_bits);
CommandResult cmd_sweep(long max_order);

}  // namespace normcert
