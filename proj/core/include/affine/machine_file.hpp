#pragma once

#include "affine/afa.hpp"
#include "affine/afca.hpp"
#include "affine/errors.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

/*
 * Line-oriented machine definition format.
 *
 *     # comment
 *     type afa|afca|lasvegas|restart
 *     counters <k>                        (afca)
 *     accept-mode states|blind            (afca)
 *     states <name>...
 *     alphabet <symbol>...
 *     initial <name>
 *     accepting <name>...
 *     rejecting <name>...                 (lasvegas, restart)
 *     neutral <name>...                   (lasvegas)
 *     restarting <name>...                (restart)
 *     matrix <symbol>                     (afa types; followed by n rows)
 *     <n rationals>
 *     t <from> <symbol> <Z|N|*>... <to> <-1|0|+1>... <rational>   (afca)
 *
 * `^` and `$` name the end-markers. Rationals are `p` or `p/q`.
 */
namespace affine {

using Machine = std::variant<AfaSpec, AfcaSpec, LasVegasAfaSpec, RestartAfaSpec>;

/// "afa", "afca", "lasvegas" or "restart".
const char *type_name(const Machine &m) noexcept;

/// Parses and validates. Throws ParseError with a line/column for syntax
/// and name errors, and with the full validation report for well-formedness
/// failures.
Machine parse_machine(std::string_view text);

/// Reads and parses a file; throws ParseError if it cannot be read.
Machine load_machine(const std::filesystem::path &path);

/// Canonical text; parse_machine(serialize(m)) == m for every valid m.
std::string serialize(const Machine &m);

ValidationReport validate(const Machine &m);

} // namespace affine
