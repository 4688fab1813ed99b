#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Structure-constant text: `algebra dim=<d> field=<Fp:p|Q>`, `unit: ...`,
/// `mul i j k c` lines, plus optional `name:`, `vertex`, `arrow_ideal:`,
/// `group order=` and `class:` lines carrying provenance.
std::string write_algebra(const Algebra& a);
/// Throws Error(syntax_error) with a line number. Does not validate.
Algebra read_algebra(std::string_view text);

/// First line n, then n rows of n indices with 0 the identity.
CayleyTable read_cayley(std::string_view text);

enum class InputFormat { structure_constants, quiver, cayley };

/// Decided by the first meaningful line: `algebra`, an integer, or anything else (quiver DSL).
InputFormat detect_format(std::string_view text);

struct LoadOptions {
  FieldSpec field = FieldSpec::rationals();  ///< for Cayley tables and quiver files without a header
  std::map<std::string, std::string> params;  ///< quiver parameters such as q
};

Algebra parse_any(std::string_view text, const LoadOptions& options = {}, const std::string& descriptor = {});

/// Reads a file, or standard input for "-". Throws Error(io_error).
std::string read_text(const std::string& path);
/// Writes a file, or standard output for "-". Throws Error(io_error).
void write_text(const std::string& path, std::string_view text);

Algebra load_algebra(const std::string& path, const LoadOptions& options = {});

}  // namespace fdalg
