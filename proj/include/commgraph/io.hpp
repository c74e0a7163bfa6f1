#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "commgraph/canonical.hpp"
#include "commgraph/matrix.hpp"

namespace cg {

// Certificates and reports keep insertion order so serialized output is
// byte-stable across runs.
using json = nlohmann::ordered_json;

// "field Q" | "field gf p k [c0,c1,...,ck]"; modulus omitted for k = 1 and
// optional for k > 1 (the canonical default is selected).
Field field_from_line(const std::string& line);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

// First line "n m", then n rows of m entries. Entries use the field's text
// syntax: rationals "a/b" or "a", GF(p) residues, GF(p^k) "[c0:c1:...]".
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const Field& f, const std::string& text);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Matrix file: an optional leading field line, then the matrix text. The
// hint supplies the field when the file has no field line.
Matrix read_matrix_file(const std::string& path, const std::optional<Field>& field_hint);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Comma-separated "size:eigenvalue" pairs, e.g. "3:0" or "1:0,2:1".
// The eigenvalue part uses the field's entry syntax.
JordanSpec parse_jordan_spec(const Field& f, const std::string& text);
std::string jordan_spec_to_string(const Field& f, const JordanSpec& spec);

} // namespace cg
