#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mmsts/design.hpp"
#include "mmsts/rational.hpp"

namespace mmsts {

// Design file format: {"n": int, "blocks": [[a,b,c], ...],
// "block_labels": [int, ...] optional}. File order of "blocks" defines the
// labeling when "block_labels" is absent. nlohmann::json keeps object keys
// sorted, so serialized output is canonical and diff-stable.

// Throws std::runtime_error on malformed JSON or a wrong shape. The returned
// design is unvalidated; run verify_sts / system_from_raw next.
RawDesign read_design(std::istream& in);
RawDesign read_design_file(const std::string& path);

nlohmann::json design_json(const SteinerTripleSystem& system,
                           const BlockLabeling* labeling = nullptr);

// dump(2) with a trailing newline; the single canonical byte form used for
// every file and stdout emission.
std::string canonical_dump(const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& content);

// "p/q" (always with the denominator, e.g. "2/1").
nlohmann::json rational_json(const Rational& r);

// Popularity file: JSON array of integers or "p/q" strings.
std::vector<Rational> read_popularity(std::istream& in);
std::vector<Rational> read_popularity_file(const std::string& path);

}  // namespace mmsts
