#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "latscreen/decomposition.hpp"
#include "latscreen/lattice.hpp"

namespace latscreen {

using Json = nlohmann::ordered_json;

// Parsed input file. `gram` already has `scale` applied.
struct LatticeFile {
  IntMatrix gram;
  std::string name;
  std::int64_t scale = 1;
};

// Accepts {"gram": [[...]], "name": ..., "scale": ...} or a plain whitespace
// separated square block. Errors carry line/column for syntax problems and the
// failing leading minor for non-definite input.
LatticeFile parse_lattice_file(const std::string& text);
Lattice parse_lattice(const std::string& text);

// FNV-1a 64 over the rank and Gram entries, as 16 hex digits.
std::string input_digest(const IntMatrix& gram);
std::string fnv1a_hex(const std::string& bytes);

// Report warning codes.
inline constexpr const char* kWarnOddP2b = "rank2_odd_p_2b";
inline constexpr const char* kWarnOddMomentum = "odd_momentum_doubled";
inline constexpr const char* kWarnCountMismatch = "screener_count_mismatch";
inline constexpr const char* kWarnRank2Mismatch = "rank2_list_mismatch";
inline constexpr const char* kWarnGammaUnavailable = "gamma_unavailable";

// A report plus whether it records a classification mismatch (exit status 3).
struct Report {
  Json doc;
  bool mismatch = false;
  Json timing;  // wall-clock data; kept out of `doc` so reports stay reproducible
};

Report cmd_screeners(const LatticeFile& in);
Report cmd_decompose(const LatticeFile& in);
Report cmd_classify(const LatticeFile& in);
Report cmd_rank2(const LatticeFile& in);
Report cmd_pairs(const LatticeFile& in, const Vec& alpha, std::int64_t max_r);
Report cmd_catalog(const std::string& type, std::optional<std::size_t> rank, std::int64_t scale);
Report cmd_oracle_check(std::uint64_t seed, std::size_t max_rank, std::size_t cases, std::int64_t max_entry);

// Family letter and rank from "D_4", "D4" or a letter plus a separate rank.
std::pair<RootFamily, std::size_t> parse_type(const std::string& type, std::optional<std::size_t> rank);

// Indented plain-text rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace latscreen
