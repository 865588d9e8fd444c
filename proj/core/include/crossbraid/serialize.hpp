#pragma once

// JSON documents. Scalars are always exact "p/q" strings, never numbers, and
// object keys come out in a fixed order so documents are byte-stable.

#include <crossbraid/braiding.hpp>
#include <crossbraid/crossed.hpp>
#include <crossbraid/hopf.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossbraid {

/// Malformed JSON, missing fields, or values of the wrong kind.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {dim, labels, mult, unit, comult, counit, antipode}; mult/comult are
/// nested [i][j][k] arrays, antipode is [row][col].
std::string hopf_to_json(const HopfData& h);

/// Inverse of hopf_to_json. Throws FormatError on malformed documents and
/// StructuralError on shape mismatches.
HopfData hopf_from_json(std::string_view text);

/// {group: {labels, table}, g, f, gamma, bigalois}; g entries are vectors in
/// H, f entries matrices, all as "p/q" strings.
std::string datum_to_json(const CrossedDatum& d);
CrossedDatum datum_from_json(std::string_view text);

std::string report_to_json(const Report& r);

/// {preset, display, verdict, reason, certificate, exploratory}.
std::string verdict_to_json(const Verdict& v);

/// A JSON array of verdicts.
std::string verdicts_to_json(const std::vector<Verdict>& vs);

}  // namespace crossbraid
