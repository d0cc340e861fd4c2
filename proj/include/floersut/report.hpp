#pragma once

// JSON reports for the command line front end ("schema": 1) and their plain
// text rendering. Reports never depend on the thread count.

#include "floersut/io.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace floersut {

using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

/// Wraps a grid as an unnamed diagram file.
SfdFile grid_file(const GridSpec& g);

/// "ok" is false when validation fails; no homology is computed then.
Json compute_report(const SfdFile& file, const std::string& input, int threads = 1);

/// Empty cycles means the free basis of H_1(M, dM)/Tors. "ok" is false when
/// a listed identity fails.
Json action_report(const SfdFile& file, const std::string& input, const std::vector<NamedCycle>& cycles,
                   int threads = 1);

/// Requires a PATCH. Empty cycles means the cycles of the file, or the free
/// basis when the file has none.
Json decompose_report(const SfdFile& file, const std::string& input, const std::vector<NamedCycle>& cycles,
                      int threads = 1);

/// "same_class" is false (and no witness is attempted) when the classes differ
/// modulo torsion.
Json homotopy_report(const SfdFile& file, const std::string& input, const NamedCycle& first,
                     const NamedCycle& second, int threads = 1);

/// compute_report plus grid data: component count and the 2^(n-1) floor.
Json grid_report(const GridSpec& g, const std::string& input, int threads = 1);

std::string render_text(const Json& report);

}  // namespace floersut
