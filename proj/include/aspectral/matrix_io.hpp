#pragma once

// MatrixFile JSON: {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major
// order. Values are written with 17 significant digits, so a write/read cycle
// reproduces every double exactly.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "aspectral/aspectrum.hpp"
#include "aspectral/laws.hpp"
#include "aspectral/matcore.hpp"

namespace aspectral {

std::string format_double(double v);

std::string matrix_to_json(const ComplexMatrix& m);
// Throws ParseError on malformed input, a length mismatch or non-finite data.
ComplexMatrix matrix_from_json(const std::string& text);

void write_matrix_file(const std::string& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::string& path);

std::string spectrum_to_json(const SpectrumReport& report);

// Timing is omitted by default so that reruns are byte-identical.
std::string law_reports_to_json(const FuzzConfig& cfg, const std::vector<LawReport>& reports,
                                bool include_timing = false);
std::string witness_to_json(const std::string& law_id, const Witness& w);

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::map<std::string, double> tolerance_overrides;
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
};

std::string manifest_to_json(const RunManifest& m);
std::string utc_timestamp();

// Library version recorded in manifests.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace aspectral
