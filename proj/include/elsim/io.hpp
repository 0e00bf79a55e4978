// On-disk formats: the energy.csv time series, raw little-endian float64
// field snapshots with a JSON sidecar header, and JSON run summaries. All
// writers are deterministic: identical state produces identical bytes.
#pragma once

#include <string>
#include <vector>

#include "elsim/diagnostics.hpp"

namespace elsim {

extern const char* const kEnergyCsvHeader;

void write_energy_csv(const std::string& path,
                      const std::vector<DiagRow>& rows);

// writes <base>.bin (payload, shape (N,N,N,3), C order, float64 LE) and
// <base>.json (sidecar header)
void write_snapshot(const std::string& base, const SpecVec& field,
                    const std::string& name, double time);

// reads a snapshot pair back into coefficients; the stored grid must match
SpecVec read_snapshot(const std::string& base, const TorusGrid& g);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace elsim
