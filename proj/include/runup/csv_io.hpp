#pragma once

#include "runup/hodograph.hpp"
#include "runup/sampled_function.hpp"
#include "runup/wave_reference.hpp"

#include <string>
#include <vector>

namespace runup {

/// CSV files carry two comment headers:
///   # runup-csv v1
///   # type: profile|record|trace|field, units: dimensionless|SI
/// followed by a column-name row. Readers report failures with the
/// offending line number.

struct ProfileCsv {
    std::vector<double> x;
    std::vector<double> eta0;
    std::string units = "dimensionless";
};

struct RecordCsv {
    ShorelineRecord record; // v0 empty when the column is absent
    std::string units = "dimensionless";
};

ProfileCsv read_profile_csv(const std::string& path);
RecordCsv read_record_csv(const std::string& path);

void write_profile_csv(const std::string& path, const std::vector<double>& x,
                       const std::vector<double>& eta0, const std::string& units);
void write_record_csv(const std::string& path, const ShorelineRecord& r,
                      const std::string& units);
void write_trace_csv(const std::string& path, const ShorelineTrace& tr,
                     const std::string& units);
void write_field_csv(const std::string& path, const HodographField& f,
                     const std::string& units);

/// FNV-1a 64-bit digest of a file's bytes, as hex (for summary.json).
std::string file_digest(const std::string& path);

} // namespace runup
