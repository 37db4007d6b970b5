#pragma once

#include <span>
#include <string>
#include <vector>

#include "hmf/state.hpp"

namespace hmflab {

inline constexpr const char* kTimeseriesHeader = "t,mx,my,m,u,p_total";

// One row per sample, every value with 17 significant digits.
std::string format_timeseries(std::span<const hmf::Observables> samples);

// Inverse of format_timeseries. Throws IoError on malformed input.
std::vector<hmf::Observables> parse_timeseries(const std::string& text);

std::string format_double(double x);

// Creates the directory (and parents) if missing. Throws IoError.
void ensure_directory(const std::string& dir);

// Writes through a temporary file and renames it into place. Throws IoError.
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

std::string join_path(const std::string& dir, const std::string& name);

}  // namespace hmflab
