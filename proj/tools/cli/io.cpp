#include "io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"

namespace hmflab {

namespace fs = std::filesystem;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_timeseries(std::span<const hmf::Observables> samples) {
  std::string out = kTimeseriesHeader;
  out += '\n';
  for (const auto& o : samples) {
    for (double x : {o.t, o.mx, o.my, o.m, o.u}) {
      out += format_double(x);
      out += ',';
    }
    out += format_double(o.p_total);
    out += '\n';
  }
  return out;
}

std::vector<hmf::Observables> parse_timeseries(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kTimeseriesHeader) {
    throw IoError("time series does not start with the expected header");
  }
  std::vector<hmf::Observables> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    double v[6];
    const char* p = line.c_str();
    for (int i = 0; i < 6; ++i) {
      char* end = nullptr;
      v[i] = std::strtod(p, &end);
      const char expect = i < 5 ? ',' : '\0';
      if (end == p || *end != expect) {
        throw IoError("malformed time-series row " + std::to_string(row));
      }
      p = end + (i < 5 ? 1 : 0);
    }
    out.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return out;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  if (dir.empty()) return;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  }
}

void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || fs::path(name).is_absolute()) return name;
  return (fs::path(dir) / name).string();
}

}  // namespace hmflab
