#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thermo/grid.hpp"

namespace thermo {

// 17 significant digits: enough to round-trip an IEEE double, and the fixed
// encoding used by every CSV this tool emits.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) fail(errc::io_failure, "cannot open " + tmp + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) fail(errc::io_failure, "short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(errc::io_failure, "rename " + tmp + " -> " + path + ": " + ec.message());
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(errc::io_failure, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- PGM (P5, binary; 8- or 16-bit big-endian) ----

namespace detail {
inline int pgm_token(std::istringstream& in) {
  // skips whitespace and '#' comments
  while (true) {
    int c = in.peek();
    if (c == '#') {
      std::string junk;
      std::getline(in, junk);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int v = -1;
  in >> v;
  if (!in) fail(errc::bad_format, "malformed PGM header");
  return v;
}
}  // namespace detail

// Reads raw sample values (0..maxval) as doubles.
inline GrayImage read_pgm(const std::string& path) {
  const std::string raw = read_file(path);
  if (raw.size() < 2 || raw[0] != 'P' || raw[1] != '5')
    fail(errc::bad_format, path + ": not a binary PGM (P5)");
  std::istringstream in(raw);
  in.ignore(2);
  const int w = detail::pgm_token(in);
  const int h = detail::pgm_token(in);
  const int maxval = detail::pgm_token(in);
  if (w < 1 || h < 1 || maxval < 1 || maxval > 65535)
    fail(errc::bad_format, path + ": bad PGM dimensions");
  in.get();  // single whitespace after maxval
  const size_t offset = static_cast<size_t>(in.tellg());
  const size_t npx = static_cast<size_t>(w) * h;
  const int bytes = maxval > 255 ? 2 : 1;
  if (raw.size() < offset + npx * bytes) fail(errc::bad_format, path + ": truncated PGM data");
  GrayImage img(w, h);
  const unsigned char* p = reinterpret_cast<const unsigned char*>(raw.data()) + offset;
  for (size_t i = 0; i < npx; ++i) {
    if (bytes == 1) {
      img.data[i] = p[i];
    } else {
      img.data[i] = p[2 * i] * 256 + p[2 * i + 1];
    }
  }
  return img;
}

// Writes values clamped to [0,1] as 8-bit PGM.
inline std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.size());
  for (double v : img.data) {
    double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    out.push_back(static_cast<char>(static_cast<unsigned char>(c * 255.0 + 0.5)));
  }
  return out;
}

inline void write_pgm(const std::string& path, const GrayImage& img) {
  write_file_atomic(path, encode_pgm(img));
}

inline BinaryMask to_mask(const GrayImage& img, double threshold = 128.0) {
  BinaryMask m(img.width, img.height);
  for (size_t i = 0; i < img.size(); ++i) m.data[i] = img.data[i] >= threshold ? 1 : 0;
  return m;
}

inline BinaryMask read_mask_pgm(const std::string& path) { return to_mask(read_pgm(path)); }

inline void write_mask_pgm(const std::string& path, const BinaryMask& m) {
  GrayImage img(m.width, m.height);
  for (size_t i = 0; i < m.size(); ++i) img.data[i] = m.data[i] ? 1.0 : 0.0;
  write_pgm(path, img);
}

// ---- CSV ----

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) fail(errc::bad_format, ctx + ": trailing junk in number '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::bad_format, ctx + ": not a number: '" + s + "'");
  }
}

// Headerless numeric matrix; every row must have the same arity.
inline std::vector<std::vector<double>> read_csv_matrix(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c, path));
    if (!rows.empty() && row.size() != rows.front().size())
      fail(errc::bad_format, path + ": ragged CSV rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(errc::bad_format, path + ": empty CSV");
  return rows;
}

// Grayscale matrix CSV: rows = image rows.
inline GrayImage read_csv_image(const std::string& path) {
  const auto rows = read_csv_matrix(path);
  GrayImage img(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) img.at(x, y) = rows[y][x];
  return img;
}

inline BinaryMask read_csv_mask(const std::string& path) {
  const auto rows = read_csv_matrix(path);
  BinaryMask m(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) m.at(x, y) = rows[y][x] != 0.0 ? 1 : 0;
  return m;
}

// Radial signal CSV: single column, header "r".
inline std::string encode_radial_csv(const std::vector<double>& values) {
  std::string out = "r\n";
  for (double v : values) {
    out += fmt17(v);
    out += '\n';
  }
  return out;
}

inline std::vector<double> read_radial_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line)[0] != "r")
    fail(errc::bad_format, path + ": expected header 'r'");
  std::vector<double> out;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_double(split_csv_line(line)[0], path));
  }
  return out;
}

}  // namespace thermo
