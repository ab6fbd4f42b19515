#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "systolab/core.hpp"

namespace systolab {

using json = nlohmann::json;

// Canonical serialization: object keys sorted (nlohmann's default json keeps
// a sorted map), every floating-point number printed with %.12g.  Reports
// must be byte-identical across runs, so the formatting is pinned here and
// nowhere else.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline void canonical_dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        canonical_dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        canonical_dump(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

inline std::string canonical_dump(const json& j) {
  std::string out;
  canonical_dump(j, out);
  out += '\n';
  return out;
}

inline json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::IoError, "cannot write " + path);
  out << bytes;
}

}  // namespace systolab
