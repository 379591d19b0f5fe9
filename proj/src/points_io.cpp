#include "paircorr/points_io.hpp"

#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

namespace paircorr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PointSet parse_points(std::istream& in, const std::string& name) {
  std::vector<Rational> pts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v(line);
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    try {
      pts.push_back(Rational::parse(v).mod1());
    } catch (const std::invalid_argument&) {
      throw IngestError(name + ":" + std::to_string(line_no) + ": cannot parse '" +
                        std::string(v) + "' as a point value");
    }
  }
  return PointSet(std::move(pts));
}

PointSet ingest_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open points file: " + path);
  return parse_points(in, path);
}

}  // namespace paircorr
