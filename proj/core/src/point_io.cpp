#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vnet/net.hpp"

namespace vnet {

void write_points_csv(std::ostream& out, const NetPointSet& points, bool as_float) {
  out << "# q=" << points.q << " m=" << points.m << " s=" << points.s << " den=" << points.den << '\n';
  char buf[32];
  for (std::uint64_t n = 0; n < points.size(); ++n) {
    for (std::size_t i = 0; i < points.s; ++i) {
      if (i > 0) out << ',';
      if (as_float) {
        const double x = static_cast<double>(points.at(n, i)) / static_cast<double>(points.den);
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf;
      } else {
        out << points.at(n, i);
      }
    }
    out << '\n';
  }
}

namespace {

std::uint64_t header_field(const std::string& header, const std::string& key) {
  const auto pos = header.find(" " + key + "=");
  if (pos == std::string::npos) throw Error(ErrorKind::InvalidArgument, "point file header lacks " + key);
  std::uint64_t v = 0;
  const char* begin = header.data() + pos + key.size() + 2;
  const auto [ptr, ec] = std::from_chars(begin, header.data() + header.size(), v);
  if (ec != std::errc{} || ptr == begin) {
    throw Error(ErrorKind::InvalidArgument, "malformed " + key + " in point file header");
  }
  return v;
}

}  // namespace

NetPointSet read_points_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
    throw Error(ErrorKind::InvalidArgument, "point file must start with '# q=... m=... s=... den=...'");
  }
  NetPointSet pts;
  pts.q = static_cast<std::uint32_t>(header_field(header, "q"));
  pts.m = static_cast<unsigned>(header_field(header, "m"));
  pts.s = static_cast<std::size_t>(header_field(header, "s"));
  pts.den = header_field(header, "den");
  if (pts.s == 0 || pts.den != checked_pow(pts.q, pts.m)) {
    throw Error(ErrorKind::InvalidArgument, "inconsistent point file header");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t count = 0;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || v >= pts.den) {
        throw Error(ErrorKind::InvalidArgument, "bad point coordinate '" + std::string(tok) + "'");
      }
      pts.numerators.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != pts.s) throw Error(ErrorKind::InvalidArgument, "point row has wrong arity");
  }
  if (pts.size() != pts.den) throw Error(ErrorKind::InvalidArgument, "point file must hold q^m rows");
  return pts;
}

}  // namespace vnet
