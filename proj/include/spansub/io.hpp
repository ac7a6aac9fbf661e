#pragma once

// Text formats shared by the CLI, generators and verifier.
//
// Digraph:  first line "n a", then a lines "u v" (arc u->v, 0-indexed).
// Certificate: first line "k m", then k lines "branch i v", then one line
//   "route a b : v0 v1 ... vL" per arc a->b of the pattern.
// Lines starting with '#' and blank lines are ignored in both formats.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spansub/certificate.hpp"
#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/pattern.hpp"

namespace spansub {

namespace io_detail {

inline bool next_content_line(std::istream& is, std::string& line, long long& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] inline void fail(long long lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace io_detail

inline Digraph read_digraph(std::istream& is) {
  std::string line;
  long long lineno = 0;
  if (!io_detail::next_content_line(is, line, lineno)) throw ParseError("empty digraph input");

  long long n = 0, a = 0;
  {
    std::istringstream head(line);
    if (!(head >> n >> a) || n < 0 || a < 0) io_detail::fail(lineno, "expected header 'n a'");
    std::string extra;
    if (head >> extra) io_detail::fail(lineno, "trailing tokens after header");
  }

  Digraph d(static_cast<int>(n));
  for (long long i = 0; i < a; ++i) {
    if (!io_detail::next_content_line(is, line, lineno)) io_detail::fail(lineno, "expected " + std::to_string(a) + " arcs, got " + std::to_string(i));
    std::istringstream arc(line);
    long long u = 0, v = 0;
    if (!(arc >> u >> v)) io_detail::fail(lineno, "expected arc 'u v'");
    std::string extra;
    if (arc >> extra) io_detail::fail(lineno, "trailing tokens after arc");
    try {
      d.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const std::invalid_argument& e) {
      io_detail::fail(lineno, e.what());
    }
  }
  if (io_detail::next_content_line(is, line, lineno)) io_detail::fail(lineno, "unexpected content after arc list");
  return d;
}

inline void write_digraph(std::ostream& os, const Digraph& d) {
  os << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) os << a.from << ' ' << a.to << '\n';
}

inline SubdivisionCertificate read_certificate(std::istream& is, const PatternDigraph& h) {
  std::string line;
  long long lineno = 0;
  if (!io_detail::next_content_line(is, line, lineno)) throw ParseError("empty certificate input");

  int k = 0, m = 0;
  {
    std::istringstream head(line);
    if (!(head >> k >> m)) io_detail::fail(lineno, "expected header 'k m'");
  }
  if (k != h.vertex_count() || m != h.arc_count())
    io_detail::fail(lineno, "certificate header does not match the pattern (k m)");

  SubdivisionCertificate cert;
  cert.branch.assign(k, -1);
  cert.routes.assign(m, {});

  for (int i = 0; i < k; ++i) {
    if (!io_detail::next_content_line(is, line, lineno)) io_detail::fail(lineno, "missing branch line");
    std::istringstream bs(line);
    std::string tag;
    int x = -1;
    long long v = -1;
    if (!(bs >> tag >> x >> v) || tag != "branch") io_detail::fail(lineno, "expected 'branch i v'");
    if (x < 0 || x >= k) io_detail::fail(lineno, "branch index out of range");
    if (cert.branch[x] != -1) io_detail::fail(lineno, "duplicate branch line for vertex " + std::to_string(x));
    cert.branch[x] = static_cast<Vertex>(v);
  }

  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    if (!io_detail::next_content_line(is, line, lineno)) io_detail::fail(lineno, "missing route line");
    std::istringstream rs(line);
    std::string tag, colon;
    int a = -1, b = -1;
    if (!(rs >> tag >> a >> b >> colon) || tag != "route" || colon != ":")
      io_detail::fail(lineno, "expected 'route a b : v0 ... vL'");
    int idx = -1;
    for (int j = 0; j < m; ++j)
      if (h.arcs()[j].from == a && h.arcs()[j].to == b) idx = j;
    if (idx < 0) io_detail::fail(lineno, "route for arc " + std::to_string(a) + "->" + std::to_string(b) + " not in pattern");
    if (seen[idx]) io_detail::fail(lineno, "duplicate route for one pattern arc");
    seen[idx] = true;
    long long v;
    while (rs >> v) cert.routes[idx].push_back(static_cast<Vertex>(v));
    if (cert.routes[idx].empty()) io_detail::fail(lineno, "empty route");
  }
  if (io_detail::next_content_line(is, line, lineno)) io_detail::fail(lineno, "unexpected content after routes");
  return cert;
}

inline void write_certificate(std::ostream& os, const PatternDigraph& h, const SubdivisionCertificate& cert) {
  os << h.vertex_count() << ' ' << h.arc_count() << '\n';
  for (int i = 0; i < h.vertex_count(); ++i) os << "branch " << i << ' ' << cert.branch[i] << '\n';
  for (int j = 0; j < h.arc_count(); ++j) {
    os << "route " << h.arcs()[j].from << ' ' << h.arcs()[j].to << " :";
    for (Vertex v : cert.routes[j]) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace spansub
