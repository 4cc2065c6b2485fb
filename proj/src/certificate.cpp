#include "holey/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace holey {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::ParseError, what); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1-based line and column of a byte offset.
std::string where(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + " (offset " + std::to_string(byte) + ")";
}

int as_int(const nlohmann::json& j, const char* field) {
  if (!j.is_number_integer()) parse_error(std::string("field '") + field + "' must be an integer");
  const long long x = j.get<long long>();
  if (x < 0 || x > 1 << 24) parse_error(std::string("field '") + field + "' out of range");
  return static_cast<int>(x);
}

}  // namespace

void canonicalize(Certificate& c) {
  for (Cycle& x : c.cycles) x = canonical_cycle(x);
  std::sort(c.cycles.begin(), c.cycles.end());
}

Certificate make_certificate(int m, int u, int v, std::vector<Cycle> cycles) {
  Certificate c;
  c.m = m;
  c.u = u;
  c.v = v;
  for (int i = 0; i < u; ++i) c.hole.push_back(i);
  c.cycles = std::move(cycles);
  canonicalize(c);
  return c;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::BadHeader: return "bad header";
    case Violation::WrongLength: return "wrong cycle length";
    case Violation::BadVertex: return "vertex out of range";
    case Violation::RepeatedVertex: return "repeated vertex";
    case Violation::HoleEdge: return "edge inside the hole";
    case Violation::EdgeCoveredTwice: return "edge covered twice";
    case Violation::UncoveredEdge: return "uncovered edges";
    case Violation::WrongCycleCount: return "wrong cycle count";
  }
  return "unknown";
}

bool VerificationReport::has(Violation v) const {
  return std::any_of(issues.begin(), issues.end(), [&](const VerificationIssue& i) { return i.kind == v; });
}

// Deliberately self-contained: a dense multiplicity table, no graph helpers.
VerificationReport verify(const Certificate& c) {
  VerificationReport r;
  auto add = [&](Violation k, std::string d) { r.issues.push_back({k, std::move(d)}); };
  if (c.m < 3 || c.u < 0 || c.v < 1 || c.u > c.v || c.v > 1 << 14) {
    add(Violation::BadHeader, "need m >= 3 and 0 <= u <= v");
    return r;
  }
  bool hole_ok = static_cast<int>(c.hole.size()) == c.u;
  for (int i = 0; hole_ok && i < c.u; ++i) hole_ok = c.hole[i] == i;
  if (!hole_ok) add(Violation::BadHeader, "hole must be 0..u-1");

  const int v = c.v, u = c.u;
  std::vector<unsigned short> mult(static_cast<std::size_t>(v) * v, 0);
  std::vector<int> stamp(v, -1);
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const Cycle& cy = c.cycles[i];
    const std::string at = "cycle " + std::to_string(i);
    if (static_cast<int>(cy.size()) != c.m)
      add(Violation::WrongLength, at + " has length " + std::to_string(cy.size()));
    bool labels_ok = cy.size() >= 3;
    for (Vertex x : cy) {
      if (x < 0 || x >= v) {
        add(Violation::BadVertex, at + " uses label " + std::to_string(x));
        labels_ok = false;
      } else if (stamp[x] == static_cast<int>(i)) {
        add(Violation::RepeatedVertex, at + " repeats vertex " + std::to_string(x));
      } else {
        stamp[x] = static_cast<int>(i);
      }
    }
    if (!labels_ok) continue;
    for (std::size_t j = 0; j < cy.size(); ++j) {
      Vertex a = cy[j], b = cy[(j + 1) % cy.size()];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (b < u) add(Violation::HoleEdge, at + " uses hole edge " + std::to_string(a) + "-" + std::to_string(b));
      unsigned short& k = mult[static_cast<std::size_t>(a) * v + b];
      if (++k == 2) add(Violation::EdgeCoveredTwice, "edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  long long missing = 0;
  std::string first;
  for (int a = 0; a < v; ++a)
    for (int b = std::max(a + 1, u); b < v; ++b)
      if (mult[static_cast<std::size_t>(a) * v + b] == 0) {
        if (missing++ == 0) first = std::to_string(a) + "-" + std::to_string(b);
      }
  if (missing) add(Violation::UncoveredEdge, std::to_string(missing) + " edges uncovered, first " + first);
  const long long need = 1LL * v * (v - 1) / 2 - 1LL * u * (u - 1) / 2;
  if (static_cast<long long>(c.cycles.size()) * c.m != need)
    add(Violation::WrongCycleCount, std::to_string(c.cycles.size()) + " cycles of length " + std::to_string(c.m) +
                                        " cannot cover " + std::to_string(need) + " edges");
  return r;
}

std::string to_json(const Certificate& c0) {
  Certificate c = c0;
  canonicalize(c);
  std::ostringstream o;
  auto list = [&](const std::vector<Vertex>& xs) {
    o << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) o << (i ? "," : "") << xs[i];
    o << ']';
  };
  o << "{\"schema\":" << kCertificateSchema << ",\"m\":" << c.m << ",\"u\":" << c.u << ",\"v\":" << c.v << ",\"hole\":";
  list(c.hole);
  o << ",\"cycles\":[";
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    o << (i ? ",\n" : "\n");
    list(c.cycles[i]);
  }
  o << "\n]}\n";
  return o.str();
}

Certificate from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error("malformed JSON at " + where(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!j.is_object()) parse_error("certificate must be a JSON object");
  for (const char* f : {"schema", "m", "u", "v", "hole", "cycles"})
    if (!j.contains(f)) parse_error(std::string("missing field '") + f + "'");
  const int schema = as_int(j["schema"], "schema");
  if (schema != kCertificateSchema) parse_error("unsupported schema version " + std::to_string(schema));
  Certificate c;
  c.m = as_int(j["m"], "m");
  c.u = as_int(j["u"], "u");
  c.v = as_int(j["v"], "v");
  if (!j["hole"].is_array()) parse_error("field 'hole' must be an array");
  for (const auto& x : j["hole"]) c.hole.push_back(as_int(x, "hole"));
  if (!j["cycles"].is_array()) parse_error("field 'cycles' must be an array");
  for (const auto& cy : j["cycles"]) {
    if (!cy.is_array()) parse_error("each cycle must be an array");
    Cycle out;
    for (const auto& x : cy) out.push_back(as_int(x, "cycles"));
    c.cycles.push_back(std::move(out));
  }
  return c;
}

void write_certificate(const Certificate& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidParameters, "cannot write " + path);
  out << to_json(c);
  if (!out) fail(ErrorKind::InvalidParameters, "write failed for " + path);
}

Certificate read_certificate(const std::string& path) { return from_json(slurp(path)); }

std::string to_plain_text(const Certificate& c0) {
  Certificate c = c0;
  canonicalize(c);
  std::ostringstream o;
  o << "# " << c.m << ' ' << c.u << ' ' << c.v << '\n';
  for (const Cycle& cy : c.cycles) {
    for (std::size_t i = 0; i < cy.size(); ++i) o << (i ? " " : "") << cy[i];
    o << '\n';
  }
  return o.str();
}

Certificate from_plain_text(const std::string& text, int m, int u, int v) {
  std::istringstream in(text);
  std::string line;
  Certificate c;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line.substr(first + (line[first] == '#' ? 1 : 0)));
    if (line[first] == '#') {
      if (header || !c.cycles.empty()) continue;  // later '#' lines are comments
      if (!(ls >> c.m >> c.u >> c.v)) parse_error("bad header at line " + std::to_string(lineno));
      header = true;
      continue;
    }
    Cycle cy;
    long long x;
    while (ls >> x) {
      if (x < 0 || x > 1 << 24) parse_error("label out of range at line " + std::to_string(lineno));
      cy.push_back(static_cast<Vertex>(x));
    }
    if (!ls.eof()) parse_error("non-integer token at line " + std::to_string(lineno));
    c.cycles.push_back(std::move(cy));
  }
  if (!header) {
    if (u < 0) parse_error("plain text without a '# m u v' header needs u");
    c.u = u;
    c.m = m > 0 ? m : (c.cycles.empty() ? 0 : static_cast<int>(c.cycles.front().size()));
    c.v = v;
    if (c.v == 0)
      for (const Cycle& cy : c.cycles)
        for (Vertex x : cy) c.v = std::max(c.v, x + 1);
  }
  for (int i = 0; i < c.u; ++i) c.hole.push_back(i);
  return c;
}

Certificate read_any(const std::string& path, int m, int u, int v) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_plain_text(text, m, u, v);
}

}  // namespace holey
