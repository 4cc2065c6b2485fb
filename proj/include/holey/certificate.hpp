#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "holey/graph.hpp"

namespace holey {

// An m-cycle decomposition of K_v - K_u, hole 0..u-1.
struct Certificate {
  int m = 0;
  int u = 0;
  int v = 0;
  std::vector<Vertex> hole;
  std::vector<Cycle> cycles;

  bool operator==(const Certificate& o) const = default;
};

inline constexpr int kCertificateSchema = 1;

// Fills hole with 0..u-1 and puts cycles in canonical order.
Certificate make_certificate(int m, int u, int v, std::vector<Cycle> cycles);
void canonicalize(Certificate& c);

enum class Violation {
  BadHeader,        // m, u, v out of range or hole not 0..u-1
  WrongLength,      // a cycle whose length is not m
  BadVertex,        // label outside 0..v-1
  RepeatedVertex,   // a vertex twice on one cycle
  HoleEdge,         // an edge with both ends in the hole
  EdgeCoveredTwice,
  UncoveredEdge,
  WrongCycleCount,  // count * m != C(v,2) - C(u,2)
};

std::string to_string(Violation v);

struct VerificationIssue {
  Violation kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(Violation v) const;
};

// Total; reports every violation found.
VerificationReport verify(const Certificate& c);

// Canonical JSON, byte-stable for equal certificates.
std::string to_json(const Certificate& c);
Certificate from_json(const std::string& text);  // ParseError with line and offset
void write_certificate(const Certificate& c, const std::string& path);
Certificate read_certificate(const std::string& path);

// Plain text: an optional "# m u v" header, then one cycle per line.
std::string to_plain_text(const Certificate& c);
Certificate from_plain_text(const std::string& text, int m = 0, int u = -1, int v = 0);

// JSON if the first non-blank character is '{', else plain text.
Certificate read_any(const std::string& path, int m = 0, int u = -1, int v = 0);

}  // namespace holey
