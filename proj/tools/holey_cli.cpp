#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "holey/admissible.hpp"
#include "holey/certificate.hpp"
#include "holey/pipeline.hpp"

using namespace holey;

namespace {

enum Exit { kOk = 0, kOther = 1, kNotCovered = 2, kExhausted = 3, kBadCertificate = 4 };

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAdmissible:
    case ErrorKind::OutOfCoveredRange: return kNotCovered;
    case ErrorKind::ResourceExhausted: return kExhausted;
    case ErrorKind::InvalidInputSystem:
    case ErrorKind::ParseError: return kBadCertificate;
    default: return kOther;
  }
}

std::optional<std::string> env(const char* name) {
  if (const char* s = std::getenv(name); s && *s) return std::string(s);
  return std::nullopt;
}

void emit(const Certificate& c, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << to_json(c);
  else
    write_certificate(c, out);
}

void summary(const Certificate& c, const DispatchTrace* t) {
  std::cerr << "m=" << c.m << " u=" << c.u << " v=" << c.v << ": " << c.cycles.size() << " cycles, verified";
  if (t) {
    long long sw = 0;
    for (const auto& s : t->steps) sw += s.switches;
    std::cerr << ", route " << to_string(t->route) << ", " << t->steps.size() << " steps, " << sw << " switches";
  }
  std::cerr << '\n';
}

int report(const VerificationReport& r) {
  if (r.ok()) {
    std::cout << "PASS\n";
    return kOk;
  }
  std::cout << "FAIL (" << r.issues.size() << " issues)\n";
  for (const auto& i : r.issues) std::cout << "  " << to_string(i.kind) << ": " << i.detail << '\n';
  return kBadCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holey: m-cycle decompositions of complete graphs with a hole"};
  app.set_config("--config", "", "optional INI/TOML file with default option values");
  app.require_subcommand(1);

  SolverConfig cfg;
  if (auto s = env("HOLEY_SEED")) cfg.seed = std::stoull(*s);
  if (auto s = env("HOLEY_BUDGET")) cfg.time_budget = std::stod(*s);
  auto solver_opts = [&](CLI::App* c) {
    c->add_option("--seed", cfg.seed, "random seed (env HOLEY_SEED)");
    c->add_option("--budget", cfg.time_budget, "seconds per solver call (env HOLEY_BUDGET)");
    c->add_option("--max-vertices", cfg.max_vertices, "largest graph handed to the solver");
  };

  int m = 0, u = 0, v = 0;
  std::string out, file;

  auto* check = app.add_subcommand("check", "admissibility report for (m, u, v)");
  check->add_option("m", m)->required();
  check->add_option("u", u)->required();
  check->add_option("v", v)->required();

  auto* nuc = app.add_subcommand("nu", "smallest x > u with (u, x) m-admissible");
  nuc->add_option("m", m)->required();
  nuc->add_option("u", u)->required();

  auto* cons = app.add_subcommand("construct", "build and verify an m-cycle decomposition of K_v - K_u");
  cons->add_option("m", m)->required();
  cons->add_option("u", u)->required();
  cons->add_option("v", v)->required();
  cons->add_option("-o,--output", out, "certificate file (default stdout)");
  solver_opts(cons);

  auto* search = app.add_subcommand("search", "switching search for small (m, u, v)");
  search->add_option("m", m)->required();
  search->add_option("u", u)->required();
  search->add_option("v", v)->required();
  search->add_option("-o,--output", out, "certificate file (default stdout)");
  solver_opts(search);

  int pm = 0, pu = -1, pv = 0;
  auto* ver = app.add_subcommand("verify", "verify a JSON or plain-text certificate");
  ver->add_option("file", file)->required();
  ver->add_option("--m", pm, "cycle length for headerless plain text");
  ver->add_option("--u", pu, "hole size for headerless plain text");
  ver->add_option("--v", pv, "order for headerless plain text");

  int order = 0;
  auto* emb = app.add_subcommand("embed", "embed an m-cycle system into one of larger order");
  emb->add_option("--system", file, "certificate of an m-cycle system (hole size 0 or 1)")->required();
  emb->add_option("--order", order, "target order")->required();
  emb->add_option("-o,--output", out, "certificate file (default stdout)");
  solver_opts(emb);

  auto* self = app.add_subcommand("selftest", "quick end-to-end check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const AdmissibilityReport r = admissible(m, u, v);
      std::cout << "N1 " << (r.n1 ? "yes" : "no") << "\nN2 " << (r.n2 ? "yes" : "no") << "\nN3 " << (r.n3 ? "yes" : "no")
                << "\nN4 " << (r.n4 ? "yes" : "no") << "\nadmissible " << (r.admissible() ? "yes" : "no") << '\n';
      return r.admissible() ? kOk : kNotCovered;
    }
    if (*nuc) {
      std::cout << nu(m, u) << '\n';
      return kOk;
    }
    if (*cons) {
      DispatchTrace t;
      const Certificate c = construct(m, u, v, cfg, &t);
      emit(c, out);
      summary(c, &t);
      return kOk;
    }
    if (*search) {
      const Certificate c = search_small(m, u, v, cfg);
      emit(c, out);
      summary(c, nullptr);
      return kOk;
    }
    if (*ver) return report(verify(read_any(file, pm, pu, pv)));
    if (*emb) {
      DispatchTrace t;
      const Certificate c = embed_system(read_any(file), order, cfg, &t);
      emit(c, out);
      summary(c, &t);
      return kOk;
    }
    if (*self) {
      bool ok = nu(9, 5) == 11 && nu(9, 1) == 9 && nu(11, 13) == 21;
      std::cout << "nu table " << (ok ? "PASS" : "FAIL") << '\n';
      const Certificate c = construct(9, 9, 19, cfg);
      const bool built = verify(c).ok() && c.cycles.size() == 15;
      std::cout << "construct (9,9,19) " << (built ? "PASS" : "FAIL") << '\n';
      const bool round = from_json(to_json(c)) == c;
      std::cout << "json round trip " << (round ? "PASS" : "FAIL") << '\n';
      return ok && built && round ? kOk : kBadCertificate;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  }
  return kOther;
}
