#include "mutations.hpp"

#include <algorithm>

namespace holey::testing {

Certificate mutate(const Certificate& c, Mutation kind, Rng& rng) {
  Certificate out = c;
  const std::size_t i = rng() % out.cycles.size();
  Cycle& cy = out.cycles[i];
  switch (kind) {
    case Mutation::DropCycle:
      out.cycles.erase(out.cycles.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    case Mutation::DuplicateCycle:
      out.cycles.push_back(out.cycles[i]);
      break;
    case Mutation::HoleEdge: {
      // overwrite two consecutive entries with hole vertices not on the cycle
      std::vector<Vertex> free;
      for (Vertex h = 0; h < c.u; ++h)
        if (std::find(cy.begin(), cy.end(), h) == cy.end()) free.push_back(h);
      const std::size_t k = cy.size();
      std::size_t at = rng() % k;
      for (std::size_t s = 0; s < k; ++s)
        if (cy[(at + s) % k] < c.u) {
          at = (at + s) % k;
          break;
        }
      std::shuffle(free.begin(), free.end(), rng);
      if (cy[at] < c.u) {
        cy[(at + 1) % k] = free.at(0);
      } else {
        cy[at] = free.at(0);
        cy[(at + 1) % k] = free.at(1);
      }
      break;
    }
    case Mutation::LengthChange:
      if (rng() % 2) {
        cy.erase(cy.begin() + static_cast<std::ptrdiff_t>(rng() % cy.size()));
      } else {
        std::vector<Vertex> off;
        for (Vertex x = 0; x < c.v; ++x)
          if (std::find(cy.begin(), cy.end(), x) == cy.end()) off.push_back(x);
        cy.insert(cy.begin() + static_cast<std::ptrdiff_t>(rng() % cy.size()), off.at(rng() % off.size()));
      }
      break;
  }
  return out;
}

Violation expected_violation(Mutation kind) {
  switch (kind) {
    case Mutation::DropCycle: return Violation::UncoveredEdge;
    case Mutation::DuplicateCycle: return Violation::EdgeCoveredTwice;
    case Mutation::HoleEdge: return Violation::HoleEdge;
    case Mutation::LengthChange: return Violation::WrongLength;
  }
  return Violation::BadHeader;
}

}  // namespace holey::testing
