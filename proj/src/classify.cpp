#include "resnum/classify.hpp"

#include <string>

#include "resnum/error.hpp"
#include "resnum/families.hpp"
#include "resnum/invariants.hpp"
#include "resnum/resolve.hpp"

namespace resnum {

namespace {

[[noreturn]] void violation(const std::string& what) { raise(ErrorKind::TheoremViolation, what); }

void expect_res(std::size_t res, std::size_t expected, const char* shape) {
  if (res != expected) {
    violation(std::string(shape) + " has resolving number " + std::to_string(res) + ", expected " +
              std::to_string(expected));
  }
}

}  // namespace

std::string_view to_string(CategoryTag tag) noexcept {
  switch (tag) {
    case CategoryTag::TrivialPath: return "TrivialPath";
    case CategoryTag::Path: return "Path";
    case CategoryTag::OddCycle: return "OddCycle";
    case CategoryTag::EvenCycle: return "EvenCycle";
    case CategoryTag::Star3: return "Star3";
    case CategoryTag::CatalogGirth3: return "CatalogGirth3";
    case CategoryTag::CatalogGirth5: return "CatalogGirth5";
    case CategoryTag::ResAtLeast4: return "ResAtLeast4";
  }
  return "Unknown";
}

std::string_view to_string(CliqueStatement s) noexcept {
  switch (s) {
    case CliqueStatement::I: return "i";
    case CliqueStatement::II: return "ii";
    case CliqueStatement::III: return "iii";
    case CliqueStatement::IV: return "iv";
    case CliqueStatement::V: return "v";
  }
  return "?";
}

Category classify_res(const Graph& g, const Res3Catalog* catalog) {
  require_connected(g, "classify_res");
  Category c;
  c.res = resolving_number(g).res;
  const std::size_t n = g.order();

  if (is_path(g)) {
    if (n <= 2) {
      expect_res(c.res, 1, "P1/P2");
      c.tag = CategoryTag::TrivialPath;
    } else {
      expect_res(c.res, 2, "path");
      c.tag = CategoryTag::Path;
    }
    return c;
  }
  if (is_cycle(g)) {
    const bool odd = n % 2 == 1;
    expect_res(c.res, odd ? 2 : 3, odd ? "odd cycle" : "even cycle");
    c.tag = odd ? CategoryTag::OddCycle : CategoryTag::EvenCycle;
    return c;
  }
  if (is_star(g) && n == 4) {
    expect_res(c.res, 3, "K1,3");
    c.tag = CategoryTag::Star3;
    return c;
  }
  if (c.res <= 2) violation("resolving number " + std::to_string(c.res) + " on a graph that is neither a path nor an odd cycle");
  if (c.res >= 4) {
    c.tag = CategoryTag::ResAtLeast4;
    return c;
  }
  if (catalog == nullptr) raise(ErrorKind::CatalogMissing, "res = 3 classification needs the res-3 catalog");
  c.member = catalog->find(g);
  if (c.member == nullptr) violation("res-3 graph outside the catalog");
  if (c.member->girth.is(3)) {
    c.tag = CategoryTag::CatalogGirth3;
  } else if (c.member->girth.is(5)) {
    c.tag = CategoryTag::CatalogGirth5;
  } else {
    violation("catalog member with girth " + c.member->girth.to_string());
  }
  return c;
}

bool is_gab(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (Vertex x = 0; x < n; ++x) {
    const std::size_t b = g.degree(x);
    if (b == 0 || b >= n - 1) continue;
    const std::size_t a = n - 1;
    // The rest is K_a exactly when it carries all a(a-1)/2 edges.
    if (g.size() == a * (a - 1) / 2 + b) return true;
  }
  return false;
}

CliqueStatement clique_res_category(const Graph& g, const Res3Catalog* catalog) {
  require_connected(g, "clique_res_category");
  const std::size_t omega = clique_number(g);
  const std::size_t res = resolving_number(g).res;
  if (omega != res) {
    raise(ErrorKind::NotApplicable, "omega = " + std::to_string(omega) + " differs from res = " + std::to_string(res));
  }
  const std::size_t n = g.order();
  switch (res) {
    case 1:
      if (n != 1) violation("omega = res = 1 on a graph other than K1");
      return CliqueStatement::I;
    case 2:
      if (!((is_path(g) && n >= 3) || (is_cycle(g) && n % 2 == 1 && n >= 5))) {
        violation("omega = res = 2 on a graph that is not P_n (n >= 3) or an odd cycle C_n (n >= 5)");
      }
      return CliqueStatement::II;
    case 3: {
      if (catalog == nullptr) raise(ErrorKind::CatalogMissing, "omega = res = 3 needs the res-3 catalog");
      const CatalogMember* m = catalog->find(g);
      if (m == nullptr || !m->girth.is(3)) violation("omega = res = 3 on a graph outside the girth-3 catalog slice");
      return CliqueStatement::III;
    }
    case 4: {
      if (n <= kMaxCanonicalOrder) {
        const CanonicalForm form = canonical_form(g);
        for (int i = 1; i <= 4; ++i) {
          if (canonical_form(generate(family::ProofWitness{i})) == form) return CliqueStatement::IV;
        }
        for (std::size_t b = 1; b < 4; ++b) {
          if (canonical_form(generate(family::Gab{4, b})) == form) return CliqueStatement::IV;
        }
      }
      violation("omega = res = 4 on a graph outside {G1..G4} and G_{4,b}");
    }
    default:
      if (!is_gab(g) || n != res + 1) violation("omega = res >= 5 on a graph that is not G_{a,b}");
      return CliqueStatement::V;
  }
}

}  // namespace resnum
