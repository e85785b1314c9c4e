#include "resnum/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "resnum/enumerate.hpp"
#include "resnum/error.hpp"
#include "resnum/graph6.hpp"
#include "resnum/resolve.hpp"

namespace resnum {

namespace {

CatalogMember make_member(const Graph& g, std::size_t res) {
  CatalogMember m;
  m.graph = canonical_graph(g);
  m.form = labeled_form(m.graph);
  m.graph6 = write_graph6(m.graph);
  m.order = g.order();
  m.girth = girth(g);
  m.degree_sequence = g.degree_sequence();
  m.res = res;
  return m;
}

bool excluded_shape(const Graph& g) {
  return is_cycle(g) || (is_star(g) && g.order() == 4);
}

}  // namespace

Res3Catalog::Res3Catalog(std::vector<CatalogMember> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const CatalogMember& a, const CatalogMember& b) { return a.graph6 < b.graph6; });
  members_.erase(std::unique(members_.begin(), members_.end(),
                             [](const CatalogMember& a, const CatalogMember& b) { return a.form == b.form; }),
                 members_.end());
}

const CatalogMember* Res3Catalog::find(const Graph& g) const {
  if (g.order() > kMaxCanonicalOrder) return nullptr;
  const CanonicalForm form = canonical_form(g);
  for (const auto& m : members_) {
    if (m.form == form) return &m;
  }
  return nullptr;
}

std::vector<const CatalogMember*> Res3Catalog::with_girth(std::size_t length) const {
  std::vector<const CatalogMember*> out;
  for (const auto& m : members_) {
    if (m.girth.is(length)) out.push_back(&m);
  }
  return out;
}

std::string Res3Catalog::fixture_text() const {
  std::string out;
  for (const auto& m : members_) {
    out += m.graph6;
    out += '\n';
  }
  return out;
}

Res3Catalog build_res3_catalog() {
  std::vector<CatalogMember> members;
  auto consider = [&](const Graph& g) {
    if (excluded_shape(g)) return;
    const std::size_t res = resolving_number(g).res;
    if (res == 3) members.push_back(make_member(g, res));
  };
  for (std::size_t n = 1; n <= kExhaustiveMaxOrder; ++n) {
    EnumConstraints c;
    c.n = n;
    enumerate_graphs(c, consider);
  }
  for (std::size_t n = kExhaustiveMaxOrder + 1; n <= kConstrainedMaxOrder; ++n) {
    EnumConstraints c;
    c.n = n;
    c.max_degree = 3;
    c.min_girth = 5;
    enumerate_graphs(c, consider);
  }
  return Res3Catalog(std::move(members));
}

Res3Catalog parse_res3_catalog(const std::string& text) {
  std::istringstream in(text);
  std::vector<CatalogMember> members;
  for (const Graph& g : read_graph6_stream(in)) {
    if (!is_connected(g)) raise(ErrorKind::TheoremViolation, "catalog entry " + write_graph6(g) + " is disconnected");
    const std::size_t res = resolving_number(g).res;
    if (res != 3 || excluded_shape(g)) {
      raise(ErrorKind::TheoremViolation, "catalog entry " + write_graph6(g) + " does not belong to the res-3 catalog");
    }
    members.push_back(make_member(g, res));
  }
  return Res3Catalog(std::move(members));
}

Res3Catalog load_res3_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::CatalogMissing, "cannot open catalog fixture " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_res3_catalog(buffer.str());
}

}  // namespace resnum
