// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "resnum/bounds.hpp"
#include "resnum/canonical.hpp"
#include "resnum/catalog.hpp"
#include "resnum/distance.hpp"
#include "resnum/enumerate.hpp"
#include "resnum/families.hpp"
#include "resnum/graph6.hpp"
#include "resnum/invariants.hpp"
#include "resnum/resolve.hpp"
#include "support.hpp"

using namespace resnum;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOracleLimitSeconds = 300.0;
constexpr double kLargeLimitSeconds = 2.0;
constexpr double kRatioLimit = 12.0;
constexpr int kTimingRepeats = 5;
constexpr int kWindowSamples = 10000;
constexpr int kCountingSamples = 1000;
constexpr int kRandomGraph6 = 1000;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s: %s\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string join_sizes(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

struct Pools {
  std::vector<Graph> small;  // connected, n <= 7
  std::vector<Graph> trees;  // n <= 12
  std::vector<Graph> sparse;  // max degree 3, girth >= 5, n <= 10
};

Pools build_pools() {
  Pools p;
  for (std::size_t n = 1; n <= kExhaustiveMaxOrder; ++n)
    for (auto& g : oracle::connected_graphs(n)) p.small.push_back(std::move(g));
  for (std::size_t n = 1; n <= kTreeMaxOrder; ++n)
    for (auto& g : oracle::trees(n)) p.trees.push_back(std::move(g));
  for (std::size_t n = 1; n <= kConstrainedMaxOrder; ++n) {
    EnumConstraints c;
    c.n = n;
    c.max_degree = 3;
    c.min_girth = 5;
    for (auto& g : enumerate_graphs(c)) p.sparse.push_back(std::move(g));
  }
  return p;
}

void oracle_equivalence(const Pools& p) {
  auto start = Clock::now();
  std::size_t mismatches = 0;
  for (const auto& g : p.small)
    if (resolving_number(g).res != resolving_number_oracle(g)) ++mismatches;
  double t = seconds_since(start);
  report(1, "oracle equivalence", p.small.size() == 996 && mismatches == 0 && t < kOracleLimitSeconds,
         fmt("%zu classes (want 996), %zu mismatches, %.2f s (limit %.0f s)", p.small.size(),
             mismatches, t, kOracleLimitSeconds));
}

void family_formulas() {
  std::vector<std::string> bad;
  auto expect = [&](const FamilySpec& s, std::size_t want) {
    auto got = resolving_number(generate(s)).res;
    if (got != want) bad.push_back(describe(s) + "=" + std::to_string(got));
  };
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 50; ++n, checked += 2) {
    expect(family::Path{n}, 2);
    expect(family::Cycle{n}, n % 2 ? 2 : 3);
  }
  for (std::size_t n = 2; n <= 40; ++n, ++checked) expect(family::Complete{n}, n - 1);
  for (std::size_t a = 2; a <= 30; ++a, ++checked) expect(family::Star{a}, a);
  for (std::size_t a = 3; a <= 12; ++a)
    for (std::size_t b = 1; b < a; ++b, ++checked) expect(family::Gab{a, b}, a);
  for (std::size_t a = 3; a <= 10; ++a, ++checked) {
    expect(family::PendantCycle{a}, a + 1);
    if (girth(generate(family::PendantCycle{a})) != Girth::finite(2 * a + 1))
      bad.push_back(describe(family::PendantCycle{a}) + " girth");
  }
  for (std::size_t r = 3; r <= 10; ++r, ++checked) {
    expect(family::TriangleTripod{r}, r);
    if (generate(family::TriangleTripod{r}).order() != 3 * (r - 1))
      bad.push_back(describe(family::TriangleTripod{r}) + " order");
  }
  expect(family::Wheel{5}, 3);
  ++checked;
  std::string detail = fmt("%zu family members checked, %zu mismatches", checked, bad.size());
  for (const auto& b : bad) detail += " " + b;
  report(2, "family formulas", bad.empty(), detail);
}

void bound_suite(const Pools& p) {
  std::size_t verdicts = 0, violations = 0;
  auto run = [&](const std::vector<Graph>& pool) {
    for (const auto& g : pool) {
      auto dm = distance_matrix(g);
      auto inv = invariant_summary(g, dm);
      for (const auto& v : verify_bounds(g, inv, resolving_number(g, dm).res)) {
        if (!v.applicable) continue;
        ++verdicts;
        if (!v.holds || v.extremal_match == false) ++violations;
      }
    }
  };
  auto start = Clock::now();
  run(p.small);
  run(p.trees);
  run(p.sparse);
  report(3, "bound suite", violations == 0,
         fmt("%zu + %zu + %zu graphs, %zu applicable verdicts, %zu violations, %.2f s",
             p.small.size(), p.trees.size(), p.sparse.size(), verdicts, violations,
             seconds_since(start)));
}

void catalog_derivation(const Pools& p, const Res3Catalog& cat) {
  std::size_t g3 = cat.with_girth(3).size(), g5 = cat.with_girth(5).size();
  std::set<std::size_t> orders5;
  for (const auto* m : cat.with_girth(5)) orders5.insert(m->order);

  const auto c4 = canonical_form(generate(family::Cycle{4}));
  std::size_t girth4_others = 0;
  for (const auto* pool : {&p.small, &p.sparse})
    for (const auto& g : *pool)
      if (girth(g).is(4) && resolving_number(g).res == 3 && canonical_form(g) != c4) ++girth4_others;

  std::string n10 = "absent";
  bool n10_cubic = false;
  for (const auto& m : cat.members())
    if (m.order == 10) {
      n10_cubic = m.degree_sequence.back() == 3 && m.degree_sequence.front() == 3;
      std::map<std::size_t, int> degs;
      for (auto d : m.degree_sequence) ++degs[d];
      n10 = m.graph6 + " degrees";
      for (auto [d, c] : degs) n10 += fmt(" %zux%d", d, c);
      n10 += n10_cubic ? " (3-regular)" : " (not 3-regular)";
    }

  bool pass = cat.size() == 18 && g3 == 14 && g5 == 4 &&
              orders5 == std::set<std::size_t>{6, 7, 8, 10} && girth4_others == 0 && n10_cubic;
  report(4, "res-3 catalog", pass,
         fmt("%zu members (want 18), girth split %zu/%zu (want 14/4), girth-5 orders %s (want {6,7,8,10}), "
             "%zu res-3 girth-4 graphs besides C4, n=10 member %s",
             cat.size(), g3, g5, join_sizes(orders5).c_str(), girth4_others, n10.c_str()));
}

void small_res_equivalence(const Pools& p) {
  std::size_t forward = 0, backward = 0;
  for (const auto& g : p.small) {
    bool low = resolving_number(g).res <= 2;
    bool shape = is_path(g) || (is_cycle(g) && g.order() % 2 == 1);
    if (low && !shape) ++forward;
    if (shape && !low) ++backward;
  }
  report(5, "res <= 2 iff path or odd cycle", forward == 0 && backward == 0,
         fmt("%zu graphs, %zu with res <= 2 outside the family, %zu family members with res > 2",
             p.small.size(), forward, backward));
}

void clique_characterisation(const Pools& p, const Res3Catalog& cat) {
  std::set<CanonicalForm> four, five, three;
  for (const auto& g : p.small) {
    auto w = clique_number(g);
    auto r = resolving_number(g).res;
    if (w != r) continue;
    if (r == 4) four.insert(canonical_form(g));
    if (r == 5 && g.order() == 6) five.insert(canonical_form(g));
    if (r == 3) three.insert(canonical_form(g));
  }
  std::set<CanonicalForm> want4, want5;
  for (int i = 1; i <= 4; ++i) want4.insert(canonical_form(generate(family::ProofWitness{i})));
  for (std::size_t b = 1; b <= 3; ++b) want4.insert(canonical_form(generate(family::Gab{4, b})));
  for (std::size_t b = 1; b <= 4; ++b) want5.insert(canonical_form(generate(family::Gab{5, b})));

  const auto k4 = canonical_form(generate(family::Complete{4}));
  std::set<CanonicalForm> slice3;
  for (const auto* m : cat.with_girth(3)) slice3.insert(m->form);
  bool k4_in_slice = slice3.count(k4) > 0;
  std::set<CanonicalForm> slice3_without_k4 = slice3;
  slice3_without_k4.erase(k4);

  bool pass = four == want4 && five == want5 && three.size() == 13;
  report(6, "clique characterisation", pass,
         fmt("omega=res=4 set %zu graphs %s expected %zu; omega=res=5 at n=6 %zu graphs %s expected %zu; "
             "omega=res=3 set %zu graphs (want 13), %s the girth-3 catalog slice minus K4; "
             "flag: K4 %s the girth-3 slice but has omega 4",
             four.size(), four == want4 ? "equals" : "differs from", want4.size(), five.size(),
             five == want5 ? "equals" : "differs from", want5.size(), three.size(),
             three == slice3_without_k4 ? "equal to" : "different from",
             k4_in_slice ? "is in" : "is not in"));
}

void tree_extremal(const Pools& p) {
  std::set<CanonicalForm> diam_eq, order_eq, deg_eq;
  for (const auto& t : p.trees) {
    if (t.order() < 3 || is_path(t)) continue;
    auto dm = distance_matrix(t);
    long r = long(resolving_number(t, dm).res);
    if (long(dm.diameter()) == 2 * r - 4) diam_eq.insert(canonical_form(t));
    if (long(t.order()) == 3 * r - 5) order_eq.insert(canonical_form(t));
    if (long(t.max_degree()) == r) deg_eq.insert(canonical_form(t));
  }

  std::set<CanonicalForm> want_diam, want_order, want_deg;
  for (std::size_t b = 1; 1 + 1 + 2 * b <= kTreeMaxOrder; ++b)
    for (std::size_t a = 1; a <= b && 1 + a + 2 * b <= kTreeMaxOrder; ++a) {
      auto s = generate(family::Spider{a, b, b});
      if (resolving_number(s).res == b + 2) want_diam.insert(canonical_form(s));
    }
  for (std::size_t a = 1; 1 + 3 * a <= kTreeMaxOrder; ++a) {
    auto s = generate(family::Spider{a, a, a});
    if (resolving_number(s).res == a + 2) want_order.insert(canonical_form(s));
  }
  for (std::size_t a = 3; a + 1 <= kTreeMaxOrder; ++a)
    want_deg.insert(canonical_form(generate(family::Star{a})));

  bool pass = diam_eq == want_diam && order_eq == want_order && deg_eq == want_deg;
  report(7, "extremal trees", pass,
         fmt("d=2res-4: %zu trees vs %zu spiders S(a,b,b) %s; n=3res-5: %zu vs %zu S(a,a,a) %s; "
             "maxdeg=res: %zu vs %zu stars %s",
             diam_eq.size(), want_diam.size(), diam_eq == want_diam ? "equal" : "differ",
             order_eq.size(), want_order.size(), order_eq == want_order ? "equal" : "differ",
             deg_eq.size(), want_deg.size(), deg_eq == want_deg ? "equal" : "differ"));
}

void lemma_invariants(const Pools& p) {
  std::mt19937_64 rng(20240611);
  std::vector<const Graph*> pool;
  for (const auto* v : {&p.small, &p.sparse})
    for (const auto& g : *v)
      if (g.order() >= 2) pool.push_back(&g);

  std::size_t window_fail = 0;
  for (int i = 0; i < kWindowSamples; ++i) {
    const Graph& g = *pool[rng() % pool.size()];
    auto dm = distance_matrix(g);
    std::vector<Vertex> a;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) a.push_back(v);
    if (a.empty()) a.push_back(Vertex(rng() % g.order()));
    if (!distance_window(dm, Vertex(rng() % g.order()), a).window_ok) ++window_fail;
  }

  std::size_t hypothesis = 0, counterexamples = 0;
  for (int i = 0; i < kCountingSamples; ++i) {
    const Graph& g = *pool[rng() % pool.size()];
    const std::size_t n = g.order();
    auto dm = distance_matrix(g);
    auto res = resolving_number(g, dm).res;

    std::vector<VertexPair> pairs;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        if (rng() % 2) pairs.push_back({x, y});
    if (pairs.empty()) pairs.push_back({0, 1});

    std::size_t parts_count = 1 + rng() % std::min<std::size_t>(n, 3);
    std::vector<std::vector<Vertex>> parts(parts_count);
    for (Vertex v = 0; v < n; ++v) parts[v < parts_count ? v : rng() % parts_count].push_back(v);

    // k_i is the least number of pairs a vertex of part i fails to resolve,
    // sometimes pushed one higher so the hypothesis can fail too.
    std::vector<std::size_t> k;
    for (const auto& part : parts) {
      std::size_t least = pairs.size();
      for (Vertex v : part) {
        std::size_t c = 0;
        for (auto pr : pairs) c += dm(v, pr.first) == dm(v, pr.second);
        least = std::min(least, c);
      }
      k.push_back(least + (rng() % 4 == 0 ? 1 : 0));
    }
    auto r = counting_lemma_check(dm, res, pairs, parts, k);
    hypothesis += r.hypothesis_ok;
    if (r.hypothesis_ok && !r.inequality_ok) ++counterexamples;
  }
  report(8, "lemma invariants", window_fail == 0 && counterexamples == 0,
         fmt("%d window samples, %zu failures; %d counting instances (%zu meet the hypothesis), "
             "%zu counterexamples",
             kWindowSamples, window_fail, kCountingSamples, hypothesis, counterexamples));
}

double median_time(const Graph& g) {
  std::vector<double> t;
  for (int i = 0; i < kTimingRepeats; ++i) {
    auto start = Clock::now();
    volatile std::size_t r = resolving_number(g).res;
    (void)r;
    t.push_back(seconds_since(start));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void performance() {
  std::mt19937_64 rng(300);
  auto g300 = oracle::random_connected(300, 0.02, rng);
  auto g200 = oracle::random_connected(200, 0.02, rng);
  auto g100 = oracle::random_connected(100, 0.02, rng);
  auto start = Clock::now();
  auto r300 = resolving_number(g300).res;
  double t300 = seconds_since(start);
  double t200 = median_time(g200), t100 = median_time(g100);
  double ratio = t200 / t100;
  report(9, "performance", t300 < kLargeLimitSeconds && ratio <= kRatioLimit,
         fmt("n=300 res %zu in %.4f s (limit %.1f s); median n=200 %.5f s, n=100 %.5f s, "
             "ratio %.2f (limit %.0f)",
             r300, t300, kLargeLimitSeconds, t200, t100, ratio, kRatioLimit));
}

void serialization(const Pools& p, const Res3Catalog& cat, const std::string& fixture) {
  std::size_t total = 0, bad = 0;
  for (const auto* pool : {&p.small, &p.trees, &p.sparse})
    for (const auto& g : *pool) {
      ++total;
      if (!(parse_graph6(write_graph6(g)) == g)) ++bad;
    }
  std::mt19937_64 rng(6);
  for (int i = 0; i < kRandomGraph6; ++i) {
    auto g = oracle::random_graph(rng() % 31, double(rng() % 101) / 100.0, rng);
    ++total;
    if (!(parse_graph6(write_graph6(g)) == g)) ++bad;
  }
  std::ifstream in(fixture, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  bool same = in.good() || in.eof() ? text.str() == cat.fixture_text() : false;
  report(10, "serialisation", bad == 0 && same,
         fmt("%zu graph6 round trips, %zu mismatches; fixture %s %s", total, bad, fixture.c_str(),
             same ? "byte-identical" : "differs or is missing"));
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixture = argc > 1 ? argv[1] : RESNUM_FIXTURE;
  auto start = Clock::now();
  Pools pools = build_pools();
  Res3Catalog cat = build_res3_catalog();

  oracle_equivalence(pools);
  family_formulas();
  bound_suite(pools);
  catalog_derivation(pools, cat);
  small_res_equivalence(pools);
  clique_characterisation(pools, cat);
  tree_extremal(pools);
  lemma_invariants(pools);
  performance();
  serialization(pools, cat, fixture);

  std::printf("%d of 10 criteria failed, %.1f s total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
