// Acceptance report: one PASS/FAIL line per criterion.
//
//   knotforge_acceptance [--known-red N,...]
//
// Exits 0 when every criterion passes, or when the failing set is exactly the
// --known-red set. Any other outcome, including a known-red criterion that
// starts passing, exits 1.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knotforge/braid.hpp"
#include "knotforge/error.hpp"
#include "knotforge/cli/catalog.hpp"
#include "knotforge/cli/commands.hpp"
#include "knotforge/cli/json_io.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/slice.hpp"
#include "oracles.hpp"

using namespace knotforge;
using namespace knotforge::cli;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

CatalogEntry entry(const std::string& name) { return find_catalog_entry(KNOTFORGE_DEFAULT_CATALOG, name); }

SeifertMatrix form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return SeifertMatrix(IntMatrix{{a, b}, {c, d}});
}

// Midpoint Riemann sum of the signature function, normalized measure.
double riemann_rho(const SeifertMatrix& v, int samples) {
  const LevineTristram lt(v);
  long total = 0;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2 * M_PI * (k + 0.5) / samples;
    try {
      total += lt(UnitCirclePoint(theta));
    } catch (const Error&) {
      // A sample on a jump has measure zero; skip it.
    }
  }
  return static_cast<double>(total) / samples;
}

void criterion_1(Outcome& o) {
  const auto g = *entry("9_46").grid;
  Context ctx;
  ctx.json = true;
  std::ostringstream out;
  std::ostringstream err;
  const auto t0 = Clock::now();
  const int code = cmd_hfk("catalog:9_46", ctx, out, err);
  const double secs = seconds_since(t0);
  o.require(code == kExitOk, "cmd_hfk exit code " + std::to_string(code) + ": " + err.str());
  if (code != kExitOk) return;
  const auto hat = ranks_from_json(Json::parse(out.str()));
  o.detail << "grid size " << g.size() << ", ranks A=1:" << hat.total_at_alexander(1)
           << " A=0:" << hat.total_at_alexander(0) << " A=-1:" << hat.total_at_alexander(-1)
           << ", rank(0,0)=" << hat.rank(0, 0) << ", " << secs << " s, memory estimate "
           << estimate_memory_bytes(g.size()) / (1 << 20) << " MiB; tolerance exact, budget "
           << (g.size() <= 9 ? "60 s" : "1800 s");
  o.require(g.size() <= 11, "grid size above 11");
  o.require(hat.total_at_alexander(1) == 2 && hat.total_at_alexander(0) == 5 && hat.total_at_alexander(-1) == 2 &&
                hat.total() == 9,
            "rank multiset");
  o.require(hat.rank(0, 0) == 5, "rank 5 at (0,0)");
  o.require(secs <= (g.size() <= 9 ? 60.0 : 1800.0), "runtime budget");
}

void criterion_2(Outcome& o) {
  const std::vector<std::pair<std::string, int>> expected{{"9_46", 1}, {"trefoil", 1}, {"figure_eight", 1}, {"torus_2_5", 2}};
  for (const auto& [name, genus] : expected) {
    const auto e = entry(name);
    const auto t0 = Clock::now();
    const auto hat = hat_ranks(tilde_homology(*e.grid), e.grid->size());
    const int g = genus_and_euler(hat).genus;
    const double secs = seconds_since(t0);
    o.detail << name << ": HFK genus " << g << " (" << secs << " s)";
    o.require(g == genus, name + " HFK genus");
    o.require(secs <= 10.0, name + " runtime");
    if (e.braid) {
      const auto bg = seifert_genus(*e.braid);
      o.detail << ", braid " << e.braid->to_string() << " Seifert genus " << bg.genus << (bg.exact ? " exact" : " upper bound");
      o.require(bg.genus == g, name + " braid-route genus differs from HFK genus");
    } else {
      o.detail << ", no braid presentation";
      o.require(false, name + " has no braid presentation");
    }
    o.detail << "; ";
  }
  o.detail << "tolerance exact";
}

void criterion_3(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& e : load_catalog(KNOTFORGE_DEFAULT_CATALOG)) {
    if (e.presentations() < 2) continue;
    const auto r = verify_entry(e, {});
    o.require(r.error.empty() && r.agree, e.name + " routes disagree " + r.error);
    o.detail << e.name << ":";
    for (const auto& route : r.routes) o.detail << ' ' << route.route;
    o.detail << "; ";
    ++checked;
  }
  const auto d946 = alexander_polynomial(*entry("9_46").seifert).to_string();
  o.detail << checked << " entries agree, Delta(9_46) = " << d946 << "; tolerance exact";
  o.require(d946 == "-2*t + 5 - 2*t^-1", "Delta(9_46)");
  o.require(checked >= 4, "too few multi-presentation entries");
}

void criterion_4(Outcome& o) {
  for (std::int64_t n = 0; n <= 3; ++n) {
    const auto m = metabolizers(form(3 * n, -2, -1, 0));
    const std::vector<MetabolizerClass> want{{1, n}, {0, 1}};
    o.require(m == want, "n = " + std::to_string(n));
    o.detail << "n=" << n << ": " << m[0].to_string() << ' ' << m[1].to_string() << "; ";
  }
  const auto m = metabolizers(form(1, -2, -1, 0));
  o.require(m == std::vector<MetabolizerClass>{{3, 1}, {0, 1}}, "11n139 form");
  o.detail << "11n139 form: " << m[0].to_string() << ' ' << m[1].to_string() << "; tolerance exact";
}

void criterion_5(Outcome& o) {
  const auto unknot = rho0(SeifertMatrix());
  o.require(unknot.exact && *unknot.exact == Rational(0), "unknot exact 0");
  const SeifertMatrix tre = form(-1, 1, 0, -1);
  const auto r = rho0(tre);
  const double riemann = riemann_rho(tre, 1'000'000);
  o.require(std::abs(r.value + 4.0 / 3.0) <= 1e-9, "trefoil within 1e-9 of -4/3");
  o.require(r.exact && *r.exact == Rational(-4, 3), "trefoil exact -4/3");
  o.require(std::abs(r.value - riemann) <= 1e-3, "trefoil Riemann oracle within 1e-3");
  const auto k946 = rho0(form(0, -2, -1, 0));
  o.require(k946.exact && *k946.exact == Rational(0), "9_46 form exact 0");
  o.detail << "unknot " << format_rho0(unknot) << ", trefoil " << format_rho0(r) << " (Riemann 1e6: " << riemann
           << "), 9_46 form " << format_rho0(k946) << "; tolerances 1e-9 (arcs), 1e-3 (Riemann)";
}

void criterion_6(Outcome& o) {
  const std::vector<BraidWord> braids{
      BraidWord(2, {1}),          BraidWord(2, {1, 1, 1}),        BraidWord(2, {-1, -1, -1}),
      BraidWord(3, {1, -2, 1, -2}), BraidWord(2, {1, 1, 1, 1, 1}),  BraidWord(2, {1, 1, 1, 1, 1, 1, 1}),
      BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2}), BraidWord(4, {1, 1, 2, -1, -3, 2, -3})};
  std::size_t runs = 0;
  for (std::int64_t m : {-3, 0, 1, 3, 6}) {
    const auto fam = family_kn(m);
    for (const auto& a : braids) {
      for (const auto& b : braids) {
        const auto rep = dg_lower_bound(fam.seifert, {{fam.metabolizers[0], a, std::nullopt}, {fam.metabolizers[1], b, std::nullopt}});
        int want_rho = 0;
        int want = 0;
        for (const auto& d : rep.per_derivative) {
          const auto v = seifert_matrix_from_braid(*d.braid);
          const double rho_oracle = riemann_rho(v, 20'000);
          o.require(std::abs(d.rho->value - rho_oracle) <= 1e-3, "rho of " + d.braid->to_string() + " vs Riemann");
          const int ceil_half = d.rho->exact
                                    ? static_cast<int>(std::ceil(std::abs(boost::rational_cast<double>(*d.rho->exact)) / 2 - 1e-12))
                                    : static_cast<int>(std::ceil(std::abs(d.rho->value) / 2 - 1e-12));
          const auto sg = seifert_genus(*d.braid);
          const int genus_bound = sg.exact ? sg.genus : burau_alexander(*d.braid).span() / 2;
          want_rho = std::max(want_rho, ceil_half);
          want = std::max({want, ceil_half, genus_bound});
          if (sg.exact) o.require(d.dg_contribution <= sg.genus, "contribution above exact genus");
        }
        o.require(rep.dg_lower_rho == want_rho, "rho part for m=" + std::to_string(m));
        o.require(rep.dg_lower == want, "dg bound for m=" + std::to_string(m));
        ++runs;
      }
    }
  }
  // A supplied exact genus below the rho bound is rejected rather than exceeded.
  bool rejected = false;
  try {
    dg_lower_bound(form(0, -2, -1, 0), {{MetabolizerClass{1, 0}, BraidWord(2, {1, 1, 1, 1, 1}), 1}});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::InconsistentGenus;
  }
  o.require(rejected, "inconsistent supplied genus accepted");
  const auto k0 = dg_lower_bound(form(0, -2, -1, 0), {{MetabolizerClass{1, 0}, BraidWord(2, {1}), std::nullopt},
                                                     {MetabolizerClass{0, 1}, BraidWord(2, {1}), std::nullopt}});
  const auto cert = unique_surface_certificate(hat_ranks(tilde_homology(*entry("9_46").grid), entry("9_46").grid->size()));
  o.require(k0.dg_lower_rho == 0 && cert.certified_unique, "9_46 with unknot derivatives");
  o.detail << runs << " pipeline runs match ceil(max|rho_i|/2) combined with genus bounds; 9_46 unknot derivatives: "
           << "dg lower bound from rho " << k0.dg_lower_rho << ", surface "
           << (cert.certified_unique ? "certified unique" : "not certified") << "; tolerance exact (rho vs Riemann 1e-3)";
}

void criterion_7(Outcome& o) {
  std::mt19937_64 rng(20261015);
  // (a)
  std::size_t a_ok = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t genus = 1 + static_cast<std::size_t>(k % 3);
    const SeifertMatrix v(oracle::random_seifert(rng, genus, 3));
    const auto d = alexander_polynomial(v);
    a_ok += (d.is_symmetric() && d.value_at_one() == 1) ? 1 : 0;
  }
  o.require(a_ok == 500, "(a) Alexander symmetry");
  // (b)
  std::size_t b_ok = 0;
  std::uniform_int_distribution<std::int64_t> entry_dist(-50, 50);
  std::uniform_int_distribution<int> shear(-2, 2);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 500; ++k) {
    const std::int64_t c = entry_dist(rng);
    const IntMatrix v{{k % 4 == 0 ? 0 : entry_dist(rng), c + (coin(rng) ? 1 : -1)}, {c, k % 3 == 0 ? 0 : entry_dist(rng)}};
    IntMatrix p = IntMatrix{{1, shear(rng)}, {0, 1}} * IntMatrix{{1, 0}, {shear(rng), 1}};
    if (coin(rng)) p = p * IntMatrix{{0, 1}, {1, 0}};
    const auto base = metabolizers(SeifertMatrix(v));
    const auto moved = metabolizers(SeifertMatrix(p.transposed() * v * p));
    bool ok = (base.size() == 0 || base.size() == 2) && base.size() == moved.size();
    const std::int64_t det = int_det(p);
    for (const auto& cls : base) {
      const auto img = MetabolizerClass::normalized(det * (p(1, 1) * cls.p - p(0, 1) * cls.q),
                                                    det * (-p(1, 0) * cls.p + p(0, 0) * cls.q));
      ok = ok && std::find(moved.begin(), moved.end(), img) != moved.end();
    }
    b_ok += ok ? 1 : 0;
  }
  o.require(b_ok == 500, "(b) metabolizer count and equivariance");
  // (c)
  std::size_t grids = 0;
  for (const auto& e : load_catalog(KNOTFORGE_DEFAULT_CATALOG)) {
    if (!e.grid || e.grid->size() > 7) continue;
    const auto& g = *e.grid;
    const auto tilde = tilde_homology(g);  // throws on d^2 != 0
    const auto hat = hat_ranks(tilde, g.size());
    bool ok = tilde.total() % (std::uint64_t{1} << (g.size() - 1)) == 0;
    for (const auto& [key, r] : hat.entries()) ok = ok && hat.rank(key.first - 2 * key.second, -key.second) == r;
    ok = ok && hat_ranks(tilde_homology(stabilize(g, 0)), g.size() + 1) == hat;
    o.require(ok, "(c) grid properties on " + e.name);
    ++grids;
  }
  // (d)
  std::size_t braids = 0;
  while (braids < 25) {
    const auto b = oracle::random_knot_braid(rng, 6, 12, true);
    o.require(burau_alexander(b) == alexander_polynomial(SeifertMatrix(seifert_matrix_from_braid(b).matrix())),
              "(d) Burau vs Seifert on " + b.to_string());
    ++braids;
  }
  o.detail << "(a) " << a_ok << "/500 Seifert matrices; (b) " << b_ok << "/500 forms; (c) " << grids
           << " catalog grids of size <= 7; (d) " << braids << " homogeneous braids; tolerance exact";
}

void criterion_8(Outcome& o) {
  // The n = 0 case is reproduced by criteria 1, 4, 5; here the conditional
  // pipeline for a user-supplied derivative braid is exercised on K_1.
  const auto k1 = family_kn(3);
  const auto rep = dg_lower_bound(k1.seifert, {{k1.metabolizers[0], BraidWord(3, {1, -2, 1, -2}), std::nullopt}});
  bool conditional = false;
  for (const auto& n : rep.certificate_notes) conditional = conditional || n.find("unique") != std::string::npos;
  o.require(rep.dg_lower == 1 && conditional, "conditional pipeline on K_1");
  o.require(!rep.per_derivative[1].complete, "missing derivative not flagged incomplete");
  o.detail << "declared: dg(K_n) >= n and HFK(K_n) = HFK(9_46) for all n need the pictorial alpha_n braid and a grid per "
              "K_n, neither shipped; n = 0 reproduced; K_1 with a stand-in genus one derivative gives bound "
           << rep.dg_lower << " flagged conditional on surface uniqueness";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotforge acceptance report"};
  std::vector<int> known_red;
  app.add_option("--known-red", known_red, "Criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"9_46 HFK table", criterion_1},       {"genus detection", criterion_2},
      {"cross-route Alexander", criterion_3}, {"metabolizer classes", criterion_4},
      {"rho0 values", criterion_5},          {"dg lower bound pipeline", criterion_6},
      {"property suites", criterion_7},      {"declared scope", criterion_8}};

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const int id = static_cast<int>(i + 1);
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << id << ". " << criteria[i].first << ": " << o.detail.str() << '\n';
  }
  const std::set<int> expected(known_red.begin(), known_red.end());
  if (!expected.empty()) {
    std::cout << "known red:";
    for (int k : expected) std::cout << ' ' << k;
    std::cout << (failed == expected ? " (failing set matches)" : " (failing set differs)") << '\n';
  }
  return failed == expected ? 0 : 1;
}
