#include "knotforge/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "knotforge/cli/catalog.hpp"
#include "knotforge/cli/json_io.hpp"
#include "knotforge/error.hpp"

namespace knotforge::cli {

namespace {

constexpr const char* kCatalogPrefix = "catalog:";
constexpr const char* kMeasureNote = "measure: normalized Haar measure on the unit circle (total mass 1)";

struct Resolved {
  std::optional<NamedSeifert> seifert;
  std::optional<BraidWord> braid;
  std::optional<GridDiagram> grid;
  std::optional<DerivativeInput> derivative;
};

Resolved resolve(const std::string& input, const Context& ctx) {
  Resolved r;
  if (input.rfind(kCatalogPrefix, 0) == 0) {
    const auto e = find_catalog_entry(ctx.catalog_dir, input.substr(std::string(kCatalogPrefix).size()));
    if (e.seifert) r.seifert = NamedSeifert{e.name, *e.seifert};
    r.braid = e.braid;
    r.grid = e.grid;
    return r;
  }
  const Input parsed = parse_input(read_json_file(input));
  if (const auto* s = std::get_if<NamedSeifert>(&parsed)) r.seifert = *s;
  if (const auto* b = std::get_if<BraidWord>(&parsed)) r.braid = *b;
  if (const auto* g = std::get_if<GridDiagram>(&parsed)) r.grid = *g;
  if (const auto* d = std::get_if<DerivativeInput>(&parsed)) r.derivative = *d;
  return r;
}

// Seifert matrix of a Seifert or braid input.
SeifertMatrix seifert_of(const Resolved& r, const std::string& input) {
  if (r.seifert) return r.seifert->matrix;
  if (r.braid) return seifert_matrix_from_braid(*r.braid);
  raise(ErrorCode::ParseError, input + ": expected a Seifert matrix or braid input");
}

std::string class_name(const MetabolizerClass& c) {
  auto term = [](std::int64_t k, const char* var) -> std::string {
    if (k == 1) return var;
    if (k == -1) return std::string("-") + var;
    return std::to_string(k) + var;
  };
  if (c.p == 0) return term(c.q, "y");
  if (c.q == 0) return term(c.p, "x");
  std::string s = term(c.p, "x");
  s += c.q > 0 ? " + " : " - ";
  s += term(c.q > 0 ? c.q : -c.q, "y");
  return s;
}

std::string rational_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

int guarded(std::ostream& err, const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
        return kExitParse;
      case ErrorCode::TooLarge:
        return kExitResources;
      default:
        return kExitInvariant;
    }
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::bad_alloc&) {
    err << "error: TooLarge: out of memory\n";
    return kExitResources;
  }
}

std::string format_rho0(const Rho0& rho) {
  std::ostringstream os;
  if (rho.exact) {
    os << rational_string(*rho.exact);
  } else {
    os << std::setprecision(12) << rho.value;
  }
  if (rho.jump_count > 0) {
    if (rho.error_bound <= 1e-9) {
      os << " (±1e-9)";
    } else {
      os << " (±" << std::setprecision(2) << rho.error_bound << ")";
    }
  }
  return os.str();
}

std::string format_rank_table(const BigradedRanks& hat) {
  std::ostringstream os;
  if (hat.empty()) return "(empty)\n";
  const int m_lo = hat.min_maslov();
  const int m_hi = hat.max_maslov();
  std::size_t width = 3;
  for (int m = m_lo; m <= m_hi; ++m) width = std::max(width, std::to_string(m).size() + 1);
  for (const auto& [k, r] : hat.entries()) width = std::max(width, std::to_string(r).size() + 1);
  os << "rows: Alexander grading A (descending); columns: Maslov grading M (ascending)\n";
  os << std::setw(6) << "A\\M";
  for (int m = m_lo; m <= m_hi; ++m) os << std::setw(static_cast<int>(width)) << m;
  os << '\n';
  for (int a = hat.max_alexander(); a >= hat.min_alexander(); --a) {
    os << std::setw(6) << a;
    for (int m = m_lo; m <= m_hi; ++m) {
      const auto r = hat.rank(m, a);
      os << std::setw(static_cast<int>(width)) << (r == 0 ? std::string(".") : std::to_string(r));
    }
    os << '\n';
  }
  return os.str();
}

BigradedRanks cached_hat_ranks(const GridDiagram& g, const Context& ctx) {
  const std::string canonical = Json{{"X", g.x}, {"O", g.o}}.dump();
  if (auto hit = ctx.cache.get("hfk", canonical)) return ranks_from_json(Json::parse(*hit));
  const auto hat = hat_ranks(tilde_homology(g, ctx.limits), g.size());
  ctx.cache.put("hfk", canonical, ranks_to_json(hat).dump());
  return hat;
}

int cmd_alex(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Resolved r = resolve(input, ctx);
    LaurentPoly delta;
    if (r.seifert) {
      delta = alexander_polynomial(r.seifert->matrix);
    } else if (r.braid) {
      delta = burau_alexander(*r.braid);
    } else if (r.grid) {
      delta = genus_and_euler(cached_hat_ranks(*r.grid, ctx)).euler;
    } else {
      raise(ErrorCode::ParseError, input + ": expected a Seifert matrix, braid or grid input");
    }
    out << delta.to_string() << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_rho0(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SeifertMatrix v = seifert_of(resolve(input, ctx), input);
    out << format_rho0(rho0(v)) << '\n';
    out << kMeasureNote << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_hfk(const std::string& input, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Resolved r = resolve(input, ctx);
    if (!r.grid) raise(ErrorCode::ParseError, input + ": expected a grid input");
    const auto hat = cached_hat_ranks(*r.grid, ctx);
    if (ctx.json) {
      out << ranks_to_json(hat).dump(2) << '\n';
      return static_cast<int>(kExitOk);
    }
    const GenusEuler ge = genus_and_euler(hat);
    out << "HFK-hat ranks over F2, grid size " << r.grid->size() << '\n';
    out << format_rank_table(hat);
    out << "total rank: " << hat.total() << '\n';
    out << "genus: " << ge.genus << '\n';
    out << "euler: " << ge.euler.to_string() << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_dg(const std::string& seifert_input, const std::vector<std::string>& derivative_files,
           const std::optional<std::string>& grid_input, const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Resolved sr = resolve(seifert_input, ctx);
    if (!sr.seifert) raise(ErrorCode::ParseError, seifert_input + ": expected a Seifert matrix input");
    const SeifertMatrix& v = sr.seifert->matrix;
    std::vector<DerivativeInput> derivs;
    for (const auto& f : derivative_files) {
      const Resolved d = resolve(f, ctx);
      if (!d.derivative) raise(ErrorCode::ParseError, f + ": expected a derivative input");
      derivs.push_back(*d.derivative);
    }
    const DgReport rep = dg_lower_bound(v, derivs);

    std::optional<SurfaceCertificate> cert;
    if (grid_input) {
      const Resolved gr = resolve(*grid_input, ctx);
      if (!gr.grid) raise(ErrorCode::ParseError, *grid_input + ": expected a grid input");
      cert = unique_surface_certificate(cached_hat_ranks(*gr.grid, ctx));
    }

    if (ctx.json) {
      Json j{{"dg_lower", rep.dg_lower}, {"dg_lower_rho", rep.dg_lower_rho}, {"notes", rep.certificate_notes}};
      Json per = Json::array();
      for (const auto& d : rep.per_derivative) {
        Json e{{"class", {d.cls.p, d.cls.q}}, {"complete", d.complete}, {"genus_s3_lower", d.genus_s3_lower},
               {"dg_contribution", d.dg_contribution}};
        if (d.braid) e["braid"] = to_json(*d.braid);
        if (d.genus_s3_exact) e["genus_s3_exact"] = *d.genus_s3_exact;
        if (d.rho) {
          e["rho"] = d.rho->value;
          e["rho_error_bound"] = d.rho->error_bound;
          if (d.rho->exact) e["rho_exact"] = rational_string(*d.rho->exact);
        }
        per.push_back(e);
      }
      j["per_derivative"] = per;
      if (cert) j["surface"] = Json{{"genus", cert->genus}, {"certified_unique", cert->certified_unique}, {"rank_at_A1", cert->top_rank}};
      out << j.dump(2) << '\n';
      return static_cast<int>(kExitOk);
    }

    out << "seifert: " << v.matrix().to_string() << '\n';
    out << "alexander: " << alexander_polynomial(v).to_string() << '\n';
    out << "metabolizers:";
    for (const auto& c : metabolizers(v)) out << ' ' << c.to_string();
    out << '\n';
    for (const auto& d : rep.per_derivative) {
      out << "derivative " << d.cls.to_string() << ": ";
      if (!d.complete) {
        out << "incomplete (no derivative supplied)\n";
        continue;
      }
      if (d.braid) out << "braid " << d.braid->to_string() << ", ";
      out << "genus_s3 >= " << d.genus_s3_lower;
      if (d.genus_s3_exact) out << " (supplied exact " << *d.genus_s3_exact << ")";
      if (d.rho) {
        out << ", rho = " << format_rho0(*d.rho);
      }
      out << ", contribution " << d.dg_contribution << '\n';
    }
    out << "dg lower bound from ρ: " << rep.dg_lower_rho << '\n';
    out << "dg lower bound: " << rep.dg_lower << '\n';
    if (cert) {
      out << "surface uniqueness: " << (cert->certified_unique ? "certified" : "not certified") << " (genus "
          << cert->genus << ", rank at A=1: " << cert->top_rank << (cert->top_rank < 4 ? " < 4" : " >= 4") << ")\n";
    }
    for (const auto& n : rep.certificate_notes) out << "note: " << n << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_signature_csv(const std::string& input, const std::string& out_path, const Context& ctx, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const SeifertMatrix v = seifert_of(resolve(input, ctx), input);
    std::ostringstream csv;
    csv << "theta,sigma\n";
    csv << std::fixed << std::setprecision(12);
    for (const auto& [theta, sigma] : signature_samples(signature_profile(v))) csv << theta << ',' << sigma << '\n';
    if (out_path.empty()) {
      out << csv.str();
    } else {
      std::ofstream f(out_path);
      if (!f) raise(ErrorCode::ParseError, "cannot write " + out_path);
      f << csv.str();
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_family(std::int64_t m, const Context& ctx, std::ostream& out, std::ostream& err) {
  (void)ctx;
  return guarded(err, [&] {
    const FamilyKnot k = family_kn(m);
    out << "name: " << k.name << '\n';
    out << "m: " << k.m << '\n';
    out << "seifert: " << k.seifert.matrix().to_string() << '\n';
    out << "alexander: " << k.alexander.to_string() << '\n';
    out << "algebraically slice: " << (k.algebraically_slice ? "yes" : "no") << '\n';
    out << "metabolizers:";
    for (const auto& c : k.metabolizers) out << ' ' << c.to_string();
    out << '\n';
    out << "derivative classes: alpha = " << class_name(k.metabolizers[0]) << ", beta = " << class_name(k.metabolizers[1])
        << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_catalog_verify(const Context& ctx, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto entries = load_catalog(ctx.catalog_dir);
    if (entries.empty()) {
      err << "warning: catalog " << ctx.catalog_dir.string() << " is empty\n";
      out << "catalog verify: 0 entries\n";
      return static_cast<int>(kExitOk);
    }
    std::size_t mismatches = 0;
    for (const auto& e : entries) {
      const VerifyResult r = verify_entry(e, ctx.limits);
      out << e.name << ':';
      for (const auto& route : r.routes) out << ' ' << route.route << "=[" << route.alexander.to_string() << ']';
      if (!r.error.empty()) {
        out << " ERROR " << r.error << '\n';
        ++mismatches;
      } else if (r.routes.size() < 2) {
        out << " single presentation\n";
      } else if (r.agree) {
        out << " OK\n";
      } else {
        out << " MISMATCH\n";
        ++mismatches;
      }
    }
    out << "catalog verify: " << entries.size() << " entries, " << mismatches << " mismatches\n";
    return static_cast<int>(mismatches == 0 ? kExitOk : kExitInvariant);
  });
}

}  // namespace knotforge::cli
