#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "shimura/error.hpp"
#include "shimura/quaternion.hpp"
#include "shimura/search.hpp"
#include "shimura/surface.hpp"

namespace shimura::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string s = "\"";
  for (char c : field) {
    if (c == '"') s += '"';
    s += c;
  }
  return s + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
  out << "\n";
}

std::string join(const std::vector<i64>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "none" : s;
}

enum class Format { Text, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  throw InputError("unknown format '" + s + "' (expected text or csv)");
}

i64 parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("malformed " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw InputError("malformed " + what + " '" + s + "'");
  return v;
}

// full | borel:p[:j] | unipotent:p[:j] | principal:p[:j]
SubgroupSpec parse_subgroup(const std::string& text, const BaseField& base) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw InputError("empty --subgroup");
  SubgroupSpec spec;
  const std::string& kind = parts[0];
  if (kind == "full") {
    if (parts.size() != 1) throw InputError("'full' takes no level");
    return spec;
  }
  if (kind == "borel") spec.kind = SubgroupKind::Borel;
  else if (kind == "unipotent") spec.kind = SubgroupKind::Unipotent;
  else if (kind == "principal") spec.kind = SubgroupKind::Principal;
  else throw InputError("unknown subgroup '" + kind + "' (expected full, borel:p, unipotent:p or principal:p)");
  if (parts.size() < 2 || parts.size() > 3) throw InputError("subgroup needs a level: " + kind + ":p[:j]");
  const i64 p = parse_int(parts[1], "level prime");
  const i64 j = parts.size() == 3 ? parse_int(parts[2], "prime label") : 0;
  spec.level = prime_of(base, p, static_cast<int>(j));
  return spec;
}

std::string subgroup_str(const SubgroupSpec& s) {
  std::string out = to_string(s.kind);
  if (s.level) out += " at " + s.level->str() + " (norm " + std::to_string(s.level->norm()) + ")";
  return out;
}

std::string yes_no(bool b) {
  return b ? "yes" : "no";
}

std::string general_type_str(i64 e, const QuotientInvariants& z) {
  if (!z.type_determined) return "undetermined (e > 36)";
  (void)e;
  return yes_no(z.general_type);
}

std::string quotient_line(i64 e, const QuotientInvariants& z) {
  std::ostringstream os;
  os << "K² = " << z.Ksq << ", c₂ = " << z.c2 << ", p_g = " << z.pg << ", q = " << z.q
     << ", general type: " << general_type_str(e, z);
  return os.str();
}

std::string euler_str(const AdmissibilityReport& r) {
  std::ostringstream os;
  if (r.euler) os << r.euler->str();
  else os << "unrecognized";
  if (r.euler_error > 0) {
    os.precision(10);
    os << " (float " << r.euler_value << " +- " << r.euler_error << ")";
  }
  return os.str();
}

void print_report(std::ostream& out, const AdmissibilityReport& r, Format fmt) {
  if (fmt == Format::Csv) {
    write_row(out, {"algebra", "subgroup", "index", "euler", "involution", "invariant_order", "level_invariance",
                    "torsion", "surviving_orders", "admissible_type", "pg"});
    write_row(out, {r.algebra, subgroup_str(r.subgroup), std::to_string(r.index), r.euler ? r.euler->str() : "",
                    yes_no(r.involution.ok), yes_no(r.invariant_order.ok), yes_no(r.level_invariance.ok),
                    r.torsion.str(), join_ints(r.torsion.surviving_orders),
                    r.admissible_type ? std::to_string(*r.admissible_type) : "",
                    r.surface ? std::to_string(r.surface->pg) : ""});
    return;
  }
  out << "algebra = " << r.algebra << "\n";
  out << "subgroup = " << subgroup_str(r.subgroup) << "\n";
  out << "involution = " << yes_no(r.involution.ok) << " (" << r.involution.reason << ")\n";
  out << "invariant_order = " << yes_no(r.invariant_order.ok) << " (" << r.invariant_order.reason << ")\n";
  out << "level_invariance = " << yes_no(r.level_invariance.ok) << " (" << r.level_invariance.reason << ")\n";
  out << "index = " << r.index << "\n";
  out << "euler = " << euler_str(r) << "\n";
  out << "torsion = " << r.torsion.str() << "\n";
  out << "surviving_orders = " << join_ints(r.torsion.surviving_orders) << "\n";
  for (const auto& n : r.notes) out << "note = " << n << "\n";
  if (r.surface) {
    const auto& s = *r.surface;
    out << "c1sq = " << s.c1sq << "\nc2 = " << s.e << "\nchi = " << s.chi << "\npg = " << s.pg << "\nq = " << s.q << "\n";
    const auto table = quotient_table(s.e);
    out << "quotient X/sigma by fixed-curve genus g:";
    if (table.empty()) out << " none";
    out << "\n";
    for (const auto& row : table) out << "  g = " << row.g << ": " << quotient_line(s.e, row.inv) << "\n";
  }
  if (r.admissible()) {
    out << "π₁(X/σ) is finite\n";
    out << "ADMISSIBLE of type " << *r.admissible_type << "; p_g(X) = " << r.surface->pg << "\n";
  } else {
    std::vector<std::string> why;
    if (!r.involution.ok) why.push_back("no involution");
    if (!r.invariant_order.ok) why.push_back("no invariant maximal order");
    if (!r.level_invariance.ok) why.push_back("level not invariant");
    if (r.torsion.torsion()) why.push_back("torsion");
    if (r.torsion.kind == TorsionVerdict::Kind::Unknown) why.push_back("torsion undecided");
    if (!r.euler || !r.euler->is_integer() || r.euler->num() % 4) why.push_back("Euler number not a multiple of 4");
    std::string s;
    for (const auto& w : why) s += (s.empty() ? "" : ", ") + w;
    out << "NOT ADMISSIBLE: " << s << "\n";
  }
}

int cmd_bernoulli(i64 d, Format fmt, std::ostream& out) {
  const QuadField K(d);
  const Rational B = bernoulli2(K);
  if (fmt == Format::Csv) {
    write_row(out, {"d", "D", "B2_num", "B2_den"});
    write_row(out, {std::to_string(d), std::to_string(K.disc()), std::to_string(B.num()), std::to_string(B.den())});
  } else {
    out << B << "\n";
  }
  return 0;
}

int cmd_search(const std::vector<i64>& e_values, bool all, Format fmt, std::ostream& out) {
  const auto rows = prune_by_torsion(e_values.empty() ? enumerate_candidates() : enumerate_candidates(e_values));
  const auto cmp = compare_to_reference(rows);
  auto classify = [&](const CandidateRow& r) -> std::string {
    if (r.status == CandidateRow::Status::Pruned) return r.reason;
    const bool extra = std::any_of(cmp.extra.begin(), cmp.extra.end(), [&](const CandidateRow& x) {
      return x.D == r.D && x.e == r.e && x.index == r.index && x.ram_primes == r.ram_primes;
    });
    std::string s = extra ? "extra: passes the documented necessary conditions only" : "matched reference";
    if (!r.tag.empty()) s += "; " + r.tag;
    return s;
  };
  if (fmt == Format::Csv) {
    write_row(out, {"D", "d", "B2_num", "B2_den", "e", "ram_primes", "index", "status", "reason"});
    for (const auto& r : rows) {
      if (!all && r.status != CandidateRow::Status::Candidate) continue;
      write_row(out, {std::to_string(r.D), std::to_string(r.d), std::to_string(r.B2.num()), std::to_string(r.B2.den()),
                      std::to_string(r.e), join(r.ram_primes, ";"), std::to_string(r.index), to_string(r.status),
                      classify(r)});
    }
    return 0;
  }
  out << "  e    D   d      B2  ram          index  status     reason\n";
  for (const auto& r : rows) {
    if (!all && r.status != CandidateRow::Status::Candidate) continue;
    char line[128];
    std::snprintf(line, sizeof line, "%3lld  %3lld  %2lld  %6s  %-11s  %5lld  %-9s  ", static_cast<long long>(r.e),
                  static_cast<long long>(r.D), static_cast<long long>(r.d), r.B2.str().c_str(),
                  join(r.ram_primes, ";").c_str(), static_cast<long long>(r.index), to_string(r.status));
    out << line << classify(r) << "\n";
  }
  out << "matched " << cmp.matched.size() << ", missing " << cmp.missing.size() << ", extra " << cmp.extra.size()
      << "\n";
  for (const auto& m : cmp.missing)
    out << "missing: e = " << m.e << ", d = " << m.d << ", ram over " << m.ram_prime << ", index " << m.index << "\n";
  return 0;
}

int cmd_surface(i64 d, const std::vector<i64>& ram, const std::string& subgroup, Format fmt, std::ostream& out) {
  const QuadField K(d);
  const auto A = algebra_over_quadratic(K, ram);
  const auto spec = parse_subgroup(subgroup, A.base);
  print_report(out, admissibility_report(A, spec), fmt);
  return 0;
}

int cmd_quotient(i64 e, std::optional<i64> g, Format fmt, std::ostream& out) {
  std::vector<QuotientRow> rows;
  if (g) rows.push_back({*g, quotient_invariants(e, *g)});
  else rows = quotient_table(e);
  if (fmt == Format::Csv) {
    write_row(out, {"e", "g", "Ksq", "c2", "pg", "q", "general_type"});
    for (const auto& r : rows)
      write_row(out, {std::to_string(e), std::to_string(r.g), std::to_string(r.inv.Ksq), std::to_string(r.inv.c2),
                      std::to_string(r.inv.pg), std::to_string(r.inv.q), general_type_str(e, r.inv)});
    return 0;
  }
  if (g) {
    out << quotient_line(e, rows.front().inv) << "\n";
    return 0;
  }
  if (rows.empty()) out << "no admissible fixed-curve genus for e = " << e << "\n";
  for (const auto& r : rows) out << "g = " << r.g << ": " << quotient_line(e, r.inv) << "\n";
  return 0;
}

int cmd_curve(const std::vector<i64>& ram, i64 index, Format fmt, std::ostream& out) {
  const auto c = shimura_curve_genus(ram, index);
  if (fmt == Format::Csv) {
    write_row(out, {"ram_primes", "index", "chi", "genus"});
    write_row(out, {join(ram, ";"), std::to_string(index), c.chi.str(), c.genus ? std::to_string(*c.genus) : ""});
    return 0;
  }
  out << "chi = " << c.chi << "\n";
  if (c.genus)
    out << "genus = " << *c.genus << " (valid only for a torsion-free group)\n";
  else
    out << "no integral genus >= 2; chi is an orbifold characteristic\n";
  return 0;
}

int cmd_quartic(const std::vector<i64>& poly, i64 subfield, std::optional<i64> disc_hint, const std::string& subgroup,
                i64 zeta_bound, bool asserted, Format fmt, std::ostream& out) {
  if (poly.size() != 5) throw InputError("--poly needs five coefficients c4,c3,c2,c1,c0");
  const std::array<i64, 5> c{poly[0], poly[1], poly[2], poly[3], poly[4]};
  const auto K = QuarticField::create(c, subfield, disc_hint);
  const auto A = algebra_over_quartic(K, asserted);
  const auto spec = parse_subgroup(subgroup, A.base);
  ReportOptions opt;
  opt.zeta_bound = zeta_bound;
  if (fmt == Format::Text) {
    out << "field = " << K.poly_str() << ", disc(f) = " << K.poly_disc() << ", d_k = " << K.field_disc()
        << ", subfield Q(sqrt(" << subfield << "))\n";
    if (spec.level) {
      const auto shapes = quartic_splitting(K, spec.level->p);
      out << "splitting of " << spec.level->p << " = ";
      for (std::size_t i = 0; i < shapes.size(); ++i)
        out << (i ? " " : "") << "(f=" << shapes[i].f << ",e=" << shapes[i].e << ")";
      out << "\n";
    }
  }
  print_report(out, admissibility_report(A, spec, opt), fmt);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shimura surfaces with an involution of the second kind"};
  app.name("shimura");
  app.require_subcommand(1);
  std::string format = "text";

  auto* bern = app.add_subcommand("bernoulli", "second generalized Bernoulli number of Q(sqrt d)");
  i64 bern_d = 0;
  bern->add_option("--d", bern_d, "squarefree d > 1")->required();
  bern->add_option("--format", format, "text or csv");

  auto* search = app.add_subcommand("search", "classify admissible groups over real quadratic fields");
  std::vector<i64> search_e;
  bool search_all = false;
  search->add_option("--e", search_e, "types to search (default 12,16,...,36)")->delimiter(',');
  search->add_option("--format", format, "text or csv");
  search->add_flag("--all", search_all, "also list pruned rows");

  auto* surface = app.add_subcommand("surface", "admissibility report over Q(sqrt d)");
  i64 surf_d = 0;
  std::vector<i64> surf_ram;
  std::string surf_sub = "full";
  surface->add_option("--d", surf_d, "squarefree d > 1")->required();
  surface->add_option("--ram", surf_ram, "split rational primes; each gives a conjugate pair")->delimiter(',')->required();
  surface->add_option("--subgroup", surf_sub, "full | borel:p[:j] | unipotent:p[:j] | principal:p[:j]");
  surface->add_option("--format", format, "text or csv");

  auto* quotient = app.add_subcommand("quotient", "invariants of the quotient by the involution");
  i64 quot_e = 0;
  std::optional<i64> quot_g;
  quotient->add_option("--e", quot_e, "Euler number of X")->required();
  quotient->add_option("--g", quot_g, "arithmetic genus of the fixed curve");
  quotient->add_option("--format", format, "text or csv");

  auto* curve = app.add_subcommand("curve", "Euler characteristic and genus of a Shimura curve over Q");
  std::vector<i64> curve_ram;
  i64 curve_index = 1;
  curve->add_option("--ram", curve_ram, "ramified primes")->delimiter(',')->required();
  curve->add_option("--index", curve_index, "index in Gamma(1)")->required();
  curve->add_option("--format", format, "text or csv");

  auto* quartic = app.add_subcommand("quartic", "admissibility report over a totally real quartic field");
  std::vector<i64> poly;
  i64 quartic_sub = 0;
  std::optional<i64> quartic_disc;
  std::string quartic_subgroup = "full";
  i64 zeta_bound = ReportOptions{}.zeta_bound;
  bool asserted = false;
  quartic->add_option("--poly", poly, "c4,c3,c2,c1,c0 (monic)")->delimiter(',')->required()->allow_extra_args(false);
  quartic->add_option("--subfield", quartic_sub, "d with Q(sqrt d) inside k")->required();
  quartic->add_option("--disc", quartic_disc, "field discriminant when Z[x]/(f) is not maximal");
  quartic->add_option("--subgroup", quartic_subgroup, "full | borel:p[:j] | unipotent:p[:j] | principal:p[:j]");
  quartic->add_option("--zeta-bound", zeta_bound, "prime bound for the zeta_k(2) Euler product");
  quartic->add_flag("--infinite-conjugate-assert", asserted,
                    "assert that the two unramified real places are conjugate over the subfield");
  quartic->add_option("--format", format, "text or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (*bern) return cmd_bernoulli(bern_d, fmt, out);
    if (*search) return cmd_search(search_e, search_all, fmt, out);
    if (*surface) return cmd_surface(surf_d, surf_ram, surf_sub, fmt, out);
    if (*quotient) return cmd_quotient(quot_e, quot_g, fmt, out);
    if (*curve) return cmd_curve(curve_ram, curve_index, fmt, out);
    if (*quartic) return cmd_quartic(poly, quartic_sub, quartic_disc, quartic_subgroup, zeta_bound, asserted, fmt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: input too large (" << e.what() << ")\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"shimura"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace shimura::cli
