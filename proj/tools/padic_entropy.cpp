// padic-entropy: command-line front end for the padent library.
//
// Exit status: 0 success, 2 when the mathematics refuses the input (non-unit,
// zero slope, singular rho, ...), 1 for usage errors and failed self tests.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "padent/padent.hpp"
#include "padent/selftest.hpp"

namespace {

using namespace padent;

enum class Format { Table, Json, Csv };
enum class GroupKind { Zd, Heisenberg };

struct JobConfig {
  std::string command;
  long p = 2;
  long precision = 8;
  std::string poly;
  std::string poly_file;
  int dim = 0;
  GroupKind group = GroupKind::Zd;
  std::string family;
  std::string quotient;
  std::string route;
  Format format = Format::Table;
  std::uint64_t seed = 1;
  int trials = 20;
  long target = 0;
  std::size_t tail = 3;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const JobConfig& cfg) {
  if (!cfg.poly_file.empty()) {
    std::ifstream in(cfg.poly_file);
    if (!in) throw UsageError("cannot read " + cfg.poly_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (cfg.poly.empty()) throw UsageError("--poly or --poly-file is required");
  return cfg.poly;
}

std::vector<long> split_longs(const std::string& text, char sep) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw UsageError("bad number '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("expected a range a..b, got '" + text + "'");
  const long a = split_longs(text.substr(0, dots), ',').at(0);
  const long b = split_longs(text.substr(dots + 2), ',').at(0);
  if (a < 1 || b < a) throw UsageError("bad range '" + text + "'");
  return {a, b};
}

/// Family specs: odd:a..b, range:a..b, coprime:a..b (n prime to p),
/// list:n1,n2,... (an entry AxB gives a non-diagonal torus quotient), and
/// heis:n1,n2,... as a synonym of list for Heisenberg input.
std::vector<std::vector<long>> parse_family(const std::string& text, long p, int dim) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("family must look like kind:args, got '" + text + "'");
  const std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
  std::vector<std::vector<long>> out;
  auto diagonal = [&](long n) { out.emplace_back(static_cast<std::size_t>(dim), n); };
  if (kind == "odd" || kind == "range" || kind == "coprime") {
    const auto [a, b] = parse_range(args);
    for (long n = a; n <= b; ++n) {
      if (kind == "odd" && n % 2 == 0) continue;
      if (kind == "coprime" && n % p == 0) continue;
      diagonal(n);
    }
  } else if (kind == "list" || kind == "heis") {
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.find('x') != std::string::npos) {
        auto moduli = split_longs(item, 'x');
        if (static_cast<int>(moduli.size()) != dim) throw UsageError("quotient '" + item + "' has the wrong rank");
        out.push_back(std::move(moduli));
      } else {
        diagonal(split_longs(item, ',').at(0));
      }
    }
  } else {
    throw UsageError("unknown family kind '" + kind + "'");
  }
  if (out.size() < 2) throw UsageError("a family needs at least two quotients");
  return out;
}

/// Default families: diagonal n prime to p for Z^d, n >= 2 except p for the
/// Heisenberg group, as long as the regular representation stays <= 512.
std::vector<std::vector<long>> default_family(long p, int dim, std::size_t r, bool heisenberg) {
  std::vector<std::vector<long>> out;
  const int exponent = heisenberg ? 3 : dim;
  for (long n = heisenberg ? 2 : 1;; ++n) {
    long size = static_cast<long>(r);
    for (int i = 0; i < exponent; ++i) size *= n;
    if (size > 512) break;
    if (n % p == 0) continue;
    out.emplace_back(static_cast<std::size_t>(dim), n);
  }
  return out;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      if (c + 1 < row.size()) os << "  ";
    }
    os << '\n';
  }
  return os.str();
}

std::string exponent_str(const FreeAbelianGroup::element& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

int run_unit_check(const JobConfig& cfg, std::ostream& out) {
  const auto f = parse_poly(read_input(cfg), cfg.dim);
  const auto u = c0_unit_normalize(f, cfg.p, cfg.precision);
  if (cfg.format == Format::Json) {
    Json j = make_document("unit-check");
    j["poly"] = to_string(f);
    j["p"] = cfg.p;
    j["unit"] = true;
    j["a"] = u.a;
    j["c"] = to_json(u.c);
    j["nu"] = u.nu;
    j["g"] = to_string(u.g);
    j["g_precision"] = u.coeff_precision;
    out << j.dump(2) << '\n';
  } else {
    out << format_table({{"poly", to_string(f)},
                         {"p", std::to_string(cfg.p)},
                         {"c0-unit", "yes"},
                         {"p^a", std::to_string(u.a)},
                         {"c", u.c.str()},
                         {"t^nu", exponent_str(u.nu)},
                         {"g", to_string(u.g) + "  (mod " + std::to_string(cfg.p) + "^" +
                                   std::to_string(u.coeff_precision) + ")"}});
  }
  return 0;
}

std::vector<std::string> record_row(const FixCountRecord& r) {
  return {r.quotient.str(), r.index.get_str(),    r.fix_count.get_str(),
          std::to_string(r.p_valuation), r.normalized.digits()};
}

int run_fixcount(const JobConfig& cfg, std::ostream& out) {
  const std::string text = read_input(cfg);
  if (cfg.quotient.empty()) throw UsageError("--quotient is required");
  FixCountRecord rec;
  std::optional<BigInt> char_det;
  if (cfg.group == GroupKind::Heisenberg) {
    const auto F = parse_heisenberg_matrix(text);
    const long n = split_longs(cfg.quotient, ',').at(0);
    if (cfg.route == "char") fix_count_char_crt(F, n);
    rec = fix_count(F, HeisenbergQuotient(n), cfg.p, cfg.precision);
  } else {
    const auto F = parse_laurent_matrix(text, cfg.dim);
    const int d = F.group().dim;
    auto moduli = split_longs(cfg.quotient, 'x');
    if (moduli.size() == 1) moduli.assign(static_cast<std::size_t>(d), moduli[0]);
    if (static_cast<int>(moduli.size()) != d) throw UsageError("quotient rank does not match the dimension");
    const TorusQuotient q(moduli);
    if (cfg.route == "char") {
      const BigInt det = fix_count_char_crt(F, moduli);
      rec = make_fix_count_record(q.group().descriptor(), BigInt(static_cast<unsigned long>(q.index())), det, cfg.p,
                                  cfg.precision);
    } else {
      rec = fix_count(F, q, cfg.p, cfg.precision);
      if (cfg.route != "rho") {
        char_det = fix_count_char_crt(F, moduli);
        if (*char_det != rec.signed_det)
          throw std::logic_error("regular-representation and character determinants differ");
      }
    }
  }
  if (cfg.format == Format::Json) {
    Json j = make_document("fixcount");
    j["p"] = cfg.p;
    j["record"] = to_json(rec);
    if (char_det) j["character_route_det"] = char_det->get_str();
    out << j.dump(2) << '\n';
  } else if (cfg.format == Format::Csv) {
    out << "quotient,index,fix_count,v_p,normalized\n";
    const auto row = record_row(rec);
    for (std::size_t c = 0; c < row.size(); ++c) out << row[c] << (c + 1 < row.size() ? "," : "\n");
  } else {
    std::vector<std::vector<std::string>> rows{{"quotient", "index", "fix_count", "v_p", "normalized"},
                                               record_row(rec)};
    out << format_table(rows);
    out << "det rho = " << rec.signed_det << (char_det ? " (character route agrees)" : "") << '\n';
    out << "log_p |Fix| / index = " << rec.normalized.str() << '\n';
  }
  return 0;
}

int run_entropy(const JobConfig& cfg, std::ostream& out) {
  const std::string text = read_input(cfg);
  ConvergenceOptions copt;
  copt.tail = cfg.tail;
  copt.target = cfg.target;
  ConvergenceReport rep;
  const std::string route = cfg.route.empty() ? "fixcount" : cfg.route;
  if (cfg.group == GroupKind::Heisenberg) {
    if (route != "fixcount") throw UsageError("only the fixcount route exists for the Heisenberg group");
    const auto F = parse_heisenberg_matrix(text);
    const auto fam = cfg.family.empty() ? default_family(cfg.p, 1, F.size(), true) : parse_family(cfg.family, cfg.p, 1);
    std::vector<long> ns;
    for (const auto& m : fam) ns.push_back(m[0]);
    rep = entropy_sequence(F, ns, cfg.p, cfg.precision, copt);
  } else {
    const auto F = parse_laurent_matrix(text, cfg.dim);
    const int d = F.group().dim;
    const auto fam = cfg.family.empty() ? default_family(cfg.p, d, F.size(), false) : parse_family(cfg.family, cfg.p, d);
    if (route == "fixcount") {
      rep = entropy_sequence(F, fam, cfg.p, cfg.precision, copt);
    } else if (route == "snirelman") {
      std::vector<long> ns;
      for (const auto& m : fam) {
        for (long k : m)
          if (k != m[0]) throw UsageError("the Snirelman route needs diagonal quotients");
        ns.push_back(m[0]);
      }
      const auto det = F.size() == 1 ? F(0, 0) : det_laurent_matrix(F);
      rep = snirelman_mahler(det, cfg.p, ns, cfg.precision, copt);
    } else {
      throw UsageError("unknown route '" + route + "'");
    }
  }
  if (cfg.format == Format::Json) {
    Json j = make_document("entropy");
    j["p"] = cfg.p;
    j["precision"] = cfg.precision;
    j["route"] = route;
    j["report"] = to_json(rep);
    out << j.dump(2) << '\n';
    return 0;
  }
  if (cfg.format == Format::Csv) {
    write_csv(out, rep);
  } else {
    std::vector<std::vector<std::string>> rows{
        {"quotient", "index", "fix_count", "v_p", "normalized", "agrees_with_prev"}};
    const auto cons = rep.consecutive_agreement();
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      auto row = record_row(rep.records[i]);
      row.push_back(i == 0 ? "-" : std::to_string(cons[i - 1]));
      rows.push_back(std::move(row));
    }
    out << format_table(rows);
  }
  out << "# stable_digits: " << rep.stable_digits << " (last " << rep.tail << " records)\n";
  out << "# stabilized: " << rep.stabilized_value.str() << '\n';
  out << "# stabilized_digits: " << rep.stabilized_value.digits() << '\n';
  out << "# verdict: " << verdict_name(rep.verdict) << " (target " << rep.target << " digits)\n";
  return 0;
}

int run_mahler(const JobConfig& cfg, std::ostream& out) {
  const auto f = parse_poly(read_input(cfg), 1);
  const auto res = mahler_1d(f, cfg.p, cfg.precision);
  std::string polygon;
  for (const auto& s : res.polygon.segments)
    polygon += (polygon.empty() ? "" : " ") + s.slope.get_str() + "x" + std::to_string(s.length);
  if (cfg.format == Format::Json) {
    Json j = make_document("mahler");
    j["poly"] = to_string(f);
    j["p"] = cfg.p;
    j["value"] = to_json(res.value);
    j["outer_form"] = to_json(res.outer_form);
    j["newton_slopes"] = Json::array();
    for (const auto& s : res.polygon.segments) j["newton_slopes"].push_back({{"slope", s.slope.get_str()}, {"length", s.length}});
    j["inside_roots"] = res.split.s;
    out << j.dump(2) << '\n';
  } else {
    out << format_table({{"poly", to_string(f)},
                         {"p", std::to_string(cfg.p)},
                         {"newton slopes", polygon.empty() ? "(none)" : polygon},
                         {"roots inside", std::to_string(res.split.s)},
                         {"m_p", res.value.str()},
                         {"m_p digits", res.value.digits()},
                         {"outer form", res.outer_form.str()}});
  }
  return 0;
}

int run_detlog(const JobConfig& cfg, std::ostream& out) {
  const std::string text = read_input(cfg);
  PadicScalar value = PadicScalar::zero(cfg.p, cfg.precision);
  std::string method;
  std::string shown;
  if (!cfg.quotient.empty()) {
    if (cfg.group == GroupKind::Heisenberg) {
      const auto F = parse_heisenberg_matrix(text);
      shown = to_string(F);
      value = logdet_finite(reduce_to_quotient(F, HeisenbergQuotient(split_longs(cfg.quotient, ',').at(0))), cfg.p,
                            cfg.precision);
    } else {
      const auto F = parse_laurent_matrix(text, cfg.dim);
      shown = to_string(F);
      auto moduli = split_longs(cfg.quotient, 'x');
      if (moduli.size() == 1) moduli.assign(static_cast<std::size_t>(F.group().dim), moduli[0]);
      value = logdet_finite(reduce_to_quotient(F, TorusQuotient(moduli)), cfg.p, cfg.precision);
    }
    method = "regular representation";
  } else if (cfg.group == GroupKind::Heisenberg) {
    const auto F = parse_heisenberg_matrix(text);
    shown = to_string(F);
    value = tr_log_one_unit(F, cfg.p, cfg.precision);
    method = "trace-log series";
  } else {
    const auto F = parse_laurent_matrix(text, cfg.dim);
    shown = to_string(F);
    value = logdet_unit(F, cfg.p, cfg.precision);
    method = "unit normalization + trace-log series";
  }
  if (cfg.format == Format::Json) {
    Json j = make_document("detlog");
    j["input"] = shown;
    j["p"] = cfg.p;
    j["method"] = method;
    j["value"] = to_json(value);
    out << j.dump(2) << '\n';
  } else {
    out << format_table({{"input", shown},
                         {"p", std::to_string(cfg.p)},
                         {"method", method},
                         {"log_p det", value.str()},
                         {"digits", value.digits()}});
  }
  return 0;
}

int run_selftest_cmd(const JobConfig& cfg, std::ostream& out) {
  const auto results = run_selftest(cfg.seed, cfg.trials);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.failures == 0;
  if (cfg.format == Format::Json) {
    Json j = make_document("selftest");
    j["seed"] = cfg.seed;
    j["passed"] = ok;
    j["properties"] = Json::array();
    for (const auto& r : results)
      j["properties"].push_back(
          {{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"property", "trials", "failures", "result"}};
    for (const auto& r : results)
      rows.push_back({r.name, std::to_string(r.trials), std::to_string(r.failures), r.failures ? "FAIL" : "pass"});
    out << format_table(rows);
    for (const auto& r : results)
      if (r.failures) out << r.name << ": " << r.first_failure << '\n';
    out << (ok ? "all properties passed" : "FAILURES") << " (seed " << cfg.seed << ")\n";
  }
  return ok ? 0 : 1;
}

int dispatch(const JobConfig& cfg, std::ostream& out) {
  if (cfg.command == "unit-check") return run_unit_check(cfg, out);
  if (cfg.command == "fixcount") return run_fixcount(cfg, out);
  if (cfg.command == "entropy") return run_entropy(cfg, out);
  if (cfg.command == "mahler") return run_mahler(cfg, out);
  if (cfg.command == "detlog") return run_detlog(cfg, out);
  return run_selftest_cmd(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic entropy of principal algebraic actions"};
  app.require_subcommand(1);
  JobConfig cfg;

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, GroupKind> groups{{"zd", GroupKind::Zd}, {"heisenberg", GroupKind::Heisenberg}};

  auto add_common = [&](CLI::App* sub, bool needs_poly) {
    sub->add_option("--p", cfg.p, "prime")->check(CLI::PositiveNumber);
    sub->add_option("--prec", cfg.precision, "p-adic precision N")->check(CLI::Range(1, 256));
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    if (!needs_poly) return;
    auto* poly = sub->add_option("--poly", cfg.poly, "polynomial or [[...],[...]] matrix");
    sub->add_option("--poly-file", cfg.poly_file, "file holding the polynomial or matrix")->excludes(poly);
    sub->add_option("--dim", cfg.dim, "rank d of Z^d (default: from the variables used)")->check(CLI::Range(1, 9));
    sub->add_option("--group", cfg.group, "zd or heisenberg")
        ->transform(CLI::CheckedTransformer(groups, CLI::ignore_case));
  };

  auto* unit = app.add_subcommand("unit-check", "decompose f = p^a c t^nu (1 + p g) in c0(Z^d)");
  add_common(unit, true);
  auto* fix = app.add_subcommand("fixcount", "fixed points over one finite quotient");
  add_common(fix, true);
  fix->add_option("--quotient", cfg.quotient, "n, n1xn2x..., or n for heisenberg(n)")->required();
  fix->add_option("--route", cfg.route, "rho, char, or both (default)")->check(CLI::IsMember({"rho", "char", "both"}));
  auto* ent = app.add_subcommand("entropy", "normalized fixed-point logarithms over a quotient family");
  add_common(ent, true);
  ent->add_option("--family", cfg.family, "odd:a..b, range:a..b, coprime:a..b, list:..., heis:...");
  ent->add_option("--route", cfg.route, "fixcount (default) or snirelman")
      ->check(CLI::IsMember({"fixcount", "snirelman"}));
  ent->add_option("--target", cfg.target, "digits required for a converged verdict (default N)");
  ent->add_option("--tail", cfg.tail, "records in the agreement window")->check(CLI::Range(2, 64));
  auto* mah = app.add_subcommand("mahler", "one-variable p-adic Mahler measure");
  add_common(mah, true);
  auto* det = app.add_subcommand("detlog", "log_p of the p-adic Fuglede-Kadison determinant");
  add_common(det, true);
  det->add_option("--quotient", cfg.quotient, "evaluate over a finite quotient instead");
  auto* self = app.add_subcommand("selftest", "run the randomized property suite");
  add_common(self, false);
  self->add_option("--seed", cfg.seed, "seed for the property suite");
  self->add_option("--trials", cfg.trials, "trials per property")->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "entropy" && ent->count("--format") == 0) cfg.format = Format::Csv;

  std::ostringstream out;
  auto report = [&](const std::string& code, const std::string& message) {
    if (cfg.format == Format::Json) {
      Json j = make_document(cfg.command);
      j["error"] = {{"code", code}, {"message", message}};
      std::cout << j.dump(2) << '\n';
    }
    std::cerr << "error: " << message << '\n';
  };
  try {
    if (!is_prime(cfg.p)) throw UsageError(std::to_string(cfg.p) + " is not prime");
    const int status = dispatch(cfg, out);
    std::cout << out.str() << std::flush;
    return status;
  } catch (const Error& e) {
    report(std::string(code_name(e.code())), e.what());
    return is_mathematical_refusal(e.code()) ? 2 : 1;
  } catch (const UsageError& e) {
    report("USAGE", e.what());
    return 1;
  } catch (const std::exception& e) {
    report("INTERNAL", e.what());
    return 1;
  }
}
