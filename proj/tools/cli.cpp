#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "abeldense/construct.hpp"
#include "abeldense/density.hpp"
#include "abeldense/diophantine.hpp"
#include "abeldense/error.hpp"
#include "abeldense/orbit.hpp"
#include "abeldense/serialize.hpp"
#include "abeldense/tables.hpp"

namespace abeldense::cli {

namespace {

struct Session {
  std::string format = "human";
  std::string basis;
  std::uint64_t seed = 0;  // no sampled choices yet; accepted for scripting
  double tol_sign = kDefaultDeadZone;
  double cov_threshold = 0.98;
  std::size_t budget = 0;  // 0: pick L so the orbit has about 1e5 points

  bool structured() const { return format == "structured"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw NoInput("cannot open " + path);
  ss << f.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

std::string join(const std::vector<std::string>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s + ")";
}

void print_verdict(std::ostream& out, const DensityVerdict& v, bool verified) {
  out << "verdict: " << to_string(v.verdict) << '\n';
  if (!v.failed_clause.empty()) out << "failed clause: " << v.failed_clause << '\n';
  const Certificate& c = v.certificate;
  if (c.kind == CertificateKind::positive_combination) {
    std::vector<std::string> lam;
    for (const auto& x : c.lambda) lam.push_back(to_string(x));
    out << "certificate: positive_combination lambda = " << join(lam) << '\n';
    if (!c.alpha.empty()) {
      std::vector<std::string> a;
      for (const auto& x : c.alpha) a.push_back(to_string(x));
      out << "alpha: " << join(a) << '\n';
    }
  } else if (c.kind != CertificateKind::none) {
    std::vector<std::string> l;
    for (const auto& x : c.form) l.push_back(to_string(x));
    out << "certificate: " << to_string(c.kind) << " l = " << join(l) << '\n';
  }
  if (!v.search_bound.empty()) out << "search bound: " << v.search_bound << '\n';
  if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
  out << "certificate verified: " << (verified ? "yes" : "no") << '\n';
}

int verdict_exit(const DensityVerdict& v) {
  switch (v.verdict) {
    case Verdict::dense: return Exit::ok;
    case Verdict::not_dense: return Exit::not_dense;
    case Verdict::inconclusive: return Exit::inconclusive;
  }
  return Exit::internal;
}

int cmd_check(const Session& s, const std::string& path, std::istream& in, std::ostream& out) {
  const std::string text = read_input(path, in);
  DensityVerdict v;
  bool verified = false;
  std::string input_kind;
  if (looks_like_json(text)) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.what(), 0, e.byte);
    }
    const MatrixTuple t = parse_tuple_document(doc);
    v = check_dense_group_exp(t.lie.spec, t.lie.vectors);
    verified = verify_group_certificate(t.lie.spec, t.lie.vectors, v);
    input_kind = "tuple";
  } else {
    const GeneratorFile f = parse_generator_file(text, parse_symbol_declarations(s.basis));
    if (f.group) {
      v = check_dense_group_exp(f.spec, f.vectors);
      verified = verify_group_certificate(f.spec, f.vectors, v);
      input_kind = "group";
    } else {
      v = check_dense_rn(f.vectors, f.n);
      verified = verify_certificate(f.vectors, f.n, v);
      input_kind = "generators";
    }
  }
  if (s.structured()) {
    Json j;
    j["command"] = "check";
    j["input"] = input_kind;
    j["result"] = to_json(v);
    j["certificate_verified"] = verified;
    out << j.dump() << '\n';
  } else {
    print_verdict(out, v, verified);
  }
  if (!verified) return Exit::internal;
  return verdict_exit(v);
}

int cmd_construct(const Session& s, const std::string& cls, std::size_t n, std::ostream& out, std::ostream& err) {
  const auto c = parse_tuple_class(cls);
  if (!c) throw UsageError("unknown class '" + cls + "'");
  MatrixTuple t;
  try {
    t = make_hypercyclic_tuple(*c, n);
  } catch (const NonConstructive& e) {
    if (s.structured()) {
      Json j;
      j["command"] = "construct";
      j["class"] = to_string(*c);
      j["size"] = n;
      j["status"] = "NON-CONSTRUCTIVE";
      j["reason"] = e.what();
      out << j.dump() << '\n';
    } else {
      out << "NON-CONSTRUCTIVE: " << to_string(*c) << " n=" << n << ": " << e.what() << '\n';
    }
    return Exit::non_constructive;
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }

  const DensityVerdict v = check_dense_group_exp(t.lie.spec, t.lie.vectors);
  const BasePointCheck bp = check_base_point(t);
  bool commuting = true, invertible = true;
  for (std::size_t i = 0; i < t.matrices.size(); ++i) {
    const auto inv = is_invertible(t.matrices[i]);
    if (!inv || !*inv) invertible = false;
    for (std::size_t j = i + 1; j < t.matrices.size(); ++j)
      if (!commutes_exactly(t.matrices[i], t.matrices[j])) commuting = false;
  }
  Json doc = tuple_document(t);
  Json check;
  check["density"] = to_json(v);
  check["base_point"] = {{"ok", bp.ok}, {"reason", bp.reason}};
  check["commuting"] = commuting;
  check["invertible"] = invertible;
  doc["self_check"] = check;
  out << (s.structured() ? doc.dump() : doc.dump(2)) << '\n';
  const bool pass = v.verdict == Verdict::dense && bp.ok && commuting && invertible;
  if (!s.structured())
    err << to_string(*c) << " n=" << n << ": " << t.matrices.size() << " generators, self-check "
        << (pass ? "passed" : "FAILED") << " (" << to_string(v.verdict) << ")\n";
  return pass ? Exit::ok : Exit::internal;
}

std::size_t default_budget(std::size_t k) {
  if (k == 0) return 0;
  std::size_t L = 0;
  while (orbit_size(k, L) < 100000 && L < 1000000) ++L;
  return L;
}

int cmd_orbit(const Session& s, const std::string& path, std::size_t grid, double box_radius, const std::string& dump,
              std::istream& in, std::ostream& out) {
  const std::string text = read_input(path, in);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 0, e.byte);
  }
  const MatrixTuple t = parse_tuple_document(doc);
  const std::size_t L = s.budget ? s.budget : default_budget(t.matrices.size());
  const OrbitCloud cloud = enumerate_orbit(t, L);
  if (!(box_radius > 0)) throw UsageError("box radius must be positive");
  if (grid < 2) throw UsageError("grid must be at least 2");
  CoverageOptions opts;
  opts.dense_threshold = s.cov_threshold;
  const CoverageReport rep = coverage(cloud, Box::cube(cloud.dimension, box_radius), grid, opts);
  if (!dump.empty()) {
    std::ofstream f(dump);
    if (!f) throw NoInput("cannot write " + dump);
    write_dump(f, cloud);
  }
  if (s.structured()) {
    Json j;
    j["command"] = "orbit";
    j["class"] = to_string(t.tuple_class);
    j["n"] = cloud.dimension;
    j["k"] = cloud.generators;
    j["L"] = cloud.budget;
    j["overflow"] = cloud.overflow_count;
    j["underflow"] = cloud.underflow_count;
    j["coverage"] = to_json(rep);
    out << j.dump() << '\n';
  } else {
    out << "class: " << to_string(t.tuple_class) << " (real dimension " << cloud.dimension << ")\n"
        << "generators: " << cloud.generators << ", budget L=" << cloud.budget << ", points: " << rep.points_total
        << " (" << rep.points_in_box << " in box, " << cloud.overflow_count << " overflow, " << cloud.underflow_count
        << " underflow)\n"
        << "grid: " << grid << " per axis on [-" << box_radius << ", " << box_radius << "]^" << cloud.dimension << '\n'
        << "hit fraction: " << rep.hit_fraction << '\n'
        << "half spaces (x_n > 0 / x_n < 0): " << rep.hit_fraction_positive_halfspace << " / "
        << rep.hit_fraction_negative_halfspace << '\n'
        << "best half-scale sub-box: " << rep.best_subbox_fraction << '\n'
        << "log-rescaled fraction: " << rep.log_rescaled_fraction << '\n'
        << "thresholds: dense " << rep.thresholds.dense_threshold << ", complement "
        << rep.thresholds.complement_threshold << '\n'
        << "hint: " << to_string(rep.hint) << '\n';
  }
  return Exit::ok;
}

int cmd_table(const Session& s, int which, std::size_t nmin, std::size_t nmax, std::ostream& out) {
  if (which < 1 || which > 3) throw UsageError("table must be 1, 2 or 3");
  if (nmin < 1 || nmax < nmin) throw UsageError("need 1 <= nmin <= nmax");
  const auto cells = compute_table(which, nmin, nmax);
  const auto rows = table_rows(which);
  const std::size_t width = nmax - nmin + 1;
  if (s.structured()) {
    Json j;
    j["command"] = "table";
    j["table"] = which;
    Json jr = Json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Json row;
      row["label"] = rows[r].label;
      row["group_class"] = to_string(rows[r].group_class);
      Json vals = Json::array();
      for (std::size_t c = 0; c < width; ++c) {
        const auto& cell = cells[r * width + c];
        vals.push_back({{"n", cell.n}, {"m", cell.value ? Json(*cell.value) : Json(nullptr)}});
      }
      row["values"] = vals;
      if (which == 3) {
        const std::size_t probe = rows[r].group_class == GroupClass::gl_real_even ? 2 : 3;
        const GroupCount g = m_of_G(rows[r].group_class, probe);
        row["torus"] = g.torus;
        row["h"] = g.h;
      }
      jr.push_back(row);
    }
    j["rows"] = jr;
    out << j.dump() << '\n';
    return Exit::ok;
  }
  std::size_t label_w = 5;
  for (const auto& r : rows) label_w = std::max(label_w, r.label.size());
  out << std::left << std::setw(static_cast<int>(label_w)) << "n" << std::right;
  for (std::size_t n = nmin; n <= nmax; ++n) out << std::setw(5) << n;
  if (which == 3) out << "   T / H";
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << std::left << std::setw(static_cast<int>(label_w)) << rows[r].label << std::right;
    for (std::size_t c = 0; c < width; ++c) {
      const auto& cell = cells[r * width + c];
      out << std::setw(5) << (cell.value ? std::to_string(*cell.value) : "-");
    }
    if (which == 3) {
      const std::size_t probe = rows[r].group_class == GroupClass::gl_real_even ? 2 : 3;
      const GroupCount g = m_of_G(rows[r].group_class, probe);
      out << "   " << g.torus << " / " << g.h;
    }
    out << '\n';
  }
  return Exit::ok;
}

Rational parse_real(const std::string& text, const BasisPtr& basis) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    const SymPoly p = parse_sympoly(text, basis);
    if (auto q = p.constant_value()) return *q;
    return exact_rational(sym_eval(p));
  }
}

RationalVector parse_list(const std::string& text, const BasisPtr& basis) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    out.push_back(parse_real(text.substr(start, end == std::string::npos ? std::string::npos : end - start), basis));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

int cmd_kron(const Session& s, const std::string& r_text, const std::string& y_text, const std::string& eps_text,
             std::uint64_t brute_limit, std::ostream& out) {
  const BasisPtr basis = extend_basis(sqrt_primes(12), parse_symbol_declarations(s.basis));
  const RationalVector r = parse_list(r_text, basis);
  const RationalVector y = parse_list(y_text, basis);
  const Rational eps = parse_real(eps_text, basis);
  if (r.size() != y.size()) throw UsageError("r and y must have the same length");
  if (!(eps > 0 && eps < Rational(1, 2))) throw UsageError("eps must lie in (0, 1/2)");
  KroneckerOptions opts;
  opts.brute_force_limit = brute_limit;
  const KroneckerResult res = kronecker_approximate(r, y, eps, opts);
  if (s.structured()) {
    Json j;
    j["command"] = "kron";
    j["result"] = to_json(res);
    out << j.dump() << '\n';
  } else {
    out << "m: " << to_string(res.m) << '\n' << "distances:";
    const auto old = out.precision(10);
    for (double d : res.distances) out << ' ' << d;
    out << '\n' << "error: " << res.error << '\n';
    out.precision(old);
    out << "strategy: " << res.strategy << '\n';
  }
  return Exit::ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"abeldense"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Density of abelian semigroups and hypercyclic matrix tuples"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--basis", s.basis, "Extra symbols, name=value,...");
  app.add_option("--seed", s.seed, "Seed for sampled choices");
  app.add_option("--tol-sign", s.tol_sign, "Sign dead zone")->check(CLI::NonNegativeNumber);
  app.add_option("--cov-threshold", s.cov_threshold, "Coverage threshold for LooksDense")->check(CLI::Range(0.0, 1.0));
  app.add_option("--budget", s.budget, "Orbit exponent budget L");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Decide density of a generator file or tuple document");
  check->add_option("file", check_path, "Input file, - for stdin")->required();

  std::string cls;
  std::size_t size = 0;
  auto* construct = app.add_subcommand("construct", "Build a minimal hypercyclic tuple");
  construct->add_option("class", cls, "Tuple or group class")->required();
  construct->add_option("n", size, "Matrix size")->required();

  std::string orbit_path, dump;
  std::size_t grid = 10;
  double box = 1.0;
  auto* orbit = app.add_subcommand("orbit", "Simulate an orbit and report coverage");
  orbit->add_option("file", orbit_path, "Tuple document, - for stdin")->required();
  orbit->add_option("--grid", grid, "Grid cells per axis");
  orbit->add_option("--box", box, "Half width of the reference box");
  orbit->add_option("--dump", dump, "Write orbit points to this path");

  int which = 0;
  std::size_t nmin = 1, nmax = 10;
  auto* table = app.add_subcommand("table", "Minimal generator counts");
  table->add_option("which", which, "1, 2 or 3")->required();
  table->add_option("--nmin", nmin, "Smallest n");
  table->add_option("--nmax", nmax, "Largest n");

  std::string kr, ky, keps;
  std::uint64_t brute = 1000000;
  auto* kron = app.add_subcommand("kron", "Kronecker approximation m r = y mod 1");
  kron->add_option("r", kr, "Comma-separated reals")->required();
  kron->add_option("y", ky, "Comma-separated targets")->required();
  kron->add_option("eps", keps, "Tolerance in (0, 1/2)")->required();
  kron->add_option("--brute-limit", brute, "Largest m scanned directly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    DeadZoneScope dz(s.tol_sign);
    if (*check) return cmd_check(s, check_path, in, out);
    if (*construct) return cmd_construct(s, cls, size, out, err);
    if (*orbit) return cmd_orbit(s, orbit_path, grid, box, dump, in, out);
    if (*table) return cmd_table(s, which, nmin, nmax, out);
    if (*kron) return cmd_kron(s, kr, ky, keps, brute, out);
    return Exit::usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const NoInput& e) {
    err << "error: " << e.what() << '\n';
    return Exit::no_input;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return Exit::data_error;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << " (bound " << e.bound() << ")\n";
    return Exit::not_found;
  } catch (const AmbiguousSign& e) {
    err << "ambiguous sign: " << e.what() << '\n';
    return Exit::ambiguous_sign;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return Exit::data_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Exit::internal;
  }
}

}  // namespace abeldense::cli
