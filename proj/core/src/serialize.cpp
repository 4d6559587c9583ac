#include "abeldense/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

Json strings(const std::vector<SymReal>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

Json strings(const IntegerVector& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

Json strings(const RationalVector& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Number of leading sqrt<p> symbols needed for the primes named in text.
std::size_t sqrt_symbols_needed(std::string_view text) {
  std::size_t need = 1;
  const auto primes_upto = [](unsigned long p) {
    std::size_t k = 0;
    for (unsigned long q = 2; q <= p; ++q)
      if (is_prime(q)) ++k;
    return k;
  };
  for (std::size_t pos = text.find("sqrt"); pos != std::string_view::npos; pos = text.find("sqrt", pos + 4)) {
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(text[pos - 1])) || text[pos - 1] == '_')) continue;
    std::size_t e = pos + 4;
    while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
    if (e == pos + 4 || e - pos > 12) continue;
    if (e < text.size() && (std::isalpha(static_cast<unsigned char>(text[e])) || text[e] == '_')) continue;
    const unsigned long p = std::stoul(std::string(text.substr(pos + 4, e - pos - 4)));
    if (is_prime(p) && p < 100000) need = std::max(need, primes_upto(p));
  }
  return need;
}

struct Entry {
  std::string text;
  std::size_t column;  // 1-based column of the first character
};

std::vector<Entry> split_entries(std::string_view line, std::size_t offset, std::size_t line_no) {
  std::size_t b = 0, e = line.size();
  while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
  if (b < e && line[b] == '(') {
    if (line[e - 1] != ')') throw ParseError("unbalanced parenthesis", line_no, offset + e);
    ++b;
    --e;
  }
  std::vector<Entry> out;
  std::size_t start = b;
  for (std::size_t i = b; i <= e; ++i) {
    if (i == e || line[i] == ',') {
      std::size_t s = start;
      while (s < i && std::isspace(static_cast<unsigned char>(line[s]))) ++s;
      const std::string t = trim(line.substr(start, i - start));
      if (t.empty()) throw ParseError("empty entry", line_no, offset + s + 1);
      out.push_back({t, offset + s + 1});
      start = i + 1;
    }
  }
  return out;
}

SymReal parse_entry(const Entry& e, const BasisPtr& basis, std::size_t line_no) {
  try {
    return parse_symreal(e.text, basis);
  } catch (const ParseError& err) {
    throw ParseError(err.detail(), line_no, e.column + (err.column() ? err.column() - 1 : 0));
  } catch (const InputError& err) {
    throw ParseError(err.what(), line_no, e.column);
  }
}

std::size_t parse_count(const std::string& word, std::size_t line_no, std::size_t column) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a nonnegative integer, got '" + word + "'", line_no, column);
  return std::stoul(word);
}

// Splits "keyword rest" on the first run of spaces.
std::pair<std::string, std::size_t> first_word(std::string_view line) {
  std::size_t b = 0;
  while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  std::size_t e = b;
  while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
  return {std::string(line.substr(b, e - b)), e};
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > b) out.emplace_back(std::string(line.substr(b, i - b)), b + 1);
  }
  return out;
}

std::string basis_meaning(const std::string& name, const MatrixTuple& t) {
  for (const auto& [fresh, meaning] : t.fresh_symbols)
    if (fresh == name) return meaning;
  if (name.rfind("sqrt", 0) == 0) return "square root of " + name.substr(4);
  return "declared";
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 0, 0);
  return doc.at(key);
}

PolyMatrix parse_matrix(const Json& rows, std::size_t n, bool complex, const BasisPtr& basis) {
  const std::size_t dim = complex ? 2 * n : n;
  if (!rows.is_array() || rows.size() != n) throw ParseError("generator must have " + std::to_string(n) + " rows", 0, 0);
  PolyMatrix m(dim, dim, SymPoly(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != n) throw ParseError("generator row of wrong length", 0, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string text = row[j].get<std::string>();
      if (complex) {
        const ComplexPoly z = parse_complex(text, basis);
        m(2 * i, 2 * j) = z.re;
        m(2 * i, 2 * j + 1) = -z.im;
        m(2 * i + 1, 2 * j) = z.im;
        m(2 * i + 1, 2 * j + 1) = z.re;
      } else {
        m(i, j) = parse_sympoly(text, basis);
      }
    }
  }
  return m;
}

}  // namespace

Json to_json(const DensityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  if (!v.failed_clause.empty()) j["failed_clause"] = v.failed_clause;
  const Certificate& c = v.certificate;
  if (c.kind != CertificateKind::none) {
    Json cert;
    cert["kind"] = to_string(c.kind);
    if (c.kind == CertificateKind::positive_combination) {
      cert["vector"] = strings(c.lambda);
      cert["basis_indices"] = c.basis_indices;
    } else {
      cert["vector"] = strings(c.form);
    }
    if (!c.alpha.empty()) cert["alpha"] = strings(c.alpha);
    if (c.kind == CertificateKind::integer_form) cert["lattice_rank"] = c.lattice_rank;
    j["certificate"] = cert;
  }
  if (!v.search_bound.empty()) j["search_bound"] = v.search_bound;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json to_json(const LineClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.generator) j["generator"] = to_string(*c.generator);
  if (c.kind == LineKind::one_sided_discrete) j["sign"] = sign_name(c.sign);
  return j;
}

Json to_json(const GroupCount& g) {
  Json j;
  j["m"] = g.m;
  j["dim_v"] = g.dim_v;
  j["dim_t"] = g.dim_t;
  j["torus"] = g.torus;
  j["h"] = g.h;
  return j;
}

Json to_json(const CoverageReport& r) {
  Json j;
  j["box"] = {{"lo", r.box.lo}, {"hi", r.box.hi}};
  j["grid"] = r.grid;
  j["thresholds"] = {{"dense", r.thresholds.dense_threshold}, {"complement", r.thresholds.complement_threshold}};
  j["points_total"] = r.points_total;
  j["points_in_box"] = r.points_in_box;
  j["hit_fraction"] = r.hit_fraction;
  j["hit_fraction_positive_halfspace"] = r.hit_fraction_positive_halfspace;
  j["hit_fraction_negative_halfspace"] = r.hit_fraction_negative_halfspace;
  j["best_subbox_fraction"] = r.best_subbox_fraction;
  j["log_rescaled_fraction"] = r.log_rescaled_fraction;
  j["verdict_hint"] = to_string(r.hint);
  return j;
}

Json to_json(const KroneckerResult& r) {
  Json j;
  j["m"] = to_string(r.m);
  j["distances"] = r.distances;
  j["error"] = r.error;
  j["strategy"] = r.strategy;
  return j;
}

Json tuple_document(const MatrixTuple& t) {
  const bool complex = t.field == Field::complex;
  Json doc;
  doc["field"] = complex ? "complex" : "real";
  doc["size"] = t.size;
  doc["class"] = to_string(t.tuple_class);

  Json gens = Json::array();
  for (const auto& m : t.matrices) {
    Json rows = Json::array();
    if (complex) {
      const auto cv = complex_view(m);
      for (std::size_t i = 0; i < cv.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < cv.cols(); ++j) row.push_back(to_string(cv(i, j)));
        rows.push_back(row);
      }
    } else {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
      }
    }
    gens.push_back(rows);
  }
  doc["generators"] = gens;

  Json bp = Json::array();
  if (complex)
    for (const auto& z : complex_view(t.base_point)) bp.push_back(to_string(z));
  else
    for (const auto& x : t.base_point) bp.push_back(to_string(x));
  doc["base_point"] = bp;

  Json lie;
  lie["n"] = t.lie.spec.n;
  lie["t"] = t.lie.spec.t;
  Json gamma = Json::array();
  for (const auto& g : t.lie.spec.gamma_basis) gamma.push_back(strings(g));
  lie["gamma_basis"] = gamma;
  Json vecs = Json::array();
  for (const auto& v : t.lie.vectors) vecs.push_back(strings(v));
  lie["vectors"] = vecs;
  doc["lie_data"] = lie;

  Json mg = to_json(m_of_G(group_class_of(t.tuple_class), t.size));
  mg["group_class"] = to_string(group_class_of(t.tuple_class));
  doc["m_of_G"] = mg;

  Json syms = Json::array();
  for (std::size_t i = 1; i < t.basis->size(); ++i) {
    const Symbol& s = t.basis->symbol(i);
    syms.push_back({{"name", s.name}, {"value", s.value}, {"meaning", basis_meaning(s.name, t)}});
  }
  doc["provenance"] = {{"symbols", syms}, {"declared_independences", t.notes}};
  return doc;
}

MatrixTuple parse_tuple_document(const Json& doc) {
  try {
    MatrixTuple t;
    const std::string cls = require(doc, "class").get<std::string>();
    const auto c = parse_tuple_class(cls);
    if (!c) throw ParseError("unknown class '" + cls + "'", 0, 0);
    t.tuple_class = *c;
    t.field = field_of(*c);
    const std::string field = require(doc, "field").get<std::string>();
    if (field != (t.field == Field::complex ? "complex" : "real"))
      throw ParseError("field '" + field + "' does not match class " + cls, 0, 0);
    t.size = require(doc, "size").get<std::size_t>();
    const bool complex = t.field == Field::complex;

    std::vector<Symbol> symbols;
    const Json& prov = require(doc, "provenance");
    for (const auto& s : require(prov, "symbols")) {
      const std::string name = require(s, "name").get<std::string>();
      const std::string meaning = s.contains("meaning") ? s.at("meaning").get<std::string>() : "";
      symbols.push_back({name, require(s, "value").get<double>()});
      if (name.rfind("exp", 0) == 0) t.fresh_symbols.emplace_back(name, meaning);
    }
    t.basis = make_basis(symbols);
    if (prov.contains("declared_independences"))
      for (const auto& n : prov.at("declared_independences")) t.notes.push_back(n.get<std::string>());

    for (const auto& g : require(doc, "generators")) t.matrices.push_back(parse_matrix(g, t.size, complex, t.basis));

    for (const auto& x : require(doc, "base_point")) {
      const std::string text = x.get<std::string>();
      if (complex) {
        const ComplexPoly z = parse_complex(text, t.basis);
        t.base_point.push_back(z.re);
        t.base_point.push_back(z.im);
      } else {
        t.base_point.push_back(parse_sympoly(text, t.basis));
      }
    }
    if (t.base_point.size() != (complex ? 2 : 1) * t.size) throw ParseError("base point of wrong length", 0, 0);

    const Json& lie = require(doc, "lie_data");
    std::vector<RationalVector> gamma;
    for (const auto& row : require(lie, "gamma_basis")) {
      RationalVector v;
      for (const auto& e : row) v.push_back(parse_rational(e.get<std::string>()));
      gamma.push_back(v);
    }
    t.lie.spec = connected_spec(require(lie, "n").get<std::size_t>(), require(lie, "t").get<std::size_t>(), gamma);
    for (const auto& row : require(lie, "vectors")) {
      SymVector v;
      for (const auto& e : row) v.push_back(parse_symreal(e.get<std::string>(), t.basis));
      t.lie.vectors.push_back(v);
    }
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed tuple document: ") + e.what(), 0, 0);
  }
}

std::vector<Symbol> parse_symbol_declarations(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("expected name=value", 0, start + 1);
      const std::string name = trim(std::string_view(item).substr(0, eq));
      const std::string value = trim(std::string_view(item).substr(eq + 1));
      double v = 0;
      try {
        std::size_t used = 0;
        v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("bad value for symbol '" + name + "'", 0, start + eq + 2);
      }
      out.push_back({name, v});
    }
    start = end + 1;
  }
  return out;
}

GeneratorFile parse_generator_file(std::string_view text, const std::vector<Symbol>& extra) {
  std::vector<std::string_view> lines;
  for (std::size_t s = 0; s <= text.size();) {
    std::size_t e = text.find('\n', s);
    if (e == std::string_view::npos) e = text.size();
    std::string_view line = text.substr(s, e - s);
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    s = e + 1;
  }

  // Pass 1: symbol declarations and the sqrt symbols in use.
  std::vector<Symbol> declared = extra;
  std::string body;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto [kw, end] = first_word(lines[i]);
    if (kw == "symbol") {
      const auto w = words(lines[i]);
      if (w.size() != 3) throw ParseError("expected: symbol <name> <value>", i + 1, 1);
      double v = 0;
      try {
        std::size_t used = 0;
        v = std::stod(w[2].first, &used);
        if (used != w[2].first.size()) throw std::invalid_argument(w[2].first);
      } catch (const std::exception&) {
        throw ParseError("bad symbol value '" + w[2].first + "'", i + 1, w[2].second);
      }
      declared.push_back({w[1].first, v});
    } else {
      body.append(lines[i]);
      body.push_back('\n');
    }
  }
  GeneratorFile f;
  try {
    f.basis = extend_basis(sqrt_primes(sqrt_symbols_needed(body)), declared);
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0, 0);
  }

  // Pass 2.
  std::optional<std::size_t> dim;
  std::size_t t = 0;
  std::vector<RationalVector> gamma;
  auto check_dim = [&](std::size_t got, std::size_t line_no) {
    if (!dim) dim = got;
    if (*dim != got)
      throw ParseError("expected " + std::to_string(*dim) + " entries, got " + std::to_string(got), line_no, 1);
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    if (trim(line).empty()) continue;
    const auto [kw, end] = first_word(line);
    if (kw == "symbol") continue;
    if (kw == "dim") {
      const auto w = words(line);
      if (w.size() != 2) throw ParseError("expected: dim <n>", line_no, 1);
      check_dim(parse_count(w[1].first, line_no, w[1].second), line_no);
    } else if (kw == "group") {
      const auto w = words(line);
      if (w.size() != 3) throw ParseError("expected: group <n> <t>", line_no, 1);
      if (f.group) throw ParseError("duplicate group line", line_no, 1);
      f.group = true;
      check_dim(parse_count(w[1].first, line_no, w[1].second), line_no);
      t = parse_count(w[2].first, line_no, w[2].second);
    } else if (kw == "gamma") {
      if (!f.group) throw ParseError("gamma before group line", line_no, 1);
      const auto entries = split_entries(line.substr(end), end, line_no);
      check_dim(entries.size(), line_no);
      RationalVector v;
      for (const auto& e : entries) {
        const SymReal x = parse_entry(e, f.basis, line_no);
        if (!x.is_rational()) throw ParseError("lattice vectors must be rational", line_no, e.column);
        v.push_back(x.rational_part());
      }
      gamma.push_back(v);
    } else {
      const auto entries = split_entries(line, 0, line_no);
      check_dim(entries.size(), line_no);
      SymVector v;
      for (const auto& e : entries) v.push_back(parse_entry(e, f.basis, line_no));
      f.vectors.push_back(v);
    }
  }
  if (!dim) throw ParseError("no generators", lines.size(), 1);
  f.n = *dim;
  if (f.group) {
    if (!gamma.empty() && gamma.size() != t)
      throw ParseError("expected " + std::to_string(t) + " gamma lines, got " + std::to_string(gamma.size()), lines.size(), 1);
    try {
      f.spec = connected_spec(f.n, t, gamma);
    } catch (const InputError& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }
  return f;
}

}  // namespace abeldense
