#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abeldense/construct.hpp"
#include "abeldense/density.hpp"
#include "abeldense/diophantine.hpp"
#include "abeldense/orbit.hpp"

namespace abeldense {

using Json = nlohmann::ordered_json;

Json to_json(const DensityVerdict& v);
Json to_json(const LineClass& c);
Json to_json(const GroupCount& g);
Json to_json(const CoverageReport& r);
Json to_json(const KroneckerResult& r);

// {field, size, class, generators, base_point, lie_data, m_of_G, provenance}.
// Complex classes print n x n complex entries "re + im*i".
Json tuple_document(const MatrixTuple& t);
// Inverse of tuple_document; extra keys are ignored. Throws ParseError.
MatrixTuple parse_tuple_document(const Json& doc);

// Plain-text generator file:
//   # comment
//   symbol <name> <value>      extra basis symbol (after the sqrt<p> symbols)
//   group <n> <t>              switches to the exp criterion; W follows
//   gamma <e_1>, ..., <e_n>    one lattice basis vector (repeatable)
//   <e_1>, ..., <e_n>          one generator, optionally in parentheses
// Entries use the SymReal syntax. sqrt<p> symbols for the primes p used in the
// file are declared implicitly, in prime order.
struct GeneratorFile {
  BasisPtr basis;
  std::size_t n = 0;
  bool group = false;
  AbelianGroupSpec spec;  // group files only
  GeneratorSet vectors;
};

// Throws ParseError with line and column.
GeneratorFile parse_generator_file(std::string_view text, const std::vector<Symbol>& extra = {});
// "name=value,name=value" as used by --basis.
std::vector<Symbol> parse_symbol_declarations(std::string_view text);

}  // namespace abeldense
