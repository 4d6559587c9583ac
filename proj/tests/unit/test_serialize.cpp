#include <gtest/gtest.h>

#include "abeldense/error.hpp"
#include "abeldense/serialize.hpp"

using namespace abeldense;

TEST(TupleDocument, RoundTripsEveryClass) {
  for (TupleClass c : all_tuple_classes())
    for (std::size_t n = 2; n <= 4; ++n) {
      MatrixTuple t;
      try {
        t = make_hypercyclic_tuple(c, n);
      } catch (const InputError&) {
        continue;  // parity mismatch
      }
      const Json doc = tuple_document(t);
      const MatrixTuple back = parse_tuple_document(Json::parse(doc.dump()));
      EXPECT_EQ(back.tuple_class, t.tuple_class);
      EXPECT_EQ(back.size, t.size);
      ASSERT_EQ(back.matrices.size(), t.matrices.size());
      for (std::size_t i = 0; i < t.matrices.size(); ++i) EXPECT_EQ(back.matrices[i], t.matrices[i]);
      EXPECT_EQ(back.base_point, t.base_point);
      EXPECT_EQ(tuple_document(back).dump(), doc.dump());
    }
}

TEST(TupleDocument, KeysAndProvenance) {
  const Json doc = tuple_document(make_hypercyclic_tuple(TupleClass::rotation_scaling_r, 2));
  for (const char* key : {"field", "size", "class", "generators", "base_point", "lie_data", "m_of_G", "provenance"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["class"], "RotationScalingR");
  EXPECT_EQ(doc["generators"].size(), 2u);
  EXPECT_FALSE(doc["provenance"]["symbols"].empty());
  for (const auto& s : doc["provenance"]["symbols"]) EXPECT_TRUE(s.contains("meaning"));
}

TEST(TupleDocument, MalformedInputIsParseError) {
  EXPECT_THROW(parse_tuple_document(Json::parse(R"({"class":"Nope"})")), ParseError);
  EXPECT_THROW(parse_tuple_document(Json::parse(R"({"size":2})")), ParseError);
  Json doc = tuple_document(make_hypercyclic_tuple(TupleClass::diagonal_r, 2));
  doc["generators"][0] = "oops";
  EXPECT_THROW(parse_tuple_document(doc), ParseError);
}

TEST(GeneratorFile, PlainVectors) {
  const GeneratorFile f = parse_generator_file("# three vectors\n1, 0\n(0, 1)\n-sqrt3, -sqrt5\n");
  EXPECT_EQ(f.n, 2u);
  EXPECT_FALSE(f.group);
  ASSERT_EQ(f.vectors.size(), 3u);
  EXPECT_EQ(f.basis->size(), 4u);  // 1, sqrt2, sqrt3, sqrt5
  EXPECT_EQ(check_dense_rn(f.vectors, f.n).verdict, Verdict::dense);
}

TEST(GeneratorFile, SymbolsAndGroups) {
  const GeneratorFile f = parse_generator_file("symbol pi 3.141592653589793\ngroup 1 1\npi\n");
  EXPECT_TRUE(f.group);
  EXPECT_EQ(f.spec.n, 1u);
  EXPECT_EQ(f.vectors.size(), 1u);
  EXPECT_EQ(check_dense_group_exp(f.spec, f.vectors).verdict, Verdict::dense);
}

TEST(GeneratorFile, ErrorsCarryPosition) {
  try {
    parse_generator_file("1, 0\n0, 1 +\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW(parse_generator_file("1, 0\n1\n"), ParseError);
  EXPECT_THROW(parse_generator_file("dim x\n"), ParseError);
  EXPECT_THROW(parse_generator_file("1, foo\n"), ParseError);
}

TEST(SymbolDeclarations, Parse) {
  const auto s = parse_symbol_declarations("a=1.5,b=2.25");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].name, "a");
  EXPECT_DOUBLE_EQ(s[1].value, 2.25);
  EXPECT_THROW(parse_symbol_declarations("a"), ParseError);
}

TEST(VerdictJson, NotDenseCertificate) {
  const GeneratorFile f = parse_generator_file("1, 0\n0, 1\n-1/2, -1/2\n");
  const Json j = to_json(check_dense_rn(f.vectors, f.n));
  EXPECT_EQ(j["verdict"], "NotDense");
  EXPECT_EQ(j["certificate"]["kind"], "integer_form");
  EXPECT_EQ(j["certificate"]["vector"], Json::parse(R"(["1","1"])"));
}

TEST(KroneckerJson, Fields) {
  KroneckerResult r;
  r.m = 35;
  r.distances = {0.001};
  r.error = 0.001;
  r.strategy = "brute_force";
  const Json j = to_json(r);
  EXPECT_EQ(j["m"], "35");
  EXPECT_EQ(j["strategy"], "brute_force");
}
