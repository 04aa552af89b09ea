#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

#include "odeco/generate.hpp"
#include "odeco/io.hpp"
#include "oracle.hpp"

using namespace odeco;
using io::FileError;

namespace {

std::string message_of(const std::string& text, io::LoadOptions opts = {}) {
  try {
    io::parse_tensor_file(text, opts);
  } catch (const FileError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(TensorFile, RoundTripIsLossless) {
  for (Scenario s : {Scenario::Ordinary, Scenario::Symmetric, Scenario::Alternating})
    for (Field f : {Field::Real, Field::Complex}) {
      SampleSpec spec;
      spec.scenario = s;
      spec.field = f;
      spec.dims = {6, 6, 6};
      spec.k = 2;
      spec.seed = 3;
      const GroundTruth g = sample(spec);
      io::TensorFile file{s, g.tensor, g.decomposition};
      const std::string text = io::serialize(file);
      const io::TensorFile back = io::parse_tensor_file(text);
      EXPECT_EQ(back.scenario, s);
      EXPECT_EQ(back.tensor.field(), f);
      EXPECT_EQ(back.tensor.dims(), g.tensor.dims());
      // Bitwise equality of every double.
      EXPECT_EQ(std::memcmp(back.tensor.entries().data(), g.tensor.entries().data(),
                            g.tensor.size() * sizeof(cplx)),
                0);
      ASSERT_TRUE(back.ground_truth.has_value());
      EXPECT_EQ(back.ground_truth->terms.size(), 2u);
      EXPECT_EQ(io::serialize(back), text);
    }
}

TEST(TensorFile, OmittedEntriesAreZero) {
  const auto f = io::parse_tensor_file(R"({"field":"real","scenario":"ordinary","dims":[2,2],"entries":[[[2,1],1.5,0]]})");
  EXPECT_EQ(f.tensor.entries(), (std::vector<cplx>{0.0, 0.0, 1.5, 0.0}));
}

TEST(TensorFile, IndexOutOfRangeNamesEntry) {
  const std::string msg = message_of(
      R"({"field":"real","scenario":"ordinary","dims":[2,2,2],"entries":[[[1,1,1],1,0],[[3,1,1],1,0]]})");
  EXPECT_TRUE(contains(msg, "/entries/1")) << msg;
  EXPECT_TRUE(contains(msg, "[3,1,1]")) << msg;
}

TEST(TensorFile, ImaginaryPartInRealFile) {
  const std::string msg =
      message_of(R"({"field":"real","scenario":"ordinary","dims":[2],"entries":[[[1],1,0.5]]})");
  EXPECT_TRUE(contains(msg, "imaginary")) << msg;
}

TEST(TensorFile, DuplicateIndexRejected) {
  const std::string msg =
      message_of(R"({"field":"real","scenario":"ordinary","dims":[2],"entries":[[[1],1,0],[[2],1,0],[[1],2,0]]})");
  EXPECT_TRUE(contains(msg, "/entries/2")) << msg;
  EXPECT_TRUE(contains(msg, "/entries/0")) << msg;
}

TEST(TensorFile, SyntaxErrorHasLineAndColumn) {
  const std::string msg = message_of("{\n  \"field\": \"real\",\n  \"dims\": [2,,2]\n}");
  EXPECT_TRUE(contains(msg, "line 3")) << msg;
}

TEST(TensorFile, SchemaErrors) {
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"ordinary","dims":[2]})"), "entries"));
  EXPECT_TRUE(contains(message_of(R"({"field":"quaternion","scenario":"ordinary","dims":[2],"entries":[]})"), "/field"));
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"diagonal","dims":[2],"entries":[]})"), "/scenario"));
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"ordinary","dims":[0],"entries":[]})"), "/dims/0"));
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"ordinary","dims":[2],"entries":[[[1],"x",0]]})"),
                       "/entries/0/1"));
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"ordinary","dims":[2,2],"entries":[[[1],1,0]]})"),
                       "/entries/0"));
  EXPECT_TRUE(contains(message_of("[1,2]"), "object"));
}

TEST(TensorFile, ProjectorCheckAndRaw) {
  const std::string text =
      R"({"field":"real","scenario":"symmetric","dims":[2,2,2],"entries":[[[1,1,2],1,0]]})";
  EXPECT_TRUE(contains(message_of(text), "not symmetric")) << message_of(text);
  EXPECT_EQ(message_of(text, {.raw = true}), "");
  EXPECT_TRUE(contains(message_of(R"({"field":"real","scenario":"alternating","dims":[2,3,2],"entries":[]})"),
                       "equal dimensions"));
}

TEST(TensorFile, MissingFile) {
  EXPECT_THROW(io::read_tensor_file("/nonexistent/odeco.json"), FileError);
}

TEST(Reports, ResidualJsonIsOneBased) {
  ResidualReport r;
  r.identity = "associativity";
  r.worst_tuple = {0, 2, 1};
  const auto j = io::to_json(r);
  EXPECT_EQ(j["worst_tuple"], (io::json{1, 3, 2}));
  EXPECT_EQ(j["mode"], "exhaustive");
}

TEST(StructureConstants, ReadsTableFromFile) {
  const auto dir = std::filesystem::temp_directory_path() / "odeco_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "cross.json").string();
  io::TensorFile f{Scenario::Alternating, wedge({basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)}, Field::Real), {}};
  io::write_tensor_file(path, f);
  const MulTable m = io::read_structure_constants(path);
  EXPECT_TRUE(m.antisymmetric);
  EXPECT_FALSE(m.semilinear);
  EXPECT_EQ(m.constants, cross_product_table(Field::Real).constants);
  std::filesystem::remove_all(dir);
}
