#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "holey/certificate.hpp"
#include "holey/pipeline.hpp"
#include "support/mutations.hpp"

using namespace holey;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "holey_tests";
  fs::create_directories(dir);
  return dir / name;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string parse_message(const std::string& text) {
  try {
    from_json(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("verify accepts a small hand-made decomposition") {
  // K_5 into two 5-cycles
  const Certificate c = make_certificate(5, 0, 5, {{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}});
  CHECK(verify(c).ok());
  // K_7 - K_3 into 3-cycles: 21 - 3 = 18 edges
  const Certificate d = construct(3, 3, 7);
  CHECK(verify(d).ok());
  CHECK(d.cycles.size() == 6);
}

TEST_CASE("verify reports each category") {
  const Certificate good = construct(9, 5, 11);
  Certificate c = good;
  c.cycles.pop_back();
  VerificationReport r = verify(c);
  CHECK(r.has(Violation::UncoveredEdge));
  CHECK(r.has(Violation::WrongCycleCount));

  c = good;
  c.cycles.push_back(c.cycles.front());
  CHECK(verify(c).has(Violation::EdgeCoveredTwice));

  c = good;
  c.cycles[0][0] = 11;
  CHECK(verify(c).has(Violation::BadVertex));

  c = good;
  c.cycles[0][1] = c.cycles[0][3];
  CHECK(verify(c).has(Violation::RepeatedVertex));

  c = good;
  c.hole = {0, 1, 2, 3};
  CHECK(verify(c).has(Violation::BadHeader));

  c = good;
  c.m = 2;
  CHECK(verify(c).has(Violation::BadHeader));
}

TEST_CASE("json round trip is lossless and byte stable") {
  const Certificate c = construct(9, 9, 19);
  const std::string text = to_json(c);
  CHECK(from_json(text) == c);
  Certificate shuffled = c;
  std::reverse(shuffled.cycles.begin(), shuffled.cycles.end());
  for (Cycle& x : shuffled.cycles) std::reverse(x.begin(), x.end());
  CHECK(to_json(shuffled) == text);

  const fs::path p = scratch("roundtrip.json");
  write_certificate(c, p.string());
  CHECK(read_certificate(p.string()) == c);
  CHECK(read_any(p.string()) == c);
  CHECK(text.rfind("{\"schema\":1,\"m\":9,\"u\":9,\"v\":19,\"hole\":[0,1,2,3,4,5,6,7,8],\"cycles\":[\n", 0) == 0);
}

TEST_CASE("malformed json is a parse error with a position") {
  const std::string text = to_json(construct(9, 5, 11));
  const std::string msg = parse_message(text.substr(0, text.size() / 2));
  CHECK(msg.find("line ") != std::string::npos);
  CHECK(msg.find("offset") != std::string::npos);

  std::string v2 = text;
  v2.replace(v2.find("\"schema\":1"), 10, "\"schema\":2");
  CHECK(parse_message(v2).find("unsupported schema version 2") != std::string::npos);

  CHECK_FALSE(parse_message("[1,2,3]").empty());
  CHECK_FALSE(parse_message("{\"schema\":1}").empty());
  CHECK_FALSE(parse_message("{\"schema\":1,\"m\":9,\"u\":0,\"v\":9,\"hole\":[],\"cycles\":[[1,\"a\"]]}").empty());

  const fs::path p = scratch("truncated.json");
  put(p, text.substr(0, 40));
  CHECK(testing::thrown_kind([&] { read_certificate(p.string()); }) == ErrorKind::ParseError);
  CHECK(testing::thrown_kind([&] { read_certificate((scratch("") / "missing.json").string()); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("plain text format") {
  const Certificate c = construct(9, 5, 17);
  const std::string text = to_plain_text(c);
  CHECK(text.rfind("# 9 5 17\n", 0) == 0);
  CHECK(from_plain_text(text) == c);

  const std::string body = text.substr(text.find('\n') + 1);
  CHECK(from_plain_text(body, 9, 5, 17) == c);
  const Certificate guessed = from_plain_text(body, 0, 5, 0);
  CHECK(guessed.m == 9);
  CHECK(guessed.v == 17);
  CHECK(testing::thrown_kind([&] { from_plain_text(body); }) == ErrorKind::ParseError);
  CHECK(testing::thrown_kind([&] { from_plain_text("# 9 5 17\n1 2 x\n"); }) == ErrorKind::ParseError);

  const fs::path p = scratch("cycles.txt");
  put(p, text);
  CHECK(read_any(p.string()) == c);
}

TEST_CASE("mutated certificates are rejected with the right category") {
  std::vector<Certificate> bases{construct(9, 9, 19), construct(9, 5, 11), construct(5, 5, 15), construct(3, 3, 9),
                                 construct(7, 7, 21)};
  for (const Certificate& b : bases) REQUIRE(verify(b).ok());
  testing::Rng rng(99);
  const testing::Mutation kinds[] = {testing::Mutation::DropCycle, testing::Mutation::DuplicateCycle,
                                     testing::Mutation::HoleEdge, testing::Mutation::LengthChange};
  int rejected = 0;
  for (int i = 0; i < 500; ++i) {
    const testing::Mutation k = kinds[i % 4];
    const Certificate bad = testing::mutate(bases[rng() % bases.size()], k, rng);
    const VerificationReport r = verify(bad);
    CHECK_FALSE(r.ok());
    CHECK(r.has(testing::expected_violation(k)));
    rejected += !r.ok() && r.has(testing::expected_violation(k));
  }
  CHECK(rejected == 500);
}
