#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rank2/format.hpp"
#include "rank2/reduce.hpp"

using namespace rank2;

namespace {

std::string strip_spaces(std::string s) {
  std::erase_if(s, [](unsigned char c) { return c == ' ' || c == '\t'; });
  return s;
}

}  // namespace

TEST_CASE("decomposition text matches the classic listing") {
  const Irrep r1{Algebra::sp2, 9, 9}, r2{Algebra::sp2, 2, 0};
  const std::string text =
      decomposition_text(r1, r2, tensor_decompose(r1, r2));
  const char* expected =
      "( 9, 9)*( 2, 0) =  {10000}* {10}\n"
      "1( 11, 9) =  1 {14080}\n"
      "1( 9, 10) = 1 {12320}\n"
      "1( 11, 8) = 1 {11340}\n"
      "1( 7, 11) = 1 {10240}\n"
      "2( 9, 9) = 2 {10000}\n"
      "1( 11, 7) = 1 {8960}\n"
      "1( 7, 10) = 1 {8360}\n"
      "1( 9, 8) = 1 {7980}\n"
      "1( 7, 9) = 1 {6720}\n";
  CHECK(strip_spaces(text) == strip_spaces(expected));
}

TEST_CASE("su2 terms print single labels") {
  const Irrep r1{Algebra::su2, 4, 0}, r2{Algebra::su2, 1, 0};
  const std::string text =
      decomposition_text(r1, r2, tensor_decompose(r1, r2));
  CHECK(text ==
        "(4)*(1) = {5}*{2}\n"
        "1(5) = 1 {6}\n"
        "1(3) = 1 {4}\n");
}

TEST_CASE("equal dimensions fall back to prime order") {
  const Irrep r1{Algebra::sp2, 1, 2}, r2{Algebra::sp2, 1, 1};
  const std::string text =
      decomposition_text(r1, r2, tensor_decompose(r1, r2));
  // {35} at (2,1) precedes {35'} at (4,0)
  const std::size_t a = text.find("{35}");
  const std::size_t b = text.find("{35'}");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  CHECK(a < b);
}

TEST_CASE("json round trip") {
  const Irrep r1{Algebra::su3, 9, 9}, r2{Algebra::su3, 3, 0};
  const std::string j =
      decomposition_json(r1, r2, tensor_decompose(r1, r2));
  const nlohmann::json parsed = nlohmann::json::parse(j);
  REQUIRE(parsed["inputs"].size() == 2);
  CHECK(parsed["inputs"][0]["dim"] == 1000);
  CHECK(parsed["inputs"][1]["name"] == "{10}");
  long long sum = 0;
  for (const auto& t : parsed["terms"])
    sum += t["mult"].get<long long>() * t["dim"].get<long long>();
  CHECK(sum == 10000);
  // barred names survive serialization
  bool saw_bar = false;
  for (const auto& t : parsed["terms"])
    if (t["name"].get<std::string>().find('~') != std::string::npos)
      saw_bar = true;
  CHECK(saw_bar);
}

TEST_CASE("tex uses overline for conjugates") {
  const Irrep r1{Algebra::su3, 9, 9}, r2{Algebra::su3, 3, 0};
  const std::string tex =
      decomposition_tex(r1, r2, tensor_decompose(r1, r2));
  CHECK(tex.rfind("\\begin{align*}", 0) == 0);
  CHECK(tex.find("\\{\\overline{1134}\\}") != std::string::npos);
  CHECK(tex.find("\\end{align*}") != std::string::npos);
}

TEST_CASE("branch text") {
  const Irrep r{Algebra::g2, 1, 0};
  CHECK(branch_text(r, branch_g2_to_su3(r)) == "{8} + {3} + {~3}\n");
  const Irrep r7{Algebra::g2, 0, 1};
  CHECK(branch_text(r7, branch_g2_to_su3(r7)) == "{3} + {~3} + {1}\n");
}

TEST_CASE("branch json carries the su3 tag") {
  const Irrep r{Algebra::g2, 1, 0};
  const nlohmann::json parsed =
      nlohmann::json::parse(branch_json(r, branch_g2_to_su3(r)));
  CHECK(parsed["input"]["algebra"] == "g2");
  for (const auto& t : parsed["terms"]) CHECK(t["algebra"] == "su3");
}

TEST_CASE("weights text ordering") {
  const std::string w = weights_text(multiplicities({Algebra::su3, 1, 1}));
  CHECK(w.rfind("2 0 1\n", 0) == 0);  // highest weight first
  CHECK(w.find("0 0 2\n") != std::string::npos);
}

TEST_CASE("scan text and json") {
  const auto recs = scan_degeneracies(Algebra::sp2, 300, 2);
  const std::string t = scan_text(recs);
  CHECK(t.find("D=35 g=2: (2,1) (4,0)") != std::string::npos);
  const nlohmann::json parsed = nlohmann::json::parse(scan_json(recs));
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["dim"] == 35);
  CHECK(parsed[0]["labels"][1][0] == 4);
}
