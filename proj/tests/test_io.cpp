#include <cstdlib>
#include <cstring>
#include <filesystem>

#include "doctest.h"
#include "reference.hpp"

#include "bbinv/error.hpp"
#include "bbinv/io.hpp"

using namespace bbinv;
using io::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ZeroRow;  // sentinel: nothing thrown
}

bool same_bits(double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bbinv_io_" + name);
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20000; ++k) {
    std::uint64_t bits = rng();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    const std::string s = io::format_double(x);
    CHECK(same_bits(std::strtod(s.c_str(), nullptr), x));
  }
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
}

TEST_CASE("matrix JSON round trip is bit-exact through text") {
  for (int n : {3, 10, 64}) {
    const OrthoMatrix u = random_ortho(n, static_cast<std::uint64_t>(n));
    const std::string text = io::matrix_to_json(u).dump();
    const RawMatrix back = io::matrix_from_json(json::parse(text));
    REQUIRE(back.size() == u.raw().size());
    for (std::size_t k = 0; k < back.size(); ++k) {
      for (int c = 0; c < 2; ++c) {
        CHECK(same_bits(back[k][static_cast<std::size_t>(c)].real(), u.raw()[k][static_cast<std::size_t>(c)].real()));
        CHECK(same_bits(back[k][static_cast<std::size_t>(c)].imag(), u.raw()[k][static_cast<std::size_t>(c)].imag()));
      }
    }
    // Re-serialising gives the identical string.
    CHECK(io::matrix_to_json(back).dump() == text);
  }
}

TEST_CASE("matrix JSON layout") {
  const json j = json::parse(R"({"n": 3, "rows": [[[1, 0], [0, 0]], [[0, 0], [0, -1]], [[0, 0], [0, 0]]]})");
  const OrthoMatrix u = validate_ortho(io::matrix_from_json(j));
  CHECK(u.row(1)[1] == Complex(0, -1));
  const json out = io::matrix_to_json(u);
  CHECK(out["n"] == 3);
  CHECK(out["rows"][1][1][1] == -1.0);
}

TEST_CASE("malformed matrices are parse errors") {
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"rows": 3})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"rows": [[[1,0]]]})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"rows": [[[1,0],[0]]]})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"rows": [[["a",0],[0,0]]]})")); }) == ErrorCode::Parse);
  CHECK(code_of([] {
          io::matrix_from_json(json::parse(R"({"n": 2, "rows": [[[1,0],[0,0]],[[0,0],[1,0]],[[0,0],[0,0]]]})"));
        }) == ErrorCode::Parse);
}

TEST_CASE("config and polygon JSON") {
  const RowConfig cfg = random_config(7, 2);
  const std::vector<Vec3> back = io::config_vectors_from_json(json::parse(io::config_to_json(cfg).dump()));
  REQUIRE(back.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    for (int c = 0; c < 3; ++c) CHECK(same_bits(back[k](c), cfg.w()[k](c)));
  }
  const Polygon p = io::polygon_from_json(json::parse(R"({"vertices": [[0,0,0],[3,0,0],[3,4,0]]})"), true);
  CHECK(p.n() == 3);
  const Polygon q = io::polygon_from_json(json::parse(R"({"edges": [[0,0,1],[0,0,-1],[0,0,0]]})"), false);
  CHECK(q.n() == 3);
  CHECK(code_of([] { io::polygon_from_json(json::parse(R"({"points": []})"), false); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::config_vectors_from_json(json::parse(R"({"w": [[1,2]]})")); }) == ErrorCode::Parse);
}

TEST_CASE("selection JSON round trip") {
  Selection s;
  s.n = 9;
  s.i = 2;
  s.j = 7;
  s.sigma2 = 0.123456789012345;
  s.inv_norm = 1.0 / s.sigma2;
  s.bound = std::sqrt(9 / ref::kAlpha);
  s.path = {CaseAStep{4, 0.1, 1.005, false}, CaseAStep{1, 0.0, 1.0, true}, CaseBStep{-1.5e-3}};
  const json j = json::parse(io::selection_to_json(s).dump());
  CHECK(j["path"][0]["type"] == "CaseA");
  CHECK(j["path"][2]["type"] == "CaseB");
  CHECK(j.contains("invNorm"));
  const Selection back = io::selection_from_json(j);
  CHECK(back.n == 9);
  CHECK(back.i == 2);
  CHECK(back.j == 7);
  CHECK(same_bits(back.sigma2, s.sigma2));
  REQUIRE(back.path.size() == 3);
  CHECK(std::get<CaseAStep>(back.path[0]).removed_row == 4);
  CHECK(std::get<CaseAStep>(back.path[1]).zero_row);
  CHECK(std::get<CaseBStep>(back.path[2]).m_ij == -1.5e-3);
  CHECK(code_of([] { io::selection_from_json(json::parse(R"({"n": 3})")); }) == ErrorCode::Parse);
  CHECK(code_of([] {
          io::selection_from_json(json::parse(
              R"({"n":3,"i":0,"j":1,"sigma2":1,"invNorm":1,"bound":1,"path":[{"type":"Other"}]})"));
        }) == ErrorCode::Parse);
}

TEST_CASE("CSV writers") {
  OracleResult r;
  r.table = {{0, 1, 0.5}, {0, 2, 0.25}};
  CHECK(io::oracle_table_csv(r) == "i,j,lambda2\n0,1,0.5\n0,2,0.25\n");
  const std::vector<SweepRow> rows{{4, 0.25, 2.0, 2.1, 1.05, true}};
  CHECK(io::sweep_csv(rows) == "n,a_est,b_est,bound,ratio\n4,0.25,2,2.1,1.05\n");
}

TEST_CASE("file helpers") {
  const auto path = temp_file("roundtrip.json");
  io::write_text_file(path, R"({"x": 1})");
  CHECK(io::read_json_file(path)["x"] == 1);
  io::write_text_file(path, "{not json");
  CHECK(code_of([&] { io::read_json_file(path); }) == ErrorCode::Parse);
  std::filesystem::remove(path);
  CHECK(code_of([&] { io::read_json_file(path); }) == ErrorCode::Io);
  CHECK(code_of([] { io::write_text_file("/nonexistent-dir/x.json", "x"); }) == ErrorCode::Io);
}

TEST_CASE("report serializers carry the documented keys") {
  const Certificate c = build_certificate(random_config(5, 1));
  const json d = io::certificate_dump(c, inequality_chain(c));
  for (const char* key : {"minEntry", "F", "R2", "bounds"}) CHECK(d.contains(key));
  CHECK(d["bounds"].contains("lower_raw"));
  CHECK(d["bounds"].contains("upper"));
  const json o = io::oracle_to_json(brute_force_best_pair(random_ortho(5, 1)));
  for (const char* key : {"bestPair", "lambda2Max", "invNormMin"}) CHECK(o.contains(key));
  EstimateOptions opt;
  opt.restarts = 1;
  opt.iters = 10;
  const json e = io::estimate_to_json(estimate_a_n(5, opt));
  for (const char* key : {"n", "aEstimate", "bEstimate", "ratio", "restarts", "bestMatrix", "iterationLog"}) {
    CHECK(e.contains(key));
  }
}
