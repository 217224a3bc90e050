#include "bbinv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bbinv/error.hpp"

namespace bbinv::io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::Parse, std::string(what) + " is not a number");
  return j.get<double>();
}

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::Parse, "expected [x, y, z]");
  return Vec3(number(j[0], "x"), number(j[1], "y"), number(j[2], "z"));
}

json vec3_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

std::vector<Vec3> vec3_list(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::Parse, std::string("missing array \"") + key + "\"");
  }
  std::vector<Vec3> out;
  for (const auto& item : j.at(key)) out.push_back(vec3_from_json(item));
  return out;
}

void check_count(const json& j, std::size_t count) {
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() != static_cast<long long>(count)) {
      throw Error(ErrorCode::Parse, "\"n\" does not match the number of rows");
    }
  }
}

}  // namespace

json matrix_to_json(const RawMatrix& rows) {
  json out_rows = json::array();
  for (const auto& r : rows) {
    out_rows.push_back(json::array({json::array({r[0].real(), r[0].imag()}), json::array({r[1].real(), r[1].imag()})}));
  }
  return json{{"n", rows.size()}, {"rows", std::move(out_rows)}};
}

RawMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) {
    throw Error(ErrorCode::Parse, "matrix needs a \"rows\" array");
  }
  RawMatrix rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_array() || r.size() != 2) throw Error(ErrorCode::Parse, "each row needs two complex entries");
    Row row;
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& z = r[c];
      if (!z.is_array() || z.size() != 2) throw Error(ErrorCode::Parse, "complex entry must be [re, im]");
      row[c] = Complex(number(z[0], "re"), number(z[1], "im"));
    }
    rows.push_back(row);
  }
  check_count(j, rows.size());
  return rows;
}

json config_to_json(const RowConfig& cfg) {
  json w = json::array();
  for (const auto& v : cfg.w()) w.push_back(vec3_to_json(v));
  return json{{"n", cfg.n()}, {"w", std::move(w)}};
}

std::vector<Vec3> config_vectors_from_json(const json& j) {
  std::vector<Vec3> w = vec3_list(j, "w");
  check_count(j, w.size());
  return w;
}

Polygon polygon_from_json(const json& j, bool normalize) {
  if (j.is_object() && j.contains("edges")) return Polygon::from_edges(vec3_list(j, "edges"), normalize);
  if (j.is_object() && j.contains("vertices")) return Polygon::from_vertices(vec3_list(j, "vertices"), normalize);
  throw Error(ErrorCode::Parse, "polygon needs \"edges\" or \"vertices\"");
}

json selection_to_json(const Selection& sel) {
  json path = json::array();
  for (const auto& step : sel.path) {
    if (const auto* a = std::get_if<CaseAStep>(&step)) {
      path.push_back({{"type", "CaseA"}, {"removedRow", a->removed_row}, {"v", a->v}, {"t", a->t}, {"zeroRow", a->zero_row}});
    } else if (const auto* b = std::get_if<CaseBStep>(&step)) {
      path.push_back({{"type", "CaseB"}, {"M_ij", b->m_ij}});
    } else {
      path.push_back({{"type", "BaseCase"}, {"n", std::get<BaseCaseStep>(step).n}});
    }
  }
  return json{{"n", sel.n},         {"i", sel.i},         {"j", sel.j},           {"sigma2", sel.sigma2},
              {"invNorm", sel.inv_norm}, {"bound", sel.bound}, {"path", std::move(path)}};
}

Selection selection_from_json(const json& j) {
  try {
    Selection sel;
    sel.n = j.at("n").get<int>();
    sel.i = j.at("i").get<int>();
    sel.j = j.at("j").get<int>();
    sel.sigma2 = j.at("sigma2").get<double>();
    sel.inv_norm = j.at("invNorm").get<double>();
    sel.bound = j.at("bound").get<double>();
    for (const auto& s : j.value("path", json::array())) {
      const std::string type = s.at("type").get<std::string>();
      if (type == "CaseA") {
        sel.path.emplace_back(CaseAStep{s.at("removedRow").get<int>(), s.at("v").get<double>(), s.at("t").get<double>(),
                                        s.value("zeroRow", false)});
      } else if (type == "CaseB") {
        sel.path.emplace_back(CaseBStep{s.at("M_ij").get<double>()});
      } else if (type == "BaseCase") {
        sel.path.emplace_back(BaseCaseStep{s.at("n").get<int>()});
      } else {
        throw Error(ErrorCode::Parse, "unknown path step \"" + type + "\"");
      }
    }
    return sel;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json bound_report_to_json(const BoundReport& rep) {
  return json{{"pass", rep.pass},
              {"sigma2", rep.sigma2_recomputed},
              {"sigma2Residual", rep.sigma2_residual},
              {"invNorm", rep.inv_norm_recomputed},
              {"bound", rep.bound},
              {"ratio", rep.ratio},
              {"failures", rep.failures}};
}

json oracle_to_json(const OracleResult& res) {
  return json{{"bestPair", {res.best_i, res.best_j}}, {"lambda2Max", res.lambda2_max}, {"invNormMin", res.inv_norm_min}};
}

json certificate_dump(const Certificate& cert, const InequalityChain& chain) {
  return json{{"minEntry", {{"i", cert.min_entry.i}, {"j", cert.min_entry.j}, {"value", cert.min_entry.value}}},
              {"F", chain.f},
              {"R2", chain.r2},
              {"bounds", {{"lower_raw", chain.lower_raw}, {"upper", chain.upper}}}};
}

json equality_report_to_json(const EqualityReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}});
  }
  return json{{"verdict", to_string(rep.verdict)}, {"checks", std::move(checks)}, {"eigP", rep.eig_p}, {"eigM", rep.eig_m}};
}

json corollary_to_json(const CorollaryReport& rep) {
  return json{{"n", rep.n},
              {"maxGap", rep.max_gap},
              {"bestPair", {rep.best_i, rep.best_j}},
              {"bound", rep.bound},
              {"ratio", rep.ratio},
              {"holds", rep.holds},
              {"equality", equality_report_to_json(rep.equality)}};
}

json estimate_to_json(const TightnessEstimate& est) {
  json log = json::array();
  for (const auto& r : est.log) log.push_back({r.restart, r.iter, r.value, r.step});
  return json{{"n", est.n},
              {"aEstimate", est.a_estimate},
              {"bEstimate", est.b_estimate},
              {"bound", inverse_norm_bound(est.n)},
              {"ratio", est.ratio},
              {"restarts", est.restarts},
              {"bestRestart", est.best_restart},
              {"bestMatrix", matrix_to_json(est.best_matrix)},
              {"iterationLog", {{"columns", {"restart", "iter", "value", "step"}}, {"rows", std::move(log)}}}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string oracle_table_csv(const OracleResult& res) {
  std::ostringstream os;
  os << "i,j,lambda2\n";
  for (const auto& p : res.table) os << p.i << ',' << p.j << ',' << format_double(p.lambda2) << '\n';
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,a_est,b_est,bound,ratio\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_double(r.a_estimate) << ',' << format_double(r.b_estimate) << ','
       << format_double(r.bound) << ',' << format_double(r.ratio) << '\n';
  }
  return os.str();
}

}  // namespace bbinv::io
