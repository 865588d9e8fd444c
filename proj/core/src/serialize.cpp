#include <crossbraid/serialize.hpp>

#include <json.hpp>

namespace crossbraid {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

Json scalars(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalars(m.row_vector(i)));
  return out;
}

Json cube(const std::vector<Scalar>& flat, std::size_t n) {
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < n; ++j)
      plane.push_back(scalars(std::span<const Scalar>(flat).subspan((i * n + j) * n, n)));
    out.push_back(std::move(plane));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar read_scalar(const Json& j) {
  if (!j.is_string()) throw FormatError("scalars must be \"p/q\" strings, got " + j.dump());
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Vector read_vector(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array, got " + j.dump());
  Vector out;
  for (const auto& x : j) out.push_back(read_scalar(x));
  return out;
}

Matrix read_matrix(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(read_vector(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw StructuralError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

std::vector<Scalar> read_cube(const Json& j, std::size_t n, const char* name) {
  std::vector<Scalar> out;
  if (!j.is_array() || j.size() != n) throw StructuralError(std::string(name) + " must be dim x dim x dim");
  for (const auto& plane : j) {
    if (!plane.is_array() || plane.size() != n) throw StructuralError(std::string(name) + " must be dim x dim x dim");
    for (const auto& row : plane) {
      Vector v = read_vector(row);
      if (v.size() != n) throw StructuralError(std::string(name) + " must be dim x dim x dim");
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json report_json(const Report& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"identity", f.identity},
                            {"witness", f.witness},
                            {"detail", f.detail},
                            {"lhs", scalars(f.lhs)},
                            {"rhs", scalars(f.rhs)}});
  }
  return Json{{"subject", r.subject},
              {"passed", r.passed()},
              {"checks", r.checks},
              {"failures", std::move(failures)},
              {"notes", r.notes}};
}

Json candidate_json(const BraidingCandidate& c) {
  Json theta = Json::array(), tau = Json::array();
  for (const auto& f : c.theta) theta.push_back(scalars(f.values));
  for (const auto& f : c.tau) tau.push_back(scalars(f.values));
  return Json{{"label", c.label},
              {"class", c.provenance == CandidateClass::bicomodule ? "bicomodule" : "character"},
              {"theta", std::move(theta)},
              {"tau", std::move(tau)},
              {"t", scalars(c.t)}};
}

Json first_failure(const Report& r) {
  if (r.passed()) return nullptr;
  const Failure& f = r.failures.front();
  return Json{{"identity", f.identity}, {"witness", f.witness}, {"detail", f.detail}};
}

Json verdict_json(const Verdict& v) {
  Json certificate;
  if (v.candidate) {
    certificate["candidate"] = candidate_json(*v.candidate);
    certificate["hexagons"] = Json{{"passed", v.hexagons.passed()}, {"checks", v.hexagons.checks}};
    if (v.restriction) {
      certificate["restriction"] = Json{{"passed", v.restriction->report.passed()},
                                        {"symmetric", v.restriction->symmetric},
                                        {"notes", v.restriction->report.notes}};
    }
  } else {
    Json violation{{"condition", v.condition}, {"witness", v.witness}};
    const Report& source = v.hexagons.checks.empty() ? v.conditions : v.hexagons;
    if (!source.passed()) {
      violation["detail"] = source.failures.front().detail;
      violation["lhs"] = scalars(source.failures.front().lhs);
      violation["rhs"] = scalars(source.failures.front().rhs);
    }
    certificate["violation"] = std::move(violation);
  }
  Json exploratory = Json::array();
  for (const auto& e : v.exploratory) {
    exploratory.push_back(Json{{"candidate", e.candidate},
                               {"flag", e.flag},
                               {"conditions", Json{{"passed", e.conditions.passed()},
                                                   {"first_failure", first_failure(e.conditions)}}},
                               {"hexagons", Json{{"passed", e.hexagons.passed()},
                                                 {"first_failure", first_failure(e.hexagons)},
                                                 {"notes", e.hexagons.notes}}},
                               {"braiding", e.braiding}});
  }
  return Json{{"preset", v.preset},
              {"display", v.display},
              {"verdict", to_string(v.status)},
              {"reason", v.reason},
              {"certificate", std::move(certificate)},
              {"exploratory", std::move(exploratory)}};
}

}  // namespace

std::string hopf_to_json(const HopfData& h) {
  const Json j{{"dim", h.dim},
               {"labels", h.labels},
               {"mult", cube(h.mult, h.dim)},
               {"unit", scalars(h.unit)},
               {"comult", cube(h.comult, h.dim)},
               {"counit", scalars(h.counit)},
               {"antipode", matrix_rows(h.antipode)}};
  return j.dump(kIndent);
}

HopfData hopf_from_json(std::string_view text) {
  const Json j = parse(text);
  HopfData h;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw FormatError("dim must be a positive integer");
  h.dim = dim.get<std::size_t>();
  const Json& labels = field(j, "labels");
  if (!labels.is_array()) throw FormatError("labels must be an array of strings");
  for (const auto& l : labels) {
    if (!l.is_string()) throw FormatError("labels must be an array of strings");
    h.labels.push_back(l.get<std::string>());
  }
  h.mult = read_cube(field(j, "mult"), h.dim, "mult");
  h.unit = read_vector(field(j, "unit"));
  h.comult = read_cube(field(j, "comult"), h.dim, "comult");
  h.counit = read_vector(field(j, "counit"));
  h.antipode = read_matrix(field(j, "antipode"));
  h.check_shapes();
  return h;
}

std::string datum_to_json(const CrossedDatum& d) {
  const std::size_t n = d.group.size();
  Json g = Json::array(), f = Json::array(), gamma = Json::array(), bigalois = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json grow = Json::array(), frow = Json::array(), gplane = Json::array();
    for (std::size_t b = 0; b < n; ++b) {
      grow.push_back(scalars(d.g(a, b)));
      frow.push_back(matrix_rows(d.f(a, b)));
      Json line = Json::array();
      for (std::size_t c = 0; c < n; ++c) line.push_back(to_string(d.gam(a, b, c)));
      gplane.push_back(std::move(line));
    }
    g.push_back(std::move(grow));
    f.push_back(std::move(frow));
    gamma.push_back(std::move(gplane));
    bigalois.push_back(Json{{"trivial", d.bigalois[a].trivial}, {"label", d.bigalois[a].label}});
  }
  const Json j{{"group", Json{{"labels", d.group.labels}, {"table", d.group.table}}},
               {"g", std::move(g)},
               {"f", std::move(f)},
               {"gamma", std::move(gamma)},
               {"bigalois", std::move(bigalois)}};
  return j.dump(kIndent);
}

CrossedDatum datum_from_json(std::string_view text) {
  const Json j = parse(text);
  CrossedDatum d;
  const Json& group = field(j, "group");
  try {
    d.group.labels = field(group, "labels").get<std::vector<std::string>>();
    d.group.table = field(group, "table").get<std::vector<std::vector<std::size_t>>>();
  } catch (const Json::type_error& e) {
    throw FormatError(std::string("group: ") + e.what());
  }
  d.group.validate();
  const std::size_t n = d.group.size();
  const Json& g = field(j, "g");
  const Json& f = field(j, "f");
  const Json& gamma = field(j, "gamma");
  const Json& bigalois = field(j, "bigalois");
  if (g.size() != n || f.size() != n || gamma.size() != n || bigalois.size() != n)
    throw StructuralError("datum components must be indexed by the group");
  for (std::size_t a = 0; a < n; ++a) {
    if (g[a].size() != n || f[a].size() != n || gamma[a].size() != n)
      throw StructuralError("datum components must be indexed by the group");
    for (std::size_t b = 0; b < n; ++b) {
      d.gmap.push_back(read_vector(g[a][b]));
      d.fmaps.push_back(read_matrix(f[a][b]));
      const Vector line = read_vector(gamma[a][b]);
      if (line.size() != n) throw StructuralError("gamma must be |Γ| x |Γ| x |Γ|");
      d.gamma.insert(d.gamma.end(), line.begin(), line.end());
    }
    const Json& flag = bigalois[a];
    if (!field(flag, "trivial").is_boolean() || !field(flag, "label").is_string())
      throw FormatError("bigalois entries are {trivial: bool, label: string}");
    d.bigalois.push_back(BiGaloisFlag{flag.at("trivial").get<bool>(), flag.at("label").get<std::string>()});
  }
  return d;
}

std::string report_to_json(const Report& r) { return report_json(r).dump(kIndent); }

std::string verdict_to_json(const Verdict& v) { return verdict_json(v).dump(kIndent); }

std::string verdicts_to_json(const std::vector<Verdict>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(verdict_json(v));
  return out.dump(kIndent);
}

}  // namespace crossbraid
