#include "kouch/io.hpp"

#include <fstream>
#include <sstream>

#include "kouch/error.hpp"

namespace kouch {
namespace {

std::int64_t get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& require_key(const Json& j, const char* key,
                        const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> keys,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known)
      throw InputError(where + ": unknown key \"" + item.key() + "\"");
  }
}

Branch branch_from_json(const Json& j, std::size_t index) {
  std::string where = "branch " + std::to_string(index + 1);
  if (!j.is_object()) throw InputError(where + " must be an object");
  reject_unknown_keys(j, {"pairs", "milnor"}, where);
  const Json& pairs = require_key(j, "pairs", where);
  if (!pairs.is_array()) throw InputError(where + ": pairs must be an array");
  Branch b;
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2)
      throw InputError(where + ": each pair must be [a, b]");
    b.pairs.push_back({get_int(p[0], where + " pair entry"),
                       get_int(p[1], where + " pair entry")});
  }
  if (j.contains("milnor")) b.milnor_override = get_int(j.at("milnor"), where + " milnor");
  return b;
}

}  // namespace

GermData germ_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("germ data must be a JSON object");
  reject_unknown_keys(j, {"branches", "intersections"}, "germ data");
  const Json& branches = require_key(j, "branches", "germ data");
  const Json& matrix = require_key(j, "intersections", "germ data");
  if (!branches.is_array()) throw InputError("branches must be an array");
  if (!matrix.is_array()) throw InputError("intersections must be an array");

  std::vector<Branch> bs;
  for (std::size_t i = 0; i < branches.size(); ++i)
    bs.push_back(branch_from_json(branches[i], i));

  std::vector<std::vector<std::int64_t>> rows;
  for (const Json& row : matrix) {
    if (!row.is_array()) throw InputError("intersection rows must be arrays");
    std::vector<std::int64_t> r;
    for (const Json& v : row) r.push_back(get_int(v, "intersection entry"));
    rows.push_back(std::move(r));
  }
  return GermData(std::move(bs), std::move(rows));
}

Json germ_to_json(const GermData& germ) {
  Json branches = Json::array();
  for (const Branch& b : germ.branches()) {
    Json pairs = Json::array();
    for (const CharPair& p : b.pairs) pairs.push_back(Json::array({p.a, p.b}));
    Json jb = Json::object();
    jb["pairs"] = pairs;
    if (b.milnor_override) jb["milnor"] = *b.milnor_override;
    branches.push_back(jb);
  }
  Json out = Json::object();
  out["branches"] = branches;
  out["intersections"] = germ.intersections();
  return out;
}

GermData parse_germ(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return germ_from_json(j);
}

std::string dump_germ(const GermData& germ) { return germ_to_json(germ).dump(); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GermData load_germ(const std::filesystem::path& path) {
  try {
    return parse_germ(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json ext_nat_to_json(ExtNat n) {
  if (n.is_infinite()) return "inf";
  return n.value();
}

Json point_to_json(const LatticePoint& p) {
  return Json::array({p.alpha, p.beta});
}

Json diagram_to_json(const NewtonDiagram& diagram) {
  Json out = Json::object();
  out["x_offset"] = diagram.canonical().x_offset;
  out["y_offset"] = diagram.canonical().y_offset;
  Json vs = Json::array();
  for (const LatticePoint& p : diagram.vertices()) vs.push_back(point_to_json(p));
  out["vertices"] = vs;
  return out;
}

NewtonDiagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("diagram must be a JSON object");
  reject_unknown_keys(j, {"x_offset", "y_offset", "vertices"}, "diagram");
  const Json& vs = require_key(j, "vertices", "diagram");
  if (!vs.is_array()) throw InputError("diagram vertices must be an array");
  std::vector<LatticePoint> points;
  for (const Json& v : vs) {
    if (!v.is_array() || v.size() != 2)
      throw InputError("each vertex must be [r, s]");
    points.push_back({get_int(v[0], "vertex"), get_int(v[1], "vertex")});
  }
  NewtonDiagram d;
  try {
    d = NewtonDiagram::from_vertices(points);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("diagram: ") + e.what());
  }
  if (j.contains("x_offset") &&
      get_int(j.at("x_offset"), "x_offset") != d.canonical().x_offset)
    throw InputError("diagram: x_offset does not match the vertices");
  if (j.contains("y_offset") &&
      get_int(j.at("y_offset"), "y_offset") != d.canonical().y_offset)
    throw InputError("diagram: y_offset does not match the vertices");
  return d;
}

Json decomposition_to_json(const Decomposition& w) {
  Json out = Json::array();
  for (const Group& g : w.groups) {
    Json members = Json::array();
    for (std::size_t i : g.branches) members.push_back(i + 1);
    Json jg = Json::object();
    jg["branches"] = members;
    jg["exponent"] = g.exponent.to_string();
    out.push_back(jg);
  }
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("witness must be an array of groups");
  Decomposition w;
  for (const Json& jg : j) {
    if (!jg.is_object()) throw InputError("witness group must be an object");
    reject_unknown_keys(jg, {"branches", "exponent"}, "witness group");
    const Json& members = require_key(jg, "branches", "witness group");
    const Json& exponent = require_key(jg, "exponent", "witness group");
    if (!members.is_array())
      throw InputError("witness group branches must be an array");
    Group g;
    for (const Json& m : members) {
      std::int64_t k = get_int(m, "witness branch index");
      if (k < 1) throw InputError("witness branch indices start at 1");
      g.branches.push_back(static_cast<std::size_t>(k - 1));
    }
    if (exponent.is_string()) {
      g.exponent = ExtRational::parse(exponent.get<std::string>());
    } else {
      g.exponent = ExtRational(get_int(exponent, "witness exponent"));
    }
    w.groups.push_back(std::move(g));
  }
  return w;
}

Json ngerm_to_json(const NGermResult& result) {
  Json out = Json::object();
  out["ngerm"] = result.verdict;
  if (result.verdict)
    out["witness"] = decomposition_to_json(result.witness);
  else
    out["refutation"] = result.refutation;
  return out;
}

Json kouchnirenko_to_json(const KouchnirenkoReport& report) {
  Json out = Json::object();
  out["mu"] = report.mu;
  out["mu_resultant"] =
      report.mu_resultant < 0 ? Json(nullptr) : Json(report.mu_resultant);
  out["mu_linear"] =
      report.mu_linear < 0 ? Json(nullptr) : Json(report.mu_linear);
  out["nu"] = report.nu;
  out["equal"] = report.equal();
  out["nondegenerate"] = report.chart_nondegenerate;
  out["reduced"] = true;  // kouchnirenko_report rejects non-reduced input
  out["diagram"] = diagram_to_json(report.diagram);
  Json faces = Json::array();
  for (const FaceReport& f : report.faces) {
    Json jf = Json::object();
    jf["from"] = point_to_json(f.face.from);
    jf["to"] = point_to_json(f.face.to);
    jf["polynomial"] = f.u.to_string('t');
    jf["nondegenerate"] = f.nondegenerate;
    faces.push_back(jf);
  }
  out["faces"] = faces;
  return out;
}

}  // namespace kouch
