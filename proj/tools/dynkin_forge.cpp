// dynkin-forge: command-line front end. JSON on stdout; exit 2 on usage
// errors, 1 on domain errors, 3 when `verify` finds a failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dynkin/augment.hpp"
#include "dynkin/chevalley.hpp"
#include "dynkin/glorbits.hpp"
#include "dynkin/random.hpp"
#include "dynkin/tables.hpp"
#include "dynkin/verify.hpp"

using namespace dynkin;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  bool pretty = false;
  int max_rank = 8;
  std::string json_path;
};

std::string rat(const Rational& q) { return to_string(q); }

json rat_list(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(rat(q));
  return j;
}

json weight_json(const Weight& w) {
  json j = json::array();
  for (const auto& c : w.coeffs) {
    if (c.get_den() == 1) j.push_back(c.get_num().get_si());
    else j.push_back(rat(c));
  }
  return j;
}

json component_weights_json(const DynkinDiagram& d, const Weight& w) {
  json j = json::array();
  for (const auto& part : component_weights(d, w)) j.push_back(weight_json(part));
  return j;
}

json int_matrix_json(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
  return j;
}

json rat_matrix_json(const RatMatrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat(m(r, c)));
    j.push_back(row);
  }
  return j;
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string");
}

RatMatrix json_rat_matrix(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  RatMatrix m(j.size(), j.empty() ? 0 : j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ShapeError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = json_rational(j[r][c]);
  }
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

TwoFormPair read_pair(const std::string& path, int m_flag) {
  const auto j = read_json_file(path);
  const int m = m_flag > 0 ? m_flag : j.value("m", 0);
  if (m <= 0) throw UsageError("m must be given with --m or in the pair file");
  return make_pair(m, json_rat_matrix(j.at("M1")), json_rat_matrix(j.at("M2")));
}

json pair_json(const TwoFormPair& p) {
  return {{"m", p.m}, {"n", p.n}, {"M1", rat_matrix_json(p.M1)}, {"M2", rat_matrix_json(p.M2)}};
}

json form_json(const BinaryForm& f) { return {{"degree", f.degree()}, {"coeffs", rat_list(f.coeffs)}}; }

json points_json(const PointConfig& pc) {
  json j = json::array();
  for (const auto& p : pc.points) j.push_back({rat(p.lambda), rat(p.mu)});
  return j;
}

PointConfig parse_points(const std::string& text) {
  PointConfig pc;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("point '" + item + "' is not of the form l:mu");
    pc.points.push_back({parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
  }
  return pc;
}

SimpleType parse_simple(const std::string& text) {
  DynkinDiagram d;
  try {
    d = DynkinDiagram::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!d.simple()) throw UsageError("expected a simple type, got " + text);
  return d.components()[0];
}

DynkinDiagram parse_diagram(const std::string& text) {
  try {
    return DynkinDiagram::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int check_node(const SimpleType& t, int node, int max_rank) {
  if (t.rank > max_rank) throw UsageError(t.name() + " exceeds --max-rank " + std::to_string(max_rank));
  if (node < 1 || node > t.rank)
    throw UsageError("node " + std::to_string(node) + " out of range 1.." + std::to_string(t.rank) + " for " + t.name());
  return node - 1;
}

std::shared_ptr<const RootSystem> simple_rs(const SimpleType& t) {
  return std::make_shared<const RootSystem>(build_root_system(DynkinDiagram({t})));
}

json element_json(const ChevalleyAlgebra& sc, const AlgebraElement& v) {
  json j = json::object();
  for (const auto& [b, c] : v.coeffs()) j[sc.basis_name(b)] = rat(c);
  return j;
}

json cmd_grade(const std::string& type, int node1, const Options& o, bool with_roots) {
  const auto t = parse_simple(type);
  const int node = check_node(t, node1, o.max_rank);
  const Gradation gr(simple_rs(t), node);
  json dims = json::object();
  dims["0"] = gr.dim(0);
  for (int i = 1; i <= gr.order(); ++i) dims[std::to_string(-i)] = gr.dim(-i);
  for (int i = 1; i <= gr.order(); ++i) dims[std::to_string(i)] = gr.dim(i);
  json out{{"type", t.name()}, {"node", node1}, {"order", gr.order()}, {"dims", dims},
           {"grading_element", rat_list(gr.grading_element())}};
  if (with_roots) {
    json levels = json::object();
    for (const auto& [i, roots] : gr.levels()) {
      json rs = json::array();
      for (const auto& r : roots) rs.push_back(to_string(r));
      levels[std::to_string(i)] = rs;
    }
    out["roots"] = levels;
  }
  return out;
}

json cmd_levi(const std::string& type, int node1, const Options& o) {
  const auto t = parse_simple(type);
  const int node = check_node(t, node1, o.max_rank);
  const auto rs = simple_rs(t);
  const Gradation gr(rs, node);
  const LeviData ld(rs, node);
  json comps = json::array();
  for (const auto& c : ld.components()) {
    json nodes = json::array();
    for (int v : c.nodes) nodes.push_back(v + 1);
    comps.push_back({{"type", c.type.name()}, {"ambient_nodes", nodes}, {"weight", weight_json(c.weight)}, {"nu", c.nu}});
  }
  json pieces = json::array();
  for (int i = 1; i <= gr.order(); ++i) {
    const auto rep = piece_rep(gr, ld, -i);
    pieces.push_back({{"level", -i},
                      {"dim", rep.dim},
                      {"highest_weight", component_weights_json(ld.diagram0(), rep.highest_weight)},
                      {"weyl_dim", weyl_dim(ld, rep.highest_weight).get_str()}});
  }
  const auto name = pvs_name(ld);
  return {{"type", t.name()},     {"node", node1},       {"levi", ld.diagram0().name()},
          {"components", comps},  {"nu", ld.nu()},      {"g0_dim", gr.dim(0)},
          {"group", name.group},  {"space", name.space}, {"pieces", pieces}};
}

json cmd_nu(const std::string& type, int node1, const Options& o) {
  const auto t = parse_simple(type);
  const int node = check_node(t, node1, o.max_rank);
  const auto ld = levi({DynkinDiagram({t}), node});
  return {{"levi", ld.diagram0().name()}, {"nu", ld.nu()}};
}

json validation_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return checks;
}

json cmd_augment(const std::string& levi_text, const std::string& weight_text, const std::string& nu_text, int& code) {
  const auto d = parse_diagram(levi_text);
  const AugmentationInput in{d, d.empty() ? Weight{} : parse_component_weight(d, weight_text),
                             nu_text.empty() ? std::vector<int>{} : parse_int_list(nu_text)};
  const auto am = build_augmented_matrix(in);
  const auto rep = validate(am);
  json out{{"levi", d.name()}, {"matrix", int_matrix_json(am.matrix)}, {"checks", validation_json(rep)},
           {"valid", rep.valid()}};
  if (rep.valid()) {
    const auto amb = identify_ambient(in);
    out["ambient"] = amb.diagram.name();
    out["node"] = amb.node + 1;
  } else {
    code = 1;
    out["error"] = {{"kind", "ValidationFailed"}, {"message", "augmented matrix is not of finite type"}};
  }
  return out;
}

json cmd_enumerate(const std::string& levi_text) {
  const auto d = parse_diagram(levi_text);
  json rows = json::array();
  for (const auto& a : enumerate_augmentations(d)) {
    rows.push_back({{"weight", component_weights_json(d, a.input.omega)},
                    {"nu", a.input.nu},
                    {"ambient", a.ambient.diagram.name()},
                    {"node", a.ambient.node + 1}});
  }
  return {{"levi", d.name()}, {"count", rows.size()}, {"augmentations", rows}};
}

json cmd_generic(const std::string& type, int node1, const Options& o) {
  const auto t = parse_simple(type);
  const int node = check_node(t, node1, o.max_rank);
  const auto rs = simple_rs(t);
  const ChevalleyAlgebra sc(rs);
  const Gradation gr(rs, node);
  const auto p = generic_pair(sc, gr);
  json orbit = json::array();
  for (const auto& r : p.orbit) orbit.push_back(to_string(r));
  return {{"type", t.name()},
          {"node", node1},
          {"orbit", orbit},
          {"scale", rat(p.scale)},
          {"X", element_json(sc, p.x)},
          {"Y", element_json(sc, p.y)},
          {"bracket", element_json(sc, sc.bracket(p.x, p.y))},
          {"orbit_dim", orbit_dimension(sc, gr, p.x)},
          {"dim_g1", gr.dim(1)}};
}

json cmd_orbit_dim(const std::string& type, int node1, int level, const std::string& vector_path, const Options& o) {
  const auto t = parse_simple(type);
  const int node = check_node(t, node1, o.max_rank);
  const auto rs = simple_rs(t);
  const ChevalleyAlgebra sc(rs);
  const Gradation gr(rs, node);
  if (level == 0 || std::abs(level) > gr.order())
    throw UsageError("level must be nonzero and within +-" + std::to_string(gr.order()));
  AlgebraElement v;
  if (vector_path.empty()) {
    Rng rng(subseed(o.seed, "orbit-dim"));
    for (const auto& r : gr.level(level)) v.add(sc.root_basis(r), rng.nonzero_rational(9, 4));
  } else {
    const auto j = read_json_file(vector_path);
    std::map<std::string, int> by_name;
    for (const auto& r : gr.level(level)) by_name[to_string(r)] = sc.root_basis(r);
    for (const auto& [key, val] : j.items()) {
      auto it = by_name.find(key);
      if (it == by_name.end()) throw ShapeError("root " + key + " is not in level " + std::to_string(level));
      v.add(it->second, json_rational(val));
    }
  }
  const int od = orbit_dimension(sc, gr, v);
  return {{"type", t.name()}, {"node", node1},           {"level", level}, {"orbit_dim", od},
          {"dim", gr.dim(level)}, {"generic", od == gr.dim(level)}};
}

void emit(const json& j, const Options& o) {
  const std::string text = o.pretty ? j.dump(2) : j.dump();
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw UsageError("cannot write " + o.json_path);
    out << text << "\n";
    return;
  }
  std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradations of semisimple Lie algebras and their prehomogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("DYNKIN_FORGE_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "DYNKIN_FORGE_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--seed", o.seed, "random seed (default 0, or DYNKIN_FORGE_SEED)");
  app.add_flag("--pretty", o.pretty, "indented JSON; aligned text for tables");
  app.add_option("--max-rank", o.max_rank, "largest rank considered")->check(CLI::Range(1, 8));
  app.add_option("--json", o.json_path, "write the JSON result to this file");

  std::string type, levi_text, weight_text, nu_text, vector_path, pair_path, points_text;
  int node = 0, level = -1, m = 0;
  bool with_roots = false;

  auto* grade = app.add_subcommand("grade", "graded pieces for (type, node)");
  grade->add_option("type", type)->required();
  grade->add_option("node", node)->required();
  grade->add_flag("--roots", with_roots, "list the roots of every level");

  auto* levi_cmd = app.add_subcommand("levi", "Levi factor and graded-piece representations");
  levi_cmd->add_option("type", type)->required();
  levi_cmd->add_option("node", node)->required();

  auto* nu = app.add_subcommand("nu", "connecting multiplicities");
  nu->add_option("type", type)->required();
  nu->add_option("node", node)->required();

  auto* augment = app.add_subcommand("augment", "build and validate the augmented Cartan matrix");
  augment->add_option("levi", levi_text)->required();
  augment->add_option("--weight", weight_text, "per-component weights, e.g. 1;0,1,0,0");
  augment->add_option("--nu", nu_text, "connecting multiplicities, e.g. 1,1");

  auto* enumerate = app.add_subcommand("enumerate", "all one-node augmentations of finite type");
  enumerate->add_option("levi", levi_text)->required();

  auto* generic = app.add_subcommand("generic", "explicit generic pair (simply-laced only)");
  generic->add_option("type", type)->required();
  generic->add_option("node", node)->required();

  auto* orbit = app.add_subcommand("orbit-dim", "dimension of the G0-orbit through a vector of a level");
  orbit->add_option("type", type)->required();
  orbit->add_option("node", node)->required();
  orbit->add_option("--level", level, "level (default -1)");
  orbit->add_option("--vector", vector_path, "JSON object root -> coefficient; random when omitted");

  auto* gl = app.add_subcommand("glorbits", "pairs of 2-forms");
  gl->require_subcommand(1);
  gl->fallthrough();
  auto* gl_phi = gl->add_subcommand("phi", "binary form of a pair with n = 2m");
  auto* gl_classify = gl->add_subcommand("classify", "U1/U2 stratum of a pair with n = 2m+1");
  auto* gl_orbit = gl->add_subcommand("orbit-dim", "rank of the gl2 + sl_n tangent map");
  auto* gl_points = gl->add_subcommand("points", "roots of the binary form");
  for (auto* c : {gl_phi, gl_classify, gl_orbit, gl_points}) {
    c->add_option("--pair", pair_path, "JSON file {\"m\", \"M1\", \"M2\"}")->required();
    c->add_option("--m", m, "half-dimension");
  }
  auto* gl_construct = gl->add_subcommand("construct", "pair realizing a point configuration");
  gl_construct->add_option("--points", points_text, "points l:mu separated by commas")->required();
  auto* gl_witness = gl->add_subcommand("witness", "regular pencil on C^{2m+1}");
  gl_witness->add_option("--m", m)->required();

  app.add_subcommand("tables", "regenerate the classification tables");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    json out;
    int code = 0;
    if (*grade) out = cmd_grade(type, node, o, with_roots);
    else if (*levi_cmd) out = cmd_levi(type, node, o);
    else if (*nu) out = cmd_nu(type, node, o);
    else if (*augment) out = cmd_augment(levi_text, weight_text, nu_text, code);
    else if (*enumerate) out = cmd_enumerate(levi_text);
    else if (*generic) out = cmd_generic(type, node, o);
    else if (*orbit) out = cmd_orbit_dim(type, node, level, vector_path, o);
    else if (*gl) {
      if (*gl_phi) out = {{"phi", form_json(phi(read_pair(pair_path, m)))}};
      else if (*gl_classify) out = {{"stratum", stratum_name(classify_u1_u2(read_pair(pair_path, m)))}};
      else if (*gl_orbit) {
        const auto p = read_pair(pair_path, m);
        out = {{"orbit_dim", orbit_dim_gl2sl(p)}, {"dim", pair_space_dim(p.n)}};
      } else if (*gl_points) out = {{"points", points_json(point_config_invariant(read_pair(pair_path, m)))}};
      else if (*gl_construct) {
        const auto p = construct_from_points(parse_points(points_text));
        out = {{"pair", pair_json(p)}, {"phi", form_json(phi(p))}};
      } else if (*gl_witness) {
        const auto p = kronecker_pair(m);
        out = {{"pair", pair_json(p)}, {"orbit_dim", orbit_dim_gl2sl(p)}, {"stratum", stratum_name(classify_u1_u2(p))}};
      }
    } else if (app.got_subcommand("tables")) {
      if (o.pretty && o.json_path.empty()) {
        std::cout << tables_text(o.max_rank);
        return 0;
      }
      out = tables_json(o.max_rank);
    } else if (*verify) {
      const auto rep = run_verify({o.seed, o.max_rank});
      out = to_json(rep);
      code = rep.pass() ? 0 : 3;
    }
    emit(out, o);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    const json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}
