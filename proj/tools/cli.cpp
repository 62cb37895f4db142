#include "cli.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootpoly/affine.hpp"
#include "rootpoly/enumeration.hpp"
#include "rootpoly/errors.hpp"
#include "rootpoly/faces.hpp"
#include "rootpoly/hull_oracle.hpp"
#include "rootpoly/root_system.hpp"
#include "rootpoly/weyl.hpp"

namespace rootpoly::cli {

namespace {

using json = nlohmann::json;

json big(const BigInt& v) {
  static const BigInt kSafe = BigInt(1) << 53;
  if (abs(v) < kSafe) return json(static_cast<long long>(v));
  return json(v.str());
}

json indices(IndexSet s) { return json(s.elements()); }

json coords(const IntVector& v) { return json(v); }

json rationals(const RationalVector& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(to_string(r));
  return a;
}

std::string brace(IndexSet s) { return s.to_string(); }

std::string bracket(const IntVector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string bracket(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + "]";
}

IndexSet parse_indices(const std::string& text, int n) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad index '" + item + "' in --I");
    const int i = std::stoi(item);
    if (i < 1 || i > n)
      throw std::invalid_argument("index " + item + " out of range 1.." + std::to_string(n));
    out.insert(i);
  }
  if (out.empty()) throw std::invalid_argument("--I needs at least one index");
  return out;
}

json face_json(const RootSystem& rs, const Face& f) {
  return {{"closure", indices(f.closure)},
          {"border", indices(f.border)},
          {"dim", f.dim},
          {"num_roots", f.roots.size()},
          {"num_vertices", f.vertices.size()},
          {"min_root", coords(f.min_root.coords)},
          {"barycenter", rationals(barycenter(rs, f.closure))}};
}

struct Output {
  json payload = json::object();
  std::string text;
  int exit_code = kOk;
};

Output cmd_info(const RootSystem& rs) {
  Output o;
  const std::size_t n_long = rs.count(LengthClass::long_root);
  const std::size_t n_short = rs.count(LengthClass::short_root);
  o.payload = {{"rank", rs.rank()},
               {"num_roots", rs.size()},
               {"num_positive", rs.positive_roots().size()},
               {"num_long", n_long},
               {"num_short", n_short},
               {"theta", coords(rs.theta().coords)},
               {"theta_short", coords(rs.theta_short().coords)},
               {"marks", coords(rs.marks())},
               {"simply_laced", rs.simply_laced()},
               {"weyl_group_order", big(group_order(rs.family()))},
               {"cartan", rs.cartan().entries()}};
  std::ostringstream t;
  t << "type          " << rs.family().name() << "\n"
    << "rank          " << rs.rank() << "\n"
    << "roots         " << rs.size() << " (" << n_long << " long, " << n_short << " short)\n"
    << "theta         " << bracket(rs.theta().coords) << "\n"
    << "theta_short   " << bracket(rs.theta_short().coords) << "\n"
    << "marks         " << bracket(rs.marks()) << "\n"
    << "|W|           " << group_order(rs.family()).str() << "\n";
  o.text = t.str();
  return o;
}

Output cmd_faces(const RootSystem& rs, const std::string& index_text) {
  Output o;
  std::ostringstream t;
  if (!index_text.empty()) {
    const IndexSet i = parse_indices(index_text, rs.rank());
    const Face f = face_descriptor(rs, i);
    const StabilizerSplit st = stabilizer_generators(rs, i);
    const IndexSet all = IndexSet::range(1, rs.rank());
    json face = face_json(rs, f);
    face["orbit_size"] = big(coset_index(rs, st.generators, all));
    o.payload = {{"I", indices(i)},
                 {"face", face},
                 {"vertex_count_formula", big(vertex_count_formula(rs, i))},
                 {"stabilizer",
                  {{"generators", indices(st.generators)},
                   {"pointwise", indices(st.pointwise)},
                   {"faithful", indices(st.faithful)}}}};
    t << "I             " << brace(i) << "\n"
      << "closure       " << brace(f.closure) << "\n"
      << "border        " << brace(f.border) << "\n"
      << "dim           " << f.dim << "\n"
      << "roots         " << f.roots.size() << "\n"
      << "vertices      " << f.vertices.size() << "\n"
      << "min_root      " << bracket(f.min_root.coords) << "\n"
      << "stabilizer    W" << brace(st.generators) << "\n";
    o.text = t.str();
    return o;
  }

  json faces = json::array();
  t << std::left << std::setw(5) << "dim" << std::setw(24) << "closure" << std::setw(12) << "border"
    << std::setw(8) << "roots" << std::setw(10) << "vertices" << "orbit\n";
  for (const FaceOrbit& fo : orbit_decomposition(rs)) {
    json f = face_json(rs, fo.face);
    f["orbit_size"] = big(fo.orbit_size);
    faces.push_back(std::move(f));
    t << std::setw(5) << fo.face.dim << std::setw(24) << brace(fo.face.closure) << std::setw(12)
      << brace(fo.face.border) << std::setw(8) << fo.face.roots.size() << std::setw(10)
      << fo.face.vertices.size() << fo.orbit_size.str() << "\n";
  }
  t << faces.size() << " standard parabolic faces\n";
  o.payload = {{"faces", faces}, {"count", faces.size()}};
  o.text = t.str();
  return o;
}

Output cmd_fpoly(const RootSystem& rs) {
  Output o;
  const FPolynomial p = f_polynomial(rs);
  json c = json::array();
  for (const BigInt& v : p.coeffs) c.push_back(big(v));
  json f = json::array();
  for (const BigInt& v : p.f_vector()) f.push_back(big(v));
  o.payload = {{"coefficients", c}, {"f_vector", f}};
  o.text = bracket(p.coeffs) + "\n";
  return o;
}

Output cmd_hrep(const RootSystem& rs, std::size_t limit) {
  Output o;
  const HRepresentation h = h_representation(rs, limit);
  json classes = json::array();
  std::ostringstream t;
  for (const FacetClass& c : h.classes) {
    classes.push_back({{"index", c.index}, {"mark", c.mark}, {"count", big(c.count)}});
    t << "class i=" << c.index << "  bound " << c.mark << "  inequalities " << c.count.str() << "\n";
  }
  t << "total " << h.total.str() << " (" << (h.is_explicit ? "explicit" : "symbolic") << ")\n";
  o.payload = {{"mode", h.is_explicit ? "explicit" : "symbolic"},
               {"classes", classes},
               {"total", big(h.total)},
               {"limit", limit}};
  if (h.is_explicit) {
    json ineq = json::array();
    for (const Inequality& q : h.inequalities) {
      ineq.push_back({{"normal", coords(q.normal)}, {"bound", q.bound}, {"class", q.facet_class}});
      t << bracket(q.normal) << " . c(x) <= " << q.bound << "\n";
    }
    o.payload["inequalities"] = ineq;
  }
  o.text = t.str();
  return o;
}

Output cmd_verify(const RootSystem& rs, int max_rank) {
  Output o;
  HullOptions opts;
  opts.max_dim = max_rank;
  const ValidationReport r = cross_validate(rs, opts);
  json checks = json::array();
  std::ostringstream t;
  for (const Check& c : r.checks) {
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    t << (c.passed ? "PASS " : "FAIL ") << c.id << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  json of = json::array();
  for (const BigInt& v : r.oracle_f_vector) of.push_back(big(v));
  json ff = json::array();
  for (const BigInt& v : r.formula_f_vector) ff.push_back(big(v));
  o.payload = {{"checks", checks},
               {"ok", r.ok()},
               {"oracle_f_vector", of},
               {"formula_f_vector", ff},
               {"oracle_facets", r.oracle_facets},
               {"partner", r.partner ? json(r.partner->name()) : json(nullptr)}};
  t << "f-vector " << bracket(r.oracle_f_vector) << "\n" << (r.ok() ? "verified" : "VERIFICATION FAILED") << "\n";
  o.text = t.str();
  o.exit_code = r.ok() ? kOk : kVerificationFailure;
  return o;
}

Output cmd_diagram(const RootSystem& rs) {
  Output o;
  const IndexSet facets = facet_indices(rs);
  const std::string pic = render_diagram(extend(rs), facets);
  o.payload = {{"diagram", pic}, {"facet_indices", indices(facets)}};
  o.text = pic + "facet-defining nodes (x): " + brace(facets) + "\n";
  return o;
}

Output cmd_skeleton(const RootSystem& rs) {
  Output o;
  const std::string c = to_string(skeleton_classification(rs));
  o.payload = {{"class", c}};
  o.text = c + "\n";
  return o;
}

Output cmd_shortface(const RootSystem& rs) {
  Output o;
  const ShortRootFace s = short_root_face(rs);
  o.payload = {{"index_set", indices(s.index_set)}, {"dim", s.dim}, {"interior", s.index_set.empty()}};
  o.text = "I(theta_s) = " + brace(s.index_set) + "\ndim " + std::to_string(s.dim) + "\n";
  return o;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Exact combinatorics of root polytopes"};
  app.name("rootpoly");
  app.require_subcommand(1);

  std::string type;
  bool as_json = false;
  std::string index_text;
  int max_rank = kDefaultMaxDim;
  std::size_t limit = kDefaultInequalityLimit;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", type, "Root system type, e.g. B3 or E8")->required();
    sub->add_flag("--json", as_json, "Machine-readable report");
    return sub;
  };
  add("info", "Roots, highest roots and marks");
  add("faces", "Standard parabolic faces")->add_option("--I", index_text, "Comma-separated index set");
  add("fpoly", "f-polynomial coefficients, low degree first");
  add("hrep", "Minimal half-space representation")
      ->add_option("--limit", limit, "Largest explicit inequality count")
      ->check(CLI::PositiveNumber);
  add("verify", "Compare every formula with the convex-hull oracle")
      ->add_option("--max-rank", max_rank, "Largest rank the oracle accepts")
      ->check(CLI::PositiveNumber);
  add("diagram", "Extended Dynkin diagram with facet nodes marked");
  add("skeleton", "Edge type of the 1-skeleton");
  add("shortface", "Minimal face containing short roots");

  Result res;
  std::ostringstream out;
  std::ostringstream err;
  std::vector<std::string> argv_store{"rootpoly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? kOk : kUsage;
    return res;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const RootSystem rs = RootSystem::build(Family::parse(type));
    Output o;
    if (command == "info") o = cmd_info(rs);
    else if (command == "faces") o = cmd_faces(rs, index_text);
    else if (command == "fpoly") o = cmd_fpoly(rs);
    else if (command == "hrep") o = cmd_hrep(rs, limit);
    else if (command == "verify") o = cmd_verify(rs, max_rank);
    else if (command == "diagram") o = cmd_diagram(rs);
    else if (command == "skeleton") o = cmd_skeleton(rs);
    else o = cmd_shortface(rs);

    if (as_json) {
      const json report = {{"schema_version", kSchemaVersion},
                           {"command", command},
                           {"type", rs.family().name()},
                           {"payload", o.payload}};
      res.out = report.dump(2) + "\n";
    } else {
      res.out = o.text;
    }
    res.exit_code = o.exit_code;
  } catch (const ResourceLimitError& e) {
    res.err = std::string("refused: ") + e.what() + "\n";
    res.exit_code = kResourceRefused;
  } catch (const std::invalid_argument& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = kUsage;
  } catch (const std::logic_error& e) {
    res.err = std::string("verification failure: ") + e.what() + "\n";
    res.exit_code = kVerificationFailure;
  }
  return res;
}

}  // namespace rootpoly::cli
