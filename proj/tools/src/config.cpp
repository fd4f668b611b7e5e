#include "lpvi_cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "lpvi/error.hpp"

namespace lpvi::cli {
namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void error(const YAML::Node& at, const std::string& field, ErrorKind kind,
                          const std::string& message) const {
    std::ostringstream s;
    s << source_;
    const YAML::Mark mark = at.Mark();
    if (!mark.is_null()) s << ':' << mark.line + 1 << ':' << mark.column + 1;
    s << ": " << field << ": " << message;
    throw Error(kind, s.str());
  }

  /// Runs `make`, re-raising library errors with the field's location.
  template <class F>
  auto guarded(const YAML::Node& at, const std::string& field, F&& make) const {
    try {
      return make();
    } catch (const Error& e) {
      error(at, field, e.kind(), e.what());
    }
  }

  YAML::Node require(const YAML::Node& parent, const std::string& key,
                     const std::string& field) const {
    if (!parent.IsMap()) error(parent, field, ErrorKind::Configuration, "expected a mapping");
    YAML::Node n = parent[key];
    if (!n) error(parent, field, ErrorKind::Configuration, "missing required field");
    return n;
  }

  double number(const YAML::Node& n, const std::string& field) const {
    if (!n.IsScalar()) error(n, field, ErrorKind::Configuration, "expected a number");
    try {
      return n.as<double>();
    } catch (const YAML::Exception&) {
      error(n, field, ErrorKind::Configuration, "expected a number, got '" + n.Scalar() + "'");
    }
  }

  std::size_t count(const YAML::Node& n, const std::string& field) const {
    const double v = number(n, field);
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
      error(n, field, ErrorKind::Configuration, "expected a positive integer");
    }
    return static_cast<std::size_t>(v);
  }

  std::vector<double> numbers(const YAML::Node& n, const std::string& field) const {
    if (!n.IsSequence()) error(n, field, ErrorKind::Configuration, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      out.push_back(number(n[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  Point point(const YAML::Node& n, const std::string& field, std::size_t dim) const {
    std::vector<double> v = numbers(n, field);
    if (v.size() != dim) {
      error(n, field, ErrorKind::Shape,
            "expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
    }
    return guarded(n, field, [&] { return Point(std::move(v)); });
  }

  /// Row-major, either flat (n*n numbers) or as a list of rows.
  Matrix matrix(const YAML::Node& n, const std::string& field, std::size_t dim) const {
    std::vector<double> flat;
    if (n.IsSequence() && n.size() > 0 && n[0].IsSequence()) {
      if (n.size() != dim) error(n, field, ErrorKind::Shape, "expected " + std::to_string(dim) + " rows");
      for (std::size_t r = 0; r < n.size(); ++r) {
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        std::vector<double> row = numbers(n[r], row_field);
        if (row.size() != dim) {
          error(n[r], row_field, ErrorKind::Shape, "expected " + std::to_string(dim) + " entries");
        }
        flat.insert(flat.end(), row.begin(), row.end());
      }
    } else {
      flat = numbers(n, field);
    }
    return guarded(n, field, [&] { return Matrix(dim, std::move(flat)); });
  }

  std::string text(const YAML::Node& n, const std::string& field) const {
    if (!n.IsScalar()) error(n, field, ErrorKind::Configuration, "expected a string");
    return n.Scalar();
  }

 private:
  std::string source_;
};

ConvexSetSpec read_set(const Reader& rd, const YAML::Node& node, std::size_t n) {
  const std::string type = rd.text(rd.require(node, "type", "set.type"), "set.type");
  if (type == "whole_space") return ConvexSetSpec::whole_space();
  if (type == "box") {
    Point lo = rd.point(rd.require(node, "lo", "set.lo"), "set.lo", n);
    Point hi = rd.point(rd.require(node, "hi", "set.hi"), "set.hi", n);
    return rd.guarded(node, "set", [&] { return ConvexSetSpec::box(lo, hi); });
  }
  if (type == "ball") {
    const YAML::Node r = rd.require(node, "radius", "set.radius");
    return rd.guarded(r, "set.radius", [&] { return ConvexSetSpec::ball(rd.number(r, "set.radius")); });
  }
  if (type == "halfspace") {
    Point normal = rd.point(rd.require(node, "normal", "set.normal"), "set.normal", n);
    const double offset = rd.number(rd.require(node, "offset", "set.offset"), "set.offset");
    return rd.guarded(node, "set", [&] { return ConvexSetSpec::halfspace(normal, offset); });
  }
  rd.error(node["type"], "set.type", ErrorKind::Configuration,
           "unknown set type '" + type + "' (whole_space, box, ball, halfspace)");
}

MappingSpec read_map(const Reader& rd, const YAML::Node& node, std::size_t n,
                     const std::string& prefix) {
  const std::string type = rd.text(rd.require(node, "type", prefix + ".type"), prefix + ".type");
  if (type == "identity") return MappingSpec::identity(n);
  if (type == "zero") return MappingSpec::scaled_identity(n, 0.0);
  if (type == "scaled_identity") {
    return MappingSpec::scaled_identity(
        n, rd.number(rd.require(node, "scale", prefix + ".scale"), prefix + ".scale"));
  }
  if (type == "affine") {
    Matrix m = rd.matrix(rd.require(node, "matrix", prefix + ".matrix"), prefix + ".matrix", n);
    Point shift = node["shift"] ? rd.point(node["shift"], prefix + ".shift", n) : Point::zeros(n);
    return MappingSpec::affine(std::move(m), std::move(shift));
  }
  if (type == "residual") {
    const YAML::Node alpha = rd.require(node, "alpha", prefix + ".alpha");
    MappingSpec inner = read_map(rd, rd.require(node, "inner", prefix + ".inner"), n, prefix + ".inner");
    return rd.guarded(alpha, prefix + ".alpha", [&] {
      return MappingSpec::residual_of_contraction(std::move(inner), rd.number(alpha, prefix + ".alpha"));
    });
  }
  rd.error(node["type"], prefix + ".type", ErrorKind::Configuration,
           "unknown map type '" + type + "' (identity, zero, scaled_identity, affine, residual)");
}

}  // namespace

ProblemConfig parse_config(const std::string& text, const std::string& source_name) {
  const Reader rd(source_name);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    std::ostringstream s;
    s << source_name << ':' << e.mark.line + 1 << ':' << e.mark.column + 1 << ": " << e.msg;
    throw Error(ErrorKind::Configuration, s.str());
  }
  if (!root.IsMap()) rd.error(root, "<root>", ErrorKind::Configuration, "expected a mapping");

  static const std::set<std::string> kKnown{"space", "set", "map", "certificate", "solver", "check"};
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!kKnown.contains(key)) rd.error(kv.first, key, ErrorKind::Configuration, "unknown section");
  }

  const YAML::Node space_node = rd.require(root, "space", "space");
  const std::size_t n = rd.count(rd.require(space_node, "n", "space.n"), "space.n");
  const YAML::Node p_node = rd.require(space_node, "p", "space.p");
  const double p = rd.number(p_node, "space.p");
  const SpaceSpec space = rd.guarded(p_node, "space.p", [&] { return SpaceSpec(n, p); });

  const YAML::Node set_node = rd.require(root, "set", "set");
  ConvexSetSpec set = read_set(rd, set_node, n);
  MappingSpec map = read_map(rd, rd.require(root, "map", "map"), n, "map");

  std::optional<Certificate> cert;
  if (const YAML::Node c = root["certificate"]) {
    const double u = rd.number(rd.require(c, "u", "certificate.u"), "certificate.u");
    const double v = rd.number(rd.require(c, "v", "certificate.v"), "certificate.v");
    const double mu = rd.number(rd.require(c, "mu", "certificate.mu"), "certificate.mu");
    cert = rd.guarded(c, "certificate", [&] { return Certificate(u, v, mu); });
  }

  SolverConfig solver;
  if (const YAML::Node s = root["solver"]) {
    if (const YAML::Node l = s["lambda"]) {
      if (!(l.IsScalar() && l.Scalar() == "auto")) {
        solver.lambda = rd.number(l, "solver.lambda");
        if (!(*solver.lambda > 0.0)) {
          rd.error(l, "solver.lambda", ErrorKind::Configuration, "must be positive or 'auto'");
        }
      }
    }
    if (const YAML::Node t = s["tol"]) {
      solver.tol = rd.number(t, "solver.tol");
      if (!(solver.tol > 0.0)) rd.error(t, "solver.tol", ErrorKind::Configuration, "must be positive");
    }
    if (const YAML::Node m = s["max_iter"]) solver.max_iter = rd.count(m, "solver.max_iter");
    if (const YAML::Node x = s["x0"]) solver.x0 = rd.point(x, "solver.x0", n);
  }

  CheckConfig check;
  if (const YAML::Node c = root["check"]) {
    if (const YAML::Node s = c["samples"]) check.samples = rd.count(s, "check.samples");
    if (const YAML::Node b = c["bounds"]) {
      Point lo = rd.point(rd.require(b, "lo", "check.bounds.lo"), "check.bounds.lo", n);
      Point hi = rd.point(rd.require(b, "hi", "check.bounds.hi"), "check.bounds.hi", n);
      const ConvexSetSpec box = rd.guarded(b, "check.bounds", [&] { return ConvexSetSpec::box(lo, hi); });
      check.bounds = std::get<Box>(box.variant());
    }
  }

  ProblemSpec problem = rd.guarded(set_node, "set", [&] {
    return ProblemSpec(space, std::move(set), std::move(map), cert);
  });
  return ProblemConfig{std::move(problem), std::move(solver), std::move(check)};
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Configuration, "cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace lpvi::cli
