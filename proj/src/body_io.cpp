#include "body_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace tlab {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON body file");
  return j;
}

std::vector<double> get_array(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) fail(ErrorCode::ParseError, std::string(key) + " must be an array");
  std::vector<double> v;
  for (const auto& x : j[key]) {
    if (!x.is_number()) fail(ErrorCode::ParseError, std::string(key) + " must contain numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

BodyWithSpec body_from_json(const std::string& json_text, const BodyLimits& limits,
                            int default_nodes, int ellipse_project_degree) {
  const json j = parse_json(json_text);
  if (!j.is_object()) fail(ErrorCode::ParseError, "body file must be a JSON object");
  if (j.value("dimension", 2) != 2)
    fail(ErrorCode::ParseError, "only dimension 2 bodies are supported");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail(ErrorCode::ParseError, "body file missing string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();

  int nodes = default_nodes;
  if (j.contains("nodes")) {
    if (!j["nodes"].is_number_integer())
      fail(ErrorCode::ParseError, "'nodes' must be an integer");
    nodes = j["nodes"].get<int>();
  }
  if (nodes % 2 != 0) fail(ErrorCode::ParseError, "'nodes' must be even");

  json echo;
  echo["dimension"] = 2;
  echo["kind"] = kind;
  echo["nodes"] = nodes;

  ConvexBody2D body = [&]() -> ConvexBody2D {
    if (kind == "disk") {
      const double r = j.value("c0", 1.0);
      echo["c0"] = r;
      return make_disk(r, nodes, limits);
    }
    if (kind == "trig") {
      if (!j.contains("c0") || !j["c0"].is_number())
        fail(ErrorCode::ParseError, "trig body needs numeric 'c0'");
      TrigPoly p(j["c0"].get<double>(), get_array(j, "cos"), get_array(j, "sin"));
      echo["c0"] = p.c0;
      echo["cos"] = p.cos_coeffs;
      echo["sin"] = p.sin_coeffs;
      return ConvexBody2D::validate(std::move(p), nodes, limits);
    }
    if (kind == "ellipse") {
      const auto axes = get_array(j, "semi_axes");
      if (axes.size() != 2) fail(ErrorCode::ParseError, "ellipse needs semi_axes [a, b]");
      const int deg = j.value("degree", ellipse_project_degree);
      echo["semi_axes"] = axes;
      echo["degree"] = deg;
      return make_ellipse(axes[0], axes[1], nodes, deg, limits);
    }
    if (kind == "random") {
      if (!j.contains("seed")) fail(ErrorCode::ParseError, "random body needs 'seed'");
      const auto seed = j["seed"].get<std::uint64_t>();
      const int degree = j.value("degree", 4);
      const double amp = j.value("amplitude", 0.35);
      echo["seed"] = seed;
      echo["degree"] = degree;
      echo["amplitude"] = amp;
      return ConvexBody2D::random(seed, degree, amp, nodes, limits);
    }
    fail(ErrorCode::ParseError, "unknown body kind '" + kind + "'");
  }();

  return {std::move(body), echo.dump()};
}

std::string body_to_json(const ConvexBody2D& body) {
  json j;
  j["dimension"] = 2;
  j["kind"] = "trig";
  j["c0"] = body.support().c0;
  j["cos"] = body.support().cos_coeffs;
  j["sin"] = body.support().sin_coeffs;
  j["nodes"] = body.nodes();
  return j.dump();
}

BodyWithSpec body_from_spec(const std::string& spec, int nodes,
                            const BodyLimits& limits, int ellipse_project_degree) {
  auto starts_with = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  json j;
  j["dimension"] = 2;
  j["nodes"] = nodes;
  if (spec == "disk" || starts_with("disk:")) {
    j["kind"] = "disk";
    j["c0"] = spec == "disk" ? 1.0 : std::stod(spec.substr(5));
  } else if (starts_with("ellipse:")) {
    std::istringstream is(spec.substr(8));
    double a = 0, b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',')
      fail(ErrorCode::ParseError, "ellipse spec must be ellipse:a,b");
    j["kind"] = "ellipse";
    j["semi_axes"] = {a, b};
    j["degree"] = ellipse_project_degree;
  } else if (starts_with("random:")) {
    std::istringstream is(spec.substr(7));
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.empty()) fail(ErrorCode::ParseError, "random spec must be random:seed[:degree[:amp]]");
    j["kind"] = "random";
    j["seed"] = std::stoull(parts[0]);
    if (parts.size() > 1) j["degree"] = std::stoi(parts[1]);
    if (parts.size() > 2) j["amplitude"] = std::stod(parts[2]);
  } else {
    // Treat as a file path.
    std::ifstream in(spec);
    if (!in) fail(ErrorCode::ParseError, "cannot open body file '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return body_from_json(buf.str(), limits, nodes, ellipse_project_degree);
  }
  return body_from_json(j.dump(), limits, nodes, ellipse_project_degree);
}

}  // namespace tlab
