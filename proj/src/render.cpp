#include "schurthom/render.hpp"

#include <json.hpp>
#include <stdexcept>

namespace schurthom {

using json = nlohmann::ordered_json;

OutputDocument OutputDocument::make(const SchurExpr& x, const SingularityParams& params, Route route) {
  OutputDocument doc;
  doc.singularity = params;
  doc.codimension = std::max(0, x.max_degree());
  doc.route = route_name(resolve_route(params, route));
  for (const auto& [lambda, c] : x.terms()) doc.terms.push_back({lambda.parts(), c});
  return doc;
}

SchurExpr OutputDocument::expression() const {
  SchurExpr x;
  for (const auto& t : terms) x.add_term(Partition(t.partition), t.coefficient);
  return x;
}

std::string render_json(const OutputDocument& doc) {
  json terms = json::array();
  for (const auto& t : doc.terms) {
    terms.push_back(json{{"partition", t.partition}, {"coefficient", t.coefficient.get_str()}});
  }
  const json j{
      {"singularity", json{{"i", doc.singularity.i}, {"j", doc.singularity.j}, {"r", doc.singularity.r}}},
      {"codimension", doc.codimension},
      {"basis", doc.basis},
      {"terms", terms},
      {"route", doc.route},
  };
  return j.dump(2) + "\n";
}

OutputDocument parse_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    OutputDocument doc;
    const auto& s = j.at("singularity");
    doc.singularity = {s.at("i").get<int>(), s.at("j").get<int>(), s.at("r").get<int>()};
    doc.codimension = j.at("codimension").get<int>();
    doc.basis = j.at("basis").get<std::string>();
    if (doc.basis != "schur") throw std::invalid_argument("unsupported basis " + doc.basis);
    doc.route = j.at("route").get<std::string>();
    if (doc.route == "auto") throw std::invalid_argument("route must be resolved");
    (void)parse_route(doc.route);
    for (const auto& t : j.at("terms")) {
      Integer c;
      if (c.set_str(t.at("coefficient").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("coefficient is not a decimal integer");
      }
      doc.terms.push_back({t.at("partition").get<std::vector<int>>(), c});
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

std::string render_text(const SchurExpr& x) { return x.to_string(); }

std::string render_latex(const SchurExpr& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : x.terms()) {
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (lambda.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "s_{";
    for (std::size_t k = 0; k < lambda.length(); ++k) {
      if (k) out += ',';
      out += std::to_string(lambda.part(k));
    }
    out += "}";
  }
  return out;
}

std::string render_reports_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += (r.passed ? "PASS " : "FAIL ") + r.name + " " + r.params;
    if (r.witness) out += ": " + *r.witness;
    out += "\n";
  }
  return out;
}

std::string render_reports_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json j{{"check", r.name}, {"params", r.params}, {"status", r.passed ? "pass" : "fail"}};
    if (r.witness) j["witness"] = *r.witness;
    arr.push_back(std::move(j));
  }
  return json{{"all_passed", all_passed(reports)}, {"reports", arr}}.dump(2) + "\n";
}

std::string render_series_text(const ThomSeriesExpr& series) {
  std::string out;
  for (const auto& [gamma, c] : series.terms) {
    std::string g = "(";
    for (std::size_t l = 0; l < gamma.size(); ++l) g += (l ? "," : "") + std::to_string(gamma[l]);
    out += g + ")  " + c.get_str() + "\n";
  }
  return out;
}

}  // namespace schurthom
