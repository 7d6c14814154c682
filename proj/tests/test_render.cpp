#include <doctest.h>

#include <regex>
#include <set>

#include "schurthom/render.hpp"

using namespace schurthom;

namespace {

using TermSet = std::multiset<std::pair<std::vector<int>, std::string>>;

TermSet from_text(const std::string& s) {
  TermSet out;
  const std::regex term(R"((-)?\s*(?:(\d+)\*)?s\[([\d,]*)\])");
  for (std::sregex_iterator it(s.begin(), s.end(), term), end; it != end; ++it) {
    std::vector<int> parts;
    const std::string p = (*it)[3];
    for (std::size_t k = 0; k < p.size();) {
      const std::size_t c = p.find(',', k);
      parts.push_back(std::stoi(p.substr(k, c - k)));
      k = c == std::string::npos ? p.size() : c + 1;
    }
    out.insert({parts, std::string((*it)[1]) + ((*it)[2].matched ? std::string((*it)[2]) : "1")});
  }
  return out;
}

TermSet from_latex(const std::string& s) {
  TermSet out;
  const std::regex term(R"((-)?\s*(\d+)?s_\{([\d,]*)\})");
  for (std::sregex_iterator it(s.begin(), s.end(), term), end; it != end; ++it) {
    std::vector<int> parts;
    const std::string p = (*it)[3];
    for (std::size_t k = 0; k < p.size();) {
      const std::size_t c = p.find(',', k);
      parts.push_back(std::stoi(p.substr(k, c - k)));
      k = c == std::string::npos ? p.size() : c + 1;
    }
    out.insert({parts, std::string((*it)[1]) + ((*it)[2].matched ? std::string((*it)[2]) : "1")});
  }
  return out;
}

}  // namespace

TEST_CASE("JSON round trip is byte-identical") {
  for (const SingularityParams p : {SingularityParams{1, 1, 0}, {2, 2, -1}, {2, 1, 2}, {3, 1, 0}}) {
    const std::string text = render_json(OutputDocument::make(thom_polynomial(p), p, Route::automatic));
    const OutputDocument doc = parse_json(text);
    CHECK(render_json(doc) == text);
    CHECK(doc.expression() == thom_polynomial(p));
    CHECK(doc.route != "auto");
  }
}

TEST_CASE("JSON keeps big coefficients as strings and rejects garbage") {
  SchurExpr x;
  x.add_term({3}, Integer("123456789012345678901234567890"));
  const std::string text = render_json(OutputDocument::make(x, {2, 1, 1}, Route::main2nice));
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK_THROWS_AS(parse_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("not json"), std::invalid_argument);
}

TEST_CASE("text and LaTeX carry the same terms") {
  for (const SingularityParams p : {SingularityParams{2, 2, -1}, {2, 1, 2}, {3, 1, 1}}) {
    const SchurExpr x = thom_polynomial(p);
    const TermSet t = from_text(render_text(x));
    CHECK(t.size() == x.size());
    CHECK(t == from_latex(render_latex(x)));
  }
  SchurExpr y;
  y.add_term({2}, -1);
  y.add_term({1, 1}, 3);
  CHECK(render_latex(y) == "-s_{2} + 3s_{1,1}");
  CHECK(from_text(render_text(y)) == from_latex(render_latex(y)));
  CHECK(render_latex(SchurExpr::one()) == "1");
}
