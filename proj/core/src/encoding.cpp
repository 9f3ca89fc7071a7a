#include "boolsch/encoding.hpp"

#include <stdexcept>

namespace boolsch {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

int parse_index(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty index in element string");
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad index '" + std::string(s) + "' in element string");
    value = value * 10 + (c - '0');
    if (value > 1000000) throw std::invalid_argument("index out of range in element string");
  }
  return value;
}

std::vector<int> parse_index_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (std::string_view part : split(s, ',')) out.push_back(parse_index(part));
  return out;
}

}  // namespace

BooleanElement element_from_string(const RootSystem& rs, std::string_view text) {
  if (text == "id") return BooleanElement::identity();
  constexpr std::string_view kWord = "word:";
  constexpr std::string_view kDiagram = "diagram:";
  if (text.substr(0, kWord.size()) == kWord) {
    return BooleanElement::from_reduced_word(rs, parse_index_list(text.substr(kWord.size())));
  }
  if (text.substr(0, kDiagram.size()) == kDiagram) {
    std::string_view body = text.substr(kDiagram.size());
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw std::invalid_argument("diagram form must be diagram:{support;edges}");
    body = body.substr(1, body.size() - 2);
    size_t semi = body.find(';');
    if (semi == std::string_view::npos)
      throw std::invalid_argument("diagram form must be diagram:{support;edges}");
    std::vector<int> support = parse_index_list(body.substr(0, semi));
    std::vector<std::pair<int, int>> edges;
    std::string_view etext = body.substr(semi + 1);
    if (!etext.empty()) {
      for (std::string_view e : split(etext, ',')) {
        size_t gt = e.find('>');
        if (gt == std::string_view::npos)
          throw std::invalid_argument("edge must look like from>to");
        edges.emplace_back(parse_index(e.substr(0, gt)), parse_index(e.substr(gt + 1)));
      }
    }
    return BooleanElement::from_diagram(rs, std::move(support), std::move(edges));
  }
  throw std::invalid_argument("element must be 'id', 'word:...', or 'diagram:{...}'");
}

std::string element_to_string(const BooleanElement& b) {
  if (b.is_identity()) return "id";
  std::string out = "diagram:{";
  for (size_t k = 0; k < b.support().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(b.support()[k]);
  }
  out += ';';
  for (size_t k = 0; k < b.edges().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(b.edges()[k].first);
    out += '>';
    out += std::to_string(b.edges()[k].second);
  }
  out += '}';
  return out;
}

BooleanElement element_from_json(const RootSystem& rs, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("element JSON must be an object");
  if (j.contains("word")) {
    return BooleanElement::from_reduced_word(rs, j.at("word").get<std::vector<int>>());
  }
  if (j.contains("support")) {
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("each edge must be a [from,to] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
    return BooleanElement::from_diagram(rs, j.at("support").get<std::vector<int>>(),
                                        std::move(edges));
  }
  throw std::invalid_argument("element JSON needs a 'word' or a 'support' key");
}

nlohmann::json element_to_json(const BooleanElement& b) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [f, t] : b.edges()) edges.push_back({f, t});
  return nlohmann::json{{"support", b.support()}, {"edges", std::move(edges)}};
}

nlohmann::json poly_to_json(const Poly& p, std::string_view var_prefix) {
  nlohmann::json vars = nlohmann::json::array();
  for (int i = 1; i <= p.nvars(); ++i)
    vars.push_back(std::string(var_prefix) + std::to_string(i));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exponents", e}, {"coeff", c}});
  return nlohmann::json{{"variables", std::move(vars)}, {"value", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  const auto& vars = j.at("variables");
  Poly p(static_cast<int>(vars.size()));
  for (const auto& term : j.at("value"))
    p.add_term(term.at("exponents").get<std::vector<int>>(), term.at("coeff").get<long long>());
  return p;
}

}  // namespace boolsch
