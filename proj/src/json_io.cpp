// SPDX-License-Identifier: MIT
#include "cardsig/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cardsig/error.hpp"
#include "cardsig/rational.hpp"

namespace cardsig {

namespace {

bool is_integer_literal(const std::string& t) {
  size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Rat rat_from_json(const Json& v, const char* what) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  throw Error(Err::ValidationFailure,
              std::string(what) + " must be a \"num/den\" string or an integer");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Err::ValidationFailure, std::string("missing \"") + key + "\" field");
  }
  return j.at(key);
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto bad = [&] {
    return Error(Err::ValidationFailure, "malformed rational literal \"" + s + "\"");
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
  Rat r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) {
    throw Error(Err::ValidationFailure, "zero denominator in rational \"" + s + "\"");
  }
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) {
    arr.push_back({{"id", p.id}, {"x", format_rat(p.x)}, {"y", format_rat(p.y)}});
  }
  return Json{{"points", arr}};
}

std::vector<Point> points_from_json(const Json& j) {
  const Json& arr = require(j, "points");
  if (!arr.is_array()) throw Error(Err::ValidationFailure, "\"points\" must be an array");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const Json& e : arr) {
    if (!require(e, "id").is_number_integer()) {
      throw Error(Err::ValidationFailure, "point \"id\" must be an integer");
    }
    Point p;
    p.id = e.at("id").get<int>();
    p.x = rat_from_json(require(e, "x"), "point \"x\"");
    p.y = rat_from_json(require(e, "y"), "point \"y\"");
    pts.push_back(std::move(p));
  }
  return pts;
}

Json graph_to_json(const PslGraph& g) {
  Json doc = points_to_json(g.points);
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc;
}

PslGraph graph_from_json(const Json& j) {
  PslGraph g;
  g.points = points_from_json(j);
  const Json& arr = require(j, "edges");
  if (!arr.is_array()) throw Error(Err::ValidationFailure, "\"edges\" must be an array");
  for (const Json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw Error(Err::ValidationFailure, "each edge must be a pair of vertex ids");
    }
    g.edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
  }
  return g;
}

Json signature_to_json(const CardinalSignature& sig) {
  Json doc = points_to_json(sig.points);
  Json degrees = Json::array();
  for (const auto& [id, q] : sig.degrees) {
    degrees.push_back(
        {{"id", id}, {"n", q.n}, {"s", q.s}, {"e", q.e}, {"w", q.w}});
  }
  doc["degrees"] = std::move(degrees);
  return doc;
}

CardinalSignature signature_from_json(const Json& j) {
  CardinalSignature sig;
  sig.points = points_from_json(j);
  const Json& arr = require(j, "degrees");
  if (!arr.is_array()) throw Error(Err::ValidationFailure, "\"degrees\" must be an array");
  for (const Json& e : arr) {
    int id = require(e, "id").get<int>();
    DegreeQuad q;
    q.n = require(e, "n").get<int>();
    q.s = require(e, "s").get<int>();
    q.e = require(e, "e").get<int>();
    q.w = require(e, "w").get<int>();
    if (!sig.degrees.emplace(id, q).second) {
      throw Error(Err::ValidationFailure,
                  "duplicate degree entry for vertex " + std::to_string(id));
    }
  }
  return sig;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(Err::ValidationFailure, "input is not well-formed JSON");
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::ValidationFailure, "cannot read file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::ValidationFailure, "cannot write file " + path);
  out << text;
  if (!out) throw Error(Err::ValidationFailure, "short write to file " + path);
}

}  // namespace cardsig
