#include "lrcomm/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lrcomm::io {

Seq parse_seq(const std::string& text) {
  Seq out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + tok + "' in '" + text + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad integer '" + tok + "' in '" + text + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput("trailing comma in '" + text + "'");
  return out;
}

namespace {

Seq int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  Seq out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const SkewTableau& t) {
  json j;
  j["outer"] = t.outer().parts();
  j["inner"] = t.inner().parts();
  j["rows"] = t.rows();
  return j;
}

SkewTableau tableau_from_json(const json& j) {
  Partition outer(int_array(field(j, "outer"), "outer"));
  Partition inner(int_array(field(j, "inner"), "inner"));
  const json& rj = field(j, "rows");
  if (!rj.is_array()) throw InvalidInput("rows must be an array of arrays");
  std::vector<Seq> rows;
  for (const auto& r : rj) rows.push_back(int_array(r, "row"));
  return SkewTableau(outer, inner, std::move(rows));
}

json to_json(const Hive& h) {
  json j;
  j["n"] = h.n;
  j["lambda"] = h.lambda;
  j["mu"] = h.mu;
  j["nu"] = h.nu;
  j["u"] = h.u.diagonals();
  return j;
}

Hive hive_from_json(const json& j) {
  const json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<int>() < 0) throw InvalidInput("n must be a nonnegative integer");
  int n = nj.get<int>();
  Seq l = int_array(field(j, "lambda"), "lambda");
  Seq m = int_array(field(j, "mu"), "mu");
  Seq v = int_array(field(j, "nu"), "nu");
  for (const Seq* s : {&l, &m, &v})
    if (static_cast<int>(s->size()) != n) throw InvalidInput("boundary sequences need length n=" + std::to_string(n));
  const json& uj = field(j, "u");
  if (!uj.is_array() || static_cast<int>(uj.size()) != std::max(n - 1, 0))
    throw InvalidInput("u needs one list per diagonal 2..n");
  std::vector<Seq> diags;
  for (std::size_t k = 0; k < uj.size(); ++k) {
    Seq d = int_array(uj[k], "u diagonal");
    if (d.size() != k + 1) throw InvalidInput("u[" + std::to_string(k) + "] needs " + std::to_string(k + 1) + " entries");
    diags.push_back(d);
  }
  return Hive(n, l, m, v, diags);
}

json to_json(const GTPattern& p) { return json(p.rows); }

namespace {
json edges_json(const std::vector<EdgeDelta>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({{"edge", e.edge}, {"delta", e.delta}});
  return a;
}
}  // namespace

json to_json(const SigmaTrace& trace) {
  json a = json::array();
  for (const auto& s : trace.steps)
    a.push_back({{"r", s.r}, {"op", s.op}, {"path_edges", edges_json(s.path_edges)}, {"terminating_level", s.terminating_level}});
  return a;
}

json to_json(const CommuterTrace& trace) {
  json a = json::array();
  for (const auto& s : trace.steps) {
    json dels = json::array();
    for (const auto& d : s.deletions) {
      json path = json::array();
      for (const auto& c : d.path) path.push_back({c.row, c.col});
      const char* type = d.type == DeletionType::i ? "i" : d.type == DeletionType::ii ? "ii" : "iii";
      dels.push_back({{"type", type}, {"terminating_row", d.terminating_row}, {"path", path}});
    }
    a.push_back({{"r", s.r}, {"inner_after", s.inner_after.parts()}, {"new_row", s.new_row}, {"deletions", dels}});
  }
  return a;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace lrcomm::io
