#include "orthopress/orf.hpp"

#include <fstream>
#include <sstream>

namespace orthopress {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace

OrfDocument parse_orf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  std::string name;
  std::vector<std::string> ids;
  std::vector<EdgeSpec> edges;
  std::vector<std::tuple<std::string, std::string, int, int>> weight_lines;
  std::optional<int64_t> expect;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "orf") {
      if (toks.size() != 2 || toks[1] != "1")
        throw SyntaxError(lineno, "expected 'orf 1'");
      header = true;
    } else if (!header) {
      throw SyntaxError(lineno, "missing 'orf 1' header");
    } else if (kw == "name") {
      if (toks.size() < 2) throw SyntaxError(lineno, "name needs a value");
      name = toks[1];
      for (size_t i = 2; i < toks.size(); ++i) name += " " + toks[i];
    } else if (kw == "v") {
      if (toks.size() != 2) throw SyntaxError(lineno, "usage: v <id>");
      ids.push_back(toks[1]);
    } else if (kw == "e") {
      if (toks.size() != 4 || toks[3].size() != 1)
        throw SyntaxError(lineno, "usage: e <u> <v> <dir>");
      Dir d;
      if (!dir_from_char(toks[3][0], d))
        throw SyntaxError(lineno, "direction must be one of N E S W");
      edges.push_back({toks[1], toks[2], d});
    } else if (kw == "w") {
      if (toks.size() != 4) throw SyntaxError(lineno, "usage: w <u> <v> <int>");
      int w;
      try {
        w = std::stoi(toks[3]);
      } catch (...) {
        throw SyntaxError(lineno, "weight must be an integer");
      }
      if (w < 1) throw SyntaxError(lineno, "weight must be >= 1");
      weight_lines.push_back({toks[1], toks[2], w, lineno});
    } else if (kw == "expect-area") {
      if (toks.size() != 2) throw SyntaxError(lineno, "usage: expect-area <int>");
      try {
        expect = std::stoll(toks[1]);
      } catch (...) {
        throw SyntaxError(lineno, "expected area must be an integer");
      }
    } else {
      throw SyntaxError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!header) throw SyntaxError(lineno, "empty document");

  OrfDocument doc{OrthoRep::build(ids, edges, name), {}, expect};
  doc.weights.assign(doc.rep.edge_count(), 1);
  for (auto& [u, v, w, ln] : weight_lines) {
    VertexIx a = doc.rep.index_of(u), b = doc.rep.index_of(v);
    int e = a == kNoVertex || b == kNoVertex ? -1 : doc.rep.edge_index(a, b);
    if (e < 0) throw SyntaxError(ln, "weight references a missing edge");
    doc.weights[e] = w;
  }
  return doc;
}

OrfDocument load_orf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_orf(buf.str());
}

std::string serialize_orf(const OrthoRep& rep, const EdgeWeights& weights,
                          std::optional<int64_t> expect_area) {
  std::ostringstream out;
  out << "orf 1\n";
  if (!rep.name().empty()) out << "name " << rep.name() << "\n";
  for (VertexIx v = 0; v < rep.vertex_count(); ++v) out << "v " << rep.id_of(v) << "\n";
  for (const auto& e : rep.edges())
    out << "e " << rep.id_of(e.u) << " " << rep.id_of(e.v) << " " << dir_char(e.dir) << "\n";
  if (!weights.empty())
    for (const auto& e : rep.edges()) {
      int w = weights[rep.edge_index(e.u, e.v)];
      if (w != 1)
        out << "w " << rep.id_of(e.u) << " " << rep.id_of(e.v) << " " << w << "\n";
    }
  if (expect_area) out << "expect-area " << *expect_area << "\n";
  return out.str();
}

std::string serialize_orf(const OrfDocument& doc) {
  return serialize_orf(doc.rep, doc.weights, doc.expect_area);
}

}  // namespace orthopress
