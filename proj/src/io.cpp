#include "crosscut/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace crosscut {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void bad_line(int no, const std::string& what) {
  fail(Errc::io_error, "line " + std::to_string(no) + ": " + what);
}

}  // namespace

FinitePoset read_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> known;
  bool explicit_elements = false;
  std::vector<std::pair<std::string, std::string>> relations;

  auto intern = [&](const std::string& l, int line_no) {
    if (known.count(l)) return;
    if (explicit_elements)
      fail(Errc::unknown_label, "line " + std::to_string(line_no) + ": unknown label '" + l + "'");
    known.emplace(l, static_cast<int>(labels.size()));
    labels.push_back(l);
  };

  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "elements:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (known.count(toks[i]))
          fail(Errc::duplicate_label,
               "line " + std::to_string(no) + ": label '" + toks[i] + "' appears twice");
        known.emplace(toks[i], static_cast<int>(labels.size()));
        labels.push_back(toks[i]);
      }
      explicit_elements = true;
      continue;
    }
    if (toks.size() != 3 || toks[1] != "<")
      bad_line(no, "expected 'a < b', got '" + line + "'");
    intern(toks[0], no);
    intern(toks[2], no);
    relations.emplace_back(toks[0], toks[2]);
  }
  return FinitePoset::from_relations(labels, relations);
}

FinitePoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return read_poset(in);
}

std::string write_poset(const FinitePoset& p) {
  std::string out = "elements:";
  for (int i = 0; i < p.size(); ++i) {
    out += ' ';
    out += p.label(i);
  }
  out += '\n';
  for (auto [a, b] : p.covers()) {
    out += p.label(a);
    out += " < ";
    out += p.label(b);
    out += '\n';
  }
  return out;
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> known;
  std::vector<std::vector<int>> face_lists;

  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != "facet:") bad_line(no, "expected 'facet: v1 v2 ...', got '" + line + "'");
    if (toks.size() == 1) bad_line(no, "facet line lists no vertices");
    std::vector<int> face;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto it = known.find(toks[i]);
      if (it == known.end()) {
        it = known.emplace(toks[i], static_cast<int>(labels.size())).first;
        labels.push_back(toks[i]);
      }
      face.push_back(it->second);
    }
    face_lists.push_back(std::move(face));
  }

  std::vector<ElementSet> faces;
  const int n = static_cast<int>(labels.size());
  for (const auto& fl : face_lists) {
    ElementSet f(n);
    for (int v : fl) f.set(v);
    faces.push_back(f);
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return read_complex(in);
}

std::string write_complex(const SimplicialComplex& k) {
  std::string out;
  for (const auto& f : k.facets()) {
    out += "facet:";
    for (int v = f.first(); v >= 0; v = f.next(v)) {
      out += ' ';
      out += k.vertex_labels()[v];
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string poset_dot(const FinitePoset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) out += "  " + dot_quote(p.label(i)) + ";\n";
  for (auto [a, b] : p.covers())
    out += "  " + dot_quote(p.label(a)) + " -> " + dot_quote(p.label(b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace crosscut
