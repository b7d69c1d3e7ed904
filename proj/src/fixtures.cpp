#include "crosscut/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "crosscut/io.hpp"

namespace crosscut::fixtures {

namespace {

FinitePoset build(std::initializer_list<const char*> labels,
                  std::initializer_list<std::pair<const char*, const char*>> rels) {
  std::vector<std::string> ls;
  for (auto* l : labels) ls.emplace_back(l);
  std::vector<std::pair<std::string, std::string>> rs;
  for (auto& [a, b] : rels) rs.emplace_back(a, b);
  return FinitePoset::from_relations(ls, rs);
}

}  // namespace

FinitePoset ex1() {
  return build({"0", "1", "2", "3", "4", "5", "6", "7"},
               {{"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"},
                {"2", "5"}, {"2", "6"}, {"2", "7"},
                {"3", "5"}, {"3", "6"}, {"3", "7"},
                {"4", "6"}, {"4", "7"}});
}

FinitePoset ex1_minus_4() {
  return build({"0", "1", "2", "3", "5", "6", "7"},
               {{"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"},
                {"2", "5"}, {"2", "6"}, {"2", "7"},
                {"3", "5"}, {"3", "6"}, {"3", "7"}});
}

FinitePoset chain2() { return build({"0", "1"}, {{"0", "1"}}); }

FinitePoset single() { return build({"0"}, {}); }

FinitePoset q3() { return build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }

FinitePoset ex3() {
  return build({"0", "1", "2", "3", "4"},
               {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"1", "3"}, {"1", "4"}});
}

SimplicialComplex two_triangles() {
  std::vector<std::string> labels = {"a", "b", "c", "d"};
  std::vector<ElementSet> faces = {ElementSet::of(4, {0, 1, 2}), ElementSet::of(4, {1, 2, 3})};
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

void write_fixture_files(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto emit = [&](const std::string& name, const std::string& body) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot write fixture '" + name + "' into '" + dir + "'");
    out << body;
  };
  emit("EX1.poset", write_poset(ex1()));
  emit("EX1p.poset", write_poset(ex1_minus_4()));
  emit("CHAIN2.poset", write_poset(chain2()));
  emit("SINGLE.poset", write_poset(single()));
  emit("Q3.poset", write_poset(q3()));
  emit("EX3.poset", write_poset(ex3()));
  emit("twotri.complex", write_complex(two_triangles()));
}

}  // namespace crosscut::fixtures
