#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "fole/error.hpp"
#include "fole/model_io.hpp"
#include "fixture.hpp"
#include "generators.hpp"

using namespace fole;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_SUITE_BEGIN("model_io");

TEST_CASE("parse of emit is the identity on structures") {
  const Structure m = fixture::company();
  CHECK(parse_model(emit_model(m)) == m);
}

TEST_CASE("emit of parse is the identity on canonical documents") {
  const std::string canonical = emit_model(fixture::company());
  CHECK(emit_model(parse_model(canonical)) == canonical);
}

TEST_CASE("the checked-in fixture file is the canonical emission") {
  const std::string on_disk = slurp(std::string(FOLE_DATA_DIR) + "/company.fole");
  CHECK(on_disk == emit_model(fixture::company()));
}

TEST_CASE("the empty model round-trips") {
  const Structure empty;
  CHECK(parse_model(emit_model(empty)) == empty);
}

TEST_CASE("random structures round-trip through the document format") {
  testgen::Rng rng(801);
  for (int n = 0; n < 80; ++n) {
    const Structure m = testgen::random_structure(rng);
    CHECK(parse_model(emit_model(m)) == m);
  }
}

TEST_CASE("malformed JSON is a ParseError with a position") {
  try {
    (void)parse_model("{\"sorts\": [");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("document defects are validation errors") {
  const Structure m = fixture::company();

  // dangling incidence reference
  Structure bad = m;
  bad.attr.incidence.emplace("Str", "nope");
  CHECK_THROWS_AS((void)parse_model(emit_model(bad)), Error);

  // missing tuple for a declared key
  Structure missing = m;
  missing.universe.tuples.erase("e1");
  CHECK_THROWS_AS((void)parse_model(emit_model(missing)), Error);

  // non-object document
  CHECK_THROWS_AS((void)parse_model("[1, 2]"), Error);
}

TEST_CASE("reserved prefixes are rejected in user input") {
  Structure m = fixture::company();
  m.attr.types.insert("E:Sneaky");
  m.schema.sorts.insert("E:Sneaky");
  CHECK_THROWS_AS((void)parse_model(emit_model(m)), Error);

  Structure self_index = fixture::company();
  self_index.schema.signatures["Emp"].entries.emplace(kSelfIndex, "Str");
  self_index.universe.tuples["e1"].entries.emplace(kSelfIndex, "Alice");
  CHECK_THROWS_AS((void)parse_model(emit_model(self_index)), Error);

  // so an embedded model cannot be re-ingested
  CHECK_THROWS_AS((void)parse_model(emit_model(key_embed(fixture::company()))), Error);
}

TEST_CASE("names with control characters are rejected") {
  Structure m = fixture::company();
  m.attr.instances.insert("bad\tname");
  m.universe.values.insert("bad\tname");
  CHECK_THROWS_AS((void)parse_model(emit_model(m)), Error);
}

TEST_CASE("morphism documents parse and assemble") {
  const std::string text = R"({
  "sourceRef": "a.fole",
  "targetRef": "b.fole",
  "r": [["Emp", "Emp"]],
  "f": [["Str", "Str"]],
  "k": [["e1", "e1"]],
  "g": [["Alice", "Alice"]]
})";
  const MorphismDocument doc = parse_morphism(text);
  CHECK(doc.source_ref == "a.fole");
  CHECK(doc.r == NameMap{{"Emp", "Emp"}});
  const StructureMorphism phi =
      assemble_morphism(doc, fixture::company(), fixture::company());
  CHECK(phi.key_map == NameMap{{"e1", "e1"}});
}

TEST_CASE("a morphism document mapping a name twice is rejected") {
  const std::string text = R"({
  "sourceRef": "a.fole", "targetRef": "b.fole",
  "r": [["Emp", "Emp"], ["Emp", "Act"]], "f": [], "k": [], "g": []
})";
  CHECK_THROWS_AS((void)parse_morphism(text), Error);
}

TEST_CASE("plain tables print without a key column") {
  const Table table = tabular_interpretation(fixture::company(), "Emp");
  CHECK(emit_table_csv(table) == "dept,id,name\r\nd1,7,Alice\r\n");
}

TEST_CASE("embedded tables print the self column first, tags erased") {
  const Table table = key_embedded_table(fixture::company(), "Emp");
  CHECK(emit_table_csv(table) ==
        std::string(kSelfIndex) + ",dept,id,name\r\ne1,d1,7,Alice\r\n");
}

TEST_CASE("csv quoting follows the comma/quote/newline rule") {
  Table table;
  table.signature.entries.emplace("a", "Str");
  table.keys.insert("k");
  table.rows["k"] = IndexedList{{{"a", "he said \"hi\", twice"}}};
  CHECK(emit_table_csv(table) == "a\r\n\"he said \"\"hi\"\", twice\"\r\n");
}

TEST_CASE("dot output lists nodes then labeled edges") {
  OlogGraph graph;
  graph.nodes = {"A", "B"};
  graph.edges.insert({"A", {"A", "x"}, "B"});
  CHECK(emit_olog_dot(graph) ==
        "digraph olog {\n  \"A\";\n  \"B\";\n  \"A\" -> \"B\" [label=\"(A,x)\"];\n}\n");
}

TEST_SUITE_END();
