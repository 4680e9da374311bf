#include <doctest.h>

#include "fole/error.hpp"
#include "fole/list.hpp"
#include "fixture.hpp"
#include "generators.hpp"

using namespace fole;

TEST_SUITE_BEGIN("list");

TEST_CASE("sum_along the identity changes nothing") {
  const Structure m = fixture::company();
  const IndexedList& sig = m.schema.signature_of("Emp");
  CHECK(sum_along(identity_map(m.attr.types), sig) == sig);
}

TEST_CASE("sum_along composes the assignment pointwise") {
  const Structure m = fixture::company();
  NameMap f = identity_map(m.attr.types);
  f["Str"] = "Text";
  const IndexedList mapped = sum_along(f, m.schema.signature_of("Emp"));
  CHECK(mapped == IndexedList{{{"name", "Text"}, {"id", "Nat"}, {"dept", "Dept"}}});
}

TEST_CASE("sum_along of the empty list is empty") {
  CHECK(sum_along(NameMap{}, IndexedList{}) == IndexedList{});
}

TEST_CASE("sum_along over a missing image throws PartialMap") {
  const Structure m = fixture::company();
  CHECK_THROWS_AS((void)sum_along(NameMap{{"Str", "Text"}}, m.schema.signature_of("Emp")),
                  Error);
}

TEST_CASE("the fixture row classifies against its header") {
  const Structure m = fixture::company();
  CHECK(classify_tuple(m.attr, m.schema.signature_of("Emp"), m.universe.tuple_of("e1")));
  CHECK(classify_tuple(m.attr, m.schema.signature_of("Act"), m.universe.tuple_of("a1")));
}

TEST_CASE("arity mismatch is false, not an error") {
  const Structure m = fixture::company();
  const IndexedList narrow{{{"name", "Alice"}}};
  CHECK_FALSE(classify_tuple(m.attr, m.schema.signature_of("Emp"), narrow));
}

TEST_CASE("a misclassified slot fails the tuple") {
  const Structure m = fixture::company();
  IndexedList row = m.universe.tuple_of("e1");
  row.entries["name"] = "7";  // 7 is a Nat, not a Str
  CHECK_FALSE(classify_tuple(m.attr, m.schema.signature_of("Emp"), row));
}

TEST_CASE("identity signature morphism is ok") {
  const Structure m = fixture::company();
  const IndexedList& sig = m.schema.signature_of("Emp");
  CHECK(check_signature_morphism({sig, sig, identity_map(sig.arity())}).ok());
}

TEST_CASE("single-point signature morphism into the Act header") {
  const Structure m = fixture::company();
  const IndexedList point{{{"x", "Emp"}}};
  CHECK(check_signature_morphism({point, m.schema.signature_of("Act"),
                                  NameMap{{"x", "employee"}}})
            .ok());
  const auto bad = check_signature_morphism({point, m.schema.signature_of("Act"),
                                             NameMap{{"x", "project"}}});
  CHECK(bad.violations == std::vector<Name>{"x"});
}

TEST_CASE("project_tuple along the identity is the tuple") {
  const Structure m = fixture::company();
  const IndexedList& sig = m.schema.signature_of("Act");
  const SignatureMorphism id{sig, sig, identity_map(sig.arity())};
  CHECK(project_tuple(id, m.universe.tuple_of("a1")) == m.universe.tuple_of("a1"));
}

TEST_CASE("projecting the employee slot out of an activity row") {
  const Structure m = fixture::company();
  const SignatureMorphism point{IndexedList{{{"x", "Emp"}}}, m.schema.signature_of("Act"),
                                NameMap{{"x", "employee"}}};
  CHECK(project_tuple(point, m.universe.tuple_of("a1")) == IndexedList{{{"x", "e1"}}});
}

TEST_CASE("projecting onto the empty signature gives the empty tuple") {
  const Structure m = fixture::company();
  const SignatureMorphism to_empty{IndexedList{}, m.schema.signature_of("Emp"), NameMap{}};
  CHECK(project_tuple(to_empty, m.universe.tuple_of("e1")) == IndexedList{});
}

TEST_CASE("project_tuple rejects ill-typed input") {
  const Structure m = fixture::company();
  const SignatureMorphism point{IndexedList{{{"x", "Emp"}}}, m.schema.signature_of("Act"),
                                NameMap{{"x", "project"}}};  // fails preservation
  CHECK_THROWS_AS((void)project_tuple(point, m.universe.tuple_of("a1")), Error);
  const SignatureMorphism id{m.schema.signature_of("Act"), m.schema.signature_of("Act"),
                             identity_map(m.schema.signature_of("Act").arity())};
  CHECK_THROWS_AS((void)project_tuple(id, m.universe.tuple_of("e1")), Error);
}

TEST_CASE("tuples_of the empty signature is the singleton empty tuple") {
  const Structure m = fixture::company();
  CHECK(tuples_of(m.attr, IndexedList{}) == std::set<IndexedList>{IndexedList{}});
}

TEST_CASE("tuples_of a one-column Dept signature") {
  const Structure m = fixture::company();
  CHECK(tuples_of(m.attr, IndexedList{{{"a", "Dept"}}}) ==
        std::set<IndexedList>{IndexedList{{{"a", "d1"}}}});
}

TEST_CASE("an empty-extent factor empties the product") {
  Classification a{{"s", "t"}, {"y"}, {{"s", "y"}}};
  CHECK(tuples_of(a, IndexedList{{{"i", "s"}, {"j", "t"}}}).empty());
}

TEST_CASE("tuples_of rejects foreign sorts and oversized products") {
  const Structure m = fixture::company();
  CHECK_THROWS_AS((void)tuples_of(m.attr, IndexedList{{{"i", "nope"}}}), Error);
  const IndexedList wide{{{"a", "Str"}, {"b", "Str"}, {"c", "Str"}}};
  CHECK_THROWS_AS((void)tuples_of(m.attr, wide, 10), Error);
}

TEST_CASE("sum_along is functorial") {
  testgen::Rng rng(201);
  for (int n = 0; n < 200; ++n) {
    const NameSet a = testgen::fresh_names("a", rng.between(0, 5));
    const NameSet b = testgen::fresh_names("b", rng.between(1, 5));
    const NameSet c = testgen::fresh_names("c", rng.between(1, 5));
    const NameMap f = testgen::random_total_map(rng, a, b);
    const NameMap g = testgen::random_total_map(rng, b, c);
    IndexedList list;
    if (!a.empty())
      for (int i = rng.between(0, 4); i > 0; --i)
        list.entries.emplace("i" + std::to_string(i), rng.pick(a));
    CHECK(sum_along(identity_map(a), list) == list);
    CHECK(sum_along(g, sum_along(f, list)) == sum_along(compose_maps(f, g), list));
  }
}

TEST_CASE("classify_tuple agrees with membership in tuples_of") {
  testgen::Rng rng(202);
  for (int n = 0; n < 150; ++n) {
    const Classification a = testgen::random_classification(rng, "s", "v", 3, 4);
    if (a.types.empty()) continue;
    IndexedList sig;
    for (int i = rng.between(0, 3); i > 0; --i)
      sig.entries.emplace("i" + std::to_string(i), rng.pick(a.types));
    const auto all = tuples_of(a, sig);
    // every enumerated tuple classifies; every same-arity candidate agrees
    for (const IndexedList& t : all) CHECK(classify_tuple(a, sig, t));
    if (!a.instances.empty()) {
      IndexedList candidate;
      for (const Name& index : sig.arity())
        candidate.entries.emplace(index, rng.pick(a.instances));
      CHECK(classify_tuple(a, sig, candidate) == all.contains(candidate));
    }
  }
}

TEST_CASE("projection preserves classification") {
  testgen::Rng rng(203);
  const Structure m = fixture::company();
  const IndexedList& sig = m.schema.signature_of("Act");
  for (int n = 0; n < 100; ++n) {
    IndexedList sub_sig;
    NameMap h;
    for (const Name& index : sig.arity())
      if (rng.chance(0.5)) {
        sub_sig.entries.emplace("p_" + index, sig.at(index));
        h.emplace("p_" + index, index);
      }
    const SignatureMorphism sub{sub_sig, sig, h};
    REQUIRE(check_signature_morphism(sub).ok());
    for (const IndexedList& tuple : tuples_of(m.attr, sig))
      CHECK(classify_tuple(m.attr, sub_sig, project_tuple(sub, tuple)));
  }
}

TEST_CASE("the tuple count is the product of extent sizes") {
  testgen::Rng rng(204);
  for (int n = 0; n < 100; ++n) {
    const Classification a = testgen::random_classification(rng, "s", "v", 3, 4);
    if (a.types.empty()) continue;
    IndexedList sig;
    for (int i = rng.between(0, 3); i > 0; --i)
      sig.entries.emplace("i" + std::to_string(i), rng.pick(a.types));
    std::size_t expected = 1;
    for (const auto& [index, sort] : sig.entries) expected *= extent(a, sort).size();
    CHECK(tuples_of(a, sig).size() == expected);
  }
}

TEST_SUITE_END();
