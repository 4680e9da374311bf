#pragma once

#include "fole/structure.hpp"

namespace fixture {

// A small company data model: Employee, Department and Project entities, a
// many-to-many works-on relationship reified as the Activity entity, and a
// works-for relationship reduced to Employee's dept attribute. Emp, Dept and
// Proj double as sorts, so their keys are foreign-key values (the mixed
// overlap); Str, Nat and Date are plain data sorts.
inline fole::Structure company() {
  using fole::IndexedList;
  fole::Structure m;

  m.ent.types = {"Emp", "Dept", "Proj", "Act"};
  m.ent.instances = {"e1", "d1", "p1", "a1"};
  m.ent.incidence = {{"Emp", "e1"}, {"Dept", "d1"}, {"Proj", "p1"}, {"Act", "a1"}};

  m.attr.types = {"Str", "Nat", "Date", "Dept", "Emp", "Proj"};
  m.attr.instances = {"Alice", "7", "d1", "2013-01-01", "design", "e1",
                      "p1",    "Sales", "3", "Berlin", "Apollo", "9", "100"};
  m.attr.incidence = {
      {"Str", "Alice"},  {"Str", "design"}, {"Str", "Sales"}, {"Str", "Berlin"},
      {"Str", "Apollo"}, {"Nat", "7"},      {"Nat", "3"},     {"Nat", "9"},
      {"Nat", "100"},    {"Date", "2013-01-01"},
      {"Dept", "d1"},    {"Emp", "e1"},     {"Proj", "p1"},
  };

  m.schema.entity_types = m.ent.types;
  m.schema.sorts = m.attr.types;
  m.schema.signatures["Emp"] =
      IndexedList{{{"name", "Str"}, {"id", "Nat"}, {"dept", "Dept"}}};
  m.schema.signatures["Dept"] =
      IndexedList{{{"name", "Str"}, {"id", "Nat"}, {"location", "Str"}}};
  m.schema.signatures["Proj"] =
      IndexedList{{{"name", "Str"}, {"id", "Nat"}, {"budget", "Nat"}}};
  m.schema.signatures["Act"] = IndexedList{{{"entry_date", "Date"},
                                            {"job_descr", "Str"},
                                            {"employee", "Emp"},
                                            {"project", "Proj"}}};

  m.universe.keys = m.ent.instances;
  m.universe.values = m.attr.instances;
  m.universe.tuples["e1"] =
      IndexedList{{{"name", "Alice"}, {"id", "7"}, {"dept", "d1"}}};
  m.universe.tuples["d1"] =
      IndexedList{{{"name", "Sales"}, {"id", "3"}, {"location", "Berlin"}}};
  m.universe.tuples["p1"] =
      IndexedList{{{"name", "Apollo"}, {"id", "9"}, {"budget", "100"}}};
  m.universe.tuples["a1"] = IndexedList{{{"entry_date", "2013-01-01"},
                                         {"job_descr", "design"},
                                         {"employee", "e1"},
                                         {"project", "p1"}}};
  return m;
}

}  // namespace fixture
