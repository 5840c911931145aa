#pragma once

#include <string>

#include "abelcat/diagram.hpp"
#include "abelcat/fp_category.hpp"

namespace abelcat {

/* A validated category document: a coefficient ring, named objects given by
   presentation, named arrows between them, and the claims to check. */
struct InputDocument {
  RingSpec ring;
  Diagram diagram;
  std::vector<std::string> subcategory;  // object names; may be empty
};

/* Parse and validate JSON text against the category.  Every object is
   interned and every morphism passes make_morphism.  Failures throw
   AbelError(parse) whose message starts with the JSON path of the offending
   value, e.g. "/morphisms/f/matrix: ...". */
InputDocument parse_input(FpCategory& c, const std::string& text);

/* Canonical serialization: fixed key order, name-sorted maps, commute
   assertions before exact assertions, implicit modular relations omitted.
   parse_input(serialize_input(doc)) reproduces doc exactly. */
std::string serialize_input(FpCategory& c, const InputDocument& doc);

}  // namespace abelcat
