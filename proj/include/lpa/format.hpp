#pragma once

#include <string>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/reduce.hpp"

namespace lpa {

// Graph file format (.lpg), line oriented:
//   vertex IDENT+
//   edge IDENT : IDENT -> IDENT
//   bundle IDENT : IDENT -> IDENT
//   # comment
// Identifiers: [A-Za-z_][A-Za-z0-9_]*, all mutually unique, vertices
// declared before use. parse_graph/print_graph round-trip exactly.
Graph parse_graph(const std::string& text);
std::string print_graph(const Graph& g);

// Element expressions:
//   expr     := sign? term (("+"|"-") term)*
//   term     := rational? factor+
//   factor   := atom "*"? | "(" expr ")" "*"?
//   atom     := IDENT | IDENT "[" INT "]"
//   rational := INT ("/" INT)?
// Juxtaposition is the product; "*" is the involution and binds tightest.
// Non-composable products evaluate to zero; unknown identifiers are errors.
Element parse_element(const Graph& g, const std::string& text);

std::string print_path(const Graph& g, const Path& p);        // "e1 e2" or vertex name
std::string print_monomial(const Graph& g, const Monomial& m);
std::string print_element(const Graph& g, const Element& x);  // parse . print = id
std::string token_name(const Graph& g, const GeneratorToken& t);

}  // namespace lpa
