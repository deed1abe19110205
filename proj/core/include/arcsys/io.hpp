#pragma once

#include <string>
#include <variant>

#include "arcsys/annular.hpp"
#include "arcsys/arc_system.hpp"

namespace arcsys {

// Text form of a class: "U[2,0,3]", "L[]", or the to_string form
// "(U, [2,0,3])", optionally prefixed by endpoints as in "r1->p U[3]".
ArcClass parse_class_text(int n, const std::string& text);

// JSON documents. Classes: {"n", "side", "seq"} plus "from"/"to" for arcs
// not running from p to q. Systems: {"kind": "arc-system", "n", "classes",
// "labels", "matrix"}. Diagrams: {"kind": "annular-diagram",
// "vertex_count", "darts": [{"vertex", "opposite", "next"}], "boundary"}.
std::string class_to_json(const ArcClass& c);
std::string system_to_json(const ArcSystem& sys);
std::string diagram_to_json(const AnnularDiagram& d);

using Document = std::variant<ArcClass, ArcSystem, AnnularDiagram>;

// Throws std::invalid_argument on malformed input. System matrices are
// recomputed and checked against the stored one when present.
Document parse_document(const std::string& text);
ArcClass class_from_json(const std::string& text);
ArcSystem system_from_json(const std::string& text);
AnnularDiagram diagram_from_json(const std::string& text);

}  // namespace arcsys
