#pragma once

// JSON documents for rings, orbits, toric data and filtered complexes.
// Rationals travel as strings ("3/2") or JSON integers on input and always as
// strings on output; Novikov elements use the text grammar.

#include <json.hpp>

#include "hamfix/ls_selector.hpp"
#include "hamfix/novikov.hpp"
#include "hamfix/quantum_ring.hpp"
#include "hamfix/root_system.hpp"
#include "hamfix/toric.hpp"

namespace hamfix::io {

using Json = nlohmann::ordered_json;

Rational rational_from(const Json& j, const char* what);
Integer integer_from(const Json& j, const char* what);
int int_from(const Json& j, const char* what);
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const qla::QVector& v);
Json to_json(const qla::ZVector& v);
Novikov novikov_from(const Json& j, const char* what);

/// Required member lookup with a readable InvalidInput error.
const Json& member(const Json& obj, const char* key);

/// {"basis": [{"label", "degree"}], "dim_n", "period", "fundamental", "point",
///  "products": [{"left", "right", "terms": [{"label", "exponent", "coefficient"}]}]}
/// Unlisted pairs are zero; a pair given in one order is used for both.
RingPtr ring_from_json(const Json& j);
Json ring_to_json(const QuantumRing& ring);

/// {"label": "novikov text", ...} over the ring basis.
GradedClass class_from_json(const RingPtr& ring, const Json& j);
Json class_to_json(const GradedClass& a);

/// {"type", "rank", "lambda"}
OrbitSpec orbit_from_json(const Json& j);

/// {"k", "n", "weights", "tau"}
ToricSpec toric_from_json(const Json& j);
Json toric_to_json(const ToricSpec& spec);

/// {"generators": [{"label", "degree", "level"}],
///  "boundary": [[target_label, source_label, coefficient], ...]}
FilteredComplex complex_from_json(const Json& j);
Json complex_to_json(const FilteredComplex& c);

/// {"label": coefficient, ...}; the degree is read off the generators.
HomologyClass homology_class_from_json(const FilteredComplex& c, const Json& j);

}  // namespace hamfix::io
