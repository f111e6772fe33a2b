#pragma once

#include <string>

#include "json.hpp"

#include "complicial/complex.hpp"
#include "complicial/nerve.hpp"
#include "complicial/omega.hpp"
#include "complicial/stratified.hpp"
#include "complicial/wedge.hpp"

namespace complicial {

using Json = nlohmann::ordered_json;

// Readers throw ParseError with a path to the offending field.

// {label: coeff} in basis order.
Json chain_to_json(const DirectedComplex& k, const Chain& c);
Chain chain_from_json(const DirectedComplex& k, int dim, const Json& j, const std::string& path = "$");

// {dims: [[labels]], boundary: {label: {label: coeff}}, augmentation: {label: coeff}}
Json complex_to_json(const DirectedComplex& k);
ComplexPtr complex_from_json(const Json& j);

// {source, target, image: {label: {label: coeff}}}
Json morphism_to_json(const ComplexMorphism& f);
ComplexMorphism morphism_from_json(const Json& j);

// [[minus, plus], ...] level by level.
Json nu_to_json(const DirectedComplex& k, const NuElement& x);
NuElement nu_from_json(const DirectedComplex& k, const Json& j, const std::string& path = "$");

// {complex, elements, dims, d_minus, d_plus, compositions: [[level, left, right, result]]}
Json omega_to_json(const OmegaTable& t);
// Rebuilds the table from its complex and elements.
OmegaTable omega_from_json(const Json& j);

// {max_dim, counts, elements: [[{atom label: target index}]], thin: [[bool]]}
Json nerve_to_json(const Nerve& n);

// {dims: [sizes], faces, degeneracies, thin}
Json stratified_to_json(const StratifiedSet& s);
StratifiedSet stratified_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);
Json loop_freeness_to_json(const DirectedComplex& k, const LoopFreeness& l);
Json report_to_json(const ComplicialReport& r);
Json report_to_json(const IdentitiesReport& r);

// Parses text; malformed input becomes ParseError with the byte offset.
Json parse_json(const std::string& text);

}  // namespace complicial
