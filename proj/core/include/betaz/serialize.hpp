#pragma once

#include <nlohmann/json.hpp>

#include "betaz/decomp.hpp"
#include "betaz/filters.hpp"
#include "betaz/frontend.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"
#include "betaz/smooth.hpp"
#include "betaz/windows.hpp"

namespace betaz {

using Json = nlohmann::json;

/// {"num": "p", "den": "q"}.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
/// {"re": {...}, "im": {...}}.
Json gaussian_to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

/// {modulus, residues_pos, residues_neg, threshold, window}; window lists the
/// members inside [-threshold, threshold - 1].
Json to_json(const DefinableSet& s);
DefinableSet set_from_json(const Json& j);

/// {steps: [{re, im, set}], tails: [{coeff, p, q, r, set}]} with polynomial
/// coefficients as decimal strings, low degree first.
Json to_json(const SymbolicSequence& s);
SymbolicSequence sequence_from_json(const Json& j);

Json to_json(const UltrafilterSpec& pt);
Json to_json(const DyadicExpansion& e);
Json to_json(const LevelExpansion& e);
Json to_json(const SeminormValue& v);
Json to_json(const SmoothnessWitness& w);
Json to_json(const SmoothnessVerdict& v);
Json to_json(const HierarchyReport& r);
Json to_json(const LevelChainCertificate& c);
Json to_json(const AxiomReport& r);
Json to_json(const StructureReport& r);
Json to_json(const PointTrace& t);
Json to_json(const WindowSequence& w);
Json to_json(const Profile& p);
/// AST with spans: {kind, span: {line, column, offset, length}, children, ...}.
Json to_json(const dsl::Node& n);

}  // namespace betaz
