#pragma once

#include <string>

#include "cheegerlab/constants.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/rational.hpp"
#include "cheegerlab/spectral.hpp"
#include "json.hpp"

namespace cheegerlab {

using Json = nlohmann::ordered_json;

/// {"num": n, "den": d, "decimal": n/d}
Json to_json(const Rational& r);
/// Inverse of to_json(Rational); reads only "num" and "den".
Rational rational_from_json(const Json& j);

Json to_json(const Edge& e);
Json to_json(const VertexSubset& s);
Json to_json(const ConstantsRecord& c);
Json to_json(const LambdaPrediction& p);

/// eigenvalues and residual_bound; eigenvectors (one array per eigenvector)
/// only when with_vectors is set.
Json to_json(const Spectrum& s, bool with_vectors = false);

Json to_json(const Check& c);
Json to_json(const BoundsReport& r, bool with_vectors = false);

/// Summary counters plus per-trial records: every trial when all_trials is
/// set, otherwise only the failing ones.
Json to_json(const FuzzSummary& s, bool all_trials = false);

Json to_json(const LowerSharpnessReport& r);
Json to_json(const SearchResult& r);

/// Header "graph_id,n,edges,check,lhs,rhs,slack,pass" plus one row per check.
std::string csv_header();
std::string to_csv_rows(const BoundsReport& r);
/// CSV with a leading trial column, one row per check per trial.
std::string to_csv(const FuzzSummary& s);

/// Aligned plain-text table for terminals.
std::string render_table(const BoundsReport& r);

}  // namespace cheegerlab
