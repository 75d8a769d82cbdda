#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "nilcensus/bounds.hpp"

namespace nilcensus {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// Builds an algebra from the builtin grammar `name(arg)@p` with
/// name ∈ {uniserial, binomial, triangular}.
NilpotentAlgebra parse_builtin_algebra(const std::string& text);

/// Builds an algebra family (grammar without the `@p` suffix) at a prime.
NilpotentAlgebra build_family_at(const std::string& family_text, std::int64_t p);

/// Loads a structured algebra file: fields `p`, `dim`, `basis`,
/// `products` = [{i, j, coords: {basis index → coefficient}}], zero
/// products omitted, indices 0-based.
NilpotentAlgebra load_algebra_file(const std::string& path);

/// Grammar first, file fallback.
NilpotentAlgebra resolve_algebra(const std::string& source);

Json algebra_json(const NilpotentAlgebra& algebra);

Json describe_report(const NilpotentAlgebra& algebra);
Json census_report_json(const NilpotentAlgebra& algebra, const CensusReport& report);
Json bound_report_json(const NilpotentAlgebra& algebra, const BoundReport& report);
Json interpolation_report_json(const std::string& family, const std::vector<std::int64_t>& primes,
                               std::int64_t validation_prime, const QPolynomial& fit);

/// Lossless inverses used by the round-trip guarantees.
CensusReport census_report_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j);

std::string describe_csv(const NilpotentAlgebra& algebra);
std::string census_csv(const NilpotentAlgebra& algebra, const CensusReport& report);
std::string fiber_csv(const NilpotentAlgebra& algebra, const CensusReport& report);
std::string bound_csv(const NilpotentAlgebra& algebra, const BoundReport& report);

/// Smallest t with J ⊆ N_t (0 for the zero ideal).
int stratum_of(const NilpotentAlgebra& algebra, const Subspace& ideal);

}  // namespace nilcensus
