#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gaussq/census.hpp"
#include "gaussq/primality.hpp"
#include "gaussq/quotient.hpp"

// Record layouts for every subcommand. CSV headers and JSON field names are
// fixed; golden tests depend on them.
namespace gaussq::cli {

/// %.10g
std::string format_real(double value);

inline constexpr const char* kCensusHeader = "rho,N,K,K_rounded";
inline constexpr const char* kScatterHeader = "a,b,class";
inline constexpr const char* kQuotientHeader = "gamma_a,gamma_b,q,re_exact,im_exact,re_dec,im_dec";
inline constexpr const char* kClassifyHeader = "a,b,class,witness";
inline constexpr const char* kEstimateHeader = "u,width,K,K_rounded";
inline constexpr const char* kPi3Header = "x,pi3,estimate";

std::string classify_csv(const GaussianInt& z, const PrimeClass& cls);
nlohmann::json classify_json(const GaussianInt& z, const PrimeClass& cls);

std::string census_csv(const CensusResult& result);
nlohmann::json census_json(const CensusResult& result);

std::string table_row_csv(const TableRow& row);
nlohmann::json table_row_json(const TableRow& row);

std::string quotient_csv(const QuotientResult& result);
nlohmann::json quotient_json(const QuotientResult& result);

nlohmann::json region_json(const AnnularRegion& region);

}  // namespace gaussq::cli
