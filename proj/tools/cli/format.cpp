#include "format.hpp"

#include <cstdio>

namespace gaussq::cli {
namespace {

std::string witness_text(const PrimeClass& cls) {
  if (cls.rational_prime) return std::to_string(*cls.rational_prime);
  if (cls.divisor) return to_string(*cls.divisor);
  return {};
}

std::string fraction_text(std::int64_t num, std::uint64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string classify_csv(const GaussianInt& z, const PrimeClass& cls) {
  return std::to_string(z.re()) + "," + std::to_string(z.im()) + "," +
         std::string(to_string(cls.tag)) + "," + witness_text(cls);
}

nlohmann::json classify_json(const GaussianInt& z, const PrimeClass& cls) {
  nlohmann::json j = {{"a", z.re()}, {"b", z.im()}, {"class", std::string(to_string(cls.tag))}};
  j["rational_prime"] = cls.rational_prime ? nlohmann::json(*cls.rational_prime) : nlohmann::json();
  j["divisor"] = cls.divisor ? nlohmann::json{{"a", cls.divisor->re()}, {"b", cls.divisor->im()}}
                             : nlohmann::json();
  return j;
}

std::string census_csv(const CensusResult& result) {
  return format_real(result.rho) + "," + std::to_string(result.n) + "," + format_real(result.k) +
         "," + std::to_string(result.k_rounded);
}

nlohmann::json census_json(const CensusResult& result) {
  return {{"sector", result.sector.to_string()}, {"rho", result.rho},
          {"N", result.n},                       {"K", result.k},
          {"K_rounded", result.k_rounded},       {"boundary_hits", result.boundary_hits}};
}

std::string table_row_csv(const TableRow& row) {
  if (row.census) return census_csv(*row.census);
  return format_real(row.rho) + ",skipped," + format_real(row.k) + "," +
         std::to_string(row.k_rounded);
}

nlohmann::json table_row_json(const TableRow& row) {
  nlohmann::json j = {{"rho", row.rho}, {"K", row.k}, {"K_rounded", row.k_rounded}};
  if (row.census) {
    j["N"] = row.census->n;
    j["boundary_hits"] = row.census->boundary_hits;
    j["skipped"] = false;
  } else {
    j["N"] = nullptr;
    j["boundary_hits"] = nullptr;
    j["skipped"] = true;
  }
  return j;
}

std::string quotient_csv(const QuotientResult& result) {
  const auto& g = result.gamma;
  return std::to_string(g.re()) + "," + std::to_string(g.im()) + "," + std::to_string(result.q) +
         "," + fraction_text(g.re(), result.q) + "," + fraction_text(g.im(), result.q) + "," +
         format_real(static_cast<double>(result.value.real())) + "," +
         format_real(static_cast<double>(result.value.imag()));
}

nlohmann::json region_json(const AnnularRegion& region) {
  return {{"sector", region.sector().to_string()},
          {"alpha", region.sector().alpha().radians()},
          {"width", region.sector().width()},
          {"r", region.r()},
          {"R", region.big_r()}};
}

nlohmann::json quotient_json(const QuotientResult& result) {
  const auto& g = result.gamma;
  return {{"gamma", {{"a", g.re()}, {"b", g.im()}}},
          {"q", result.q},
          {"re_exact", fraction_text(g.re(), result.q)},
          {"im_exact", fraction_text(g.im(), result.q)},
          {"re_dec", static_cast<double>(result.value.real())},
          {"im_dec", static_cast<double>(result.value.imag())},
          {"region", region_json(result.region)},
          {"trace", {{"iterations", result.trace.iterations}, {"threshold", result.trace.threshold}}}};
}

}  // namespace gaussq::cli
