#ifndef PPLUS_REPORT_IO_HPP
#define PPLUS_REPORT_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pplus/config.hpp"
#include "pplus/expectation.hpp"
#include "pplus/scans.hpp"

namespace pplus {

/// All reals in CSV output are printed with 17 significant digits ("%.17g"),
/// enough to round-trip a double; the fixed formatting underpins the
/// byte-identical reproducibility contract.
std::string format_real(double v);

/// Writes content to path atomically (temp file + rename).
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string series_csv(const ExpectationSeries& series);
std::string scan_csv(const ScanReport& report);
std::string spectrum_csv(const std::vector<cplx>& samples);
std::string tails_csv(const TailsResult& result);

json to_json(const GridSpec& g);
GridSpec grid_spec_from_json(const json& j);
json to_json(const StateSpec& s);
json zero_report_json(const ZeroReport& r);
json strip_bounds_json(const StripBounds& b);

}  // namespace pplus

#endif
