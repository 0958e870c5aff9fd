#include "fanoturan/report.hpp"

#include <algorithm>

namespace fanoturan {

int emit_report(std::span<const Certificate> certs, ReportFormat format, std::ostream& out) {
  const int failures = static_cast<int>(std::count_if(certs.begin(), certs.end(), [](const auto& c) { return !c.pass; }));
  if (format == ReportFormat::json) {
    auto array = nlohmann::json::array();
    for (const auto& c : certs) array.push_back(to_json(c));
    out << array.dump(2) << '\n';
    return failures;
  }
  if (certs.empty()) {
    out << "no claims run\n";
    return 0;
  }
  for (const auto& c : certs) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.claim << "  visited " << c.visited << "/" << c.space << "  "
        << c.elapsed_ms << " ms";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << certs.size() << " claim(s), " << failures << " failure(s)\n";
  return failures;
}

}  // namespace fanoturan
