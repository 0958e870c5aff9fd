#pragma once

#include <ostream>
#include <span>

#include "fanoturan/certificate.hpp"

namespace fanoturan {

enum class ReportFormat { text, json };

/// Text: one line per certificate and a closing summary, or "no claims run". JSON: the array of
/// certificates. Returns the number of failing certificates.
int emit_report(std::span<const Certificate> certs, ReportFormat format, std::ostream& out);

}  // namespace fanoturan
