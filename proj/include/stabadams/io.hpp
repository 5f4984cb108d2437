#pragma once

#include <string>

#include "stabadams/integrate.hpp"
#include "stabadams/stability.hpp"
#include "stabadams/synth.hpp"

namespace stabadams {

/// MethodSpec as a JSON document with fixed field order
/// {"k", "p", "epsilon", "beta", "ell", "error_const"}; numbers carry
/// 17 significant digits.
std::string method_to_json(const MethodSpec& method);
MethodSpec method_from_json(const std::string& json_text);

void write_method_file(const MethodSpec& method, const std::string& path);
MethodSpec read_method_file(const std::string& path);

/// CSV with header `phi,re,im`, one row per sample.
std::string locus_to_csv(const LocusCurve& curve);

/// CSV with header `tau,error,status`, rows in the given (decreasing) order.
std::string convergence_to_csv(const ConvergenceReport& report);

/// Standalone SVG: the locus polyline in the lambda*tau plane with axes.
std::string locus_to_svg(const LocusCurve& curve);

/// Standalone SVG: log-log error-vs-tau plot of a convergence study.
std::string convergence_to_svg(const ConvergenceReport& report);

void write_text_file(const std::string& text, const std::string& path);

/// 17-significant-digit decimal rendering used by every emitted file.
std::string format_number(double value);

}  // namespace stabadams
