#pragma once

#include <string>

#include "census.hpp"
#include "constructions.hpp"
#include "formulas.hpp"

namespace pc {

enum class Format { json, text, csv };

std::string report_joint(const JointCensus& c, const Field& f, Format fmt);
std::string report_nr(const NrCensus& c, const Field& f, Format fmt);
std::string report_classes(const ValueClassCensus& c, const Field& f, Format fmt);
std::string report_sample(const SampleEstimate& e, const Field& f, Format fmt,
                          const std::string& stat, const std::string& target,
                          const std::string& exact_prob = "");
std::string report_bounds(int n, Format fmt);
std::string report_thresholds(int n_min, int n_max, Format fmt);
std::string report_verify(const VerifyResult& r, const Field& f, Format fmt);
std::string report_matrix_eval(const Matrix& a, Format fmt);

Format format_from_name(std::string_view name);

} // namespace pc
