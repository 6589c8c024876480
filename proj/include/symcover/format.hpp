#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symcover/class_algebra.hpp"
#include "symcover/covering.hpp"
#include "symcover/kronecker_support.hpp"
#include "symcover/sn_characters.hpp"
#include "symcover/verification.hpp"

namespace symcover {

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

std::string format_table(const CharacterTable& table, Format format);
std::string format_decomposition(const Decomposition& decomposition, Format format);
std::string format_support(const SupportSet& support, unsigned k, Format format);
std::string format_report(const CoveringReport& report, Format format);
std::string format_verification(const std::vector<VerificationReport>& reports, Format format);

}  // namespace symcover
