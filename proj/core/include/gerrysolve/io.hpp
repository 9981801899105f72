#pragma once

#include <string>

#include "gerrysolve/oracle.hpp"

namespace gerrysolve {

// Canonical, diff-stable text form: keys sorted, voters by id, edges
// lexicographic, costs and budgets as exact rational strings. Parsing a
// canonical document and serializing it again is byte-identical.

std::string serialize_instance(const ProblemInstance& inst);
ProblemInstance parse_instance(const std::string& text);

std::string serialize_plan(const ProblemInstance& inst, const MovePlan& plan);
MovePlan parse_plan(const ProblemInstance& inst, const std::string& text);

std::string serialize_x3c(const X3CInstance& x3c);
X3CInstance parse_x3c(const std::string& text);

std::string serialize_2dcp(const TwoDCPInstance& dcp);
TwoDCPInstance parse_2dcp(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gerrysolve
