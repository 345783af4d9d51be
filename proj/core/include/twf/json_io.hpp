#pragma once

#include <string>

#include "twf/transforms.hpp"

namespace twf {

/// JSON conventions: complex numbers as [re, im]; matrices row-major nested
/// arrays; sign tables as +-1 integer matrices.
std::string spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const std::string& text);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string real_matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd real_matrix_from_json(const std::string& text);

/// CSV rows "c_1,...,c_2n,re,im" with a header line.
std::string phase_function_to_csv(const GroupSpec& spec, const PhaseFunction& f);
std::string phase_function_to_json(const GroupSpec& spec, const PhaseFunction& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace twf
