#pragma once

#include <Eigen/Dense>
#include <string>

namespace cnar::io {

// Shortest round-trip decimal form of a double ("%.17g" trimmed). Used by all
// CSV writers so serialized output is byte-stable.
std::string format_double(double v);

// Write `contents` to `path` atomically (temp file in the same directory,
// then rename).
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

// Dense numeric matrix, comma or whitespace separated, one row per line.
// Lines starting with '#' are skipped.
Eigen::MatrixXd load_matrix_csv(const std::string& path);
std::string matrix_to_csv(const Eigen::MatrixXd& m);
void save_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);

bool file_exists(const std::string& path);

}  // namespace cnar::io
