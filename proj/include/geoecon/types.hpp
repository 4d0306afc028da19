#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoecon {

// Input/config problems (bad files, bad flags). CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical/contract failures during computation. CLI maps these to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Second eigenvalue not simple; scores would be arbitrary.
class DegenerateSpectrum : public ComputationError {
 public:
  explicit DegenerateSpectrum(const std::string& msg) : ComputationError(msg) {}
};

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Dense row-major binary matrix.
struct BinMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> data;

  BinMatrix() = default;
  BinMatrix(std::size_t r, std::size_t c, std::uint8_t fill = 0)
      : rows(r), cols(c), data(r * c, fill) {}

  std::uint8_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const BinMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

enum class Variant { plain, rounded, windowed };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

}  // namespace geoecon
