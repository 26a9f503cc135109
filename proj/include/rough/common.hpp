#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace rough {

using cplx = std::complex<double>;

enum class ErrorKind { config, geometry, mesh, specfun, fem, ntd, zerofind, io };

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
// pure per index, so the result does not depend on scheduling. The first
// exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

int hardware_threads();

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace rough
