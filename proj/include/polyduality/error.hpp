#ifndef POLYDUALITY_ERROR_HPP
#define POLYDUALITY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polyduality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPolygon : public Error {
 public:
  using Error::Error;
};

/// An edge is shorter than edge_tol, so the perimeter is not differentiable.
class DegenerateEdge : public Error {
 public:
  using Error::Error;
};

class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

class Unnormalizable : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ZeroConstraintGradient : public Error {
 public:
  using Error::Error;
};

class OddN : public Error {
 public:
  using Error::Error;
};

class OutsideRegion : public Error {
 public:
  using Error::Error;
};

class MalformedDescriptors : public Error {
 public:
  using Error::Error;
};

class ZeroArea : public Error {
 public:
  using Error::Error;
};

class NonPositiveLevel : public Error {
 public:
  using Error::Error;
};

class NotTangent : public Error {
 public:
  using Error::Error;
};

class DegenerateRestriction : public Error {
 public:
  using Error::Error;
};

}  // namespace polyduality

#endif  // POLYDUALITY_ERROR_HPP
