#pragma once

#include <stdexcept>
#include <string>

namespace chowtree {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CHOWTREE_ERROR_TYPE(Name)                                 \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

CHOWTREE_ERROR_TYPE(DimensionMismatch);
CHOWTREE_ERROR_TYPE(ValuationTooLow);
CHOWTREE_ERROR_TYPE(NotFullDimensional);
CHOWTREE_ERROR_TYPE(UnknownVertex);
CHOWTREE_ERROR_TYPE(NotAncestor);
CHOWTREE_ERROR_TYPE(InvalidVertex);
CHOWTREE_ERROR_TYPE(InvalidShape);
CHOWTREE_ERROR_TYPE(ShapeMismatch);
CHOWTREE_ERROR_TYPE(BadLabels);
CHOWTREE_ERROR_TYPE(GenericityFailure);
CHOWTREE_ERROR_TYPE(NotGenericallyDistinct);
CHOWTREE_ERROR_TYPE(ClassMismatch);
CHOWTREE_ERROR_TYPE(MalformedInput);

// Internal consistency failure: a contraction hit a coincidence that is
// impossible for a valid tree. Never caught and handled silently.
CHOWTREE_ERROR_TYPE(ContractionDegenerate);

#undef CHOWTREE_ERROR_TYPE

}  // namespace chowtree
