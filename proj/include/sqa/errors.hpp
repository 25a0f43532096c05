#pragma once

#include <stdexcept>
#include <string>

namespace sqa {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SQA_ERROR(Name)                                      \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

SQA_ERROR(InvalidQuiver)
SQA_ERROR(NotSquare)
SQA_ERROR(ParseError)
SQA_ERROR(UnknownArrow)
SQA_ERROR(InhomogeneousRelations)
SQA_ERROR(MismatchedVertex)
SQA_ERROR(InternalInconsistency)
SQA_ERROR(NotHomogeneous)
SQA_ERROR(NotFound)
SQA_ERROR(QuotientNotFiniteWithinCap)
SQA_ERROR(InvalidPQ)
SQA_ERROR(TileMismatch)
SQA_ERROR(ClassUnresolvable)
SQA_ERROR(EmptyStar)
SQA_ERROR(RelationViolation)
SQA_ERROR(DimensionCap)
SQA_ERROR(EmptyLevelSet)

#undef SQA_ERROR

}  // namespace sqa
