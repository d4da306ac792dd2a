#pragma once

#include <stdexcept>
#include <string>

namespace agdmm {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  NoDefaultModulus,
  BadModulus,
  DivisionByZero,
  OutOfRange,
  GcdNotOne,
  BadGenerators,
  NotInSemigroup,
  InvalidDelta,
  DuplicateElement,
  InvalidSolution,
  ApInsufficiency,
  DInSets,
  MNotInSemigroup,
  NoUniqueMultiple,
  MTooSmall,
  HypothesisUnmet,
  NotSquare,
  SearchSpaceTooLarge,
  NoSolutionInBound,
  NotEnoughPlaces,
  SemigroupCurveMismatch,
  NotRealizable,
  DimensionMismatch,
  PartitionIndivisible,
  TooFewResponders,
  DuplicatePlace,
  RankDeficient,
  NotInSpan,
  RegistryFrozen,
  BadInput,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

const char* errc_name(Errc code);

}  // namespace agdmm
