#include "agdmm/error.hpp"

namespace agdmm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoDefaultModulus: return "NoDefaultModulus";
    case Errc::BadModulus: return "BadModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::BadGenerators: return "BadGenerators";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::InvalidDelta: return "InvalidDelta";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::InvalidSolution: return "InvalidSolution";
    case Errc::ApInsufficiency: return "ApInsufficiency";
    case Errc::DInSets: return "DInSets";
    case Errc::MNotInSemigroup: return "MNotInSemigroup";
    case Errc::NoUniqueMultiple: return "NoUniqueMultiple";
    case Errc::MTooSmall: return "MTooSmall";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::NotSquare: return "NotSquare";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NoSolutionInBound: return "NoSolutionInBound";
    case Errc::NotEnoughPlaces: return "NotEnoughPlaces";
    case Errc::SemigroupCurveMismatch: return "SemigroupCurveMismatch";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::PartitionIndivisible: return "PartitionIndivisible";
    case Errc::TooFewResponders: return "TooFewResponders";
    case Errc::DuplicatePlace: return "DuplicatePlace";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::RegistryFrozen: return "RegistryFrozen";
    case Errc::BadInput: return "BadInput";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace agdmm
