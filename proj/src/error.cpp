// SPDX-License-Identifier: MIT
#include "cardsig/error.hpp"

namespace cardsig {

const char* to_string(Err e) {
  switch (e) {
    case Err::FewerThanThreePoints: return "FewerThanThreePoints";
    case Err::DuplicateX: return "DuplicateX";
    case Err::DuplicateY: return "DuplicateY";
    case Err::CollinearTriple: return "CollinearTriple";
    case Err::CrossingEdges: return "CrossingEdges";
    case Err::DanglingEndpoint: return "DanglingEndpoint";
    case Err::InconsistentSignature: return "InconsistentSignature";
    case Err::PortMismatch: return "PortMismatch";
    case Err::OpenPath: return "OpenPath";
    case Err::BrokenCrossingBlock: return "BrokenCrossingBlock";
    case Err::TooLarge: return "TooLarge";
    case Err::NotCubic: return "NotCubic";
    case Err::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case Err::LoopOrMulti: return "LoopOrMulti";
    case Err::OddCycle: return "OddCycle";
    case Err::LayoutFailure: return "LayoutFailure";
    case Err::MissingEdge: return "MissingEdge";
    case Err::ExtraEdge: return "ExtraEdge";
    case Err::ColorMismatch: return "ColorMismatch";
    case Err::SynthesisFailure: return "SynthesisFailure";
    case Err::OddColoredCount: return "OddColoredCount";
    case Err::CrossingSelection: return "CrossingSelection";
    case Err::ValidationFailure: return "ValidationFailure";
    case Err::UnsupportedArtifact: return "UnsupportedArtifact";
  }
  return "UnknownError";
}

int exit_code(Err e) {
  switch (e) {
    case Err::TooLarge:
    case Err::LayoutFailure:
      return 4;  // resource limit
    default:
      return 2;  // validation failure
  }
}

}  // namespace cardsig
