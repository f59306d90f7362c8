// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace cardsig {

// Every failure the library can diagnose, as a closed enumeration so that
// callers (CLI, tests, bindings) can switch on the condition rather than
// parse message text.
enum class Err {
  // geometry
  FewerThanThreePoints,
  DuplicateX,
  DuplicateY,
  CollinearTriple,
  // plane straight-line graphs
  CrossingEdges,
  DanglingEndpoint,
  // signatures
  InconsistentSignature,
  // tilings
  PortMismatch,
  OpenPath,
  BrokenCrossingBlock,
  TooLarge,
  // embedded-graph reduction
  NotCubic,
  NotPlanarEmbedding,
  LoopOrMulti,
  OddCycle,
  LayoutFailure,
  MissingEdge,
  ExtraEdge,
  ColorMismatch,
  // frame synthesis / gadget assembly
  SynthesisFailure,
  OddColoredCount,
  CrossingSelection,
  // general
  ValidationFailure,
  UnsupportedArtifact,
};

const char* to_string(Err e);

// Process exit code for a failure: 2 = validation failure, 3 = count
// mismatch (used by the pipeline verifier directly), 4 = resource limit.
int exit_code(Err e);

// Library-wide exception type carrying the typed condition.  The what()
// string is "<code-name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(cardsig::to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Err code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Err code_;
  std::string detail_;
};

}  // namespace cardsig
