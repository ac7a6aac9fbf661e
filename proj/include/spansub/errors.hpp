#pragma once

#include <stdexcept>
#include <string>

namespace spansub {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tuple-system
struct InvalidSystem : Error {
  using Error::Error;
};
struct FamilyNotFound : Error {
  using Error::Error;
};

// connector
struct InvalidDegree : Error {
  using Error::Error;
};
struct ReservoirExhausted : Error {
  using Error::Error;
};

// absorber
struct LinkageFailed : Error {
  using Error::Error;
};
struct AbsorptionFailed : Error {
  using Error::Error;
};

// hamilton
struct NotFound : Error {
  using Error::Error;
};

// instances
struct InfeasibleDensity : Error {
  using Error::Error;
};
struct InvalidSizes : Error {
  using Error::Error;
};

// assembler
struct PreconditionViolated : Error {
  using Error::Error;
};
struct InstanceTooLarge : Error {
  using Error::Error;
};

struct SolveFailed : Error {
  SolveFailed(std::string stage_name, const std::string& what, int attempts_used)
      : Error("solve failed at stage '" + stage_name + "': " + what + " (" +
              std::to_string(attempts_used) + " attempts)"),
        stage(std::move(stage_name)),
        attempts(attempts_used) {}
  std::string stage;
  int attempts = 0;
};

// file formats
struct ParseError : Error {
  using Error::Error;
};

}  // namespace spansub
