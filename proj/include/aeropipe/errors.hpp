#pragma once

#include <stdexcept>
#include <string>

namespace aeropipe {

/// Root of the toolkit's exception hierarchy.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: plans, expressions, inconsistent requests. CLI exit code 1.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Unreadable, missing or corrupt files. CLI exit code 2.
class IoError : public Error {
public:
  using Error::Error;
};

#define AEROPIPE_DEFINE_ERROR(Name, Base)                                      \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  }

// core-mesh
AEROPIPE_DEFINE_ERROR(DegenerateElement, ValidationError);

// io
AEROPIPE_DEFINE_ERROR(MalformedCase, IoError);
AEROPIPE_DEFINE_ERROR(UnsupportedVariable, IoError);
AEROPIPE_DEFINE_ERROR(UnsupportedElement, IoError);
AEROPIPE_DEFINE_ERROR(UnsupportedIdMode, IoError);
AEROPIPE_DEFINE_ERROR(CorruptVariableFile, IoError);
AEROPIPE_DEFINE_ERROR(CorruptContainer, IoError);
AEROPIPE_DEFINE_ERROR(UnsupportedVersion, IoError);
AEROPIPE_DEFINE_ERROR(IncompleteMaterial, IoError);
AEROPIPE_DEFINE_ERROR(CorruptTrace, IoError);
AEROPIPE_DEFINE_ERROR(FileNotFound, IoError);

// config
AEROPIPE_DEFINE_ERROR(CyclicPipeline, ValidationError);
AEROPIPE_DEFINE_ERROR(UnknownFilter, ValidationError);
AEROPIPE_DEFINE_ERROR(IncompletePlan, ValidationError);
AEROPIPE_DEFINE_ERROR(UnknownRegion, ValidationError);
AEROPIPE_DEFINE_ERROR(UnknownDamping, ValidationError);
AEROPIPE_DEFINE_ERROR(ParseError, ValidationError);

// filters
AEROPIPE_DEFINE_ERROR(ShapeError, ValidationError);
AEROPIPE_DEFINE_ERROR(InsufficientSteps, ValidationError);

// solver
AEROPIPE_DEFINE_ERROR(UnassignedElement, ValidationError);
AEROPIPE_DEFINE_ERROR(InvertedElement, ValidationError);
AEROPIPE_DEFINE_ERROR(InterfaceMismatch, ValidationError);
AEROPIPE_DEFINE_ERROR(MissingSource, ValidationError);
AEROPIPE_DEFINE_ERROR(LinearSolveFailure, ValidationError);
AEROPIPE_DEFINE_ERROR(UnknownNode, ValidationError);

// postproc
AEROPIPE_DEFINE_ERROR(InsufficientSamples, ValidationError);

#undef AEROPIPE_DEFINE_ERROR

} // namespace aeropipe
