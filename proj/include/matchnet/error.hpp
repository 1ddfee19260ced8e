#pragma once

#include <stdexcept>
#include <string>

namespace matchnet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generator or construction parameters (zero sizes, m < 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input graph lacks a required structural property (not a tree, not connected, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Pebble configuration or permutation does not fit the network / graph.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Routing task that the requested router cannot serve (e.g. too many tracked pebbles).
class TaskError : public Error {
 public:
  using Error::Error;
};

/// Size cap of a verifier or oracle exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (a construction emitted something invalid).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized artifact. `stage()` is -1 when not tied to a stage.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int stage = -1)
      : Error(stage < 0 ? what : what + " (stage " + std::to_string(stage) + ")"), stage_(stage) {}
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

}  // namespace matchnet
