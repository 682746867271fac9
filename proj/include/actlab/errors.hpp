#pragma once

#include <stdexcept>
#include <string>

namespace actlab {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAssociative : Error {
  int s, t, u;
  NotAssociative(int s_, int t_, int u_)
      : Error("monoid table is not associative at (" + std::to_string(s_) +
              ", " + std::to_string(t_) + ", " + std::to_string(u_) + ")"),
        s(s_), t(t_), u(u_) {}
};

struct IdentityLawFails : Error {
  int s;
  explicit IdentityLawFails(int s_)
      : Error("identity law fails at element " + std::to_string(s_)), s(s_) {}
};

struct IdentityActionFails : Error {
  int element;
  explicit IdentityActionFails(int a)
      : Error("identity does not act trivially on element " + std::to_string(a)),
        element(a) {}
};

struct CompatibilityFails : Error {
  int a, s, t;
  CompatibilityFails(int a_, int s_, int t_)
      : Error("action is not compatible at (a=" + std::to_string(a_) +
              ", s=" + std::to_string(s_) + ", t=" + std::to_string(t_) + ")"),
        a(a_), s(s_), t(t_) {}
};

struct MixedMonoids : Error {
  MixedMonoids() : Error("acts are not over the same monoid") {}
};

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("generating set must be nonempty") {}
};

struct NotProper : Error {
  explicit NotProper(const std::string& what = "subact must be proper")
      : Error(what) {}
};

struct UnknownClaim : Error {
  std::string id;
  explicit UnknownClaim(const std::string& id_)
      : Error("unknown claim id: " + id_), id(id_) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace actlab
