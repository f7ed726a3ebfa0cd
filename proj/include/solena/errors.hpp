#pragma once

#include <stdexcept>
#include <string>

namespace solena {

// Domain errors carry a stable machine-readable code; the CLI maps any
// Error to exit status 1 with the code in a JSON object on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : Error("DimensionMismatch", what) {}
};

struct TorsionQuotient : Error {
  explicit TorsionQuotient(const std::string& factor)
      : Error("TorsionQuotient", "quotient has torsion, invariant factor " + factor),
        invariant_factor(factor) {}
  std::string invariant_factor;
};

struct NonCompactProduct : Error {
  explicit NonCompactProduct(const std::string& what =
                                 "dual of an infinite power needs a compact "
                                 "(resp. discrete) base")
      : Error("NonCompactProduct", what) {}
};

struct NotAContinuum : Error {
  explicit NotAContinuum(const std::string& what =
                             "indecomposability needs a compact connected group")
      : Error("NotAContinuum", what) {}
};

struct InvalidCertificate : Error {
  explicit InvalidCertificate(const std::string& what)
      : Error("InvalidCertificate", what) {}
};

struct ZeroPoint : Error {
  explicit ZeroPoint(const std::string& what = "no circle through the origin")
      : Error("ZeroPoint", what) {}
};

struct NonPrimeInput : Error {
  explicit NonPrimeInput(const std::string& what) : Error("NonPrimeInput", what) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

struct InvalidState : Error {
  explicit InvalidState(const std::string& what) : Error("InvalidState", what) {}
};

struct IllegalMove : Error {
  IllegalMove(int player, std::size_t round, const std::string& reason)
      : Error("IllegalMove", "player " + std::to_string(player) + ", round " +
                                 std::to_string(round) + ": " + reason),
        player(player), round(round), reason(reason) {}
  int player;
  std::size_t round;
  std::string reason;
};

}  // namespace solena
