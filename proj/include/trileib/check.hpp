#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "trileib/scalar.hpp"

namespace trileib {

struct Violation {
  std::string family;
  std::vector<std::size_t> tuple;  // basis indices, in the identity's variable order
  Vec residual;                    // lhs - rhs
};

struct CheckReport {
  std::vector<Violation> violations;
  bool truncated = false;  // more violations existed than the cap allowed

  bool passed() const { return violations.empty(); }
  std::size_t count(const std::string& family) const;
  bool has_family(const std::string& family) const { return count(family) > 0; }
};

struct CheckOptions {
  std::size_t violation_cap = 32;
  unsigned jobs = 1;
};

/// Merge in argument order, truncating the result to the cap.
CheckReport merge(std::vector<CheckReport> parts, const CheckOptions& opts);

/// Sweeps identity families over boxes of basis tuples. Each family's tuple
/// space is cut into contiguous chunks, one per job; chunks are concatenated
/// in order, so the resulting report does not depend on the job count.
class ReportBuilder {
 public:
  using Residual = std::function<Vec(const std::size_t* idx)>;

  explicit ReportBuilder(const CheckOptions& opts);

  ReportBuilder& family(const std::string& name, const std::vector<std::size_t>& dims,
                        const Residual& residual);
  /// Records an already computed violation (used by single-shot checks).
  ReportBuilder& add(Violation v);
  ReportBuilder& absorb(const CheckReport& other);

  bool saturated() const { return found_ > cap_; }
  CheckReport finish() const;

 private:
  std::size_t cap_;
  unsigned jobs_;
  std::size_t found_ = 0;
  std::vector<Violation> violations_;
};

}  // namespace trileib
