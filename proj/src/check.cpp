#include "trileib/check.hpp"

#include <algorithm>
#include <thread>

#include "trileib/errors.hpp"

namespace trileib {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotSquareZero: return "NotSquareZero";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::IdealClosureFailure: return "IdealClosureFailure";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotAnEmbeddingTensor: return "NotAnEmbeddingTensor";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotHomomorphicET: return "NotHomomorphicET";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IntertwiningFailure: return "IntertwiningFailure";
    case ErrorCode::NotANijenhuisElement: return "NotANijenhuisElement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

Error::Error(ErrorCode code, const std::string& what, CheckReport report)
    : std::runtime_error(what),
      code_(code),
      report_(std::make_shared<const CheckReport>(std::move(report))) {}

std::size_t CheckReport::count(const std::string& family) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [&](const Violation& v) { return v.family == family; }));
}

CheckReport merge(std::vector<CheckReport> parts, const CheckOptions& opts) {
  ReportBuilder b(opts);
  for (const auto& p : parts) b.absorb(p);
  return b.finish();
}

ReportBuilder::ReportBuilder(const CheckOptions& opts)
    : cap_(std::max<std::size_t>(opts.violation_cap, 1)), jobs_(std::max(opts.jobs, 1u)) {}

namespace {

void unflatten(std::size_t flat, const std::vector<std::size_t>& dims, std::vector<std::size_t>& idx) {
  for (std::size_t p = dims.size(); p-- > 0;) {
    idx[p] = flat % dims[p];
    flat /= dims[p];
  }
}

// Sweep [begin, end) in lexicographic order, stopping after `budget` hits.
std::vector<Violation> sweep(const std::string& name, const std::vector<std::size_t>& dims,
                             const ReportBuilder::Residual& residual, std::size_t begin,
                             std::size_t end, std::size_t budget) {
  std::vector<Violation> out;
  if (begin >= end) return out;
  std::vector<std::size_t> idx(dims.size());
  unflatten(begin, dims, idx);
  for (std::size_t flat = begin; flat < end; ++flat) {
    Vec r = residual(idx.data());
    if (!is_zero(std::span<const Scalar>(r))) {
      out.push_back({name, idx, std::move(r)});
      if (out.size() >= budget) break;
    }
    for (std::size_t p = dims.size(); p-- > 0;) {
      if (++idx[p] < dims[p]) break;
      idx[p] = 0;
    }
  }
  return out;
}

constexpr std::size_t kMinParallelTuples = 512;

}  // namespace

ReportBuilder& ReportBuilder::family(const std::string& name, const std::vector<std::size_t>& dims,
                                     const Residual& residual) {
  if (saturated()) return *this;
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (total == 0) return *this;
  const std::size_t budget = cap_ + 1 - found_;

  std::vector<std::vector<Violation>> chunks;
  const std::size_t jobs = total < kMinParallelTuples ? 1 : std::min<std::size_t>(jobs_, total);
  if (jobs == 1) {
    chunks.push_back(sweep(name, dims, residual, 0, total, budget));
  } else {
    chunks.resize(jobs);
    std::vector<std::thread> workers;
    const std::size_t step = (total + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = std::min(total, j * step), end = std::min(total, begin + step);
      workers.emplace_back([&, j, begin, end] { chunks[j] = sweep(name, dims, residual, begin, end, budget); });
    }
    for (auto& w : workers) w.join();
  }
  for (auto& chunk : chunks)
    for (auto& v : chunk) {
      if (found_ > cap_) break;
      violations_.push_back(std::move(v));
      ++found_;
    }
  return *this;
}

ReportBuilder& ReportBuilder::add(Violation v) {
  if (!saturated()) {
    violations_.push_back(std::move(v));
    ++found_;
  }
  return *this;
}

ReportBuilder& ReportBuilder::absorb(const CheckReport& other) {
  for (const auto& v : other.violations) add(v);
  // A truncated part hides violations we never saw; count one as a marker.
  if (other.truncated && !saturated()) found_ = cap_ + 1;
  return *this;
}

CheckReport ReportBuilder::finish() const {
  CheckReport r;
  r.truncated = found_ > cap_;
  const std::size_t keep = std::min(cap_, violations_.size());
  r.violations.assign(violations_.begin(), violations_.begin() + keep);
  return r;
}

}  // namespace trileib
