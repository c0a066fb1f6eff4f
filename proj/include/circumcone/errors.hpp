#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace circumcone {

/// Base for all recoverable domain errors. `code()` is a stable,
/// machine-readable identifier (snake_case); `what()` adds detail.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, std::string detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

struct NoSignChange : DomainError {
    explicit NoSignChange(const std::string& d = {}) : DomainError("no_sign_change", d) {}
};

struct DegenerateParameters : DomainError {
    explicit DegenerateParameters(const std::string& d = {}) : DomainError("degenerate_parameters", d) {}
};

struct CriticalParameter : DomainError {
    explicit CriticalParameter(const std::string& d = {}) : DomainError("critical_parameter", d) {}
};

struct NonGenericPoint : DomainError {
    explicit NonGenericPoint(const std::string& d = {}) : DomainError("non_generic_point", d) {}
};

struct NotACone : DomainError {
    explicit NotACone(const std::string& d = {}) : DomainError("not_a_cone", d) {}
};

struct ApexOnSurface : DomainError {
    explicit ApexOnSurface(const std::string& d = {}) : DomainError("apex_on_surface", d) {}
};

struct ApexOnConfocalSurface : DomainError {
    explicit ApexOnConfocalSurface(const std::string& d = {}) : DomainError("apex_on_confocal_surface", d) {}
};

struct NegativeSquare : DomainError {
    explicit NegativeSquare(const std::string& d = {}) : DomainError("negative_square", d) {}
};

struct NotOnSurface : DomainError {
    explicit NotOnSurface(const std::string& d = {}) : DomainError("not_on_surface", d) {}
};

struct RankDeficient : DomainError {
    explicit RankDeficient(const std::string& d = {}) : DomainError("rank_deficient", d) {}
};

struct ImaginaryCurve : DomainError {
    explicit ImaginaryCurve(const std::string& d = {}) : DomainError("imaginary_curve", d) {}
};

struct DegenerateRay : DomainError {
    explicit DegenerateRay(const std::string& d = {}) : DomainError("degenerate_ray", d) {}
};

struct InvalidArgument : DomainError {
    explicit InvalidArgument(const std::string& d = {}) : DomainError("invalid_argument", d) {}
};

/// Filesystem/stream failures; the CLI maps these to a distinct exit code.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& d) : std::runtime_error(d) {}
};

}  // namespace circumcone
