#pragma once

#include <stdexcept>
#include <string>

namespace panellift {

/// Base class for all library errors. `code()` is a stable, machine-readable
/// identifier that the CLI maps to exit statuses and JSON error documents.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension_mismatch", what) {}
};

struct NonFiniteInput : Error {
    explicit NonFiniteInput(const std::string& what)
        : Error("non_finite_input", what) {}
};

struct InvalidArgument : Error {
    InvalidArgument(std::string code, const std::string& what)
        : Error(std::move(code), what) {}
};

struct SvdConvergenceError : Error {
    explicit SvdConvergenceError(const std::string& what)
        : Error("svd_non_convergence", what) {}
};

struct GramSingular : Error {
    explicit GramSingular(const std::string& what)
        : Error("gram_singular", what) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what)
        : Error("non_convergence", what) {}
};

struct MultiTreatmentUnsupported : Error {
    explicit MultiTreatmentUnsupported(const std::string& what)
        : Error("multi_treatment_unsupported", what) {}
};

struct ZeroPerpProjection : Error {
    explicit ZeroPerpProjection(const std::string& what)
        : Error("zero_perp_projection", what) {}
};

struct TargetRankUnreachable : Error {
    explicit TargetRankUnreachable(const std::string& what)
        : Error("target_rank_unreachable", what) {}
};

struct EmptyPattern : Error {
    explicit EmptyPattern(const std::string& what)
        : Error("empty_pattern", what) {}
};

struct Collinear : Error {
    explicit Collinear(const std::string& what)
        : Error("collinear", what) {}
};

struct EmptyControlRow : Error {
    explicit EmptyControlRow(const std::string& what)
        : Error("empty_control_row", what) {}
};

struct EmptyControlCol : Error {
    explicit EmptyControlCol(const std::string& what)
        : Error("empty_control_col", what) {}
};

struct PatternUnsupported : Error {
    explicit PatternUnsupported(const std::string& what)
        : Error("pattern_unsupported", what) {}
};

struct NoControls : Error {
    explicit NoControls(const std::string& what)
        : Error("no_controls", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io_error", what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config_error", what) {}
};

} // namespace panellift
