#pragma once

#include <stdexcept>
#include <string>

namespace lsfactors {

/// Base of every error raised by the library. The message is prefixed with
/// the module that raised it, e.g. "[tate] ...".
class error : public std::runtime_error {
public:
    error(const std::string& module, const std::string& what)
        : std::runtime_error("[" + module + "] " + what), module_(module) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

#define LSFACTORS_DEFINE_ERROR(name)                                      \
    class name : public error {                                           \
    public:                                                               \
        using error::error;                                               \
    }

/// Requested data lies outside what the truncation level or the q-power
/// lattice can represent exactly.
LSFACTORS_DEFINE_ERROR(precision_error);
/// Numeric evaluation hit a pole.
LSFACTORS_DEFINE_ERROR(pole_error);
/// Character data is inconsistent with its claimed conductor/orders.
LSFACTORS_DEFINE_ERROR(validation_error);
/// Caller passed arguments outside an operation's domain.
LSFACTORS_DEFINE_ERROR(usage_error);
/// Two fields/characters cannot be associated at the requested level.
LSFACTORS_DEFINE_ERROR(association_error);
/// Two independent routes disagreed, or a structural guarantee failed.
LSFACTORS_DEFINE_ERROR(consistency_error);
/// A bounded search found nothing.
LSFACTORS_DEFINE_ERROR(search_error);
/// A close-fields transfer read beyond its certified level.
LSFACTORS_DEFINE_ERROR(transfer_error);
/// Text could not be parsed.
LSFACTORS_DEFINE_ERROR(parse_error);

#undef LSFACTORS_DEFINE_ERROR

} // namespace lsfactors
