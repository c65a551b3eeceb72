#pragma once

#include <stdexcept>
#include <string>

namespace potb {

enum class Errc {
    NotPrime,
    DimensionMismatch,
    TooLarge,
    ZeroVector,
    UnknownFactor,
    BadExponent,
    EmptyName,
    DuplicateFactor,
    BadHeader,
    RunLengthMismatch,
    SymbolOutOfField,
    BlockSizeMismatch,
    UnknownName,
    UnknownEffectName,
    BadSubspace,
};

const char* errc_name(Errc c);

/// All library errors are thrown as Error; code() identifies the condition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg);
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace potb
