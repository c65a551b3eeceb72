#include "potb/error.hpp"

namespace potb {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::UnknownFactor: return "UnknownFactor";
    case Errc::BadExponent: return "BadExponent";
    case Errc::EmptyName: return "EmptyName";
    case Errc::DuplicateFactor: return "DuplicateFactor";
    case Errc::BadHeader: return "BadHeader";
    case Errc::RunLengthMismatch: return "RunLengthMismatch";
    case Errc::SymbolOutOfField: return "SymbolOutOfField";
    case Errc::BlockSizeMismatch: return "BlockSizeMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::UnknownEffectName: return "UnknownEffectName";
    case Errc::BadSubspace: return "BadSubspace";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace potb
