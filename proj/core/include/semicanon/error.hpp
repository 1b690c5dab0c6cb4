// Error type shared by all semicanon modules. Each failure carries a stable
// machine-readable code (used by the CLI exit-code mapping and by tests) plus
// a human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace semicanon {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
// Input/contract violations (CLI exit code 2).
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* FieldMismatch = "FieldMismatch";
inline constexpr const char* ShapeMismatch = "ShapeMismatch";
inline constexpr const char* NonSquare = "NonSquare";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* InvalidQuiver = "InvalidQuiver";
inline constexpr const char* InvalidParams = "InvalidParams";
inline constexpr const char* VertexMismatch = "VertexMismatch";
inline constexpr const char* DimensionMismatch = "DimensionMismatch";
inline constexpr const char* SingularBlock = "SingularBlock";
inline constexpr const char* UnknownPoint = "UnknownPoint";
inline constexpr const char* BadTubeIndex = "BadTubeIndex";
inline constexpr const char* NotRegular = "NotRegular";
inline constexpr const char* ZeroMass = "ZeroMass";
inline constexpr const char* WeightNotClosed = "WeightNotClosed";
inline constexpr const char* NonSquareHom = "NonSquareHom";
inline constexpr const char* NonSquarePencil = "NonSquarePencil";
// Verification failures (CLI exit code 1).
inline constexpr const char* DegenerateSamples = "DegenerateSamples";
inline constexpr const char* RelationFailure = "RelationFailure";
inline constexpr const char* RankMismatch = "RankMismatch";
}  // namespace errc

}  // namespace semicanon
