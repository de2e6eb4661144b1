#include "acewiki/error.hpp"

namespace acewiki {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSurface: return "DuplicateSurface";
    case ErrorCode::ReservedWord: return "ReservedWord";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::WordInUse: return "WordInUse";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::LexicalError: return "LexicalError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DeadPrefix: return "DeadPrefix";
    case ErrorCode::EmptyPatternSet: return "EmptyPatternSet";
    case ErrorCode::UnknownAxiom: return "UnknownAxiom";
    case ErrorCode::ParseFailed: return "ParseFailed";
    case ErrorCode::StaleRevision: return "StaleRevision";
    case ErrorCode::UnknownSentence: return "UnknownSentence";
    case ErrorCode::VersionConflict: return "VersionConflict";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::UnknownWordInSentence: return "UnknownWordInSentence";
    case ErrorCode::AnnotationForUnknownSentence: return "AnnotationForUnknownSentence";
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::StorageError: return "StorageError";
  }
  return "Unknown";
}

}  // namespace acewiki
