#include "lapvertex/error.hpp"

namespace lapvertex {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::GiveUp: return "GiveUp";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NearPole: return "NearPole";
        case ErrorKind::QuadratureNoConvergence: return "QuadratureNoConvergence";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::IdenticalVertices: return "IdenticalVertices";
        case ErrorKind::NotAnEdge: return "NotAnEdge";
        case ErrorKind::BadIndex: return "BadIndex";
    }
    return "Unknown";
}

}  // namespace lapvertex
