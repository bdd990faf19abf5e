#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mglab/lexicon.hpp"

namespace mglab {

/// Parse or validation failure with 1-based source position.
struct ParseError : std::runtime_error {
    ParseError(std::string file, int line, int col, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          file(std::move(file)), line(line), col(col), message(what) {}

    std::string file;
    int line;
    int col;
    std::string message;
};

/// Reads the lexicon file format:
///
///   # comment (ignored, as is anything after # on a line)
///   name: scolds            (optional; defaults to `default_name`)
///   inventory: D V
///   start: V
///   Alice :: D
///   scolds :: =D =D V
///   ε ::  =T +wh C          (ε alone before :: means empty phon)
///   emg:                    (optional section, incremental engine only)
///   accidentally adjoin: V,V2 right
///
/// The result is validated; any problem is reported as ParseError with the
/// position of the offending line.
Lexicon parse_lexicon(std::string_view text, const std::string& default_name = "lexicon",
                      const std::string& file = "<input>");

/// parse_lexicon over a file path (IO failures become ParseError at 0:0).
Lexicon load_lexicon(const std::string& path);

} // namespace mglab
