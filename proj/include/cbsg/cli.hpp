#pragma once

/// Command-line front end, callable in-process for tests.

#include <iosfwd>
#include <string>
#include <vector>

#include "cbsg/body.hpp"

namespace cbsg::cli {

/// Parsed body specification; accepts "p/q" and exact decimal numbers.
struct BodySpec {
    Body body;
    std::string echo;  // canonical one-line form

    static BodySpec circle_spec(const std::string& center, const std::string& radius);
    static BodySpec polygon_spec(const std::string& vertices);
    /// One spec per line: "circle <a,b> <r>" or "polygon <x,y;x,y;...>".
    static BodySpec parse_line(const std::string& line);
};

/// Runs one invocation (argv without the program name). Exit codes: 0 ok,
/// 2 input error, 3 not affine / not simplicial / unsupported geometry,
/// 4 oracle disagreement, 5 generation failure, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Strips volatile fields (timing-ms) for golden comparisons.
std::string canonicalize_document(const std::string& doc);

}  // namespace cbsg::cli
