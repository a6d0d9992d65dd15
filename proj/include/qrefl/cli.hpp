#ifndef QREFL_CLI_HPP
#define QREFL_CLI_HPP

#include <iosfwd>
#include <string>

#include "qrefl/matrices.hpp"

namespace qrefl::cli {

// exit codes
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

class UsageError : public Error {
   public:
    using Error::Error;
};

struct MatrixDocument {
    int root_order = 1;
    CharacterMatrix matrix;
};

// Throws UsageError on malformed JSON, missing fields or unparsable entries.
MatrixDocument load_document(const std::string& text);
MatrixDocument load_document_file(const std::string& path);
// Canonical form: fields in the order n, root_order, variant, entries.
std::string emit_document(const MatrixDocument& doc);

// Subcommands: verify-re, qybe, qdet, grassmann, central, braidb.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrefl::cli

#endif  // QREFL_CLI_HPP
