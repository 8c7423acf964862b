#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplicia/types.hpp"

namespace simplicia {

/// Parse failure with a 1-based position.
class MsxError : public std::runtime_error {
public:
    MsxError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Text format: a header line `n <count>`, then one maximal simplex per line
/// as increasing labels separated by spaces. `#` starts a comment. Blank
/// lines may only trail the body.
ComplexSpec parse_msx(std::string_view text);
/// Same syntax, but the body lines are returned as written (in order, with
/// no reduction to maximal simplices), together with n.
std::pair<Label, std::vector<Simplex>> parse_msx_lines(std::string_view text);
std::string serialize_msx(const ComplexSpec& spec);

ComplexSpec read_msx_file(const std::string& path);
void write_msx_file(const std::string& path, const ComplexSpec& spec);

}  // namespace simplicia
