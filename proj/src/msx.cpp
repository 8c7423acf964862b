#include "simplicia/msx.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace simplicia {

MsxError::MsxError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t number(const Token& t, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw MsxError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    return v;
}

}  // namespace

std::pair<Label, std::vector<Simplex>> parse_msx_lines(std::string_view text) {
    std::optional<Label> n;
    std::vector<Simplex> body;
    std::optional<std::size_t> blank_line;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool comment_only = false;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            comment_only = line.find_first_not_of(" \t") == hash;
            line = line.substr(0, hash);
        }
        auto tokens = split(line);
        if (tokens.empty()) {
            if (!comment_only && n && !blank_line) blank_line = line_no;
            continue;
        }
        if (!n) {
            if (tokens[0].text != "n") throw MsxError(line_no, tokens[0].column, "expected header 'n <count>'");
            if (tokens.size() != 2) throw MsxError(line_no, tokens[0].column, "header takes exactly one value");
            std::uint64_t v = number(tokens[1], line_no);
            if (v >= UINT32_MAX) throw MsxError(line_no, tokens[1].column, "vertex count too large");
            n = static_cast<Label>(v);
            continue;
        }
        if (blank_line) throw MsxError(*blank_line, 1, "empty line inside body");
        std::vector<Label> labels;
        for (const auto& t : tokens) {
            std::uint64_t v = number(t, line_no);
            if (v == 0) throw MsxError(line_no, t.column, "labels start at 1");
            if (v > *n) throw MsxError(line_no, t.column, "label " + std::to_string(v) + " exceeds n = " + std::to_string(*n));
            if (!labels.empty() && v <= labels.back())
                throw MsxError(line_no, t.column, "labels must be strictly increasing");
            labels.push_back(static_cast<Label>(v));
        }
        body.push_back(Simplex::from_sorted(std::move(labels)));
    }
    if (!n) throw MsxError(line_no + 1, 1, "missing header 'n <count>'");
    return {*n, std::move(body)};
}

ComplexSpec parse_msx(std::string_view text) {
    auto [n, body] = parse_msx_lines(text);
    return complex_from_maximal(std::move(body), n);
}

std::string serialize_msx(const ComplexSpec& spec) {
    std::string out = "n " + std::to_string(spec.n) + "\n";
    for (const auto& s : spec.maximal) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s[i]);
        }
        out += '\n';
    }
    return out;
}

ComplexSpec read_msx_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_msx(buf.str());
}

void write_msx_file(const std::string& path, const ComplexSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_msx(spec);
}

}  // namespace simplicia
