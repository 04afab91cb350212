#include "numbrix/puzzle_io.hpp"

#include <charconv>
#include <optional>

#include "numbrix/errors.hpp"

namespace numbrix {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!raw.empty() && raw.front() == '#') continue;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i])) ++i;
            if (i >= raw.size()) break;
            const std::size_t start = i;
            while (i < raw.size() && !is_space(raw[i])) ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int to_int(const Line& line, const Token& token) {
    int value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line.number, token.column, "expected an integer, got '" + std::string(token.text) + "'");
    }
    return value;
}

}  // namespace

ClueSet PuzzleDocument::clues() const {
    std::map<Cell, int> out;
    for (int i = 0; i < dims.cell_count(); ++i) {
        if (const int v = entries[static_cast<std::size_t>(i)]; v != 0) out.emplace(cell_at(dims, i), v);
    }
    return ClueSet(dims, std::move(out));
}

PuzzleDocument PuzzleDocument::from_clues(const ClueSet& clues) {
    PuzzleDocument doc{clues.dims(), std::vector<int>(static_cast<std::size_t>(clues.dims().cell_count()), 0)};
    for (const auto& [cell, value] : clues.assignments()) {
        doc.entries[static_cast<std::size_t>(cell_index(doc.dims, cell))] = value;
    }
    return doc;
}

PuzzleDocument PuzzleDocument::from_solution(const Solution& s) { return {s.dims(), s.values()}; }

PuzzleDocument parse_puzzle(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing header line 'rows cols'");

    const Line& header = lines.front();
    if (header.tokens.size() != 2) {
        const std::size_t column = header.tokens.size() > 2 ? header.tokens[2].column : 1;
        throw ParseError(header.number, column, "header must be exactly 'rows cols'");
    }
    const int rows = to_int(header, header.tokens[0]);
    const int cols = to_int(header, header.tokens[1]);
    if (rows < 1) throw ParseError(header.number, header.tokens[0].column, "row count must be positive");
    if (cols < 1) throw ParseError(header.number, header.tokens[1].column, "column count must be positive");

    PuzzleDocument doc{BoardDims(rows, cols), {}};
    const int total = doc.dims.cell_count();
    doc.entries.reserve(static_cast<std::size_t>(total));
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> seen(static_cast<std::size_t>(total) + 1);

    for (int r = 0; r < rows; ++r) {
        const std::size_t index = static_cast<std::size_t>(r) + 1;
        if (index >= lines.size()) {
            const std::size_t after = lines.back().number + 1;
            throw ParseError(after, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        }
        const Line& line = lines[index];
        if (line.tokens.size() != static_cast<std::size_t>(cols)) {
            const std::size_t column = line.tokens.size() > static_cast<std::size_t>(cols)
                                           ? line.tokens[static_cast<std::size_t>(cols)].column
                                           : line.tokens.back().column + line.tokens.back().text.size();
            throw ParseError(line.number, column,
                             "expected " + std::to_string(cols) + " entries, found " +
                                 std::to_string(line.tokens.size()));
        }
        for (const Token& token : line.tokens) {
            const int v = to_int(line, token);
            if (v < 0 || v > total) {
                throw ParseError(line.number, token.column,
                                 "entry " + std::to_string(v) + " is outside 0.." + std::to_string(total));
            }
            if (v != 0) {
                auto& first = seen[static_cast<std::size_t>(v)];
                if (first) {
                    throw ParseError(line.number, token.column,
                                     "value " + std::to_string(v) + " already appears at line " +
                                         std::to_string(first->first) + ", column " +
                                         std::to_string(first->second));
                }
                first = std::make_pair(line.number, token.column);
            }
            doc.entries.push_back(v);
        }
    }
    if (lines.size() > static_cast<std::size_t>(rows) + 1) {
        const Line& extra = lines[static_cast<std::size_t>(rows) + 1];
        throw ParseError(extra.number, extra.tokens.front().column, "unexpected content after the last row");
    }
    return doc;
}

std::string format_puzzle(const PuzzleDocument& doc) {
    std::string out = std::to_string(doc.dims.rows) + " " + std::to_string(doc.dims.cols) + "\n";
    for (int r = 0; r < doc.dims.rows; ++r) {
        for (int c = 0; c < doc.dims.cols; ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(doc.entries[static_cast<std::size_t>(r * doc.dims.cols + c)]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace numbrix
