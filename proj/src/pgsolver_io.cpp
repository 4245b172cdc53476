#include "pg/pgsolver_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pg {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') line++;
            pos++;
        }
    }

    bool at_end() {
        skip_space();
        return pos == text.size();
    }

    char peek() {
        skip_space();
        return text[pos];
    }

    void expect(char c, const char* what) {
        if (at_end() || text[pos] != c) throw ParseError(line, std::string("expected ") + what);
        pos++;
    }

    bool consume(char c) {
        if (at_end() || text[pos] != c) return false;
        pos++;
        return true;
    }

    std::uint64_t number(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError(line, std::string("expected ") + what);
        }
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw ParseError(line, std::string(what) + " out of range");
            }
            pos++;
        }
        return value;
    }

    bool consume_keyword(std::string_view word) {
        skip_space();
        if (text.substr(pos, word.size()) != word) return false;
        pos += word.size();
        return true;
    }

    // Quoted vertex name; accepted and discarded.
    void skip_string() {
        pos++;  // opening quote
        while (pos < text.size() && text[pos] != '"') {
            if (text[pos] == '\n') line++;
            pos++;
        }
        if (pos == text.size()) throw ParseError(line, "unterminated vertex name");
        pos++;
    }
};

}  // namespace

ParityGame parse_pgsolver(std::string_view text) {
    Lexer lex{text};

    if (lex.consume_keyword("parity")) {
        // The declared maximum identifier is advisory and not validated.
        lex.number("maximum identifier");
        lex.expect(';', "';' after header");
    }

    std::vector<std::optional<VertexRecord>> records;
    std::vector<int> defined_at_line;
    while (!lex.at_end()) {
        int record_line = lex.line;
        VertexId id = VertexId(lex.number("vertex id"));
        VertexRecord record;
        std::uint64_t priority = lex.number("priority");
        if (priority > std::uint64_t(std::numeric_limits<int>::max())) {
            throw ParseError(record_line, "priority out of range");
        }
        record.priority = int(priority);
        std::uint64_t owner = lex.number("owner");
        if (owner > 1) throw ParseError(record_line, "owner must be 0 or 1");
        record.owner = owner == 0 ? Player::even : Player::odd;

        if (lex.at_end() || lex.peek() == ';' || lex.peek() == '"') {
            throw TotalityError(id);
        }
        record.successors.push_back(VertexId(lex.number("successor id")));
        while (lex.consume(',')) {
            record.successors.push_back(VertexId(lex.number("successor id")));
        }
        if (!lex.at_end() && lex.peek() == '"') lex.skip_string();
        lex.expect(';', "';' after vertex record");

        if (id >= records.size()) {
            records.resize(id + 1);
            defined_at_line.resize(id + 1, 0);
        }
        if (records[id]) {
            throw ParseError(record_line, "vertex " + std::to_string(id) + " defined twice");
        }
        records[id] = std::move(record);
        defined_at_line[id] = record_line;
    }

    if (records.empty()) throw ParseError(lex.line, "no vertex records");
    std::vector<VertexRecord> dense;
    dense.reserve(records.size());
    for (std::size_t id = 0; id < records.size(); id++) {
        if (!records[id]) {
            throw ParseError(lex.line, "vertex " + std::to_string(id) + " is never defined");
        }
        dense.push_back(std::move(*records[id]));
    }
    return ParityGame::build(dense);
}

std::string write_pgsolver(const ParityGame& g) {
    if (g.num_vertices() == 0) throw EmptyGame();
    std::string out = "parity " + std::to_string(g.num_vertices() - 1) + ";\n";
    for (VertexId v = 0; v < g.num_vertices(); v++) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(g.priority(v));
        out += ' ';
        out += g.owner(v) == Player::even ? '0' : '1';
        bool first = true;
        for (VertexId w : g.successors(v)) {
            out += first ? " " : ",";
            out += std::to_string(w);
            first = false;
        }
        out += ";\n";
    }
    return out;
}

}  // namespace pg
