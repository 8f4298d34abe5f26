#pragma once

/// @file io.hpp
/// File formats. Text boards ("solochess v1") are character grids for
/// hand-written fixtures; JSON carries everything else, including the huge
/// sparse boards the instance generators emit.

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "solochess/board.hpp"

namespace solochess {

inline constexpr const char* kFormatVersion = "solochess v1";
inline constexpr std::int64_t kMaxTextBoardWidth = 4096;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline PieceKind kind_from_char(char c) {
    switch (c) {
        case 'P': return PieceKind::Pawn;
        case 'K': return PieceKind::King;
        case 'N': return PieceKind::Knight;
        case 'R': return PieceKind::Rook;
        case 'B': return PieceKind::Bishop;
        case 'Q': return PieceKind::Queen;
    }
    throw ParseError(std::string("unknown piece character '") + c + "'");
}

/// Text format: header line, "W H", then H rows of W characters with the
/// top row holding the highest y. Uppercase piece letters; a lowercase
/// letter marks the single uncapturable piece; '.' is empty.
inline Board parse_board_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header != kFormatVersion)
        throw ParseError("bad or missing format header");
    std::int64_t w = 0, h = 0;
    in >> w >> h;
    if (!in) throw ParseError("bad dimensions line");
    if (w <= 0 || h <= 0) throw ParseError("dimensions must be positive");
    if (w > kMaxTextBoardWidth) throw ParseError("board too wide for the text format");
    std::string line;
    std::getline(in, line);  // rest of dimension line
    Board b;
    int uncapturable_seen = 0;
    for (std::int64_t row = 0; row < h; ++row) {
        if (!std::getline(in, line)) throw ParseError("missing board row");
        if (static_cast<std::int64_t>(line.size()) != w)
            throw ParseError("board row has the wrong width");
        std::int64_t y = h - 1 - row;
        for (std::int64_t x = 0; x < w; ++x) {
            char c = line[static_cast<std::size_t>(x)];
            if (c == '.') continue;
            bool uncap = c >= 'a' && c <= 'z';
            if (uncap) {
                c = static_cast<char>(c - 'a' + 'A');
                ++uncapturable_seen;
            }
            b.put({x, y}, {kind_from_char(c), uncap});
        }
    }
    if (uncapturable_seen > 1) throw ParseError("more than one uncapturable piece");
    return b;
}

inline std::string serialize_board_text(const Board& b) {
    Region r = b.bounding_region();
    if (r.empty()) throw std::invalid_argument("cannot serialize an empty board as text");
    if (r.width() > kMaxTextBoardWidth)
        throw std::invalid_argument("board too wide for the text format");
    std::ostringstream out;
    out << kFormatVersion << "\n" << r.width() << " " << r.height() << "\n";
    for (std::int64_t y = r.max_y; y >= r.min_y; --y) {
        for (std::int64_t x = r.min_x; x <= r.max_x; ++x) {
            const Piece* p = b.at({x, y});
            if (!p) {
                out << '.';
            } else {
                char c = kind_char(p->kind);
                out << (p->uncapturable ? static_cast<char>(c - 'A' + 'a') : c);
            }
        }
        out << "\n";
    }
    return out.str();
}

inline nlohmann::json location_to_json(const Location& l) {
    return nlohmann::json::array({l.x, l.y});
}

inline Location location_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("location must be [x, y]");
    return Location{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline nlohmann::json board_to_json(const Board& b) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& [loc, p] : b.pieces()) {
        pieces.push_back({{"x", loc.x},
                          {"y", loc.y},
                          {"type", kind_name(p.kind)},
                          {"uncapturable", p.uncapturable}});
    }
    return {{"format", kFormatVersion}, {"pieces", pieces}};
}

inline Board board_from_json(const nlohmann::json& j) {
    if (!j.contains("format") || j["format"] != kFormatVersion)
        throw ParseError("bad or missing format field");
    Board b;
    for (const auto& pj : j.at("pieces")) {
        Piece p{builtin_piece_type(pj.at("type").get<std::string>()).kind,
                pj.value("uncapturable", false)};
        b.put({pj.at("x").get<std::int64_t>(), pj.at("y").get<std::int64_t>()}, p);
    }
    if (b.uncapturable_count() > 1) throw ParseError("more than one uncapturable piece");
    return b;
}

inline nlohmann::json solution_to_json(const Solution& s) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : s.moves) {
        nlohmann::json seq = nlohmann::json::array();
        for (const auto& l : m) seq.push_back(location_to_json(l));
        moves.push_back(seq);
    }
    nlohmann::json j = {{"format", kFormatVersion}, {"solvable", true}, {"moves", moves}};
    if (!s.hero_path.empty()) {
        nlohmann::json path = nlohmann::json::array();
        for (const auto& l : s.hero_path) path.push_back(location_to_json(l));
        j["hero_path"] = path;
    }
    return j;
}

inline Solution solution_from_json(const nlohmann::json& j) {
    Solution s;
    for (const auto& mj : j.at("moves")) {
        MoveSeq m;
        for (const auto& lj : mj) m.push_back(location_from_json(lj));
        s.moves.push_back(std::move(m));
    }
    if (j.contains("hero_path"))
        for (const auto& lj : j["hero_path"]) s.hero_path.push_back(location_from_json(lj));
    return s;
}

}  // namespace solochess
