#pragma once

// Cylindrical Lights Out with k light states.
//
// The board is a rows x cols grid whose left and right edges are glued, so
// column cols-1 neighbors column 0. Pressing a button adds the press count
// (mod k) to that light and to its up/down/left/right neighbors; the top and
// bottom rows have no wrap. One-pass chasing clears row i by pressing every
// button in row i+1 exactly (k - state) mod k times, top to bottom.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lightsout/errors.hpp"
#include "lightsout/modular.hpp"

namespace lightsout {

/// Uniform starting configuration: every light begins at (k - q) mod k.
struct BoardSpec {
    std::size_t rows = 1;
    std::size_t cols = 3;
    std::uint64_t k = 2;
    std::uint64_t q = 0;

    void validate() const {
        if (rows < 1)
            throw std::invalid_argument("rows must be >= 1");
        if (cols < 3)
            throw invalid_geometry("cylinder needs at least 3 columns, got " + std::to_string(cols));
        mod::require_modulus(k);
        if (q >= k)
            throw std::invalid_argument("q must lie in 0..k-1, got q=" + std::to_string(q) +
                                        " for k=" + std::to_string(k));
    }
};

class Board {
public:
    Board(std::uint64_t k, std::size_t rows, std::size_t cols, Residue fill = 0)
        : k_(k), rows_(rows), cols_(cols) {
        mod::require_modulus(k);
        if (rows < 1)
            throw std::invalid_argument("board needs at least one row");
        if (cols < 3)
            throw invalid_geometry("cylinder needs at least 3 columns, got " + std::to_string(cols));
        cells_.assign(rows * cols, fill % k);
    }

    /// Row-major cells, each already in 0..k-1.
    Board(std::uint64_t k, std::size_t rows, std::size_t cols, std::vector<Residue> cells)
        : Board(k, rows, cols) {
        if (cells.size() != rows * cols)
            throw std::invalid_argument("cell count does not match board shape");
        for (Residue v : cells)
            if (v >= k)
                throw std::invalid_argument("cell value " + std::to_string(v) + " not below k");
        cells_ = std::move(cells);
    }

    std::uint64_t k() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue at(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return cells_[r * cols_ + c];
    }

    std::span<const Residue> row(std::size_t r) const {
        check_index(r, 0);
        return {cells_.data() + r * cols_, cols_};
    }

    bool row_is_zero(std::size_t r) const {
        for (Residue v : row(r))
            if (v != 0)
                return false;
        return true;
    }

    bool all_zero() const {
        for (Residue v : cells_)
            if (v != 0)
                return false;
        return true;
    }

    std::vector<std::vector<Residue>> to_matrix() const {
        std::vector<std::vector<Residue>> m;
        m.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            m.emplace_back(row(r).begin(), row(r).end());
        return m;
    }

    /// In-place press of (r, c), `times` reduced mod k.
    void apply_press(std::size_t r, std::size_t c, std::uint64_t times) {
        check_index(r, c);
        const Residue t = times % k_;
        if (t == 0)
            return;
        bump(r, c, t);
        bump(r, (c + 1) % cols_, t);
        bump(r, (c + cols_ - 1) % cols_, t);
        if (r > 0)
            bump(r - 1, c, t);
        if (r + 1 < rows_)
            bump(r + 1, c, t);
    }

    friend bool operator==(const Board&, const Board&) = default;

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("cell (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") outside " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " board");
    }

    void bump(std::size_t r, std::size_t c, Residue t) {
        Residue& cell = cells_[r * cols_ + c];
        cell = mod::add(cell, t, k_);
    }

    std::uint64_t k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> cells_;
};

struct ChaseTranscript {
    /// presses[i][j]: multiplicity applied to button (i+1, j); row 0 is never pressed.
    std::vector<std::vector<Residue>> presses;
    /// row_states[i]: state of row i+1 right after the step that pressed it.
    std::vector<std::vector<Residue>> row_states;
    std::vector<Residue> final_row;
    bool solved = false;
    Board final_board;

    friend bool operator==(const ChaseTranscript&, const ChaseTranscript&) = default;
};

inline Board new_uniform(const BoardSpec& spec) {
    spec.validate();
    return Board(spec.k, spec.rows, spec.cols, mod::neg(spec.q, spec.k));
}

/// Builds a board from arbitrary integers, reducing each entry mod k.
template <std::integral T>
Board new_from_grid(std::uint64_t k, const std::vector<std::vector<T>>& grid) {
    mod::require_modulus(k);
    if (grid.empty() || grid.front().empty())
        throw std::invalid_argument("grid must be non-empty");
    const std::size_t cols = grid.front().size();
    for (std::size_t r = 1; r < grid.size(); ++r)
        if (grid[r].size() != cols)
            throw std::invalid_argument("ragged grid: row " + std::to_string(r) + " has " +
                                        std::to_string(grid[r].size()) + " entries, expected " +
                                        std::to_string(cols));
    std::vector<Residue> cells;
    cells.reserve(grid.size() * cols);
    for (const auto& row : grid)
        for (T v : row)
            cells.push_back(mod::reduce(v, k));
    return Board(k, grid.size(), cols, std::move(cells));
}

inline Board press(Board board, std::size_t row, std::size_t col, std::uint64_t times) {
    board.apply_press(row, col, times);
    return board;
}

struct ChaseStep {
    Board board;
    std::vector<Residue> presses;
};

/// Clears row i by pressing the buttons of row i+1.
inline ChaseStep chase_row(Board board, std::size_t i) {
    if (i + 1 >= board.rows())
        throw std::out_of_range("chase_row: row " + std::to_string(i) + " has no row below on a " +
                                std::to_string(board.rows()) + "-row board");
    std::vector<Residue> pressed(board.cols());
    // Snapshot first: pressing (i+1, j) disturbs row i at column j only, so the
    // needed count per column is fixed by the state before the step.
    for (std::size_t j = 0; j < board.cols(); ++j)
        pressed[j] = mod::neg(board.at(i, j), board.k());
    for (std::size_t j = 0; j < board.cols(); ++j)
        board.apply_press(i + 1, j, pressed[j]);
    return {std::move(board), std::move(pressed)};
}

inline ChaseTranscript one_pass(Board board) {
    const std::size_t rows = board.rows();
    std::vector<std::vector<Residue>> presses, row_states;
    presses.reserve(rows - 1);
    row_states.reserve(rows - 1);
    for (std::size_t i = 0; i + 1 < rows; ++i) {
        auto step = chase_row(std::move(board), i);
        board = std::move(step.board);
        presses.push_back(std::move(step.presses));
        auto r = board.row(i + 1);
        row_states.emplace_back(r.begin(), r.end());
    }
    auto last = board.row(rows - 1);
    std::vector<Residue> final_row(last.begin(), last.end());
    const bool solved = board.row_is_zero(rows - 1);
    return {std::move(presses), std::move(row_states), std::move(final_row), solved,
            std::move(board)};
}

// Grid file: "rows cols k" on the first line, then `rows` lines of `cols`
// non-negative decimal integers. Nothing may follow except whitespace.

inline Board read_grid(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> std::istringstream {
        if (!std::getline(in, line))
            throw grid_parse_error(lineno + 1, "unexpected end of file");
        ++lineno;
        return std::istringstream(line);
    };

    auto read_uint = [&](std::istringstream& ls, const char* what) -> std::uint64_t {
        std::string tok;
        if (!(ls >> tok))
            throw grid_parse_error(lineno, std::string("missing ") + what);
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw grid_parse_error(lineno, std::string("bad ") + what + " '" + tok + "'");
        try {
            return std::stoull(tok);
        } catch (const std::out_of_range&) {
            throw grid_parse_error(lineno, std::string(what) + " '" + tok + "' is too large");
        }
    };

    auto expect_eol = [&](std::istringstream& ls) {
        std::string extra;
        if (ls >> extra)
            throw grid_parse_error(lineno, "unexpected trailing token '" + extra + "'");
    };

    auto header = next_line();
    const auto rows = read_uint(header, "rows");
    const auto cols = read_uint(header, "cols");
    const auto k = read_uint(header, "k");
    expect_eol(header);
    if (rows == 0)
        throw grid_parse_error(1, "rows must be positive");
    if (k < 2)
        throw grid_parse_error(1, "k must be >= 2");
    if (cols < 3)
        throw invalid_geometry("cylinder needs at least 3 columns, got " + std::to_string(cols));

    std::vector<std::vector<std::uint64_t>> grid(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        auto ls = next_line();
        for (std::size_t c = 0; c < cols; ++c)
            grid[r][c] = read_uint(ls, "cell");
        expect_eol(ls);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw grid_parse_error(lineno, "trailing content after grid");
    }
    return new_from_grid(k, grid);
}

inline void write_grid(std::ostream& out, const Board& b) {
    out << b.rows() << ' ' << b.cols() << ' ' << b.k() << '\n';
    for (std::size_t r = 0; r < b.rows(); ++r) {
        auto row = b.row(r);
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << row[c];
        out << '\n';
    }
}

} // namespace lightsout
