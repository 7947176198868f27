#ifndef TANGENCY_IO_HPP
#define TANGENCY_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangency/bipartite.hpp"
#include "tangency/curves.hpp"

namespace tangency {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A declared flag that the loaded family does not satisfy.
class FlagMismatch : public std::runtime_error {
public:
    explicit FlagMismatch(const std::string& flag);
    const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

/// Family file:
///
///     tangency-family 1
///     generator <name>        (optional)
///     seed <u64>              (optional)
///     window <x_lo> <x_hi>    (optional)
///     ground <x>              (optional)
///     flags [x_monotone] [bi_infinite] [one_intersecting] [precisely_one]
///     curves <count>
///     curve <id> <x>,<y> <x>,<y> ...
///
/// Blank lines and lines starting with '#' are ignored.
void write_family(std::ostream& out, const CurveFamily& f);
CurveFamily read_family(std::istream& in);

/// Throws std::runtime_error when the file cannot be opened or written.
void save_family(const CurveFamily& f, const std::string& path);

/// Parses and re-checks every declared flag (and the ground line, when set).
CurveFamily load_family(const std::string& path);

/// Header "A <size> B <size>" then one "a b" edge per line.
void write_graph(std::ostream& out, const BipartiteGraph& g);
BipartiteGraph read_graph(std::istream& in);
void save_graph(const BipartiteGraph& g, const std::string& path);
BipartiteGraph load_graph(const std::string& path);

/// One whitespace-separated list of integers per line.
std::vector<std::vector<int>> read_lists(std::istream& in);

}  // namespace tangency

#endif
