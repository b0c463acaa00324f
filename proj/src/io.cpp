#include "lbc/io.hpp"

#include <fstream>
#include <sstream>

namespace lbc {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

} // namespace

BitVector parse_bitvector(const std::string& line) {
    if (line.empty()) throw FormatError("empty bitstring");
    BitVector v(static_cast<int>(line.size()));
    for (std::size_t j = 0; j < line.size(); ++j) {
        if (line[j] == '1')
            v.set(static_cast<int>(j) + 1, true);
        else if (line[j] != '0')
            throw FormatError("bitstring characters must be 0 or 1");
    }
    return v;
}

std::string to_bitstring(const BitVector& v) {
    std::string s(static_cast<std::size_t>(v.length()), '0');
    for (int j = 1; j <= v.length(); ++j)
        if (v.get(j)) s[static_cast<std::size_t>(j) - 1] = '1';
    return s;
}

BitMatrix parse_matrix(const std::string& text) {
    if (text.empty() || text.back() != '\n') throw FormatError("trailing newline required");
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    int m = -1, n = -1;
    std::string extra;
    if (!(hs >> m >> n) || (hs >> extra) || m < 0 || n < 1)
        fail(1, "header must be two integers `m n`");
    BitMatrix out(0, n);
    std::string line;
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) fail(i + 2, "missing row");
        if (static_cast<int>(line.size()) != n) fail(i + 2, "row length differs from header n");
        BitVector v(n);
        for (int j = 1; j <= n; ++j) {
            char c = line[static_cast<std::size_t>(j) - 1];
            if (c == '1')
                v.set(j, true);
            else if (c != '0')
                fail(i + 2, "row characters must be 0 or 1");
        }
        out.append_row(v);
    }
    if (std::getline(in, line) && !line.empty()) fail(m + 2, "trailing content after rows");
    return out;
}

std::string write_matrix(const BitMatrix& m) {
    std::ostringstream out;
    out << m.row_count() << ' ' << m.col_count() << '\n';
    for (int i = 0; i < m.row_count(); ++i) out << to_bitstring(m.row(i)) << '\n';
    return out.str();
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << write_matrix(m);
}

} // namespace lbc
