#include "swrg/code/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace swrg {

Matrix parse_matrix(const Ring& R, const std::string& text) {
    Matrix rows;
    std::string line;
    std::string normalized = text;
    for (auto& c : normalized)
        if (c == ';') c = '\n';
    std::istringstream in(normalized);
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string tok;
        Vec row;
        while (tokens >> tok) row.push_back(R.parse(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw InvalidArgument("matrix row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(rows[0].size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidArgument("matrix is empty");
    return rows;
}

Matrix read_matrix_file(const Ring& R, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open matrix file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(R, ss.str());
}

std::string format_matrix(const Ring& R, const Matrix& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += R.format(row[j]);
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const Ring& R, const Matrix& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write matrix file " + path);
    out << format_matrix(R, rows);
}

}  // namespace swrg
