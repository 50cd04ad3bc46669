#include "pnc/literal.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>

namespace pnc {

PolarNComplex parse_literal(std::string_view text) {
    std::vector<double> x;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string field(text.substr(pos, comma - pos));
        if (field.empty())
            throw Error(ErrorKind::Usage, "empty coordinate in literal '" + std::string(text) + "'");
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (end == field.c_str() || *end != '\0')
            throw Error(ErrorKind::Usage, "bad coordinate '" + field + "'");
        x.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (x.size() < 2)
        throw Error(ErrorKind::Usage, "literal needs at least 2 coordinates");
    return PolarNComplex(std::move(x));
}

std::string format_real(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string format_literal(const PolarNComplex& u, int digits) {
    std::string out;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (i) out += ',';
        out += format_real(u[i], digits);
    }
    return out;
}

std::vector<PolarNComplex> read_path_file(std::istream& in) {
    std::vector<PolarNComplex> verts;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        verts.push_back(parse_literal(std::string_view(line).substr(b, e - b + 1)));
    }
    return verts;
}

}  // namespace pnc
