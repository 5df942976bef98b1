#include "dalescope/pgm.hpp"

#include <fstream>
#include <sstream>

namespace dalescope {

namespace {

// Skips whitespace and '#' comments, then reads one nonnegative integer.
long next_int(std::istream& in, const std::string& origin) {
    int ch = in.peek();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') { in.get(); ch = in.peek(); }
        } else if (std::isspace(ch)) {
            in.get();
            ch = in.peek();
        } else {
            break;
        }
    }
    long v = -1;
    if (!(in >> v) || v < 0)
        throw IoError(origin + ": malformed PGM header token");
    return v;
}

} // namespace

Grid read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    return read_pgm(in, path.string());
}

Grid read_pgm(std::istream& in, const std::string& origin) {
    char p = 0, kind = 0;
    in.get(p);
    in.get(kind);
    if (p != 'P' || (kind != '2' && kind != '5'))
        throw IoError(origin + ": not a P2/P5 PGM file");
    long w = next_int(in, origin);
    long h = next_int(in, origin);
    long maxval = next_int(in, origin);
    if (w < 1 || h < 1 || maxval < 1 || maxval > 255)
        throw IoError(origin + ": unsupported PGM geometry or maxval");
    Grid g(static_cast<int>(w), static_cast<int>(h), static_cast<int>(maxval) + 1);
    if (kind == '5') {
        in.get(); // single whitespace after maxval
        std::string raw(static_cast<std::size_t>(w * h), '\0');
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size()))
            throw IoError(origin + ": truncated P5 payload");
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto v = static_cast<unsigned char>(raw[i]);
            if (v > maxval)
                throw IoError(origin + ": sample exceeds maxval");
            g.cells()[i] = v;
        }
    } else {
        for (auto& cell : g.cells()) {
            long v = next_int(in, origin);
            if (v > maxval)
                throw IoError(origin + ": sample exceeds maxval");
            cell = static_cast<Level>(v);
        }
    }
    return g;
}

void write_pgm(const std::filesystem::path& path, const Grid& g, PgmFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    write_pgm(out, g, format);
    if (!out)
        throw IoError("write failed for " + path.string());
}

void write_pgm(std::ostream& out, const Grid& g, PgmFormat format) {
    const int maxval = g.levels() - 1;
    if (format == PgmFormat::P5) {
        out << "P5\n" << g.width() << ' ' << g.height() << '\n' << maxval << '\n';
        std::string raw(g.cells().size(), '\0');
        for (std::size_t i = 0; i < raw.size(); ++i)
            raw[i] = static_cast<char>(static_cast<unsigned char>(g.cells()[i]));
        out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    } else {
        out << "P2\n" << g.width() << ' ' << g.height() << '\n' << maxval << '\n';
        for (int r = 0; r < g.height(); ++r) {
            for (int c = 0; c < g.width(); ++c)
                out << g.at(r, c) << (c + 1 == g.width() ? '\n' : ' ');
        }
    }
}

} // namespace dalescope
