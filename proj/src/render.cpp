#include "lensfib/render.hpp"

#include "lensfib/error.hpp"

namespace lensfib {

AsciiDiagram render_band(const BandDiagram& band) {
    if (band.strands > 26)
        fail("TooManyStrands", "rendering supports at most 26 strands");
    const int n = band.strands;
    const int width = 2 * n - 1;

    std::string rail(width, ' ');
    for (int k = 0; k < n; ++k) rail[2 * k] = '|';

    AsciiDiagram out;
    out.lines.reserve(band.word.letters.size() + 2);
    out.lines.push_back(rail);
    for (int e : band.word.letters) {
        int c = e > 0 ? e : -e;
        std::string row = rail;
        row[2 * c - 2] = ' ';
        row[2 * c] = ' ';
        row[2 * c - 1] = e > 0 ? 'X' : 'x';
        out.lines.push_back(row);
    }
    out.lines.push_back(rail);
    return out;
}

BandDiagram parse_rendered(const AsciiDiagram& diagram) {
    if (diagram.lines.size() < 2)
        fail("MalformedToken", "diagram needs two rail lines");
    const std::string& rail = diagram.lines.front();
    int n = static_cast<int>((rail.size() + 1) / 2);
    BandDiagram band;
    band.strands = n;
    band.word.strands = n;
    for (size_t r = 1; r + 1 < diagram.lines.size(); ++r) {
        const std::string& row = diagram.lines[r];
        int letter = 0;
        for (size_t col = 0; col < row.size(); ++col) {
            if (row[col] == 'X' || row[col] == 'x') {
                int c = static_cast<int>(col + 1) / 2;
                letter = row[col] == 'X' ? c : -c;
                break;
            }
        }
        if (letter == 0)
            fail("MalformedToken", "row without a crossing glyph");
        band.word.letters.push_back(letter);
    }
    return band;
}

} // namespace lensfib
