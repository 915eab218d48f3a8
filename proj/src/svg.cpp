#include "fuchscodec/svg.hpp"

#include <cmath>
#include <sstream>

namespace fuchscodec {

namespace {

struct Panel {
    double scale, cx, cy;  // world->pixel: px = cx + scale*x, py = cy - scale*y
    double px(double x) const { return cx + scale * x; }
    double py(double y) const { return cy - scale * y; }
};

std::string poly(const Panel& p, const std::vector<Complex>& pts, const char* stroke,
                 double width, bool close) {
    std::ostringstream os;
    os << "<path d=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        os << (i == 0 ? "M" : "L") << p.px(pts[i].real()) << " " << p.py(pts[i].imag());
    }
    if (close) os << "Z";
    os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
       << "\"/>\n";
    return os.str();
}

// boundary of the domain in disk coordinates, one polyline per wall arc
std::vector<Complex> boundary_polyline(const FundamentalDomain& fd, int per_arc) {
    std::vector<Complex> out;
    size_t k = fd.vertices.size();
    if (k == 0) return out;
    for (size_t j = 0; j < k; ++j) {
        // edge carried by wall j+1 runs from vertex j to vertex j+1
        const GeodesicCircle& c = fd.walls[(j + 1) % k].circle;
        Complex v0 = fd.vertices[j], v1 = fd.vertices[(j + 1) % k];
        double a0 = std::arg(v0 - c.center), a1 = std::arg(v1 - c.center);
        double da = a1 - a0;
        while (da > M_PI) da -= 2 * M_PI;
        while (da < -M_PI) da += 2 * M_PI;
        for (int s = 0; s <= per_arc; ++s) {
            double a = a0 + da * s / per_arc;
            out.push_back(c.center + Complex(c.radius * std::cos(a), c.radius * std::sin(a)));
        }
    }
    return out;
}

}  // namespace

std::string render_constellation_svg(const FundamentalDomain& domain, const Codebook& cb) {
    const double W = 900, H = 470;
    Panel disk{200, 230, 235};
    Panel plane{150, 670, 330};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    // ---- left: disk model
    os << "<circle cx=\"" << disk.cx << "\" cy=\"" << disk.cy
       << "\" r=\"" << disk.scale << "\" fill=\"none\" stroke=\"#888\"/>\n";

    std::vector<Complex> boundary = boundary_polyline(domain, 24);
    if (!boundary.empty()) {
        os << poly(disk, boundary, "#1f4e9c", 1.6, true);
    } else {
        // unbounded region: show the raw wall circles instead
        for (const Wall& w : domain.walls) {
            os << "<circle cx=\"" << disk.px(w.circle.center.real()) << "\" cy=\""
               << disk.py(w.circle.center.imag()) << "\" r=\"" << disk.scale * w.circle.radius
               << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>\n";
        }
    }

    // tiles of the word set (upper-sign words act on the domain)
    if (!boundary.empty()) {
        for (int m = 0; m < cb.half(); ++m) {
            std::vector<Complex> tile;
            tile.reserve(boundary.size());
            for (Complex wdisk : boundary) {
                Complex z = domain.to_half(wdisk);
                tile.push_back(domain.to_disk(cb.entries[m].map.apply(z)));
            }
            os << poly(disk, tile, "#7aa1d2", 0.8, true);
        }
    }
    // codeword markers in the disk (upper points only; negatives leave H)
    for (int m = 0; m < cb.half(); ++m) {
        Complex w = domain.to_disk(cb.entries[m].codeword);
        os << "<circle cx=\"" << disk.px(w.real()) << "\" cy=\"" << disk.py(w.imag())
           << "\" r=\"3\" fill=\"#c22\"/>\n";
    }
    os << "<text x=\"40\" y=\"25\" font-size=\"14\">" << cb.group << " " << cb.preset
       << " (disk model)</text>\n";

    // ---- right: plane view with both signs
    os << "<line x1=\"" << plane.px(-2.0) << "\" y1=\"" << plane.py(0.0) << "\" x2=\""
       << plane.px(2.0) << "\" y2=\"" << plane.py(0.0)
       << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    if (!boundary.empty()) {
        std::vector<Complex> dom_h;
        for (Complex wdisk : boundary) dom_h.push_back(domain.to_half(wdisk));
        os << poly(plane, dom_h, "#1f4e9c", 1.2, true);
        for (int m = 0; m < cb.half(); ++m) {
            std::vector<Complex> tile, tile_neg;
            for (Complex z : dom_h) {
                Complex im = cb.entries[m].map.apply(z);
                tile.push_back(im);
                tile_neg.push_back(-im);
            }
            os << poly(plane, tile, "#7aa1d2", 0.7, true);
            os << poly(plane, tile_neg, "#b9cbe6", 0.7, true);
        }
    }
    for (const CodebookEntry& e : cb.entries) {
        os << "<circle class=\"codeword\" data-im=\"" << e.codeword.imag() << "\" cx=\""
           << plane.px(e.codeword.real()) << "\" cy=\"" << plane.py(e.codeword.imag())
           << "\" r=\"3.5\" fill=\"" << (e.codeword.imag() > 0 ? "#c22" : "#22c")
           << "\"/>\n";
    }
    os << "<text x=\"540\" y=\"25\" font-size=\"14\">constellation (plane view)</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace fuchscodec
