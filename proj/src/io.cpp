#include "bohm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <string>

#include "bohm/config.hpp"
#include "bohm/errors.hpp"

namespace bohm::io {

namespace {

using config::format_double;

void write_metadata(std::ostream& os, const Metadata& meta) {
    for (const auto& [key, value] : meta) os << "# " << key << '=' << value << '\n';
}

std::string fixed(double v, int digits = 3) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const dynamics::TrajectoryRecord& rec, const Metadata& meta) {
    os << "t,x,y\n";
    for (const auto& s : rec.samples) {
        os << format_double(s.t) << ',' << format_double(s.p.x) << ',' << format_double(s.p.y) << '\n';
    }
    write_metadata(os, meta);
    os << "# termination=" << dynamics::to_string(rec.termination) << '\n';
}

void write_strobe_csv(std::ostream& os, const std::vector<analysis::StrobeMap>& maps, const Metadata& meta) {
    const bool multi = maps.size() > 1;
    os << (multi ? "traj,k,x,y\n" : "k,x,y\n");
    for (std::size_t j = 0; j < maps.size(); ++j) {
        const auto& pts = maps[j].points;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (multi) os << j << ',';
            os << (k + 1) << ',' << format_double(pts[k].x) << ',' << format_double(pts[k].y) << '\n';
        }
    }
    write_metadata(os, meta);
    for (std::size_t j = 0; j < maps.size(); ++j) {
        os << "# termination";
        if (multi) os << '[' << j << ']';
        os << '=' << dynamics::to_string(maps[j].termination) << '\n';
    }
}

void write_lyapunov_csv(std::ostream& os, const analysis::LyapunovEstimate& est, const Metadata& meta) {
    os << "t,partial_lambda\n";
    for (const auto& [t, lam] : est.running) os << format_double(t) << ',' << format_double(lam) << '\n';
    write_metadata(os, meta);
    os << "# lambda_max=" << format_double(est.lambda_max) << '\n';
    os << "# unreliable=" << (est.reliable ? "false" : "true") << '\n';
}

Viewport default_viewport(const fields::FieldModel& model, const std::vector<analysis::StrobeMap>& maps) {
    if (model.is_well()) return {0.0, susy::kPi, 0.0, susy::kPi};
    double reach = 0.5;
    for (const auto& m : maps) {
        for (const auto& p : m.points) reach = std::max({reach, std::abs(p.x), std::abs(p.y)});
    }
    reach = std::ceil(reach * 2.0) / 2.0;
    return {-reach, reach, -reach, reach};
}

void write_strobe_svg(std::ostream& os, const std::vector<analysis::StrobeMap>& maps, const Viewport& view,
                      const std::string& caption) {
    constexpr double size = 600.0;
    constexpr double margin = 60.0;
    const double sx = size / (view.xmax - view.xmin);
    const double sy = size / (view.ymax - view.ymin);
    auto px = [&](double x) { return margin + (x - view.xmin) * sx; };
    auto py = [&](double y) { return margin + (view.ymax - y) * sy; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
       << size + 2 * margin << "\" viewBox=\"0 0 " << size + 2 * margin << ' ' << size + 2 * margin << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
       << xml_escape(caption) << "</text>\n";
    os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size << "\" height=\"" << size
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    // tick labels at the viewport corners
    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<text x=\"" << margin << "\" y=\"" << margin + size + 18 << "\">" << fixed(view.xmin) << "</text>\n";
    os << "<text x=\"" << margin + size << "\" y=\"" << margin + size + 18 << "\" text-anchor=\"end\">"
       << fixed(view.xmax) << "</text>\n";
    os << "<text x=\"" << margin + size / 2 << "\" y=\"" << margin + size + 36 << "\" text-anchor=\"middle\">x</text>\n";
    os << "<text x=\"" << margin - 6 << "\" y=\"" << margin + size << "\" text-anchor=\"end\">" << fixed(view.ymin)
       << "</text>\n";
    os << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 12 << "\" text-anchor=\"end\">" << fixed(view.ymax)
       << "</text>\n";
    os << "<text x=\"" << margin - 30 << "\" y=\"" << margin + size / 2 << "\" text-anchor=\"middle\">y</text>\n";
    os << "</g>\n<g fill=\"black\">\n";
    for (const auto& m : maps) {
        for (const auto& p : m.points) {
            if (p.x < view.xmin || p.x > view.xmax || p.y < view.ymin || p.y > view.ymax) continue;
            os << "<rect x=\"" << fixed(px(p.x), 2) << "\" y=\"" << fixed(py(p.y), 2)
               << "\" width=\"1\" height=\"1\"/>\n";
        }
    }
    os << "</g>\n</svg>\n";
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            const std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size()) throw Error("bad CSV cell '" + cell + "'");
            row.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bohm::io
