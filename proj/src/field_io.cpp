#include "sft/field_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace sft {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("field_io: bad floating-point value '" + std::string(s) + "'");
    return v;
}

std::vector<unsigned> nonzero_blades(const SliceField& f) {
    const GridSpec& g = f.grid();
    const unsigned nb = 1u << f.mv_dim();
    std::vector<bool> used(nb, false);
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j)
            for (unsigned b = 0; b < nb; ++b)
                if (f.f1(n, j)[b] != 0.0 || f.f2(n, j)[b] != 0.0) used[b] = true;
    std::vector<unsigned> out;
    for (unsigned b = 0; b < nb; ++b)
        if (used[b]) out.push_back(b);
    if (out.empty()) out.push_back(0);  // keep at least the scalar column
    return out;
}

}  // namespace

unsigned parse_blade_label(const std::string& label) {
    if (label == "1") return 0;
    unsigned blade = 0;
    std::size_t i = 0;
    while (i < label.size()) {
        if (label[i] != 'e') throw std::runtime_error("field_io: bad blade label " + label);
        ++i;
        std::size_t start = i;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
        if (start == i) throw std::runtime_error("field_io: bad blade label " + label);
        blade |= 1u << std::stoul(label.substr(start, i - start));
    }
    return blade;
}

void write_field_csv(const SliceField& f, std::ostream& os) {
    const GridSpec& g = f.grid();
    const auto blades = nonzero_blades(f);
    os << "# sft-field v1\n";
    os << "# m=" << f.params().m << " c=" << format_double(f.params().c) << "\n";
    os << "# L=" << format_double(g.L) << " N0=" << g.N0 << " R=" << format_double(g.R)
       << " Nr=" << g.Nr << "\n";
    os << "x0,r,part,blade,re,im\n";
    for (int n = 0; n < g.N0; ++n) {
        const std::string x0 = format_double(g.x0(n));
        for (int j = 0; j < g.Nr; ++j) {
            const std::string r = format_double(g.r(j));
            for (int part = 0; part < 2; ++part) {
                const Multivector& v = part == 0 ? f.f1(n, j) : f.f2(n, j);
                for (unsigned b : blades)
                    os << x0 << ',' << r << ',' << (part == 0 ? "f1" : "f2") << ','
                       << blade_label(b) << ',' << format_double(v[b].real()) << ','
                       << format_double(v[b].imag()) << '\n';
            }
        }
    }
}

SliceField read_field_csv(std::istream& is) {
    std::string line;
    int m = -1, N0 = -1, Nr = -1;
    double c = 0.0, L = 0.0, R = 0.0;
    bool header_seen = false;

    auto parse_meta = [&](const std::string& s) {
        std::istringstream ss(s);
        std::string tok;
        while (ss >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "m") m = std::stoi(val);
            else if (key == "c") c = parse_double(val);
            else if (key == "L") L = parse_double(val);
            else if (key == "N0") N0 = std::stoi(val);
            else if (key == "R") R = parse_double(val);
            else if (key == "Nr") Nr = std::stoi(val);
        }
    };

    // metadata and header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            parse_meta(line.substr(1));
            continue;
        }
        if (line.rfind("x0,", 0) == 0) {
            header_seen = true;
            break;
        }
        throw std::runtime_error("field_io: unexpected line before header: " + line);
    }
    if (!header_seen || m < 0 || N0 < 0 || Nr < 0)
        throw std::runtime_error("field_io: missing metadata or header");

    SliceField f(GridSpec(L, N0, R, Nr), Params(m, c));
    const GridSpec& g = f.grid();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::array<std::string, 6> col;
        std::size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            const auto comma = line.find(',', pos);
            if (comma == std::string::npos && i < 5)
                throw std::runtime_error("field_io: malformed row: " + line);
            col[i] = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
            pos = comma + 1;
        }
        const double x0 = parse_double(col[0]);
        const double r = parse_double(col[1]);
        const int n = static_cast<int>(std::lround(x0 / g.h0())) + g.N0 / 2;
        const int j = static_cast<int>(std::lround(r / g.hr()));
        if (n < 0 || n >= g.N0 || j < 0 || j >= g.Nr)
            throw std::runtime_error("field_io: row coordinates off the grid: " + line);
        const unsigned blade = parse_blade_label(col[3]);
        if (blade >= (1u << f.mv_dim()))
            throw std::runtime_error("field_io: blade out of range: " + col[3]);
        const cplx value(parse_double(col[4]), parse_double(col[5]));
        if (col[2] == "f1") f.f1(n, j)[blade] = value;
        else if (col[2] == "f2") f.f2(n, j)[blade] = value;
        else throw std::runtime_error("field_io: bad part column: " + col[2]);
    }
    return f;
}

void write_field_json(const SliceField& f, std::ostream& os) {
    const GridSpec& g = f.grid();
    const auto blades = nonzero_blades(f);
    nlohmann::json out;
    out["schema"] = "sft-field-v1";
    out["m"] = f.params().m;
    out["c"] = f.params().c;
    out["grid"] = {{"L", g.L}, {"N0", g.N0}, {"R", g.R}, {"Nr", g.Nr}};
    nlohmann::json labels = nlohmann::json::array();
    for (unsigned b : blades) labels.push_back(blade_label(b));
    out["blades"] = labels;
    for (int part = 0; part < 2; ++part) {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n < g.N0; ++n) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < g.Nr; ++j) {
                const Multivector& v = part == 0 ? f.f1(n, j) : f.f2(n, j);
                nlohmann::json node = nlohmann::json::array();
                for (unsigned b : blades)
                    node.push_back({v[b].real(), v[b].imag()});
                row.push_back(std::move(node));
            }
            rows.push_back(std::move(row));
        }
        out[part == 0 ? "f1" : "f2"] = std::move(rows);
    }
    os << out.dump() << '\n';
}

SliceField read_field_json(std::istream& is) {
    nlohmann::json in;
    is >> in;
    if (in.value("schema", "") != "sft-field-v1")
        throw std::runtime_error("field_io: unknown JSON schema");
    const Params params(in.at("m").get<int>(), in.at("c").get<double>());
    const auto& jg = in.at("grid");
    SliceField f(GridSpec(jg.at("L").get<double>(), jg.at("N0").get<int>(),
                          jg.at("R").get<double>(), jg.at("Nr").get<int>()),
                 params);
    std::vector<unsigned> blades;
    for (const auto& l : in.at("blades")) blades.push_back(parse_blade_label(l.get<std::string>()));
    const GridSpec& g = f.grid();
    for (int part = 0; part < 2; ++part) {
        const auto& rows = in.at(part == 0 ? "f1" : "f2");
        for (int n = 0; n < g.N0; ++n)
            for (int j = 0; j < g.Nr; ++j) {
                const auto& node = rows.at(n).at(j);
                Multivector& v = part == 0 ? f.f1(n, j) : f.f2(n, j);
                for (std::size_t b = 0; b < blades.size(); ++b)
                    v[blades[b]] = cplx(node.at(b).at(0).get<double>(),
                                        node.at(b).at(1).get<double>());
            }
    }
    return f;
}

namespace {
bool has_json_extension(const std::string& path) {
    const auto dot = path.rfind('.');
    return dot != std::string::npos && path.substr(dot) == ".json";
}
}  // namespace

SliceField load_field(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("field_io: cannot open " + path);
    return has_json_extension(path) ? read_field_json(is) : read_field_csv(is);
}

void save_field(const SliceField& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("field_io: cannot open " + path);
    if (has_json_extension(path)) write_field_json(f, os);
    else write_field_csv(f, os);
}

}  // namespace sft
