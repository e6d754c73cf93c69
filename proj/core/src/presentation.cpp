#include "knotcv/presentation.hpp"

#include <fstream>
#include <sstream>

#include "knotcv/error.hpp"

namespace knotcv {

void KnotPresentation::validate() const {
    if (relator.empty()) throw_input("presentation '" + name + "': relator defines free group");
    if (meridian.empty()) throw_input("presentation '" + name + "': empty meridian");
    if (alexander.vars() != std::vector<std::string>{"t"})
        throw_input("presentation '" + name + "': alexander polynomial must be univariate in t");
    if (alexander.eval_exact({Rational(1)}) == 0)
        throw_input("presentation '" + name + "': alexander polynomial vanishes at 1");
}

KnotPresentation figure_eight() {
    KnotPresentation p;
    p.name = "fig8";
    p.relator = GroupWord::parse("B A b a B a b A B a");
    p.meridian = GroupWord::parse("a");
    p.longitude = GroupWord::parse("B a b A A b a B");
    p.alexander = MultiPoly::parse("t^2 - 3 t + 1", {"t"});
    p.vol_constant = 2.029883212819;
    p.cs_constant = 0.0;
    return p;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (trim(value.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw_input("preset: bad numeric value for " + key + ": '" + value + "'");
}

}  // namespace

KnotPresentation parse_presentation(const std::string& text) {
    KnotPresentation p;
    bool saw_relator = false, saw_meridian = false, saw_alexander = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw_input("preset line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (key == "name") {
            p.name = value;
        } else if (key == "relator") {
            p.relator = GroupWord::parse(value);
            saw_relator = true;
        } else if (key == "meridian") {
            p.meridian = GroupWord::parse(value);
            saw_meridian = true;
        } else if (key == "longitude") {
            p.longitude = GroupWord::parse(value);
        } else if (key == "alexander") {
            p.alexander = MultiPoly::parse(value, {"t"});
            saw_alexander = true;
        } else if (key == "vol_constant") {
            p.vol_constant = parse_real(key, value);
        } else if (key == "cs_constant") {
            p.cs_constant = parse_real(key, value);
        } else {
            throw_input("preset line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_relator || !saw_meridian || !saw_alexander)
        throw_input("preset: relator, meridian, and alexander are required");
    if (p.name.empty()) p.name = "unnamed";
    p.validate();
    return p;
}

KnotPresentation load_presentation(const std::string& name_or_path) {
    std::ifstream f(name_or_path);
    if (f) {
        std::ostringstream buf;
        buf << f.rdbuf();
        return parse_presentation(buf.str());
    }
    if (name_or_path == "fig8") return figure_eight();
    throw_input("unknown preset '" + name_or_path + "': not a file and not a built-in name");
}

}  // namespace knotcv
