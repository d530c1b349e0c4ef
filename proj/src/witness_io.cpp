#include "ew/witness_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ew {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw WitnessIoError("witness file line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_witness_kv(std::ostream& os, const WitnessCoeffs& w) {
    os << "format=1\n";
    if (!w.name.empty()) os << "name=" << w.name << "\n";
    os << "a0=" << fmt17(w.a0) << "\n";
    for (const auto& [l, c] : w.terms) {
        os << "term i=" << l.i << " j=" << l.j;
        if (l.sqrt3_scale) os << " scale=sqrt3";
        os << " c=" << fmt17(c) << "\n";
    }
}

WitnessCoeffs read_witness_kv(std::istream& is) {
    WitnessCoeffs w;
    std::string line;
    int lineno = 0;
    bool saw_format = false, saw_a0 = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.rfind("format=", 0) == 0) {
            if (head != "format=1") fail(lineno, "unsupported format version");
            saw_format = true;
        } else if (head.rfind("name=", 0) == 0) {
            w.name = line.substr(5);
        } else if (head.rfind("a0=", 0) == 0) {
            if (!saw_format) fail(lineno, "a0 before format line");
            size_t pos = 0;
            w.a0 = std::stod(head.substr(3), &pos);
            if (pos != head.size() - 3) fail(lineno, "malformed a0 value");
            saw_a0 = true;
        } else if (head == "term") {
            OperatorLabel l;
            double c = 0.0;
            bool saw_c = false;
            std::string field;
            while (ls >> field) {
                size_t pos = 0;
                if (field.rfind("i=", 0) == 0) {
                    l.i = std::stoi(field.substr(2), &pos);
                    if (pos != field.size() - 2) fail(lineno, "malformed i");
                } else if (field.rfind("j=", 0) == 0) {
                    l.j = std::stoi(field.substr(2), &pos);
                    if (pos != field.size() - 2) fail(lineno, "malformed j");
                } else if (field == "scale=sqrt3") {
                    l.sqrt3_scale = true;
                } else if (field.rfind("c=", 0) == 0) {
                    c = std::stod(field.substr(2), &pos);
                    if (pos != field.size() - 2) fail(lineno, "malformed coefficient");
                    saw_c = true;
                } else {
                    fail(lineno, "unknown term field: " + field);
                }
            }
            if (l.i < 1 || l.i > 8 || l.j < 1 || l.j > 8) fail(lineno, "term indices out of range");
            if (!saw_c) fail(lineno, "term missing coefficient");
            w.add(l, c);
        } else {
            fail(lineno, "unknown key: " + head);
        }
    }
    if (!saw_format) throw WitnessIoError("witness file: missing format line");
    if (!saw_a0) throw WitnessIoError("witness file: missing a0 line");
    return w;
}

void save_witness(const std::string& path, const WitnessCoeffs& w) {
    std::ofstream f(path);
    if (!f) throw WitnessIoError("cannot open for writing: " + path);
    write_witness_kv(f, w);
    if (!f.good()) throw WitnessIoError("write failed: " + path);
}

WitnessCoeffs load_witness(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw WitnessIoError("cannot open: " + path);
    return read_witness_kv(f);
}

std::string witness_to_json(const WitnessCoeffs& w) {
    nlohmann::json j;
    j["format"] = 1;
    if (!w.name.empty()) j["name"] = w.name;
    j["a0"] = w.a0;
    j["terms"] = nlohmann::json::array();
    for (const auto& [l, c] : w.terms) {
        nlohmann::json t;
        t["i"] = l.i;
        t["j"] = l.j;
        if (l.sqrt3_scale) t["scale"] = "sqrt3";
        t["c"] = c;
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

}  // namespace ew
