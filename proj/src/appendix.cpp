#include "trideg/appendix.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace trideg {

AppendixData AppendixData::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    AppendixData data;
    std::string line;
    std::string name;
    std::vector<UPoly> ycoeffs;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "poly") {
            ls >> name;
            ycoeffs.clear();
        } else if (head == "end") {
            data.sections_.emplace(name, BiPoly(std::move(ycoeffs)));
            ycoeffs.clear();
        } else {
            int i = std::stoi(head);
            int j;
            std::string c;
            ls >> j >> c;
            if (static_cast<int>(ycoeffs.size()) <= i) ycoeffs.resize(i + 1);
            std::vector<Int> mono(j + 1);
            mono[j] = Int(c);
            ycoeffs[i] += UPoly(std::move(mono));
        }
    }
    if (data.sections_.empty())
        throw std::runtime_error("no polynomial sections in " + path);
    return data;
}

AppendixData AppendixData::locate(const std::string& argv0) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(argv0).parent_path();
    for (int up = 0; up < 4; ++up) {
        fs::path candidate = dir / "data" / "appendix_polynomials.txt";
        if (fs::exists(candidate)) return load(candidate.string());
        dir = dir / "..";
    }
    // Fall back to the working directory.
    return load("data/appendix_polynomials.txt");
}

const BiPoly& AppendixData::poly(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end())
        throw std::runtime_error("unknown polynomial section: " + name);
    return it->second;
}

UPoly AppendixData::upoly(const std::string& name) const {
    const BiPoly& p = poly(name);
    if (p.degree_y() > 0)
        throw std::runtime_error("section " + name + " depends on y");
    return p.coeff_y(0);
}

}  // namespace trideg
