// Regenerates the golden .tg fixture files from the factory definitions.
#include <fstream>
#include <iostream>

#include "support/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: fixturegen <output-dir>\n";
        return 2;
    }
    for (const auto& fx : fixtures::all_fixtures()) {
        std::string path = std::string(argv[1]) + "/" + fx.name + ".tg";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << fx.graph.serialize();
        std::cout << path << "\n";
    }
    return 0;
}
