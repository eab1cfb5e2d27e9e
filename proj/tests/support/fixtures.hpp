#pragma once

#include "sullivan/modelfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sullivan::testing {

inline std::string corpus_dir() {
    if (const char* env = std::getenv("SULLIVAN_CORPUS_DIR")) return env;
    return SULLIVAN_CORPUS_DIR;
}

inline ModelDocument load_fixture(const std::string& name) {
    std::ifstream in(corpus_dir() + "/" + name + ".sul");
    if (!in) throw std::runtime_error("fixture not found: " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    auto result = parse(buf.str());
    if (!result.ok()) {
        std::string msg = "fixture " + name + " failed to parse:";
        for (const auto& e : result.errors) msg += "\n  " + e.render();
        throw std::runtime_error(msg);
    }
    return std::move(result.document);
}

inline const KsExtension& ext(const ModelDocument& doc, const std::string& name = "E") {
    return doc.extensions.at(name);
}

inline const SullivanAlgebra& alg(const ModelDocument& doc, const std::string& name = "B") {
    return doc.algebras.at(name);
}

}  // namespace sullivan::testing
