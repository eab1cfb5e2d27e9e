#pragma once

#include "sullivan/extension.hpp"

#include <map>
#include <string>
#include <vector>

namespace sullivan {

/// A positioned diagnostic from parsing or post-parse semantic checking.
struct ParseDiagnostic {
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    std::string message;
    std::vector<std::string> expected;  // expected-token set at syntax errors

    std::string render() const;
};

/// A parsed model file: named algebras, extensions and morphisms.
/// Declaration order is preserved for canonical serialization.
struct ModelDocument {
    struct Entry {
        enum class Kind { algebra, extension, morphism } kind;
        std::string name;
    };

    std::string title;
    std::string tag;  // free-form citation/identifier metadata
    std::map<std::string, SullivanAlgebra> algebras;
    std::map<std::string, KsExtension> extensions;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, std::string> extension_base;   // extension -> base name
    std::map<std::string, std::pair<std::string, std::string>> morphism_ends;
    std::vector<Entry> order;

    bool operator==(const ModelDocument& other) const;
};

struct ParseResult {
    ModelDocument document;
    std::vector<ParseDiagnostic> errors;
    std::vector<ParseDiagnostic> warnings;

    bool ok() const { return errors.empty(); }
};

/// Line-oriented grammar:
///   title <text>
///   algebra <name>
///     gen <ident> : <degree>
///     d <ident> = <polynomial>
///   extension <name> over <algebra-or-extension>
///     gen ... / d ...          (fiber generators and total differentials)
///   morphism <name> : <alg> -> <alg>
///     map <ident> = <polynomial>
///   # comment
/// Polynomials use + - * ^ with explicit '*', rational coefficients like 3/2,
/// exponents on single generators. Identifiers: [A-Za-z][A-Za-z0-9_']*.
ParseResult parse(const std::string& text);

/// Canonical text form; parse(serialize(doc)) == doc structurally.
std::string serialize(const ModelDocument& doc);

/// Polynomial in the canonical surface syntax.
std::string polynomial_text(const Polynomial& p);

}  // namespace sullivan
