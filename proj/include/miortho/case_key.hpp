#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "miortho/system.hpp"

namespace miortho {

/// Canonical textual key for one verification case, e.g.
///   "J g=7/3 h=11/4 D=I1,II2 n=3"
/// Parsing is the exact inverse of rendering.
struct CaseKey {
    Family family = Family::Laguerre;
    Rational g;
    Rational h; // Jacobi only
    std::vector<IndexEntry> entries;
    unsigned n = 0;

    static CaseKey of(const SystemParams& params, const IndexSpec& index, unsigned n) {
        return CaseKey{params.family, params.g, params.h, index.entries(), n};
    }

    std::string render() const {
        std::ostringstream os;
        os << family_letter(family) << " g=" << g;
        if (family == Family::Jacobi) os << " h=" << h;
        os << " D=";
        if (entries.empty()) {
            os << "none";
        } else {
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i) os << ',';
                os << (entries[i].type == SeedType::I ? "I" : "II") << entries[i].v;
            }
        }
        os << " n=" << n;
        return os.str();
    }

    static CaseKey parse(const std::string& text) {
        std::istringstream is(text);
        std::string tok;
        CaseKey key;

        auto need = [&](const char* what) {
            if (!(is >> tok)) throw validation_error(std::string("case key missing ") + what);
        };
        auto strip = [&](const std::string& prefix, const char* what) {
            if (tok.rfind(prefix, 0) != 0)
                throw validation_error(std::string("case key expected ") + what + ", got '" + tok + "'");
            return tok.substr(prefix.size());
        };

        need("family");
        if (tok == "L")
            key.family = Family::Laguerre;
        else if (tok == "J")
            key.family = Family::Jacobi;
        else
            throw validation_error("case key family must be L or J");

        need("g");
        key.g = parse_rational(strip("g=", "g=..."));
        if (key.family == Family::Jacobi) {
            need("h");
            key.h = parse_rational(strip("h=", "h=..."));
        }

        need("index set");
        std::string body = strip("D=", "D=...");
        if (body != "none") {
            std::istringstream ds(body);
            std::string item;
            while (std::getline(ds, item, ',')) {
                IndexEntry e;
                std::size_t digits = 0;
                if (item.rfind("II", 0) == 0) {
                    e.type = SeedType::II;
                    digits = 2;
                } else if (item.rfind("I", 0) == 0) {
                    e.type = SeedType::I;
                    digits = 1;
                } else {
                    throw validation_error("case key index entry must start with I or II: '" + item + "'");
                }
                try {
                    e.v = static_cast<unsigned>(std::stoul(item.substr(digits)));
                } catch (const std::exception&) {
                    throw validation_error("case key index entry has no degree: '" + item + "'");
                }
                key.entries.push_back(e);
            }
            if (key.entries.empty()) throw validation_error("case key has an empty D= list");
        }

        need("n");
        try {
            key.n = static_cast<unsigned>(std::stoul(strip("n=", "n=...")));
        } catch (const validation_error&) {
            throw;
        } catch (const std::exception&) {
            throw validation_error("case key n must be a nonnegative integer");
        }
        if (is >> tok) throw validation_error("trailing content in case key: '" + tok + "'");
        return key;
    }

    bool operator==(const CaseKey&) const = default;
};

} // namespace miortho
