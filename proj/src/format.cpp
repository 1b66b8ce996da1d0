#include "qgame/format.hpp"

#include <cmath>
#include <cstdio>

namespace qgame {

std::string decimal12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string rational_label(double v, int max_den, double tol) {
    if (!std::isfinite(v))
        return decimal12(v);
    const double sign = v < 0.0 ? -1.0 : 1.0;
    const double mag = std::abs(v);
    for (int den = 1; den <= max_den; ++den) {
        const double num = std::round(mag * den);
        if (std::abs(mag * den - num) <= tol * den) {
            char buf[64];
            if (den == 1)
                std::snprintf(buf, sizeof(buf), "%.0f", sign * num);
            else
                std::snprintf(buf, sizeof(buf), "%.0f/%d", sign * num, den);
            return buf;
        }
    }
    return decimal12(v);
}

std::string profile_label(const StrategyProfile& profile) {
    struct Visitor {
        std::string operator()(const ClassicalProfile& p) const {
            std::string out = "(";
            for (int i = 0; i < 3; ++i) {
                if (i > 0)
                    out += ",";
                out += rational_label(p.s[i].p);
            }
            return out + ")";
        }
        std::string operator()(const QuantumProfile& p) const {
            auto name = [](QuantumStrategy s) {
                switch (s) {
                case QuantumStrategy::PHat0: return "sx";
                case QuantumStrategy::PHatHalf: return "h";
                case QuantumStrategy::PHat1: return "id";
                }
                return "?";
            };
            std::string out = "(";
            for (int i = 0; i < 3; ++i) {
                if (i > 0)
                    out += ",";
                out += name(p.s[i]);
            }
            return out + ")";
        }
    };
    return std::visit(Visitor{}, profile);
}

}
