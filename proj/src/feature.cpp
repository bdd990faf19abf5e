#include "mglab/feature.hpp"

namespace mglab {

bool check_match(const Feature& probe, const Feature& goal) {
    if (probe.symbol != goal.symbol)
        return false;
    switch (probe.kind) {
    case FeatureKind::SelRight:
    case FeatureKind::SelLeft:
        return goal.kind == FeatureKind::Cat;
    case FeatureKind::LicPlus:
        return goal.kind == FeatureKind::LicMinus;
    case FeatureKind::Cat:
        return goal.kind == FeatureKind::SelRight || goal.kind == FeatureKind::SelLeft;
    case FeatureKind::LicMinus:
        return goal.kind == FeatureKind::LicPlus;
    }
    return false;
}

std::string to_string(const Feature& f) {
    switch (f.kind) {
    case FeatureKind::Cat:
        return f.symbol;
    case FeatureKind::SelRight:
        return "=" + f.symbol;
    case FeatureKind::SelLeft:
        return f.symbol + "=";
    case FeatureKind::LicPlus:
        return "+" + f.symbol;
    case FeatureKind::LicMinus:
        return "-" + f.symbol;
    }
    return f.symbol;
}

std::string to_string(const std::vector<Feature>& fs) {
    std::string out;
    for (const Feature& f : fs) {
        if (!out.empty())
            out += ' ';
        out += to_string(f);
    }
    return out;
}

bool feature_from_token(const std::string& token, Feature& out) {
    if (token.empty())
        return false;
    if (token.front() == '=') {
        out = {FeatureKind::SelRight, token.substr(1)};
    } else if (token.back() == '=') {
        out = {FeatureKind::SelLeft, token.substr(0, token.size() - 1)};
    } else if (token.front() == '+') {
        out = {FeatureKind::LicPlus, token.substr(1)};
    } else if (token.front() == '-') {
        out = {FeatureKind::LicMinus, token.substr(1)};
    } else {
        out = {FeatureKind::Cat, token};
    }
    return !out.symbol.empty() && out.symbol.find('=') == std::string::npos;
}

} // namespace mglab
