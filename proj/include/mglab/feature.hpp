#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mglab {

/// The five feature kinds a lexical entry can carry.  CAT names the category
/// an item eventually offers; SEL_R/SEL_L select an argument (to the right or
/// left on first combination); LIC_PLUS attracts a pending mover and LIC_MINUS
/// marks an item as one.
enum class FeatureKind : std::uint8_t {
    Cat,
    SelRight,
    SelLeft,
    LicPlus,
    LicMinus,
};

struct Feature {
    FeatureKind kind = FeatureKind::Cat;
    std::string symbol;

    bool operator==(const Feature&) const = default;
};

/// True iff a probe feature and a goal feature cancel each other:
/// a selector against a matching category, or a licensor against a matching
/// licensee.  Matching is destructive at the call sites (both features are
/// removed), so this predicate carries no state.
bool check_match(const Feature& probe, const Feature& goal);

/// Surface spelling: "=x" (SEL_R), "x=" (SEL_L), "+x" (LIC_PLUS),
/// "-x" (LIC_MINUS), bare "x" (CAT).
std::string to_string(const Feature& f);

/// Renders a feature sequence separated by single spaces.
std::string to_string(const std::vector<Feature>& fs);

/// Inverse of to_string for a single feature token.  Returns false when the
/// token is empty or names an empty symbol (e.g. "=", "+").
bool feature_from_token(const std::string& token, Feature& out);

} // namespace mglab
