#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nusring {

/// Structured, human-readable form of a ring element.
///
/// Scalars are residues (`3`), tuples are product/extension components (`(1,2)`),
/// vectors are row-major matrix entries or coefficient lists (`[1,0,0,1]`).
struct ElementForm {
    enum class Shape { Scalar, Tuple, Vector };

    Shape shape = Shape::Scalar;
    std::int64_t value = 0;
    std::vector<ElementForm> items;

    static ElementForm scalar(std::int64_t v) { return ElementForm{Shape::Scalar, v, {}}; }
    static ElementForm tuple(std::vector<ElementForm> parts) {
        return ElementForm{Shape::Tuple, 0, std::move(parts)};
    }
    static ElementForm vector(std::vector<ElementForm> parts) {
        return ElementForm{Shape::Vector, 0, std::move(parts)};
    }

    friend bool operator==(const ElementForm&, const ElementForm&) = default;
};

std::string to_string(const ElementForm& form);

/// Parses `INT | "(" form {"," form} ")" | "[" form {"," form} "]"`, ignoring whitespace.
/// Throws ParseError.
ElementForm parse_element_form(std::string_view text);

}  // namespace nusring
