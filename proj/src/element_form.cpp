#include "nusring/element_form.hpp"

#include <cctype>

#include "nusring/errors.hpp"

namespace nusring {

std::string to_string(const ElementForm& form) {
    switch (form.shape) {
        case ElementForm::Shape::Scalar:
            return std::to_string(form.value);
        case ElementForm::Shape::Tuple:
        case ElementForm::Shape::Vector: {
            const bool tuple = form.shape == ElementForm::Shape::Tuple;
            std::string out(1, tuple ? '(' : '[');
            for (std::size_t i = 0; i < form.items.size(); ++i) {
                if (i != 0) out += ',';
                out += to_string(form.items[i]);
            }
            out += tuple ? ')' : ']';
            return out;
        }
    }
    return {};
}

namespace {

class FormParser {
public:
    explicit FormParser(std::string_view text) : text_(text) {}

    ElementForm parse_all() {
        ElementForm form = parse_value();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return form;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    ElementForm parse_value() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected element", pos_);
        const char c = text_[pos_];
        if (c == '(' || c == '[') {
            const char close = c == '(' ? ')' : ']';
            ++pos_;
            std::vector<ElementForm> items;
            items.push_back(parse_value());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                items.push_back(parse_value());
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != close)
                throw ParseError(std::string("expected '") + close + "'", pos_);
            ++pos_;
            return c == '(' ? ElementForm::tuple(std::move(items)) : ElementForm::vector(std::move(items));
        }
        bool negative = false;
        if (c == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (INT64_MAX - 9) / 10) throw ParseError("integer too large", start);
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return ElementForm::scalar(negative ? -value : value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ElementForm parse_element_form(std::string_view text) { return FormParser(text).parse_all(); }

}  // namespace nusring
