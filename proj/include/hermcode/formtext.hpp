#pragma once

#include <string>

#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"

namespace hermcode {

// Form strings: terms joined by '+' or '-', factors joined by '*'.  A factor
// is an integer, 'a' (the extension generator) or 'b' (the F_t generator when
// t is not prime) with optional '^k', a variable 'xi' with optional '^e', or
// a parenthesized scalar expression.  Every term must have total degree h.
// Field element names produced by element_name parse back to their value.
Form parse_form(const std::string& text, int n, int h, const FieldSpec& field);

std::string form_to_string(const Form& f, const FieldSpec& field);

}  // namespace hermcode
