#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "genstab/chevmod.hpp"

namespace golden {

using Printed = std::array<std::array<const char*, 7>, 7>;

// Root-element matrices of the A2 quotient module in the basis e_a1..e_a6, h_a1.
inline const std::vector<std::pair<std::string, Printed>>& a2_quotient_matrices() {
    static const std::vector<std::pair<std::string, Printed>> m{
        {"x[1,0]", {{{"1", "0", "0", "-t^2", "0", "0", "t"},
                     {"0", "1", "0", "0", "0", "0", "0"},
                     {"0", "t", "1", "0", "0", "0", "0"},
                     {"0", "0", "0", "1", "0", "0", "0"},
                     {"0", "0", "0", "0", "1", "-t", "0"},
                     {"0", "0", "0", "0", "0", "1", "0"},
                     {"0", "0", "0", "t", "0", "0", "1"}}}},
        {"x[0,1]", {{{"1", "0", "0", "0", "0", "0", "0"},
                     {"0", "1", "0", "0", "-t^2", "0", "t"},
                     {"-t", "0", "1", "0", "0", "0", "0"},
                     {"0", "0", "0", "1", "0", "t", "0"},
                     {"0", "0", "0", "0", "1", "0", "0"},
                     {"0", "0", "0", "0", "0", "1", "0"},
                     {"0", "0", "0", "0", "t", "0", "1"}}}},
        {"x[1,1]", {{{"1", "0", "0", "0", "t", "0", "0"},
                     {"0", "1", "0", "-t", "0", "0", "0"},
                     {"0", "0", "1", "0", "0", "-t^2", "-t"},
                     {"0", "0", "0", "1", "0", "0", "0"},
                     {"0", "0", "0", "0", "1", "0", "0"},
                     {"0", "0", "0", "0", "0", "1", "0"},
                     {"0", "0", "0", "0", "0", "-t", "1"}}}},
        {"x[-1,0]", {{{"1", "0", "0", "0", "0", "0", "0"},
                      {"0", "1", "t", "0", "0", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0"},
                      {"-t^2", "0", "0", "1", "0", "0", "-t"},
                      {"0", "0", "0", "0", "1", "0", "0"},
                      {"0", "0", "0", "0", "-t", "1", "0"},
                      {"-t", "0", "0", "0", "0", "0", "1"}}}},
        {"x[0,-1]", {{{"1", "0", "-t", "0", "0", "0", "0"},
                      {"0", "1", "0", "0", "0", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0"},
                      {"0", "0", "0", "1", "0", "0", "0"},
                      {"0", "-t^2", "0", "0", "1", "0", "-t"},
                      {"0", "0", "0", "t", "0", "1", "0"},
                      {"0", "-t", "0", "0", "0", "0", "1"}}}},
        {"x[-1,-1]", {{{"1", "0", "0", "0", "0", "0", "0"},
                       {"0", "1", "0", "0", "0", "0", "0"},
                       {"0", "0", "1", "0", "0", "0", "0"},
                       {"0", "-t", "0", "1", "0", "0", "0"},
                       {"t", "0", "0", "0", "1", "0", "0"},
                       {"0", "0", "-t^2", "0", "0", "1", "t"},
                       {"0", "0", "t", "0", "0", "0", "1"}}}},
    };
    return m;
}

// Coefficient of t^power in a printed entry.
inline int printed_coefficient(const std::string& entry, int power) {
    int sign = 1;
    std::string e = entry;
    if (!e.empty() && e[0] == '-') {
        sign = -1;
        e = e.substr(1);
    }
    int p = e == "t" ? 1 : e == "t^2" ? 2 : 0;
    if (p != power) return 0;
    return p == 0 ? sign * std::stoi(e) : sign;
}

// The printed matrix at parameter t.
inline genstab::Matrix printed_at(const Printed& m, const genstab::FieldElement& t, const genstab::FieldDescriptor& f) {
    genstab::Matrix out(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const std::string e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            genstab::FieldElement v = genstab::FieldElement::zero(f);
            for (int p = 0; p <= 2; ++p) v += genstab::FieldElement::integer(f, printed_coefficient(e, p)) * t.pow(p);
            out(i, j) = v;
        }
    return out;
}

// Printed matrix coefficient of t^power.
inline genstab::Matrix printed_coefficients(const Printed& m, int power, const genstab::FieldDescriptor& f) {
    genstab::Matrix out(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            out(i, j) = genstab::FieldElement::integer(
                f, printed_coefficient(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], power));
    return out;
}

// Printed form: (e_ai, e_aj) = 1 iff |i - j| = 3, (h, h) = -1.
inline genstab::Matrix printed_form(const genstab::FieldDescriptor& f) {
    genstab::Matrix b = genstab::zeros(7, 7, f);
    for (int i = 0; i < 3; ++i) b(i, i + 3) = b(i + 3, i) = genstab::FieldElement::one(f);
    b(6, 6) = genstab::FieldElement::integer(f, -1);
    return b;
}

// diag(k^2, k^-1, k, k^-2, k, k^-1, 1) and diag(k^-1, k^2, k, k, k^-2, k^-1, 1).
inline genstab::Matrix printed_torus(int simple, const genstab::FieldElement& k) {
    const std::array<int, 7> e1{2, -1, 1, -2, 1, -1, 0}, e2{-1, 2, 1, 1, -2, -1, 0};
    const auto& e = simple == 0 ? e1 : e2;
    genstab::Matrix d = genstab::zeros(7, 7, k.field());
    for (int i = 0; i < 7; ++i) d(i, i) = k.pow(e[static_cast<std::size_t>(i)]);
    return d;
}

}  // namespace golden
