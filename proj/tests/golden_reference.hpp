#pragma once

// Reference matrices and formulas for so(6,5) and the N=3 examples, in the
// text syntax accepted by parse_polynomial.

#include <vector>

namespace golden {

// L
inline const std::vector<std::vector<const char*>> kL = {
    {"0", "-b1", "-a1", "0", "0", "0", "0", "0", "0", "0"},
    {"b1", "0", "0", "a1", "0", "0", "0", "0", "0", "0"},
    {"a1", "0", "0", "b2", "a2", "0", "0", "0", "0", "0"},
    {"0", "-a1", "-b2", "0", "0", "-a2", "0", "0", "0", "0"},
    {"0", "0", "-a2", "0", "0", "-b3", "-a3", "0", "0", "0"},
    {"0", "0", "0", "a2", "b3", "0", "0", "a3", "0", "0"},
    {"0", "0", "0", "0", "-a3", "0", "0", "b4", "a4", "0"},
    {"0", "0", "0", "0", "0", "a3", "-b4", "0", "0", "-a4"},
    {"0", "0", "0", "0", "0", "0", "-a4", "0", "0", "-b5"},
    {"0", "0", "0", "0", "0", "0", "0", "a4", "b5", "0"},
};
// B
inline const std::vector<std::vector<const char*>> kB = {
    {"0", "0", "0", "a1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "a1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-a1", "0", "0", "0", "a2", "0", "0", "0", "0"},
    {"-a1", "0", "0", "0", "a2", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "-a2", "0", "0", "0", "a3", "0", "0"},
    {"0", "0", "-a2", "0", "0", "0", "a3", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "a3", "0", "0", "0", "a4"},
    {"0", "0", "0", "0", "a3", "0", "0", "0", "a4", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-a4", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-a4", "0", "0", "0"},
};
// PI1
inline const std::vector<std::vector<const char*>> kPI1 = {
    {"0", "0", "0", "0", "-a1", "a1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "-a2", "a2", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-a3", "a3", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-a4", "a4"},
    {"a1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"-a1", "a2", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-a2", "a3", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-a3", "a4", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "-a4", "0", "0", "0", "0", "0"},
};
// PI2
inline const std::vector<std::vector<const char*>> kPI2 = {
    {"0", "(a1*a2)/2", "0", "0", "-a1*b1", "a1*b2", "0", "0", "0"},
    {"-(a1*a2)/2", "0", "(a2*a3)/2", "0", "0", "-a2*b2", "a2*b3", "0", "0"},
    {"0", "-(a2*a3)/2", "0", "(a3*a4)/2", "0", "0", "-a3*b3", "a3*b4", "0"},
    {"0", "0", "-(a3*a4)/2", "0", "0", "0", "0", "-a4*b4", "a4*b5"},
    {"a1*b1", "0", "0", "0", "0", "2*a1^2", "0", "0", "0"},
    {"-a1*b2", "a2*b2", "0", "0", "-2*a1^2", "0", "2*a2^2", "0", "0"},
    {"0", "-a2*b3", "a3*b3", "0", "0", "-2*a2^2", "0", "-2*a3^2", "0"},
    {"0", "0", "-a3*b4", "a4*b4", "0", "0", "2*a3^2", "0", "2*a4^2"},
    {"0", "0", "0", "-a4*b5", "0", "0", "0", "-2*a4^2", "0"},
};
// X1
inline const std::vector<std::vector<const char*>> kX1 = {
    {"1/2*a1*(5*b1-b2)"},
    {"1/2*a2*(3*b2+b3)"},
    {"1/2*a3*(3*b4+b3)"},
    {"-1/2*a4*(b4-5*b5)"},
    {"-2*a1^2+b1^2"},
    {"4*a1^2+b2^2"},
    {"2*a2^2-2*a3^2+b3^2"},
    {"4*a4^2+b4^2"},
    {"-2*a4^2+b5^2"},
};
// X2
inline const std::vector<std::vector<const char*>> kX2 = {
    {"1/2*a1*(2*b1*b2+b4*b1+b5*b1-b3*b2-b4*b2-b5*b2+b3*b1+5*b1^2-b2^2+2*a1^2)"},
    {"1/2*a2*(3*b2^2-b1*b2+2*b3*b2+b4*b2+b5*b2+4*a1^2+2*a2^2-2*a3^2+b3^2+b3*b1-b4*b3-b5*b3)"},
    {"1/2*a3*(-b3*b1-b3*b2+2*b4*b3+b5*b3+4*a4^2+3*b4^2+b4*b1+b4*b2-b5*b4+2*a2^2-2*a3^2+b3^2)"},
    {"1/2*a4*(b5*b3+b5*b2+b5*b1-b4*b3-b4*b2-b4*b1+2*b5*b4+2*a4^2-b4^2+5*b5^2)"},
    {"-2*b2*a1^2-b1*a1^2-a1^2*b3-a1^2*b4-a1^2*b5+b1^3"},
    {"4*b1*a1^2+5*b2*a1^2+a1^2*b3+a1^2*b4+a1^2*b5+a2^2*b1+b2*a2^2-a2^2*b4-a2^2*b5+b2^3"},
    {"2*b2*a2^2-a2^2*b1+3*b3*a2^2+a2^2*b4+a2^2*b5-2*b4*a3^2-a3^2*b1-a3^2*b2-3*b3*a3^2+a3^2*b5+b3^3"},
    {"a3^2*b1+a3^2*b2-b4*a3^2-a3^2*b5+4*b5*a4^2+a4^2*b1+a4^2*b2+a4^2*b3+5*b4*a4^2+b4^3"},
    {"-2*b4*a4^2-a4^2*b1-a4^2*b2-a4^2*b3-b5*a4^2+b5^3"},
};
// B4ALT
inline const std::vector<std::vector<const char*>> kB4ALT = {
    {"0", "0", "0", "a1", "0", "0"},
    {"0", "0", "a1", "0", "0", "0"},
    {"0", "a1", "0", "0", "0", "a2"},
    {"a1", "0", "0", "0", "a2", "0"},
    {"0", "0", "0", "a2", "0", "0"},
    {"0", "0", "a2", "0", "0", "0"},
};
inline const std::vector<std::vector<const char*>> kL4ALT = {
    {"0", "-b1", "-a1", "0", "0", "0"},
    {"b1", "0", "0", "a1", "0", "0"},
    {"-a1", "0", "0", "b2", "a2", "0"},
    {"0", "a1", "-b2", "0", "0", "-a2"},
    {"0", "0", "a2", "0", "0", "-b3"},
    {"0", "0", "0", "-a2", "b3", "0"},
};

inline const char* kH2 = "a1^2 + a2^2 - a3^2 + a4^2 + 1/2*(b1^2 + b2^2 + b3^2 + b4^2 + b5^2)";
inline const char* kH4 =
    "a1^2*(b1^2 + b1*b2 + b2^2) + a2^2*(b2^2 + b2*b3 + b3^2) - a3^2*(b3^2 + b3*b4 + b4^2)"
    " + a4^2*(b4^2 + b4*b5 + b5^2) + a1^2*a2^2 - a2^2*a3^2 - a3^2*a4^2"
    " + 1/2*(a1^4 + a2^4 + a3^4 + a4^4) + 1/4*(b1^4 + b2^4 + b3^4 + b4^4 + b5^4)";
inline const char* kI3 =
    "1/3*(b1^3 + b2^3 + b3^3 + b4^3 + b5^3) + a1^2*(b1 + b2) + a2^2*(b2 + b3) - a3^2*(b3 + b4)"
    " + a4^2*(b4 + b5)";
inline const char* kM[5][5] = {
    {"b1", "a1", "0", "0", "0"},
    {"a1", "b2", "a2", "0", "0"},
    {"0", "a2", "b3", "i*a3", "0"},
    {"0", "0", "i*a3", "b4", "a4"},
    {"0", "0", "0", "a4", "b5"},
};
inline const char* kA[5][5] = {
    {"0", "a1", "0", "0", "0"},
    {"-a1", "0", "a2", "0", "0"},
    {"0", "-a2", "0", "i*a3", "0"},
    {"0", "0", "-i*a3", "0", "a4"},
    {"0", "0", "0", "-a4", "0"},
};
/// Equations of motion of so(6,5): a1..a4 then b1..b5.
inline const char* kFlow65[9] = {
    "(b2 - b1)*a1", "(b3 - b2)*a2", "(b4 - b3)*a3", "(b5 - b4)*a4",
    "2*a1^2", "2*a2^2 - 2*a1^2", "-2*a3^2 - 2*a2^2", "2*a4^2 + 2*a3^2", "-2*a4^2",
};

/// N=3 examples: sign pattern, M, and the b equations (a equations are
/// a_i (b_{i+1} - b_i) throughout).
struct Example3 {
  const char* signs;
  const char* M[3][3];
  const char* A[3][3];
  const char* bdot[3];
};
inline const Example3 kExamples3[4] = {
    {"++", {{"b1", "a1", "0"}, {"a1", "b2", "a2"}, {"0", "a2", "b3"}},
     {{"0", "a1", "0"}, {"-a1", "0", "a2"}, {"0", "-a2", "0"}},
     {"2*(a1^2)", "2*(a2^2 - a1^2)", "2*(-a2^2)"}},
    {"+-", {{"b1", "a1", "0"}, {"a1", "b2", "i*a2"}, {"0", "i*a2", "b3"}},
     {{"0", "a1", "0"}, {"-a1", "0", "i*a2"}, {"0", "-i*a2", "0"}},
     {"2*(a1^2)", "2*(-a2^2 - a1^2)", "2*(a2^2)"}},
    {"-+", {{"b1", "i*a1", "0"}, {"i*a1", "b2", "a2"}, {"0", "a2", "b3"}},
     {{"0", "i*a1", "0"}, {"-i*a1", "0", "a2"}, {"0", "-a2", "0"}},
     {"2*(-a1^2)", "2*(a2^2 + a1^2)", "2*(-a2^2)"}},
    {"--", {{"b1", "i*a1", "0"}, {"i*a1", "b2", "i*a2"}, {"0", "i*a2", "b3"}},
     {{"0", "i*a1", "0"}, {"-i*a1", "0", "i*a2"}, {"0", "-i*a2", "0"}},
     {"2*(-a1^2)", "2*(-a2^2 + a1^2)", "2*(a2^2)"}},
};

}  // namespace golden
