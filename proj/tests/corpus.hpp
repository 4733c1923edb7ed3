#pragma once

// Expressions shared by the kernel unit tests and the acceptance run.
inline const char* const kExprCorpus[] = {
    "x^2*y + sin(x)",
    "atan2(y, x)",
    "1/(x^3)",
    "exp(-2*atan2(y,x))*(x^2+y^2)",
    "sqrt(x^2+y^2)",
    "(x^2+y^2)^(-3/2)*x",
    "ln(1+x^2) - cosh(y)/sinh(x+3)",
    "tan(x/3) + atan(y*x)",
    "abs(x - y)*x",
    "x^y + y^(1/3)",
    "(1 + (y/x)^2)/x^3",
    "x^(-2)*(1 + y/x)",
    "0.5*(x^2+y^2) + x^3",
    "(y^2 - x^2)^(1/3)",
    "exp(x)*cos(2*y) - sin(x)^2*exp(-x)",
    "(x+2*y)^3/(x-y)",
};
