#include "soncoup/reference_table.hpp"

#include <array>

namespace soncoup {

namespace {

constexpr CouplingLabels L(int a, int b, int c, int d, int e, int f) { return CouplingLabels{{a, b, c, d, e, f}}; }

const std::array kRows = {
    ReferenceRow{L(1, 1, 2, 1, 1, 2), "4 (n-2)/((n-1) n^3 (n+2)^3)", "(n-2)(n-1)n/(n+2)"},
    ReferenceRow{L(1, 1, 2, 1, 3, 2), "24/((n-1)^2 n (n+2)^3 (n+4))", "(n-1) n^3/(n+2)"},
    ReferenceRow{L(1, 1, 2, 2, 2, 1), "8 (n-2)/((n-1)^2 n^2 (n+2)^3)", "(n-2)(n-1)n"},
    ReferenceRow{L(1, 1, 2, 2, 2, 3), "48 (n-2)/((n-1)^3 n (n+2)^3 (n+4)^2)", "(n-2)(n-1)n^2/(n+4)"},
    ReferenceRow{L(1, 1, 2, 2, 4, 3), "288/((n-1)^3 n (n+2)^2 (n+4)^2 (n+6))", "(n-1)n^3(n+1)/(2(n+4))"},
    ReferenceRow{L(1, 1, 2, 3, 3, 2), "72 (n-2)(n+1)/((n-1)^3 n^2 (n+2)^3 (n+4)^2)",
                 "(n-2)(n-1)n^2(n+1)/(2(n+2))"},
    ReferenceRow{L(1, 1, 2, 3, 3, 4), "864 (n-2)/((n-1)^3 n^3 (n+2) (n+4)^2 (n+6)^2)",
                 "(n-2)(n-1)n^2(n+1)/(2(n+6))"},
    ReferenceRow{L(1, 1, 2, 4, 4, 3), "1152 (n-2)/((n-1)^3 n^3 (n+1) (n+4)^2 (n+6)^2)",
                 "(n-2)(n-1)n^2(n+1)(n+2)/(6(n+4))"},
    ReferenceRow{L(1, 2, 3, 1, 2, 3), "72 (n-2)/((n-1)^3 n (n+2)^3 (n+4)^3)",
                 "(n-2)(n-1)n^3/(2(n+2)(n+4))"},
    ReferenceRow{L(1, 2, 3, 1, 4, 3), "864/((n-1)^3 n^2 (n+2) (n+4)^3 (n+6))", "(n-1)n^3(n+1)/(2(n+4))"},
    ReferenceRow{L(1, 2, 3, 2, 3, 2), "288 (n-2)(n+1)/((n-1)^4 n (n+2)^3 (n+4)^3)",
                 "(n-2)(n-1)n^2(n+1)/(n+4)"},
    ReferenceRow{L(1, 2, 3, 2, 3, 4), "1728 (n-2)/((n-1)^4 n (n+2)^2 (n+4)^3 (n+6)^2)",
                 "(n-2)(n-1)n^3(n+1)/(2(n+4)(n+6))"},
    ReferenceRow{L(1, 2, 3, 3, 2, 3), "864 (n-2)(n+1)/((n-1)^4 n (n+2)^3 (n+4)^3 (n+6))",
                 "(n-2)(n-1)n^3(n+1)/((n+2)(n+6))"},
    ReferenceRow{L(1, 2, 3, 3, 4, 3), "5184 (n-2)/((n-1)^4 n^2 (n+2) (n+4)^3 (n+6)^2)",
                 "(n-2)(n-1)n^3(n+1)/(2(n+6))"},
    ReferenceRow{L(1, 2, 3, 4, 3, 2), "864 (n-2)/((n-1)^4 n (n+2)^2 (n+4)^3 (n+6))",
                 "(n-2)(n-1)n^3(n+1)/(4(n+4))"},
    ReferenceRow{L(1, 2, 3, 4, 3, 4), "20736 (n-2)/((n-1)^4 n^2 (n+1) (n+4)^3 (n+6)^2 (n+8))",
                 "(n-2)(n-1)n^3(n+1)(n+2)/(2(n+4)(n+8))"},
    ReferenceRow{L(1, 3, 4, 1, 3, 4), "3456 (n-2)/((n-1)^3 n^3 (n+1) (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n^3(n+1)/(6(n+4)(n+6))"},
    ReferenceRow{L(1, 3, 4, 2, 4, 3), "20736 (n-2)(n+2)/((n-1)^4 n^3 (n+1) (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n^2(n+1)(n+2)^2/(2(n+4)(n+6))"},
    ReferenceRow{L(1, 3, 4, 3, 3, 4), "62208 (n-2)/((n-1)^4 n^2 (n+1) (n+4)^3 (n+6)^3 (n+8))",
                 "(n-2)(n-1)n^4(n+1)/(2(n+6)(n+8))"},
    ReferenceRow{L(1, 3, 4, 4, 4, 3), "124416 (n-2)(n+3)/((n-1)^4 n^2 (n+1)^2 (n+4)^3 (n+6)^3 (n+8))",
                 "(n-2)(n-1)n^4(n+1)(n+3)/(4(n+4)(n+8))"},
    ReferenceRow{L(2, 2, 2, 2, 2, 2), "64 (n-2)(n^2+4n-24)/((n-1)^5 (n+2)^3 (n+4)^3)",
                 "(n-2)(n-1)(n+2)^3(n^2+4n-24)/(n+4)^3"},
    ReferenceRow{L(2, 2, 2, 2, 2, 4), "768 (n-2) n/((n-1)^5 (n+2)^3 (n+4)^3 (n+6))",
                 "(n-2)(n-1)n^2(n+1)(n+2)^2/(n+4)^3"},
    ReferenceRow{L(2, 2, 2, 2, 4, 4), "4608 (n-2)/((n-1)^5 (n+1) (n+2) (n+4)^3 (n+6)^2)",
                 "(n-2)(n-1)n^2(n+1)(n+2)^3/(2(n+4)^3)"},
    ReferenceRow{L(2, 2, 2, 3, 3, 3), "864 (n-2)(n+1)(n^3+8n^2-28n-48)/((n-1)^5 n^2 (n+2)^3 (n+4)^3 (n+6)^2)",
                 "(n-2)(n-1)n(n+1)(n^3+8n^2-28n-48)/(2(n+6)^2)"},
    ReferenceRow{L(2, 2, 2, 4, 4, 4),
                 "18432 (n-2)(n^3+12n^2-24n-128)/((n-1)^5 n^2 (n+1)^2 (n+4)^3 (n+6)^2 (n+8)^2)",
                 "(n-2)(n-1)n(n+1)(n+2)^3(n+6)(n^3+12n^2-24n-128)/(6(n+4)^3(n+8)^2)"},
    ReferenceRow{L(2, 2, 4, 2, 2, 4), "2304 (n-2) n^2/((n-1)^5 (n+1) (n+2)^3 (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n^4(n+1)(n+2)/(4(n+4)^3(n+6))"},
    ReferenceRow{L(2, 2, 4, 2, 4, 4), "55296 (n-2)/((n-1)^5 (n+1)^2 (n+4)^3 (n+6)^3 (n+8))",
                 "(n-2)(n-1)n^3(n+1)(n+2)^3/(2(n+4)^3(n+8))"},
    ReferenceRow{L(2, 2, 4, 3, 3, 3), "20736 (n-2)/((n-1)^5 (n+2)^2 (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n^4(n+1)/(n+6)^2"},
    ReferenceRow{L(2, 2, 4, 4, 4, 2), "13824 (n-2) n (n+3)/((n-1)^5 (n+1)^2 (n+2)^2 (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n^4(n+1)(n+2)(n+3)/(8(n+4)^3)"},
    ReferenceRow{L(2, 2, 4, 4, 4, 4), "663552 (n-2)(n+3)/((n-1)^5 (n+1)^3 (n+4)^3 (n+6)^3 (n+8)^2)",
                 "(n-2)(n-1)n^4(n+1)(n+2)^2(n+3)(n+6)/(2(n+4)^3(n+8)^2)"},
    ReferenceRow{L(2, 3, 3, 2, 3, 3),
                 "2592 (n-2)(n+1)(2n^4+17n^3-14n^2-84n-72)/((n-1)^5 n^3 (n+2)^3 (n+4)^3 (n+6)^3)",
                 "(n-2)(n-1)n(n+1)(n+4)(2n^4+17n^3-14n^2-84n-72)/(2(n+2)(n+6)^3)"},
    ReferenceRow{L(2, 3, 3, 3, 4, 4),
                 "124416 (n-2)(n^3+10n^2-20n-48)/((n-1)^5 n^3 (n+1) (n+4)^3 (n+6)^3 (n+8)^2)",
                 "(n-2)(n-1)n^2(n+1)(n+2)(n^3+10n^2-20n-48)/(2(n+6)(n+8)^2)"},
    ReferenceRow{L(2, 3, 3, 4, 3, 3),
                 "15552 (n-2)(n^3+11n^2-48n-36)/((n-1)^5 n^3 (n+2) (n+4)^3 (n+6)^3 (n+8))",
                 "(n-2)(n-1)n^2(n+1)(n+4)(n^3+11n^2-48n-36)/(4(n+6)^2(n+8))"},
    ReferenceRow{L(2, 4, 4, 2, 4, 4),
                 "221184 (n-2)(n+2)(3n^4+40n^3+72n^2-192n-512)/((n-1)^5 n^3 (n+1)^3 (n+4)^3 (n+6)^3 (n+8)^3)",
                 "(n-2)(n-1)n(n+1)(n+2)^3(n+6)(3n^4+40n^3+72n^2-192n-512)/(6(n+4)^3(n+8)^3)"},
    ReferenceRow{L(2, 4, 4, 4, 4, 4),
                 "3981312 (n-2)(n+2)(n+3)(n^3+14n^2-16n-128)/((n-1)^5 n^2 (n+1)^4 (n+4)^3 (n+6)^3 (n+8)^3 (n+10))",
                 "(n-2)(n-1)n^3(n+1)(n+2)^2(n+3)(n+6)^2(n^3+14n^2-16n-128)/(4(n+4)^3(n+8)^3(n+10))"},
    ReferenceRow{L(3, 3, 4, 3, 3, 4),
                 "186624 (n-2)(4n^2+37n-50)/((n-1)^5 n^2 (n+1) (n+4)^3 (n+6)^3 (n+8)^3)",
                 "(n-2)(n-1)n^4(n+1)(n+4)(4n^2+37n-50)/(4(n+6)(n+8)^3)"},
    ReferenceRow{L(3, 3, 4, 4, 4, 3),
                 "373248 (n-4)(n-2)(n+3)(n+20)/((n-1)^5 n^2 (n+1)^2 (n+4)^3 (n+6)^3 (n+8)^3)",
                 "(n-4)(n-2)(n-1)n^4(n+1)(n+3)(n+20)/(8(n+8)^3)"},
    ReferenceRow{L(4, 4, 4, 4, 4, 4),
                 "11943936 (n-2)(n+3)(n^6+43n^5+400n^4-212n^3-6752n^2-5888n+15360)/"
                 "((n-1)^5 n^2 (n+1)^5 (n+4)^3 (n+6)^3 (n+8)^3 (n+10)^3)",
                 "(n-2)(n-1)n^4(n+1)(n+3)(n+6)^3(n^6+43n^5+400n^4-212n^3-6752n^2-5888n+15360)/"
                 "(16(n+4)^3(n+8)^3(n+10)^3)"},
};

} // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

} // namespace soncoup
