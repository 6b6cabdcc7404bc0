"""Hand-transcribed closed forms for the rectangle configuration.

P = (0, 0), A = (a, b), B = (c, b), C = (c, d), D = (a, d). Lines are written
as y = intercept + slope * x, points as (x, y); every entry is a quotient of
polynomials in a, b, c, d kept exactly as displayed so that a transcription
slip shows up as a mismatch against the constructed objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exact_arith import ABCD, MultiPoly, parse_poly


@dataclass(frozen=True)
class Formula:
    index: int
    name: str
    kind: str  # "line" or "point"
    # line: (intercept_num, intercept_den, slope_num, slope_den)
    # point: (x_num, x_den, y_num, y_den)
    parts: tuple[str, str, str, str]

    @cached_property
    def polys(self) -> tuple[MultiPoly, ...]:
        return tuple(parse_poly(p, ABCD) for p in self.parts)

    def display(self) -> str:
        n1, d1, n2, d2 = self.parts
        if self.kind == "line":
            return f"{self.name}: y = ({n1})/({d1}) + ({n2})/({d2})*x"
        return f"{self.name} = (({n1})/({d1}), ({n2})/({d2}))"


_BROCARD_M_X = ("-a^3*b*d + a^3*c^2 - a^2*b*c*d + a^2*c^3 - a*b^3*d - a*b^2*d^2 - a*b*c^2*d"
                " - a*b*d^3 - b^3*c*d - b^2*c*d^2 - b*c^3*d - b*c*d^3")
_BROCARD_M_Y = ("a^3*b*c + a^3*c*d + a^2*b*c^2 + a^2*c^2*d + a*b^3*c + a*b^2*c*d + a*b*c^3"
                " + a*b*c*d^2 + a*c^3*d + a*c*d^3 - b^3*d^2 - b^2*d^3")
_BROCARD_M_DEN = "2*a^3*c - 2*a^2*c^2 - 4*a*b*c*d + 2*a*c^3 - 2*b^3*d - 2*b^2*d^2 - 2*b*d^3"
_BROCARD_N_X = ("-a^3*b*d + a^3*c^2 - a^2*b*c*d + a^2*c^3 - a*b^3*d - a*b^2*d^2 - a*b*c^2*d"
                " - a*b*d^3 - b^3*c*d - b^2*c*d^2 - b*c^3*d - b*c*d^3")
_BROCARD_N_Y = ("a^3*b*c + a^3*c*d + a^2*b*c^2 + a^2*c^2*d + a*b^3*c + a*b^2*c*d + a*b*c^3"
                " + a*b*c*d^2 + a*c^3*d + a*c*d^3 - b^3*d^2 - b^2*d^3")
_BROCARD_N_DEN = "2*a^3*c + 2*a^2*c^2 + 4*a*b*c*d + 2*a*c^3 - 2*b^3*d + 2*b^2*d^2 - 2*b*d^3"
_MN_SLOPE_NUM = ("b^2*d^3 + b^3*d^2 - a*b*c^3 - a*c*d^3 - a*b^3*c - a*c^3*d - a^2*b*c^2"
                 " - a^2*c^2*d - a^3*b*c - a^3*c*d - a*b*c*d^2 - a*b^2*c*d")
_MN_SLOPE_DEN = ("-a^2*c^3 - a^3*c^2 + a*b*d^3 + a*b^2*d^2 + a*b^3*d + b*c*d^3 + b*c^3*d"
                 " + a^3*b*d + b^2*c*d^2 + b^3*c*d + a*b*c^2*d + a^2*b*c*d")

TRANSCRIPTIONS: tuple[Formula, ...] = (
    # perpendicular bisectors of PA, PB, PC, PD
    Formula(1, "d_a", "line", ("a^2 + b^2", "2*b", "-a", "b")),
    Formula(2, "d_b", "line", ("b^2 + c^2", "2*b", "-c", "b")),
    Formula(3, "d_c", "line", ("c^2 + d^2", "2*d", "-c", "d")),
    Formula(4, "d_d", "line", ("a^2 + d^2", "2*d", "-a", "d")),
    # circumcenters of PAB, PBC, PCD, PDA
    Formula(5, "O_a", "point", ("a + c", "2", "-a*c + b^2", "2*b")),
    Formula(6, "O_b", "point", ("-b*d + c^2", "2*c", "b + d", "2")),
    Formula(7, "O_c", "point", ("a + c", "2", "-a*c + d^2", "2*d")),
    Formula(8, "O_d", "point", ("-b*d + a^2", "2*a", "b + d", "2")),
    # centroids
    Formula(9, "G_a", "point", ("a + c", "3", "2*b", "3")),
    Formula(10, "G_b", "point", ("2*c", "3", "b + d", "3")),
    Formula(11, "G_c", "point", ("a + c", "3", "2*d", "3")),
    Formula(12, "G_d", "point", ("2*a", "3", "b + d", "3")),
    # Euler lines
    Formula(13, "eps_a", "line", ("b^2 + a*c", "b", "-b^2 - 3*a*c", "a*b + b*c")),
    Formula(14, "eps_b", "line", ("b*c^2 + b*d^2 + b^2*d + c^2*d", "c^2 + 3*b*d", "-b*c - c*d", "c^2 + 3*b*d")),
    Formula(15, "eps_c", "line", ("d^2 + a*c", "d", "-d^2 - 3*a*c", "a*d + c*d")),
    Formula(16, "eps_d", "line", ("b*d^2 + a^2*b + a^2*d + b^2*d", "a^2 + 3*b*d", "-a*b - a*d", "a^2 + 3*b*d")),
    # Euler-line intersections and the line through them
    Formula(17, "Q", "point", ("a^2*c - a*b*d + a*c^2 - b*c*d", "3*a*c - b*d", "2*a*b*c + 2*a*c*d", "3*a*c - b*d")),
    Formula(18, "R", "point", ("-2*a*b*d - 2*b*c*d", "a*c - 3*b*d", "a*b*c + a*c*d - b^2*d - b*d^2", "a*c - 3*b*d")),
    Formula(19, "QR", "line", ("b + d", "1", "-b - d", "a + c")),
    # symmedian points
    Formula(20, "S_a", "point", ("a^2*c + a*b^2 + a*c^2 + b^2*c", "2*a^2 - 2*a*c + 2*b^2 + 2*c^2",
                                 "a^2*b + 2*b^3 + b*c^2", "2*a^2 - 2*a*c + 2*b^2 + 2*c^2")),
    Formula(21, "S_b", "point", ("b^2*c + 2*c^3 + c*d^2", "2*b^2 - 2*b*d + 2*c^2 + 2*d^2",
                                 "b^2*d + b*c^2 + b*d^2 + c^2*d", "2*b^2 - 2*b*d + 2*c^2 + 2*d^2")),
    Formula(22, "S_c", "point", ("a^2*c + a*c^2 + a*d^2 + c*d^2", "2*a^2 - 2*a*c + 2*c^2 + 2*d^2",
                                 "a^2*d + c^2*d + 2*d^3", "2*a^2 - 2*a*c + 2*c^2 + 2*d^2")),
    Formula(23, "S_d", "point", ("2*a^3 + a*b^2 + a*d^2", "2*a^2 + 2*b^2 - 2*b*d + 2*d^2",
                                 "a^2*b + a^2*d + b^2*d + b*d^2", "2*a^2 + 2*b^2 - 2*b*d + 2*d^2")),
    # Brocard axes
    Formula(24, "beta_a", "line", ("b^4 + a^2*b^2 + a^2*c^2 + b^2*c^2", "2*b*c^2 + 2*a^2*b - 4*a*b*c",
                                   "-b^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*b^2*c",
                                   "b*c^3 + a^3*b - a*b*c^2 - a^2*b*c")),
    Formula(25, "beta_b", "line", ("b*c^4 + b^2*d^3 + b^3*c^2 + b^3*d^2 + c^2*d^3 + c^4*d + b*c^2*d^2 + b^2*c^2*d",
                                   "2*c^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*b*c^2*d",
                                   "-c*d^3 - b^3*c + b*c*d^2 + b^2*c*d",
                                   "c^4 + b*d^3 - b^2*d^2 + b^3*d + 2*b*c^2*d")),
    Formula(26, "beta_c", "line", ("d^4 + a^2*c^2 + a^2*d^2 + c^2*d^2", "2*a^2*d + 2*c^2*d - 4*a*c*d",
                                   "-d^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*c*d^2",
                                   "a^3*d + c^3*d - a*c^2*d - a^2*c*d")),
    Formula(27, "beta_d", "line", ("a^2*b^3 + a^2*d^3 + a^4*b + a^4*d + b^2*d^3 + b^3*d^2 + a^2*b*d^2 + a^2*b^2*d",
                                   "2*a^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*a^2*b*d",
                                   "-a*b^3 - a*d^3 + a*b*d^2 + a*b^2*d",
                                   "a^4 + b*d^3 - b^2*d^2 + b^3*d + 2*a^2*b*d")),
    # Brocard-axis intersections and the line through them
    Formula(28, "M", "point", (_BROCARD_M_X, _BROCARD_M_DEN, _BROCARD_M_Y, _BROCARD_M_DEN)),
    Formula(29, "N", "point", (_BROCARD_N_X, _BROCARD_N_DEN, _BROCARD_N_Y, _BROCARD_N_DEN)),
    Formula(30, "MN", "line", ("0", "1", _MN_SLOPE_NUM, _MN_SLOPE_DEN)),
)
