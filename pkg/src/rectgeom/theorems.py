"""Rectangle-plus-point configurations, claim predicates and verification drivers.

Every claim is split into a construction, which builds the named witness
objects and may fail on a degenerate intermediate step, and a predicate over
the witness points. The same code runs over exact rationals (sampled
verification), rational functions in the configuration parameters (symbolic
proof) and floats (replay).
"""
from __future__ import annotations

import enum
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .centers import (
    Triangle,
    centroid,
    circumcenter,
    isogonal_conjugate_in_triangle,
    nine_point_center,
    orthocenter,
    symmedian_point,
)
from .exact_arith import (
    DEFAULT_TERM_BUDGET,
    BudgetExceededError,
    MultiPoly,
    RatFun,
    poly_eval,
    random_rational,
    serialize,
    term_budget,
)
from .formulas import TRANSCRIPTIONS, Formula
from .geometry import (
    Circle,
    GeometryError,
    Line,
    Point,
    _mag,
    are_collinear,
    circle_through,
    circles_second_intersection,
    directions_parallel,
    intersect_lines,
    is_isogonal_pair,
    is_on_line,
    line_through,
    lines_equal,
    make_line,
    midpoint,
    perpendicular_bisector,
    points_equal,
    project_onto_line,
    record_assumptions,
    reflect_in_point,
    reflect_over_line,
    vanishes,
)

MAX_ATTEMPTS = 100


class ClaimId(str, enum.Enum):
    T1E = "T1E"
    T1B = "T1B"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9i = "T9i"
    T9ii = "T9ii"
    T9iii = "T9iii"
    EQS = "EQS"

    @classmethod
    def parse(cls, name: str) -> ClaimId:
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown claim {name!r}; expected one of {', '.join(c.value for c in cls)}") from None


class ConfigError(ValueError):
    pass


class Degenerate(Exception):
    def __init__(self, tag: str):
        super().__init__(tag)
        self.tag = tag


# -- configurations ----------------------------------------------------------

def _zero(x):
    return x * 0


@dataclass(frozen=True)
class RectConfig:
    a: object
    b: object
    c: object
    d: object

    @property
    def P(self) -> Point:
        return Point(_zero(self.a), _zero(self.a))

    @property
    def A(self) -> Point:
        return Point(self.a, self.b)

    @property
    def B(self) -> Point:
        return Point(self.c, self.b)

    @property
    def C(self) -> Point:
        return Point(self.c, self.d)

    @property
    def D(self) -> Point:
        return Point(self.a, self.d)

    @property
    def I(self) -> Point:  # noqa: E743
        return Point((self.a + self.c) / 2, (self.b + self.d) / 2)

    def values(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def points(self) -> dict[str, Point]:
        return {"P": self.P, "A": self.A, "B": self.B, "C": self.C, "D": self.D, "I": self.I}

    def triangles(self) -> dict[str, Triangle]:
        P, A, B, C, D = self.P, self.A, self.B, self.C, self.D
        return {"a": Triangle(P, A, B), "b": Triangle(P, B, C), "c": Triangle(P, C, D), "d": Triangle(P, D, A)}

    def validate(self, sampled: bool = False):
        if vanishes(self.a - self.c) or vanishes(self.b - self.d):
            raise ConfigError("not a proper rectangle (a = c or b = d)")
        if sampled and any(vanishes(v) for v in self.values()):
            raise ConfigError("a zero parameter puts P on a side line")

    def map(self, fn) -> RectConfig:
        return RectConfig(*(fn(v) for v in self.values()))


@dataclass(frozen=True)
class TwoRectConfig:
    a1: object
    b1: object
    c1: object
    d1: object
    a2: object
    b2: object

    @property
    def c2(self):
        return self.a1 + self.c1 - self.a2

    @property
    def d2(self):
        return self.b1 + self.d1 - self.b2

    @property
    def first(self) -> RectConfig:
        return RectConfig(self.a1, self.b1, self.c1, self.d1)

    @property
    def second(self) -> RectConfig:
        return RectConfig(self.a2, self.b2, self.c2, self.d2)

    @property
    def I(self) -> Point:  # noqa: E743
        return self.first.I

    def values(self) -> tuple:
        return (self.a1, self.b1, self.c1, self.d1, self.a2, self.b2)

    def points(self) -> dict[str, Point]:
        r1, r2 = self.first, self.second
        pts = {"P": r1.P, "I": r1.I}
        for rect, k in ((r1, "1"), (r2, "2")):
            for name in "ABCD":
                pts[name + k] = getattr(rect, name)
        return pts

    def validate(self, sampled: bool = False):
        self.first.validate(sampled)
        self.second.validate(sampled)

    def map(self, fn) -> TwoRectConfig:
        return TwoRectConfig(*(fn(v) for v in self.values()))


def symbolic_config(kind: str = "rect") -> RectConfig | TwoRectConfig:
    if kind == "rect":
        return RectConfig(*RatFun.variables(4))
    return TwoRectConfig(*RatFun.variables(6))


def sample_config(kind: str, seed: int, index: int, attempt: int = 0) -> RectConfig | TwoRectConfig:
    """Deterministic exact-rational configuration for (seed, index, attempt)."""
    cls, slots = (RectConfig, 4) if kind == "rect" else (TwoRectConfig, 6)
    for retry in range(256):
        key = attempt * 256 + retry
        cfg = cls(*(random_rational(seed, index, slot, key) for slot in range(slots)))
        try:
            cfg.validate(sampled=True)
        except ConfigError:
            continue
        return cfg
    raise RuntimeError("could not draw a valid configuration")  # pragma: no cover


# -- construction helpers ------------------------------------------------------

def _step(tag: str, fn: Callable, *args):
    try:
        return fn(*args)
    except GeometryError as exc:
        raise Degenerate(f"{tag} undefined") from exc


def _central_line(tag: str, p: Point, q: Point) -> Line:
    if points_equal(p, q):
        raise Degenerate(f"{tag} undefined")
    return _step(tag, line_through, p, q)


def _euler(tag: str, t: Triangle, w: dict, suffix: str) -> Line:
    G = centroid(t)
    O = _step(f"O_{suffix}", circumcenter, t)
    w[f"G_{suffix}"] = G
    w[f"O_{suffix}"] = O
    return _central_line(tag, G, O)


def _euler_intersections(w: dict, tris: dict[str, Triangle]):
    for k, t in tris.items():
        w[f"eps_{k}"] = _euler(f"eps_{k}", t, w, k)
    w["Q"] = _step("Q", intersect_lines, w["eps_a"], w["eps_c"])
    w["R"] = _step("R", intersect_lines, w["eps_b"], w["eps_d"])


def _side_lines(cfg: RectConfig) -> dict[str, Line]:
    A, B, C, D = cfg.A, cfg.B, cfg.C, cfg.D
    return {"a": line_through(A, B), "b": line_through(B, C), "c": line_through(C, D), "d": line_through(D, A)}


# -- constructions -------------------------------------------------------------

def build_t1e(cfg: RectConfig) -> dict:
    w = cfg.points()
    _euler_intersections(w, cfg.triangles())
    w["QR"] = _central_line("QR", w["Q"], w["R"])
    return w


def build_t1b(cfg: RectConfig) -> dict:
    w = cfg.points()
    for k, t in cfg.triangles().items():
        w[f"O_{k}"] = _step(f"O_{k}", circumcenter, t)
        w[f"S_{k}"] = _step(f"S_{k}", symmedian_point, t)
        w[f"beta_{k}"] = _central_line(f"beta_{k}", w[f"O_{k}"], w[f"S_{k}"])
    w["M"] = _step("M", intersect_lines, w["beta_a"], w["beta_c"])
    w["N"] = _step("N", intersect_lines, w["beta_b"], w["beta_d"])
    w["MN"] = _central_line("MN", w["M"], w["N"])
    return w


def build_eqs(cfg: RectConfig) -> dict:
    w = build_t1e(cfg)
    w.update({k: v for k, v in build_t1b(cfg).items() if k not in w})
    for k, X in (("a", cfg.A), ("b", cfg.B), ("c", cfg.C), ("d", cfg.D)):
        w[f"d_{k}"] = _step(f"d_{k}", perpendicular_bisector, cfg.P, X)
    return w


def build_t2(cfg: TwoRectConfig) -> dict:
    w = cfg.points()
    P = w["P"]
    pairs = {
        "Q": (("1a", Triangle(P, w["A1"], w["B1"])), ("1c", Triangle(P, w["C1"], w["D1"]))),
        "R": (("2a", Triangle(P, w["A2"], w["D2"])), ("2b", Triangle(P, w["B2"], w["C2"]))),
    }
    for name, ((k1, t1), (k2, t2)) in pairs.items():
        w[f"eps_{k1}"] = _euler(f"eps_{k1}", t1, w, k1)
        w[f"eps_{k2}"] = _euler(f"eps_{k2}", t2, w, k2)
        w[name] = _step(name, intersect_lines, w[f"eps_{k1}"], w[f"eps_{k2}"])
    return w


def build_t2_alternate(cfg: TwoRectConfig) -> dict:
    """Exploratory variant pairing PA2B2 with PC2D2 instead; not a listed claim."""
    w = cfg.points()
    P = w["P"]
    for name, r, k in (("Q", "1", ("1a", "1c")), ("R", "2", ("2a", "2c"))):
        t1 = Triangle(P, w["A" + r], w["B" + r])
        t2 = Triangle(P, w["C" + r], w["D" + r])
        w[f"eps_{k[0]}"] = _euler(f"eps_{k[0]}", t1, w, k[0])
        w[f"eps_{k[1]}"] = _euler(f"eps_{k[1]}", t2, w, k[1])
        w[name] = _step(name, intersect_lines, w[f"eps_{k[0]}"], w[f"eps_{k[1]}"])
    return w


def build_t3(cfg: RectConfig) -> dict:
    w = cfg.points()
    for k, t in cfg.triangles().items():
        w[f"H_{k}"] = _step(f"H_{k}", orthocenter, t)
    w["Q"] = midpoint(w["H_a"], w["H_c"])
    w["R"] = midpoint(w["H_b"], w["H_d"])
    return w


def build_t4(cfg: RectConfig) -> dict:
    w = cfg.points()
    for k, t in cfg.triangles().items():
        w[f"O_{k}"] = _step(f"O_{k}", circumcenter, t)
    w["Q"] = midpoint(w["O_a"], w["O_c"])
    w["R"] = midpoint(w["O_b"], w["O_d"])
    w["S"] = midpoint(w["Q"], w["R"])
    w["circle_ac"] = _step("circle_ac", circle_through, w["P"], w["O_a"], w["O_c"])
    w["circle_bd"] = _step("circle_bd", circle_through, w["P"], w["O_b"], w["O_d"])
    w["T"] = _step("T", circles_second_intersection, w["circle_ac"], w["circle_bd"], w["P"])
    return w


def build_t5(cfg: RectConfig) -> dict:
    w = cfg.points()
    for k, t in cfg.triangles().items():
        w[f"N_{k}"] = _step(f"N_{k}", nine_point_center, t)
    w["M"] = midpoint(w["N_a"], w["N_c"])
    w["N"] = midpoint(w["N_b"], w["N_d"])
    w["bisector_ac"] = _step("bisector_ac", perpendicular_bisector, w["N_a"], w["N_c"])
    w["bisector_bd"] = _step("bisector_bd", perpendicular_bisector, w["N_b"], w["N_d"])
    w["Q"] = _step("Q", intersect_lines, w["bisector_ac"], w["bisector_bd"])
    w["MN"] = _central_line("MN", w["M"], w["N"])
    w["IQ"] = _central_line("IQ", w["I"], w["Q"])
    return w


def build_t6(cfg: RectConfig) -> dict:
    w = cfg.points()
    for k, t in cfg.triangles().items():
        w[f"P_{k}"] = _step(f"P_{k}", isogonal_conjugate_in_triangle, w["I"], t)
    w["X"] = midpoint(w["P_a"], w["P_c"])
    w["Y"] = midpoint(w["P_b"], w["P_d"])
    w["IP"] = _central_line("IP", w["I"], w["P"])
    return w


def _reflected_euler(w: dict, cfg: RectConfig, images: dict[str, Point]) -> dict:
    A, B, C, D = cfg.A, cfg.B, cfg.C, cfg.D
    sides = {"a": (A, B), "b": (B, C), "c": (C, D), "d": (D, A)}
    tris = {}
    for k, (X, Y) in sides.items():
        w[f"P_{k}"] = images[k]
        tris[k] = Triangle(images[k], X, Y)
    _euler_intersections(w, tris)
    return w


def build_t7(cfg: RectConfig) -> dict:
    w = cfg.points()
    sides = _side_lines(cfg)
    images = {k: reflect_over_line(w["P"], l) for k, l in sides.items()}
    _reflected_euler(w, cfg, images)
    w["QR_mid"] = midpoint(w["Q"], w["R"])
    w["IP"] = _central_line("IP", w["I"], w["P"])
    return w


def build_t8(cfg: RectConfig) -> dict:
    w = cfg.points()
    A, B, C, D = cfg.A, cfg.B, cfg.C, cfg.D
    mids = {"a": midpoint(A, B), "b": midpoint(B, C), "c": midpoint(C, D), "d": midpoint(D, A)}
    images = {k: reflect_in_point(w["P"], m) for k, m in mids.items()}
    _reflected_euler(w, cfg, images)
    w["P_I"] = reflect_in_point(w["P"], w["I"])
    w["QR"] = _central_line("QR", w["Q"], w["R"])
    return w


def build_t9(cfg: RectConfig) -> dict:
    w = cfg.points()
    P = w["P"]
    for k, l in _side_lines(cfg).items():
        w[f"P_{k}"] = reflect_over_line(P, l)
    w["P_ac"] = reflect_over_line(P, _step("AC", line_through, cfg.A, cfg.C))
    w["P_bd"] = reflect_over_line(P, _step("BD", line_through, cfg.B, cfg.D))
    quad = [w["P_a"], w["P_b"], w["P_c"], w["P_d"]]
    sides = []
    for i in range(4):
        sides.append(_step(f"side_{i + 1}", line_through, quad[i], quad[(i + 1) % 4]))
    for src, name in (("P_ac", "Q"), ("P_bd", "R")):
        feet = [project_onto_line(w[src], s) for s in sides]
        for i, f in enumerate(feet):
            w[f"{name}_foot{i + 1}"] = f
        d1 = _step(f"{name}_diag1", line_through, feet[0], feet[2])
        d2 = _step(f"{name}_diag2", line_through, feet[1], feet[3])
        w[f"{name}_diag1"], w[f"{name}_diag2"] = d1, d2
        w[name] = _step(name, intersect_lines, d1, d2)
    return w


# -- predicates ------------------------------------------------------------------

def _t9i(w) -> bool:
    quad = [w["P_a"], w["P_b"], w["P_c"], w["P_d"]]
    for i in range(4):
        v = quad[i]
        try:
            ok = is_isogonal_pair(v, quad[i - 1], quad[(i + 1) % 4], w["P_ac"], w["P_bd"])
        except GeometryError:
            return False
        if not ok:
            return False
    return True


def _scalar_matches(x, num, den) -> bool:
    diff = x * den - num
    if isinstance(diff, float):
        return vanishes(diff, _mag(x * den, num))
    return vanishes(diff)


def _eval(p: MultiPoly, values):
    return poly_eval(p, values)


def transcribed(f: Formula, values):
    """The formula instantiated at configuration ``values`` as a Point or Line."""
    n1, d1, n2, d2 = (_eval(p, values) for p in f.polys)
    if f.kind == "point":
        return (n1, d1, n2, d2)
    # y = n1/d1 + (n2/d2) x   <=>   n2*d1*x - d1*d2*y + n1*d2 = 0
    return Line(n2 * d1, -(d1 * d2), n1 * d2)


def formula_matches(f: Formula, witness: dict, values) -> bool:
    obj = witness[f.name]
    expected = transcribed(f, values)
    if f.kind == "point":
        xn, xd, yn, yd = expected
        for den in (xd, yd):
            if vanishes(den):
                raise Degenerate(f"formula {f.index} undefined")
        return _scalar_matches(obj.x, xn, xd) and _scalar_matches(obj.y, yn, yd)
    if vanishes(expected.v):
        raise Degenerate(f"formula {f.index} undefined")
    return lines_equal(obj, expected)


def _config_values(w: dict) -> tuple:
    return (w["A"].x, w["A"].y, w["C"].x, w["C"].y)


def _eqs(w, formulas=TRANSCRIPTIONS) -> bool:
    values = _config_values(w)
    return all(formula_matches(f, w, values) for f in formulas)


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    kind: str
    build: Callable[[object], dict]
    predicate: Callable[[dict], bool]
    statement: str


CLAIMS: dict[ClaimId, Claim] = {c.id: c for c in (
    Claim(ClaimId.T1E, "rect", build_t1e, lambda w: are_collinear(w["Q"], w["R"], w["I"]),
          "Euler-line intersections Q, R and the center I are collinear"),
    Claim(ClaimId.T1B, "rect", build_t1b, lambda w: are_collinear(w["M"], w["N"], w["P"]),
          "Brocard-axis intersections M, N and the point P are collinear"),
    Claim(ClaimId.T2, "two_rect", build_t2, lambda w: are_collinear(w["Q"], w["R"], w["I"]),
          "two concentric rectangles: Q, R and I are collinear"),
    Claim(ClaimId.T3, "rect", build_t3, lambda w: are_collinear(w["Q"], w["R"], w["I"]),
          "midpoints of opposite orthocenters are collinear with I"),
    Claim(ClaimId.T4, "rect", build_t4, lambda w: are_collinear(w["S"], w["T"], w["I"]),
          "second circle intersection T is collinear with S and I"),
    Claim(ClaimId.T5, "rect", build_t5, lambda w: directions_parallel(w["N"] - w["M"], w["Q"] - w["I"]),
          "nine-point construction: MN is parallel to IQ"),
    Claim(ClaimId.T6, "rect", build_t6,
          lambda w: are_collinear(w["I"], w["P"], w["X"]) and are_collinear(w["I"], w["P"], w["Y"]),
          "line IP passes through the midpoints of P_aP_c and P_bP_d"),
    Claim(ClaimId.T7, "rect", build_t7, lambda w: are_collinear(w["I"], w["P"], w["QR_mid"]),
          "side-line reflections: line IP passes through the midpoint of QR"),
    Claim(ClaimId.T8, "rect", build_t8, lambda w: are_collinear(w["Q"], w["R"], w["P_I"]),
          "side-midpoint reflections: the reflection of P in I lies on QR"),
    Claim(ClaimId.T9i, "rect", build_t9, _t9i,
          "P_ac and P_bd are isogonal at every vertex of P_aP_bP_cP_d"),
    Claim(ClaimId.T9ii, "rect", build_t9, lambda w: are_collinear(w["P"], w["Q"], w["R"]),
          "pedal-diagonal points Q, R are collinear with P"),
    Claim(ClaimId.T9iii, "rect", build_t9,
          lambda w: directions_parallel(w["Q"] - w["P_ac"], w["R"] - w["P_bd"]),
          "lines QP_ac and RP_bd are parallel"),
    Claim(ClaimId.EQS, "rect", build_eqs, _eqs,
          "all 30 closed forms match the constructed objects"),
)}


# -- results ---------------------------------------------------------------------

def format_scalar(x) -> str:
    if isinstance(x, RatFun):
        return x.to_str()
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_object(obj) -> dict:
    if isinstance(obj, Point):
        return {"kind": "point", "x": format_scalar(obj.x), "y": format_scalar(obj.y)}
    if isinstance(obj, Line):
        return {"kind": "line", "u": format_scalar(obj.u), "v": format_scalar(obj.v), "w": format_scalar(obj.w)}
    if isinstance(obj, Circle):
        return {"kind": "circle", "D": format_scalar(obj.D), "E": format_scalar(obj.E), "F": format_scalar(obj.F)}
    raise TypeError(type(obj))


@dataclass
class ClaimResult:
    claim: ClaimId
    holds: bool | None
    witness: dict = field(default_factory=dict)
    degeneracy: str | None = None
    sample_index: int | None = None
    config: tuple = ()

    def to_dict(self) -> dict:
        return {
            "claim": self.claim.value,
            "holds": self.holds,
            "degeneracy": self.degeneracy,
            "sample_index": self.sample_index,
            "config": [format_scalar(v) for v in self.config],
            "witness": {k: serialize_object(v) for k, v in self.witness.items()},
        }


@dataclass
class TheoremReport:
    claim: ClaimId
    mode: str
    status: str
    samples: int = 0
    failures: list[ClaimResult] = field(default_factory=list)
    denominator_assumptions: list[str] = field(default_factory=list)
    elapsed_ms: float | None = None
    resamples: int = 0
    degeneracies: dict[str, int] = field(default_factory=dict)
    reason: str | None = None

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "claim": self.claim.value,
            "mode": self.mode,
            "status": self.status,
            "samples": self.samples,
            "failures": [f.to_dict() for f in self.failures],
            "denominator_assumptions": list(self.denominator_assumptions),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            "resamples": self.resamples,
            "degeneracies": dict(sorted(self.degeneracies.items())),
            "reason": self.reason,
        }


def check_claim(claim: ClaimId | str, cfg) -> ClaimResult:
    """Build the claim's witness for ``cfg`` and evaluate its predicate exactly."""
    claim = ClaimId(claim)
    entry = CLAIMS[claim]
    want = RectConfig if entry.kind == "rect" else TwoRectConfig
    if not isinstance(cfg, want):
        raise TypeError(f"{claim.value} needs a {want.__name__}")
    try:
        cfg.validate()
        witness = entry.build(cfg)
        holds = bool(entry.predicate(witness))
    except ConfigError as exc:
        return ClaimResult(claim, None, degeneracy=f"config invalid: {exc}", config=cfg.values())
    except Degenerate as exc:
        return ClaimResult(claim, None, degeneracy=exc.tag, config=cfg.values())
    return ClaimResult(claim, holds, witness, config=cfg.values())


def recheck(result: ClaimResult) -> bool:
    return bool(CLAIMS[result.claim].predicate(result.witness))


def _to_float_obj(obj):
    return obj.map(float)


def replay_float(result: ClaimResult) -> bool:
    """Re-evaluate an exact witness in floating point against the same predicate."""
    witness = {k: _to_float_obj(v) for k, v in result.witness.items()}
    return bool(CLAIMS[result.claim].predicate(witness))


# -- drivers -----------------------------------------------------------------------

def _elapsed(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def _qr_matches_closed_form(w: dict) -> bool:
    # QR through I and (0, 2*I_y), i.e. slope -(b+d)/(a+c) and intercept b+d
    I = w["I"]
    expected = make_line(2 * I.y, 2 * I.x, -4 * I.x * I.y)
    return lines_equal(w["QR"], expected) and is_on_line(I, w["QR"])


_SYMBOLIC_EXTRAS: dict[ClaimId, Callable[[dict], bool]] = {
    ClaimId.T1E: _qr_matches_closed_form,
}


def _dedupe(polys: list[MultiPoly]) -> list[str]:
    seen = []
    out = []
    for p in polys:
        if p in seen or (-p) in seen:
            continue
        seen.append(p)
        out.append(serialize(p))
    return out


def verify_symbolic(claim: ClaimId | str, budget: int = DEFAULT_TERM_BUDGET) -> TheoremReport:
    claim = ClaimId(claim)
    if claim is ClaimId.EQS:
        return reproduce_formulas(budget=budget)
    start = time.perf_counter()
    cfg = symbolic_config(CLAIMS[claim].kind)
    with term_budget(budget), record_assumptions() as found:
        try:
            result = check_claim(claim, cfg)
            extra = _SYMBOLIC_EXTRAS.get(claim)
            if result.holds and extra is not None:
                result.holds = extra(result.witness)
        except BudgetExceededError as exc:
            return TheoremReport(claim, "symbolic", "inconclusive", elapsed_ms=_elapsed(start),
                                 reason=f"term budget exceeded: {exc}")
    assumptions = _dedupe(found)
    if result.degeneracy is not None:
        return TheoremReport(claim, "symbolic", "inconclusive", elapsed_ms=_elapsed(start),
                             denominator_assumptions=assumptions,
                             reason=f"construction degenerate identically: {result.degeneracy}")
    status = "proven" if result.holds else "refuted"
    failures = [] if result.holds else [result]
    return TheoremReport(claim, "symbolic", status, failures=failures,
                         denominator_assumptions=assumptions, elapsed_ms=_elapsed(start))


@dataclass
class FormulaCheck:
    formula: Formula
    match: bool
    pipeline: object

    def pipeline_text(self) -> str:
        obj = self.pipeline
        if isinstance(obj, Line):
            return f"({format_scalar(obj.u)})*x + ({format_scalar(obj.v)})*y + ({format_scalar(obj.w)}) = 0"
        return f"({format_scalar(obj.x)}, {format_scalar(obj.y)})"

    def pipeline_summary(self) -> str:
        obj = self.pipeline
        parts = (obj.u, obj.v, obj.w) if isinstance(obj, Line) else (obj.x, obj.y)
        sizes = []
        for s in parts:
            if isinstance(s, RatFun):
                sizes.append(f"{len(s.num)}/{len(s.den)}" if not s.den.is_constant() else f"{len(s.num)}")
        return f"{self.formula.kind} [{', '.join(sizes)} terms]"

    def to_dict(self) -> dict:
        return {
            "index": self.formula.index,
            "name": self.formula.name,
            "kind": self.formula.kind,
            "transcription": self.formula.display(),
            "pipeline": self.pipeline_text(),
            "match": self.match,
        }


def formula_catalog(formulas=TRANSCRIPTIONS, budget: int = DEFAULT_TERM_BUDGET) -> list[FormulaCheck]:
    """Compare every transcription with the object built from first principles."""
    cfg = symbolic_config("rect")
    with term_budget(budget):
        witness = build_eqs(cfg)
        values = cfg.values()
        return [FormulaCheck(f, formula_matches(f, witness, values), witness[f.name]) for f in formulas]


def reproduce_formulas(formulas=TRANSCRIPTIONS, budget: int = DEFAULT_TERM_BUDGET) -> TheoremReport:
    start = time.perf_counter()
    with record_assumptions() as found:
        try:
            catalog = formula_catalog(formulas, budget)
        except BudgetExceededError as exc:
            return TheoremReport(ClaimId.EQS, "symbolic", "inconclusive", elapsed_ms=_elapsed(start),
                                 reason=f"term budget exceeded: {exc}")
    bad = [c for c in catalog if not c.match]
    failures = [ClaimResult(ClaimId.EQS, False, {c.formula.name: c.pipeline}, degeneracy=None) for c in bad]
    reason = None
    if bad:
        reason = "mismatch at formula " + ", ".join(str(c.formula.index) for c in bad)
    return TheoremReport(ClaimId.EQS, "symbolic", "refuted" if bad else "proven", failures=failures,
                         denominator_assumptions=_dedupe(found), elapsed_ms=_elapsed(start), reason=reason)


def _sample_index(claim: ClaimId, seed: int, index: int, convert=None):
    kind = CLAIMS[claim].kind
    tags: Counter = Counter()
    for attempt in range(MAX_ATTEMPTS):
        cfg = sample_config(kind, seed, index, attempt)
        if convert is not None:
            cfg = cfg.map(convert)
        result = check_claim(claim, cfg)
        if result.degeneracy is None:
            result.sample_index = index
            return result, tags
        tags[result.degeneracy] += 1
    return None, tags


def _sample_chunk(args):
    claim, seed, indices, convert = args
    return [_sample_index(claim, seed, i, convert) for i in indices]


def _run_samples(claim: ClaimId, n: int, seed: int, jobs: int, convert=None):
    if jobs <= 1 or n < 2:
        return _sample_chunk((claim, seed, range(n), convert))
    chunks = [range(i, n, jobs) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_sample_chunk, [(claim, seed, c, convert) for c in chunks]))
    out = [None] * n
    for chunk, part in zip(chunks, parts):
        for i, r in zip(chunk, part):
            out[i] = r
    return out


def verify_sampled(claim: ClaimId | str, n: int = 100, seed: int = 0, jobs: int = 1) -> TheoremReport:
    """Check the claim on ``n`` seeded exact-rational configurations."""
    return _verify_many(ClaimId(claim), n, seed, jobs, "sampled", None)


def verify_float(claim: ClaimId | str, n: int = 100, seed: int = 0, jobs: int = 1) -> TheoremReport:
    """Same as :func:`verify_sampled` but evaluated in floating point."""
    return _verify_many(ClaimId(claim), n, seed, jobs, "float", float)


def _verify_many(claim: ClaimId, n: int, seed: int, jobs: int, mode: str, convert) -> TheoremReport:
    if n < 1:
        raise ValueError("number of samples must be at least 1")
    start = time.perf_counter()
    rows = _run_samples(claim, n, seed, jobs, convert)
    tags: Counter = Counter()
    failures = []
    exhausted = []
    for i, (result, t) in enumerate(rows):
        tags.update(t)
        if result is None:
            exhausted.append(i)
        elif not result.holds:
            failures.append(result)
    resamples = sum(tags.values())
    if failures:
        status, reason = "refuted", None
    elif exhausted:
        status = "inconclusive"
        reason = f"resample budget exhausted at sample(s) {', '.join(map(str, exhausted))}"
    else:
        status, reason = "verified", None
    return TheoremReport(claim, mode, status, samples=n, failures=failures, elapsed_ms=_elapsed(start),
                         resamples=resamples, degeneracies=dict(tags), reason=reason)


def sampled_results(claim: ClaimId | str, n: int, seed: int) -> list[ClaimResult]:
    """The exact witnesses behind a sampled run, in sample order."""
    claim = ClaimId(claim)
    return [r for r, _ in _run_samples(claim, n, seed, 1) if r is not None]
