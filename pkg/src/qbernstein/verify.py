"""Identity suites run by ``qbernstein verify``.

Each suite yields :class:`IdentityReport` records, one per checked parameter
tuple. Exact suites compare Fractions with ``==``; floating suites compare
with the tolerances carried by :class:`VerifyConfig`.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from . import bernstein as bs
from . import stirling_bernoulli as sb
from .rational_core import FloatPoint, QPoint, q_number

IDENTITY_IDS = (
    "T1_ORACLE",
    "T2_RECURRENCE",
    "T2_DERIVATIVE",
    "T3_SYMMETRY",
    "T3_SUM",
    "EQ7_IDENTITY_FN",
    "T4_REDUCTION",
    "C5_RATIO",
    "T6_MONOMIAL",
    "T7_MOMENT",
    "EQ20_BERNOULLI",
    "EQ21_22_QSTIRLING",
    "EQ23_POWER",
    "T8_EQUALITY",
    "QLIMIT",
)

# upper degree per identity; verify uses min(cap, config.max_n)
DEGREE_CAP = {
    "T1_ORACLE": 12,
    "T2_RECURRENCE": 16,
    "T2_DERIVATIVE": 8,
    "T3_SYMMETRY": 16,
    "T3_SUM": 16,
    "EQ7_IDENTITY_FN": 12,
    "T4_REDUCTION": 16,
    "C5_RATIO": 16,
    "T6_MONOMIAL": 12,
    "T7_MOMENT": 12,
    "EQ20_BERNOULLI": 10,
    "EQ21_22_QSTIRLING": 10,
    "EQ23_POWER": 10,
    "T8_EQUALITY": 10,
    "QLIMIT": 8,
}

NOTES = [
    "T3_SUM/EQ7: the sum factor is 1+(1-q)[x]_q[1-x]_q; the (q-1) variant fails the literal-sum check.",
    "T7_MOMENT: the k=i-1 term carries C(i-1,i)=0 and is omitted.",
    "EQ21_22: the expanded q-difference with a constant q^C(n,2) factor disagrees with the operator "
    "product prod(E-q^i I) for n>=2; the operator product and the q^C(j,2) expansion are used.",
]


class ConfigError(ValueError):
    pass


DEFAULT_Q_LIST = (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 12
    q_list: tuple = DEFAULT_Q_LIST
    x_grid_size: int = 9
    float_tol_derivative: float = 1e-5
    float_tol_limit: float = 1e-3
    parallel: bool = False

    def __post_init__(self):
        try:
            q_list = tuple(Fraction(q) for q in self.q_list)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad q_list: {exc}") from None
        object.__setattr__(self, "q_list", q_list)
        if not isinstance(self.max_n, int) or self.max_n < 1:
            raise ConfigError(f"max_n must be an integer >= 1, got {self.max_n!r}")
        if not isinstance(self.x_grid_size, int) or self.x_grid_size < 1:
            raise ConfigError(f"x_grid_size must be an integer >= 1, got {self.x_grid_size!r}")
        if not q_list or any(not 0 < q < 1 for q in q_list):
            raise ConfigError("every q in q_list must lie in (0, 1)")
        for name in ("float_tol_derivative", "float_tol_limit"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")

    def bound(self, identity_id: str) -> int:
        return min(DEGREE_CAP[identity_id], self.max_n)

    def to_json(self) -> dict:
        d = asdict(self)
        d["q_list"] = [str(q) for q in self.q_list]
        return d

    @classmethod
    def from_mapping(cls, data: dict, base: "VerifyConfig | None" = None) -> "VerifyConfig":
        base = base or cls()
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        updates = {}
        for key, value in data.items():
            if key == "q_list":
                if isinstance(value, str):
                    value = [v for v in value.replace(";", " ").split() if v]
                updates[key] = tuple(value)
            elif key in ("max_n", "x_grid_size"):
                updates[key] = _as_int(key, value)
            elif key in ("float_tol_derivative", "float_tol_limit"):
                updates[key] = float(value)
            elif key == "parallel":
                updates[key] = value if isinstance(value, bool) else str(value).lower() in ("1", "true", "yes")
        return replace(base, **updates)


def _as_int(key, value) -> int:
    try:
        if isinstance(value, float) or (isinstance(value, str) and not value.strip().lstrip("-").isdigit()):
            raise ValueError
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None


def x_grid(q: Fraction, size: int, endpoints: bool = True) -> list:
    """Rational X values ``q + j (1-q)/(size+1)``, j = 1..size, plus X = q and X = 1."""
    step = (1 - q) / (size + 1)
    interior = [q + j * step for j in range(1, size + 1)]
    return ([q] if endpoints else []) + interior + ([Fraction(1)] if endpoints else [])


def grid_points(config: VerifyConfig, endpoints: bool = True) -> list:
    return [QPoint(q, X) for q in config.q_list for X in x_grid(q, config.x_grid_size, endpoints)]


def fmt_value(v) -> str:
    """Exact ``num/den`` string; floats are written as their exact binary rational."""
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    parameters: dict
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def sort_key(self):
        return (IDENTITY_IDS.index(self.identity_id), sorted(self.parameters.items()))

    def to_json(self) -> dict:
        return asdict(self)


def _params(k=None, n=None, i=None, point=None, **extra) -> dict:
    out = {key: str(v) for key, v in (("k", k), ("n", n), ("i", i)) if v is not None}
    if point is not None:
        out["point"] = str(point)
    out.update({key: str(v) for key, v in extra.items()})
    return out


def _exact(identity_id, left, right, **params) -> IdentityReport:
    ok = left == right
    return IdentityReport(
        identity_id,
        _params(**params),
        "pass" if ok else "fail",
        {"left": fmt_value(left), "right": fmt_value(right)},
    )


def _close(identity_id, left, right, ok, **params) -> IdentityReport:
    return IdentityReport(
        identity_id,
        _params(**params),
        "pass" if ok else "fail",
        {"left": fmt_value(left), "right": fmt_value(right)},
    )


def _pairs(max_n: int, min_n: int = 0):
    for n in range(min_n, max_n + 1):
        for k in range(n + 1):
            yield k, n


# suites take (config, points) and yield reports; points are exact grid points


def suite_t1_oracle(cfg, points):
    for p in points:
        for k, n in _pairs(cfg.bound("T1_ORACLE")):
            yield _exact("T1_ORACLE", bs.q_basis(k, n, p), bs.q_basis_oracle(k, n, p), k=k, n=n, point=p)


def suite_t2_recurrence(cfg, points):
    for p in points:
        for k, n in _pairs(cfg.bound("T2_RECURRENCE"), 1):
            yield _exact("T2_RECURRENCE", bs.additive_recurrence(k, n, p), bs.q_basis(k, n, p), k=k, n=n, point=p)


DERIVATIVE_Q = (0.3, 0.5, 0.9)
DERIVATIVE_X = tuple(j / 10 for j in range(1, 10))
# finite-difference roundoff floor for points where the derivative vanishes by symmetry
DERIVATIVE_ABS_FLOOR = 1e-9


def derivative_matches(formula: float, fd: float, rel_tol: float) -> bool:
    return math.isclose(formula, fd, rel_tol=rel_tol, abs_tol=DERIVATIVE_ABS_FLOOR)


def suite_t2_derivative(cfg, points=None, qs=DERIVATIVE_Q):
    for q in qs:
        for x in DERIVATIVE_X:
            fp = FloatPoint(q, x)
            for k, n in _pairs(cfg.bound("T2_DERIVATIVE"), 1):
                d = bs.derivative(k, n, fp)
                fd = bs.central_difference(k, n, fp, 1e-6)
                ok = derivative_matches(d, fd, cfg.float_tol_derivative)
                yield _close("T2_DERIVATIVE", d, fd, ok, k=k, n=n, point=fp)


def suite_t3_symmetry(cfg, points):
    for p in points:
        r = bs.reflect(p)
        for k, n in _pairs(cfg.bound("T3_SYMMETRY")):
            yield _exact("T3_SYMMETRY", bs.q_basis(n - k, n, r), bs.q_basis(k, n, p), k=k, n=n, point=p)


def suite_t3_sum(cfg, points):
    for p in points:
        pair_sum = q_number(p) + bs.q_complement(p)
        for n in range(cfg.bound("T3_SUM") + 1):
            closed = bs.sum_basis(n, p)
            yield _exact("T3_SUM", bs.literal_sum(n, p), closed, n=n, point=p, form="closed")
            yield _exact("T3_SUM", bs.literal_sum(n, p), pair_sum**n, n=n, point=p, form="binomial")


def suite_eq7(cfg, points):
    for p in points:
        for n in range(1, cfg.bound("EQ7_IDENTITY_FN") + 1):
            f = bs.SampledFunction.from_callable(lambda x: x, n)
            yield _exact(
                "EQ7_IDENTITY_FN", bs.operator_apply(f, p), bs.identity_operator_closed_form(n, p), n=n, point=p
            )


def suite_t4_reduction(cfg, points):
    for p in points:
        for n in range(1, cfg.bound("T4_REDUCTION") + 1):
            for k in range(n + 1):
                yield _exact(
                    "T4_REDUCTION", bs.degree_reduction(k, n, p), bs.degree_reduction_rhs(k, n, p), k=k, n=n, point=p
                )


def suite_c5_ratio(cfg, points):
    for p in points:
        if p.X == p.q:
            # x = 1: the identity must refuse, not return a value
            try:
                bs.ratio_identity(1, 1, p)
            except bs.DomainError:
                yield IdentityReport("C5_RATIO", _params(k=1, n=1, point=p, case="domain-error"), "pass")
            else:
                yield IdentityReport("C5_RATIO", _params(k=1, n=1, point=p, case="domain-error"), "fail",
                                     {"left": "no error", "right": "DomainError"})
            continue
        for n in range(1, cfg.bound("C5_RATIO") + 1):
            for k in range(1, n + 1):
                yield _exact("C5_RATIO", bs.ratio_identity(k, n, p), bs.q_basis(k, n, p), k=k, n=n, point=p)


def suite_t6_monomial(cfg, points):
    for p in points:
        for k, n in _pairs(cfg.bound("T6_MONOMIAL")):
            yield _exact("T6_MONOMIAL", bs.monomial_expansion(k, n, p), bs.q_basis(k, n, p), k=k, n=n, point=p)


def suite_t7_moment(cfg, points):
    for p in points:
        x_q = q_number(p)
        for n in range(1, cfg.bound("T7_MOMENT") + 1):
            for i in range(1, n + 1):
                yield _exact("T7_MOMENT", bs.moment_identity(i, n, p), x_q**i, i=i, n=n, point=p)


def suite_eq20(cfg, points):
    bound = cfg.bound("EQ20_BERNOULLI")
    for p in points:
        for l in range(bound + 1):
            for k in range(bound + 1):
                expected = bs.q_basis(k, l, p)
                yield _exact("EQ20_BERNOULLI", sb.qbern_via_bernoulli(k, l, p), expected, k=k, n=l, point=p)


def suite_eq21_22(cfg, points=None):
    bound = cfg.bound("EQ21_22_QSTIRLING")
    for q in cfg.q_list:
        for n in range(bound + 1):
            for k in range(n + 1):
                closed = sb.q_stirling(n, k, q)
                yield _exact("EQ21_22_QSTIRLING", closed, sb.q_stirling_series_oracle(n, k, q),
                             k=k, n=n, q=q, form="series")
                yield _exact("EQ21_22_QSTIRLING", closed, sb.q_stirling_via_difference(n, k, q),
                             k=k, n=n, q=q, form="operator")


def suite_eq23(cfg, points):
    for p in points:
        x_q = q_number(p)
        for i in range(cfg.bound("EQ23_POWER") + 1):
            yield _exact("EQ23_POWER", sb.q_power_expansion(i, p), x_q**i, i=i, point=p)


def suite_t8(cfg, points):
    for p in points:
        for n in range(1, cfg.bound("T8_EQUALITY") + 1):
            for i in range(1, n + 1):
                left, right = sb.theorem8_check(i, n, p)
                yield _exact("T8_EQUALITY", left, right, i=i, n=n, point=p)


LIMIT_Q = 1 - 1e-4
LIMIT_QS = (0.9, 0.99, 0.999, LIMIT_Q)
LIMIT_X = tuple(j / 10 for j in range(11))


def suite_qlimit(cfg, points=None):
    bound = cfg.bound("QLIMIT")
    tol = cfg.float_tol_limit
    for x in LIMIT_X:
        for k, n in _pairs(bound):
            diffs = bs.classical_limit_check(k, n, x, LIMIT_QS)
            monotone = all(b <= a for a, b in zip(diffs, diffs[1:]))
            ok = diffs[-1] < tol and monotone
            yield _close("QLIMIT", bs.q_basis(k, n, FloatPoint(LIMIT_Q, x)), bs.classical_basis(k, n, x), ok,
                         k=k, n=n, point=FloatPoint(LIMIT_Q, x), form="basis")
    # S(n,k:q) -> S(n,k) with error of order (1-q) S(n,k): compared relatively
    classical = sb.stirling2_recurrence(bound)
    for n in range(bound + 1):
        for k in range(n + 1):
            approx = sb.q_stirling(n, k, LIMIT_Q)
            exact = float(classical(n, k))
            ok = math.isclose(approx, exact, rel_tol=tol, abs_tol=tol if exact == 0 else 0.0)
            yield _close("QLIMIT", approx, exact, ok, k=k, n=n, q=LIMIT_Q, form="q-stirling")


SUITES: dict = {
    "T1_ORACLE": suite_t1_oracle,
    "T2_RECURRENCE": suite_t2_recurrence,
    "T2_DERIVATIVE": suite_t2_derivative,
    "T3_SYMMETRY": suite_t3_symmetry,
    "T3_SUM": suite_t3_sum,
    "EQ7_IDENTITY_FN": suite_eq7,
    "T4_REDUCTION": suite_t4_reduction,
    "C5_RATIO": suite_c5_ratio,
    "T6_MONOMIAL": suite_t6_monomial,
    "T7_MOMENT": suite_t7_moment,
    "EQ20_BERNOULLI": suite_eq20,
    "EQ21_22_QSTIRLING": suite_eq21_22,
    "EQ23_POWER": suite_eq23,
    "T8_EQUALITY": suite_t8,
    "QLIMIT": suite_qlimit,
}

# suites that sweep the exact (q, X) grid and can be split per q
_PER_Q = {"EQ21_22_QSTIRLING"} | {i for i in IDENTITY_IDS if i not in ("T2_DERIVATIVE", "QLIMIT")}


def _run_task(task) -> list:
    identity_id, cfg = task
    return list(SUITES[identity_id](cfg, grid_points(cfg)))


def run_suites(cfg: VerifyConfig, only: Iterable[str] | None = None) -> list:
    ids = list(only) if only else list(IDENTITY_IDS)
    unknown = [i for i in ids if i not in SUITES]
    if unknown:
        raise ConfigError(f"unknown identity id(s): {', '.join(unknown)}")
    tasks = []
    for identity_id in ids:
        if identity_id in _PER_Q:
            tasks.extend((identity_id, replace(cfg, q_list=(q,))) for q in cfg.q_list)
        else:
            tasks.append((identity_id, cfg))
    if cfg.parallel:
        with ProcessPoolExecutor() as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    results.sort(key=IdentityReport.sort_key)
    return results


def summarize(results) -> dict:
    passed = sum(r.passed for r in results)
    return {"pass": passed, "fail": len(results) - passed}


def per_identity_counts(results) -> dict:
    counts: dict = {}
    for r in results:
        c = counts.setdefault(r.identity_id, {"pass": 0, "fail": 0})
        c[r.status] += 1
    return counts


def build_report(cfg: VerifyConfig, results) -> dict:
    return {
        "config": cfg.to_json(),
        "results": [r.to_json() for r in results],
        "summary": summarize(results),
        "notes": NOTES,
    }


def load_config(sources: Iterable[str]) -> VerifyConfig:
    """Build a config from JSON files and/or inline ``key=value[,key=value]`` overrides."""
    import os

    cfg = VerifyConfig()
    for source in sources:
        if os.path.isfile(source):
            try:
                with open(source) as fh:
                    data = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigError(f"cannot read config {source}: {exc}") from None
            if not isinstance(data, dict):
                raise ConfigError(f"config {source} must hold a JSON object")
        else:
            data = {}
            for item in source.split(","):
                if "=" not in item:
                    raise ConfigError(f"config override {item!r} is neither a file nor key=value")
                key, value = item.split("=", 1)
                data[key.strip()] = value.strip()
        cfg = VerifyConfig.from_mapping(data, cfg)
    return cfg
