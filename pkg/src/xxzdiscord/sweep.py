"""
Parameter sweeps, figure presets and the opposite-tendency detector.

A sweep evaluates a set of quantities on a one- or two-axis grid over
(T, J, J_z, D) with everything else held fixed. Rows come out in axis order
(axis1 outer, axis2 inner) whether or not the points are evaluated in
parallel.
"""

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .correlations import (
    GRID_PHI,
    GRID_THETA,
    MIN_IMPROVEMENT,
    STEP_MIN,
    STEP_START,
    concurrence_wootters,
    quantum_discord,
)
from .errors import DomainError, NumericalError, UsageError
from .models import MODELS, ModelParams, _normalize_model, concurrence_closed_dz, thermal_state

PARAMETERS = ("T", "J", "J_z", "D")
QUANTITIES = ("discord", "classical_correlation", "mutual_information", "concurrence", "concurrence_closed")
T_MIN = 1e-2

FIGURE_IDS = ("1a", "1b", "1c", "2a", "2b", "3", "4", "5a", "5b", "6")
FIGURE_T = (0.05, 3.0, 60)
SURFACE_D = (0.0, 2.0, 40)

SLOPE_THRESHOLD = 1e-6

_DISCORD_FAMILY = {"discord", "classical_correlation", "mutual_information"}


@dataclass(frozen=True)
class Axis:
    """A named sweep axis over explicit, strictly increasing values."""

    name: str
    values: tuple

    def __post_init__(self):
        if self.name not in PARAMETERS:
            raise UsageError(f"unknown axis {self.name!r}; expected one of {PARAMETERS}")
        vals = tuple(float(v) for v in self.values)
        if len(vals) < 2:
            raise UsageError(f"axis {self.name} needs at least 2 points")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise UsageError(f"axis {self.name} values must be strictly increasing")
        if self.name == "T" and vals[0] < T_MIN:
            raise DomainError(f"T axis starts at {vals[0]}, below the minimum {T_MIN}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def linspace(cls, name, start, stop, count):
        if not start < stop:
            raise UsageError(f"axis {name}: start must be below stop")
        return cls(name, tuple(np.linspace(start, stop, int(count))))

    @classmethod
    def from_config(cls, cfg) -> "Axis":
        if isinstance(cfg, dict):
            name = cfg.get("name")
            if name not in PARAMETERS:
                raise UsageError(f"unknown axis {name!r}; expected one of {PARAMETERS}")
            if "values" in cfg:
                return cls(name, tuple(cfg["values"]))
            try:
                return cls.linspace(name, cfg["start"], cfg["stop"], cfg["count"])
            except KeyError as exc:
                raise UsageError(f"axis {name}: missing field {exc.args[0]!r}") from None
        if isinstance(cfg, (list, tuple)) and len(cfg) == 4:
            name = cfg[0]
            if name not in PARAMETERS:
                raise UsageError(f"unknown axis {name!r}; expected one of {PARAMETERS}")
            return cls.linspace(*cfg)
        raise UsageError(f"malformed axis {cfg!r}")

    def to_config(self) -> dict:
        return {"name": self.name, "values": list(self.values)}


@dataclass(frozen=True)
class SweepSpec:
    model: str
    fixed: dict
    axis1: Axis
    axis2: Axis | None = None
    quantities: tuple = ("discord",)

    def __post_init__(self):
        object.__setattr__(self, "model", _normalize_model(self.model))
        object.__setattr__(self, "quantities", tuple(self.quantities))
        for q in self.quantities:
            if q not in QUANTITIES:
                raise UsageError(f"unknown quantity {q!r}; expected one of {QUANTITIES}")
        if not self.quantities:
            raise UsageError("no quantities requested")
        if "concurrence_closed" in self.quantities and self.model != "Dz":
            raise UsageError("concurrence_closed exists only for the Dz model")
        for name in self.fixed:
            if name not in PARAMETERS:
                raise UsageError(f"unknown parameter {name!r}; expected one of {PARAMETERS}")
        swept = [a.name for a in self.axes]
        if len(set(swept)) != len(swept):
            raise UsageError("axis1 and axis2 sweep the same parameter")
        missing = [n for n in PARAMETERS if n not in swept and n not in self.fixed]
        if missing:
            raise UsageError(f"parameters neither fixed nor swept: {missing}")
        if "T" not in swept and not float(self.fixed["T"]) > 0:
            raise DomainError(f"fixed T must be positive, got {self.fixed['T']}")

    @property
    def axes(self):
        return (self.axis1,) if self.axis2 is None else (self.axis1, self.axis2)

    def points(self):
        """Yield (axis values, ModelParams) in axis1-outer order."""
        grids = [a.values for a in self.axes]
        for combo in np.ndindex(*[len(g) for g in grids]):
            vals = {a.name: g[i] for a, g, i in zip(self.axes, grids, combo)}
            merged = {k: float(v) for k, v in self.fixed.items()}
            merged.update(vals)
            yield tuple(vals[a.name] for a in self.axes), ModelParams(
                self.model, merged["J"], merged["J_z"], merged["D"], merged["T"]
            )

    def to_config(self) -> dict:
        return {
            "model": self.model,
            "fixed": {k: float(v) for k, v in self.fixed.items()},
            "axis1": self.axis1.to_config(),
            "axis2": None if self.axis2 is None else self.axis2.to_config(),
            "quantities": list(self.quantities),
        }

    @classmethod
    def from_config(cls, cfg: dict) -> "SweepSpec":
        unknown = set(cfg) - {"model", "fixed", "axis1", "axis2", "quantities"}
        if unknown:
            raise UsageError(f"unknown config keys {sorted(unknown)}")
        if "model" not in cfg or "axis1" not in cfg:
            raise UsageError("config needs at least 'model' and 'axis1'")
        axis2 = cfg.get("axis2")
        return cls(
            model=cfg["model"],
            fixed=dict(cfg.get("fixed", {})),
            axis1=Axis.from_config(cfg["axis1"]),
            axis2=None if axis2 is None else Axis.from_config(axis2),
            quantities=tuple(cfg.get("quantities", ("discord",))),
        )


@dataclass
class SweepResult:
    spec: SweepSpec
    columns: list
    rows: list
    provenance: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        return format_csv(self.columns, self.rows)


def provenance() -> dict:
    return {
        "version": __version__,
        "optimizer": {
            "grid": [GRID_THETA, GRID_PHI],
            "step_start": STEP_START,
            "step_min": STEP_MIN,
            "min_improvement": MIN_IMPROVEMENT,
        },
    }


def evaluate_point(p: ModelParams, quantities) -> dict:
    """Evaluate the requested quantities at one parameter point."""
    rho = thermal_state(p)
    out = {}
    if _DISCORD_FAMILY.intersection(quantities):
        _, rep = quantum_discord(rho)
        out["discord"] = rep.quantum_discord
        out["classical_correlation"] = rep.classical_correlation
        out["mutual_information"] = rep.mutual_information
        out["concurrence"] = rep.concurrence
    elif "concurrence" in quantities:
        out["concurrence"] = concurrence_wootters(rho)
    if "concurrence_closed" in quantities:
        out["concurrence_closed"] = concurrence_closed_dz(p)
    return {q: out[q] for q in quantities}


def _evaluate_row(args):
    p, quantities = args
    return evaluate_point(p, quantities)


def default_threads() -> int:
    return os.cpu_count() or 1


def run_sweep(spec: SweepSpec, threads: int | None = 1) -> SweepResult:
    """Evaluate ``spec`` on its full grid. ``threads`` > 1 uses a process pool."""
    threads = default_threads() if threads is None else max(1, int(threads))
    points = list(spec.points())
    jobs = [(p, spec.quantities) for _, p in points]
    if threads > 1 and len(jobs) > 1:
        chunk = max(1, len(jobs) // (4 * threads))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(_evaluate_row, jobs, chunksize=chunk))
    else:
        values = [_evaluate_row(j) for j in jobs]

    columns = [a.name for a in spec.axes] + list(spec.quantities)
    rows = []
    for (axis_vals, _), vals in zip(points, values):
        row = list(axis_vals) + [vals[q] for q in spec.quantities]
        if not np.all(np.isfinite(row)):
            raise NumericalError(f"non-finite output at {dict(zip(columns, row))}")
        rows.append(row)
    return SweepResult(spec, columns, rows, provenance())


def format_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([f"{float(x):.12g}" for x in row])
    return buf.getvalue()


# figure presets --------------------------------------------------------------

# id -> (model, fixed, curve parameter or None, curve values, quantity)
_PRESETS = {
    "1a": ("Dz", {"J": 1.0, "J_z": 0.2}, "D", (0.5, 0.7, 1.0), "discord"),
    "1b": ("Dz", {"J": 1.0, "J_z": 0.2}, "D", (0.5, 0.7, 1.0), "concurrence"),
    "1c": ("Dz", {"J": 1.0, "J_z": 1.0}, "D", (0.5, 0.7, 1.0), "discord"),
    "2a": ("Dz", {"J": 1.0, "D": 1.0}, "J_z", (1.0, 2.0, 3.0), "discord"),
    "2b": ("Dz", {"J": 1.0, "D": 1.0}, "J_z", (1.0, 2.0, 3.0), "concurrence"),
    "3": ("Dz", {"J": 1.0, "J_z": 0.2}, None, None, "discord"),
    "4": ("Dx", {"J": 1.0, "D": 1.0}, "J_z", (0.0, 0.4, 0.9), "discord"),
    "5a": ("Dx", {"J": 1.0, "J_z": 1.0}, "D", (0.5, 0.7, 1.0), "discord"),
    "5b": ("Dx", {"J": 1.0, "J_z": 0.2}, "D", (0.5, 0.7, 1.0), "discord"),
    "6": ("Dx", {"J": 1.0, "J_z": 0.2}, None, None, "discord"),
}

_CURVE_LABEL = {"D": "D", "J_z": "Jz"}


def _check_figure_id(fig_id) -> str:
    fig_id = str(fig_id)
    if fig_id not in _PRESETS:
        raise UsageError(f"unknown figure id {fig_id!r}; valid ids: {', '.join(FIGURE_IDS)}")
    return fig_id


def figure_preset(fig_id) -> SweepSpec:
    """Sweep reproducing one figure panel: T on axis1, the curve family (or D surface) on axis2."""
    model, fixed, curve, values, quantity = _PRESETS[_check_figure_id(fig_id)]
    t_axis = Axis.linspace("T", *FIGURE_T)
    if curve is None:
        axis2 = Axis.linspace("D", *SURFACE_D)
    else:
        axis2 = Axis(curve, values)
    return SweepSpec(model, dict(fixed), t_axis, axis2, (quantity,))


def figure_table(fig_id, threads: int | None = 1):
    """(columns, rows) for a figure: wide, one column per curve, or long for surfaces."""
    fig_id = _check_figure_id(fig_id)
    spec = figure_preset(fig_id)
    result = run_sweep(spec, threads=threads)
    _, _, curve, values, quantity = _PRESETS[fig_id]
    if curve is None:
        return result.columns, result.rows
    n = len(values)
    columns = ["T"] + [f"{quantity}_{_CURVE_LABEL[curve]}{float(v)}" for v in values]
    rows = []
    for i in range(0, len(result.rows), n):
        block = result.rows[i : i + n]
        rows.append([block[0][0]] + [r[2] for r in block])
    return columns, rows


def figure_csv(fig_id, threads: int | None = 1) -> str:
    return format_csv(*figure_table(fig_id, threads=threads))


# opposite tendency -----------------------------------------------------------


@dataclass(frozen=True)
class TendencyInterval:
    D_lo: float
    D_hi: float
    discord_slope_sign: int
    concurrence_slope_sign: int


def detect_opposite_tendency(model, fixed, D_range, T, num: int = 46):
    """
    Maximal D intervals where discord and concurrence move in opposite directions.

    Discord and Wootters concurrence are sampled at ``num`` evenly spaced D
    values. A segment between neighbours counts when the two finite-difference
    slopes have strictly opposite signs and both exceed 1e-6 per unit D.
    Adjacent counting segments with the same sign pattern are merged.
    """
    model = _normalize_model(model)
    if not T > 0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    lo, hi = map(float, D_range)
    if not lo < hi or num < 2:
        raise UsageError("D_range must be increasing and num >= 2")
    J, Jz = float(fixed["J"]), float(fixed.get("J_z", fixed.get("Jz")))
    ds = np.linspace(lo, hi, num)
    qd = np.empty(num)
    conc = np.empty(num)
    for i, d in enumerate(ds):
        _, rep = quantum_discord(thermal_state(ModelParams(model, J, Jz, d, T)))
        qd[i] = rep.quantum_discord
        conc[i] = rep.concurrence
    return _opposite_intervals(ds, qd, conc)


def _opposite_intervals(ds, qd, conc):
    """Merge sampled segments whose discord and concurrence slopes disagree in sign."""
    ds = np.asarray(ds, dtype=float)
    dq = np.diff(qd) / np.diff(ds)
    dc = np.diff(conc) / np.diff(ds)

    intervals = []
    for i in range(len(ds) - 1):
        if abs(dq[i]) <= SLOPE_THRESHOLD or abs(dc[i]) <= SLOPE_THRESHOLD or np.sign(dq[i]) == np.sign(dc[i]):
            continue
        sq, sc = int(np.sign(dq[i])), int(np.sign(dc[i]))
        prev = intervals[-1] if intervals else None
        if prev and prev.D_hi == ds[i] and (prev.discord_slope_sign, prev.concurrence_slope_sign) == (sq, sc):
            intervals[-1] = TendencyInterval(prev.D_lo, float(ds[i + 1]), sq, sc)
        else:
            intervals.append(TendencyInterval(float(ds[i]), float(ds[i + 1]), sq, sc))
    return intervals


def load_config(path) -> SweepSpec:
    with open(path) as fh:
        try:
            cfg = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return SweepSpec.from_config(cfg)


__all__ = [
    "PARAMETERS",
    "QUANTITIES",
    "FIGURE_IDS",
    "MODELS",
    "Axis",
    "SweepSpec",
    "SweepResult",
    "TendencyInterval",
    "evaluate_point",
    "run_sweep",
    "format_csv",
    "figure_preset",
    "figure_table",
    "figure_csv",
    "detect_opposite_tendency",
    "load_config",
]
