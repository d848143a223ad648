"""Flat ``key = value`` run configuration and its expansion into sweeps.

Keys (comma lists expand as a cross product where noted)::

    interaction          heisenberg | blbq | dm            (list)   default heisenberg
    strength             real                               (list)   default 0.5
    operator_convention  spin1 | gellmann                   (list)   default spin1
    cut                  e.g. A|B, A|BC, AC|B, AB|C         (list)   default A|B
    reduce               factors to trace out, or none      default: those the cut omits
    pt_side              left | right                       default right
    aux                  three reals, or six as (re, im) pairs   default (1,1,1)/sqrt(3)
    t_start, t_end       reals                              default 0, 20
    steps                positive integer                   default 801
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

from .dynamics import SweepConfig
from .errors import ConfigError
from .hamiltonians import HamiltonianSpec, Interaction
from .measures import MeasurementConfig
from .operators import Convention
from .states import UNIFORM_AUX, AuxAmplitudes, NORM_TOL

KEYS = (
    "interaction",
    "strength",
    "operator_convention",
    "aux",
    "t_start",
    "t_end",
    "steps",
    "reduce",
    "cut",
    "pt_side",
)

DEFAULTS = {
    "interaction": "heisenberg",
    "strength": "0.5",
    "operator_convention": "spin1",
    "cut": "A|B",
    "pt_side": "right",
    "t_start": "0",
    "t_end": "20",
    "steps": "801",
}


@dataclass(frozen=True)
class RunManifest:
    sweeps: tuple[SweepConfig, ...]
    out_dir: Path = Path("results")
    emit_plots: bool = False
    filenames: tuple[str, ...] = field(default=())


def _split(value: str) -> list[str]:
    items = [v.strip() for v in value.split(",")]
    if not all(items):
        raise ValueError(f"empty item in list {value!r}")
    return items


def _real(text: str) -> float:
    x = float(text)
    if not math.isfinite(x):
        raise ValueError(f"{text!r} is not a finite real")
    return x


def _format_real(x: float) -> str:
    return repr(float(x))


def sweep_filename(cfg: SweepConfig) -> str:
    h, m = cfg.hamiltonian, cfg.measurement
    strength = _format_real(h.strength).replace("-", "m").replace(".", "p")
    cut = m.cut_string().replace("|", "-")
    return f"{h.kind.value}_{h.convention.value}_s{strength}_cut{cut}_red{m.reduce_string()}.csv"


def config_lines(cfg: SweepConfig) -> list[tuple[str, str]]:
    """Key/value pairs that reproduce exactly this sweep when parsed back."""
    h, m = cfg.hamiltonian, cfg.measurement
    aux = ", ".join(_format_real(part) for a in cfg.aux for part in (a.real, a.imag))
    return [
        ("interaction", h.kind.value),
        ("strength", _format_real(h.strength)),
        ("operator_convention", h.convention.value),
        ("aux", aux),
        ("t_start", _format_real(cfg.t_start)),
        ("t_end", _format_real(cfg.t_end)),
        ("steps", str(cfg.steps)),
        ("reduce", m.reduce_string()),
        ("cut", m.cut_string()),
        ("pt_side", m.pt_side),
    ]


def parse_config(source: str, out_dir: str | Path = "results", emit_plots: bool = False) -> RunManifest:
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(source.splitlines(), 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = (s.strip() for s in text.split("=", 1))
        if key not in KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: key {key!r} given twice")
        raw[key] = (lineno, value)

    def get(key, convert):
        lineno, value = raw.get(key, (None, DEFAULTS.get(key)))
        where = f"line {lineno}" if lineno else "default"
        try:
            return convert(value)
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{where}: bad value for {key!r}: {exc}") from exc

    interactions = get("interaction", lambda v: [Interaction(x.lower()) for x in _split(v)])
    strengths = get("strength", lambda v: [_real(x) for x in _split(v)])
    conventions = get("operator_convention", lambda v: [Convention(x.lower()) for x in _split(v)])
    pt_side = get("pt_side", lambda v: v.strip().lower())
    reduce = raw.get("reduce", (None, None))[1]
    measurements = get(
        "cut", lambda v: [MeasurementConfig.parse(c, reduce, pt_side) for c in _split(v)]
    )
    if "aux" in raw:
        aux = get("aux", lambda v: AuxAmplitudes.from_reals(_real(x) for x in _split(v)))
        if aux.norm_defect() > NORM_TOL:
            raise ConfigError(f"line {raw['aux'][0]}: aux amplitudes are not normalized")
    else:
        aux = UNIFORM_AUX
    t_start = get("t_start", _real)
    t_end = get("t_end", _real)
    steps = get("steps", int)

    sweeps = []
    for kind, conv, s, meas in itertools.product(interactions, conventions, strengths, measurements):
        try:
            sweeps.append(SweepConfig(HamiltonianSpec(kind, s, conv), aux, t_start, t_end, steps, meas))
        except ConfigError as exc:
            raise ConfigError(f"invalid sweep: {exc}") from exc

    names = [sweep_filename(c) for c in sweeps]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise ConfigError(f"duplicate sweeps in config: {', '.join(dupes)}")
    return RunManifest(tuple(sweeps), Path(out_dir), emit_plots, tuple(names))


def load_config(path: str | Path, **kwargs) -> RunManifest:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, **kwargs)
