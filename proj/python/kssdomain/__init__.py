"""Exact K-semistable domains of log Fano pairs on complete intersections.

Rationals cross the extension boundary as "p/q" strings and come back
as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from ._core import (
    ConfigError,
    KssError,
    NotAVertex,
    NotLogFano,
    PairConfig,
    UnsupportedK,
    WrongDimension,
)
from . import _core

__all__ = [
    "ConfigError",
    "KssError",
    "NotAVertex",
    "NotLogFano",
    "PairConfig",
    "UnsupportedK",
    "WrongDimension",
    "validate",
    "log_discrepancy",
    "s_invariant",
    "beta",
    "volume_profile",
    "halfspace_system",
    "enumerate_vertices",
    "closed_form_vertices",
    "interior_vertex",
    "kss_interval_k1",
    "compute",
    "render_svg",
    "render_off",
    "run_cli",
]

Number = Fraction | int | str


def _q(text: str) -> Fraction:
    return Fraction(text)


def _point(values: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(_q(v) for v in values)


def _arg(x: Sequence[Number]) -> list[str]:
    out = []
    for v in x:
        f = Fraction(v)
        out.append(f"{f.numerator}/{f.denominator}")
    return out


def validate(projective_dim: int, ci_degrees: Sequence[int], boundary_degrees: Sequence[int],
             assume_ci_kss: bool = True) -> PairConfig:
    return PairConfig.validate(projective_dim, list(ci_degrees), list(boundary_degrees), assume_ci_kss)


def log_discrepancy(config: PairConfig, x: Sequence[Number], i: int) -> Fraction:
    return _q(_core.log_discrepancy(config, _arg(x), i))


def s_invariant(config: PairConfig, x: Sequence[Number], i: int) -> Fraction:
    return _q(_core.s_invariant(config, _arg(x), i))


def beta(config: PairConfig, x: Sequence[Number], i: int) -> Fraction:
    return _q(_core.beta(config, _arg(x), i))


def volume_profile(config: PairConfig, x: Sequence[Number], i: int, t: Number) -> Fraction:
    return _q(_core.volume_profile(config, _arg(x), i, _arg([t])[0]))


def halfspace_system(config: PairConfig) -> list[dict]:
    """Labelled forms constant + coeffs . x >= 0."""
    return [
        {"label": f["label"], "constant": _q(f["constant"]), "coeffs": _point(f["coeffs"])}
        for f in _core.halfspace_system(config)
    ]


def enumerate_vertices(config: PairConfig, threads: int = 1) -> list[tuple[Fraction, ...]]:
    return [_point(v["point"]) for v in _core.enumerate_vertices(config, threads)]


def closed_form_vertices(config: PairConfig) -> dict:
    r = _core.closed_form_vertices(config)
    return {
        "branch": r["branch"],
        "vertices": [_point(v["point"]) for v in r["vertices"]],
        "provenance": [list(v["provenance"]) for v in r["vertices"]],
    }


def interior_vertex(config: PairConfig) -> tuple[Fraction, ...] | None:
    a = _core.interior_vertex(config)
    return None if a is None else _point(a)


def kss_interval_k1(config: PairConfig) -> Fraction:
    return _q(_core.kss_interval_k1(config))


def compute(config: PairConfig, closed_form: bool = True, certify: bool = True, threads: int = 1) -> dict:
    """Result document as a dict; rationals stay "p/q" strings."""
    return json.loads(_core.compute(config, closed_form, certify, threads))


def render_svg(config: PairConfig, scale: int = 400) -> str:
    return _core.render_svg(config, scale)


def render_off(config: PairConfig) -> str:
    return _core.render_off(config)


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    return _core.run_cli(list(args))
