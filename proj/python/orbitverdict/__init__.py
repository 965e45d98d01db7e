"""Python access to the orbit-verdict engine.

Every command takes a problem spec as a dict (the same JSON the CLI reads)
and returns the parsed JSON report.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _core

__all__ = [
    "OrbitVerdictError",
    "run",
    "classify_iterates",
    "classify_averages",
    "closed_form",
    "fixed_point",
    "oracle",
    "verify_identities",
    "gallery",
    "binom",
    "s_sum",
    "t_sum",
    "d_factor",
]


class OrbitVerdictError(RuntimeError):
    """Nonzero exit: code 1 for a spec error, 2 for an oracle disagreement."""

    def __init__(self, code: int, message: str, report: dict | None = None):
        super().__init__(message)
        self.code = code
        self.report = report


def run(args: list[str], spec: dict | None = None) -> dict:
    """Runs one command line and returns the JSON report."""
    stdin = json.dumps(spec) if spec is not None else ""
    code, out, err = _core.run([str(a) for a in args], stdin)
    if code != 0:
        report = json.loads(out) if out.strip() else None
        raise OrbitVerdictError(code, err.strip(), report)
    return json.loads(out)


def classify_iterates(spec: dict) -> dict:
    return run(["classify-iterates", "-"], spec)


def classify_averages(spec: dict) -> dict:
    return run(["classify-averages", "-"], spec)


def closed_form(spec: dict, k: int) -> dict:
    return run(["closed-form", "-", "--k", k], spec)


def fixed_point(spec: dict) -> dict:
    return run(["fixed-point", "-"], spec)


def oracle(spec: dict, max_k: int, tol: float | None = None) -> dict:
    args = ["oracle", "-", "--max-k", max_k]
    if tol is not None:
        args += ["--tol", repr(tol)]
    return run(args, spec)


def verify_identities(max_k: int = 30, max_j: int = 10, trials: int = 10, seed: int = 0) -> dict:
    return run(["verify-identities", "--max-k", max_k, "--max-j", max_j, "--trials", trials, "--seed", seed])


def gallery(example: str) -> dict:
    return run(["gallery", example])


def binom(n: int, j: int) -> int:
    return int(_core.binom(n, j))


def _parts(value) -> tuple[str, str]:
    if isinstance(value, tuple):
        re, im = value
        return str(Fraction(re)), str(Fraction(im))
    if isinstance(value, complex):
        raise TypeError("pass exact parts as a (re, im) tuple of rationals")
    return str(Fraction(value)), "0"


def _scalar(parts: tuple[str, str]):
    re, im = Fraction(parts[0]), Fraction(parts[1])
    return re if im == 0 else (re, im)


def s_sum(j: int, k: int, lam) -> Any:
    """Exact S(j, k, lambda); lambda is a rational or a (re, im) tuple."""
    return _scalar(_core.s_sum(j, k, *_parts(lam)))


def t_sum(j: int, k: int, lam) -> Any:
    return _scalar(_core.t_sum(j, k, *_parts(lam)))


def d_factor(k: int, j: int, lam) -> Any:
    return _scalar(_core.d_factor(k, j, *_parts(lam)))
