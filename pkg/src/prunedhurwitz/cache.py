"""Append-only persistent cache of computed Hurwitz values.

One JSON object per line:

    {"g": 0, "mu": [3, 2], "nu": [4, 1], "kind": "H",
     "num": "8", "den": "1",
     "conv": {"m0_pruned": false, "stability_reading": "literal"}}

Partitions are stored sorted descending (values depend only on the
multisets).  Records whose conventions differ from the active run are
ignored; malformed lines are skipped with a warning and never trusted.
"""

from __future__ import annotations

import json
import logging
import os
from fractions import Fraction
from typing import Mapping

log = logging.getLogger(__name__)

CACHE_ENV_VAR = "PRUNEDHURWITZ_CACHE"

CacheKey = tuple[int, tuple[int, ...], tuple[int, ...], str]


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV_VAR)


def load_cache(path: str, conventions: Mapping[str, object]) -> dict[CacheKey, Fraction]:
    """Read every valid record matching ``conventions`` from ``path``."""
    out: dict[CacheKey, Fraction] = {}
    conv = dict(conventions)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key, value = _parse_record(rec)
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("cache %s:%d skipped: %s", path, lineno, exc)
                    continue
                if rec.get("conv") != conv:
                    continue
                out[key] = value
    except FileNotFoundError:
        pass
    except OSError as exc:
        log.warning("cache %s unreadable: %s", path, exc)
    return out


def _parse_record(rec: dict) -> tuple[CacheKey, Fraction]:
    g = rec["g"]
    mu = tuple(rec["mu"])
    nu = tuple(rec["nu"])
    kind = rec["kind"]
    if not isinstance(g, int) or g < 0:
        raise ValueError("bad genus")
    if kind not in ("H", "PH", "PHHAT"):
        raise ValueError(f"bad kind {kind!r}")
    if not mu or not nu or any(not isinstance(x, int) or x < 1 for x in mu + nu):
        raise ValueError("bad partition")
    if sum(mu) != sum(nu):
        raise ValueError("degree mismatch")
    num = int(rec["num"])
    den = int(rec["den"])
    if den <= 0:
        raise ValueError("denominator must be positive")
    mu = tuple(sorted(mu, reverse=True))
    nu = tuple(sorted(nu, reverse=True))
    return (g, mu, nu, kind), Fraction(num, den)


def append_record(
    path: str,
    key: CacheKey,
    value: Fraction,
    conventions: Mapping[str, object],
) -> bool:
    """Append one record; on an unwritable path warn and report False."""
    g, mu, nu, kind = key
    rec = {
        "g": g,
        "mu": list(mu),
        "nu": list(nu),
        "kind": kind,
        "num": str(value.numerator),
        "den": str(value.denominator),
        "conv": dict(conventions),
    }
    try:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return True
    except OSError as exc:
        log.warning("cache %s not writable (%s); continuing without persistence", path, exc)
        return False
