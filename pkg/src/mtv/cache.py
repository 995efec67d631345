"""Persistent cache of Euler numbers and power sums for the CLI.

The cache is strictly an optimization: entries are validated against
recomputation on load and a file that fails validation is rejected
wholesale, so deleting or corrupting it can never change any output.
Writes are atomic (temp file + rename) and byte-identical for identical
table sizes.

File format (JSON, one object):

    {
      "version": 1,
      "euler": {"0": "1", "2": "-1", ...},            # even index -> E as decimal string
      "power_sums": {"1": {"rational": "1/8", "pi_power": 2}, ...}
    }
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from .euler import euler_numbers
from .exact import format_rational
from .symfun import power_sums

CACHE_VERSION = 1
ENV_VAR = "MTV_CACHE_PATH"
DEFAULT_PATH = ".mtv-cache.json"


def cache_path() -> str:
    return os.environ.get(ENV_VAR, DEFAULT_PATH)


@dataclass
class CacheState:
    """High-water marks of validated cache content."""

    euler_max_n: int = -1  # largest n with E_{2n} cached; -1 = none
    power_max_k: int = 0
    rejected: bool = False


def _payload(euler_max_n: int, power_max_k: int) -> dict:
    payload = {"version": CACHE_VERSION, "euler": {}, "power_sums": {}}
    if euler_max_n >= 0:
        table = euler_numbers(euler_max_n)
        payload["euler"] = {str(2 * n): str(v) for n, v in enumerate(table.values)}
    if power_max_k >= 1:
        table = power_sums(power_max_k)
        payload["power_sums"] = {
            str(k): {"rational": format_rational(p.coef), "pi_power": p.weight}
            for k, p in enumerate(table.entries, start=1)
        }
    return payload


def load_cache(path: str) -> CacheState:
    """Read and validate the cache; a mismatch rejects the whole file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return CacheState()
    except (OSError, json.JSONDecodeError):
        return CacheState(rejected=True)
    try:
        if data.get("version") != CACHE_VERSION:
            return CacheState(rejected=True)
        euler_entries = {int(k): int(v) for k, v in data.get("euler", {}).items()}
        power_entries = {
            int(k): (Fraction(v["rational"]), int(v["pi_power"]))
            for k, v in data.get("power_sums", {}).items()
        }
    except (KeyError, TypeError, ValueError, AttributeError):
        return CacheState(rejected=True)

    euler_max_n = -1
    if euler_entries:
        idx = sorted(euler_entries)
        if idx != [2 * n for n in range(len(idx))]:
            return CacheState(rejected=True)
        euler_max_n = len(idx) - 1
        recomputed = euler_numbers(euler_max_n)
        if any(euler_entries[2 * n] != recomputed.values[n] for n in range(len(idx))):
            return CacheState(rejected=True)

    power_max_k = 0
    if power_entries:
        ks = sorted(power_entries)
        if ks != list(range(1, len(ks) + 1)):
            return CacheState(rejected=True)
        power_max_k = len(ks)
        recomputed = power_sums(power_max_k)
        for k in ks:
            frac, weight = power_entries[k]
            p = recomputed.p(k)
            if frac != p.coef or weight != p.weight:
                return CacheState(rejected=True)

    return CacheState(euler_max_n=euler_max_n, power_max_k=power_max_k)


def save_cache(path: str, euler_max_n: int, power_max_k: int) -> None:
    """Atomically write the cache for the given table sizes."""
    if euler_max_n < 0 and power_max_k < 1:
        return
    text = json.dumps(_payload(euler_max_n, power_max_k), sort_keys=True,
                      separators=(",", ":")) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".mtv-cache-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
