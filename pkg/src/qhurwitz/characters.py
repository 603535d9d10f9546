"""Irreducible characters of the symmetric group (Murnaghan-Nakayama)."""

from __future__ import annotations

import json
import math
import threading
from pathlib import Path

from .partitions import Partition, hook_product


def _beta_set(lam: tuple) -> tuple:
    ell = len(lam)
    return tuple(p + ell - 1 - i for i, p in enumerate(lam))


def _from_beta(beta) -> tuple:
    ell = len(beta)
    parts = [b - (ell - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))]
    return tuple(p for p in parts if p > 0)


def rim_hook_removals(lam: tuple, r: int):
    """Yield ``(remaining partition, leg length)`` for every rim hook of size ``r``."""
    beta = _beta_set(lam)
    occupied = set(beta)
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = [c for c in beta if c != b] + [t]
        yield _from_beta(new), height


class CharacterTable:
    """Memoized character values keyed by ``(lambda, mu)``.

    Entries are inserted only once fully computed and are never modified, so
    concurrent readers see either no entry or a complete one.
    """

    def __init__(self):
        self._entries: dict = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._entries)

    def character(self, lam, mu) -> int:
        lam, mu = tuple(lam), tuple(mu)
        if sum(lam) != sum(mu):
            raise ValueError(f"weight mismatch: |{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
        return self._chi(lam, mu)

    def _chi(self, lam: tuple, mu: tuple) -> int:
        if not mu:
            return 1
        key = (lam, mu)
        hit = self._entries.get(key)
        if hit is not None:
            return hit
        # strip the largest part of mu first
        r, rest = mu[0], mu[1:]
        value = 0
        for smaller, height in rim_hook_removals(lam, r):
            term = self._chi(smaller, rest)
            value += -term if height % 2 else term
        with self._lock:
            self._entries.setdefault(key, value)
        return value

    def dump(self, path) -> None:
        rows = [[list(k[0]), list(k[1]), v] for k, v in sorted(self._entries.items())]
        Path(path).write_text(json.dumps(rows))

    def load(self, path) -> None:
        p = Path(path)
        if not p.exists():
            return
        rows = json.loads(p.read_text())
        with self._lock:
            for lam, mu, v in rows:
                self._entries.setdefault((tuple(lam), tuple(mu)), int(v))


DEFAULT_TABLE = CharacterTable()


def character(lam, mu, table: CharacterTable | None = None) -> int:
    """``chi_lambda(mu)`` as an exact integer."""
    return (table or DEFAULT_TABLE).character(lam, mu)


def dimension(lam) -> int:
    lam = Partition(lam)
    return math.factorial(lam.weight) // hook_product(lam)
