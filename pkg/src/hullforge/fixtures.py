"""Reference tables shipped with the package, and comparison against them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

FIXTURES = ("table1", "table2", "table3")
KEY = ("q", "k", "ell")
VALUES = ("n", "kappa", "d", "c")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> dict:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURES)}")
    text = resources.files("hullforge").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


@dataclass
class FixtureDiff:
    fixture: str
    matched: int
    total: int
    mismatches: list[dict] = field(default_factory=list)
    missing: list[dict] = field(default_factory=list)
    extra: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.matched == self.total

    def summary(self) -> str:
        return f"{self.matched}/{self.total} rows match"

    def lines(self) -> list[str]:
        out = [self.summary()]
        for m in self.mismatches:
            out.append(f"mismatch q={m['q']} k={m['k']} ell={m['ell']}: fixture {m['fixture']} generated {m['generated']}")
        for m in self.missing:
            out.append(f"missing q={m['q']} k={m['k']} ell={m['ell']}: not generated")
        for e in self.extra:
            out.append(f"extra q={e['q']} k={e['k']} ell={e['ell']}: generated {_fmt(e)} (not in fixture)")
        return out


def _fmt(row: dict) -> str:
    return f"[[{row['n']},{row['kappa']},{row['d']};{row['c']}]]_{row['q']}"


def compare_fixture(name: str, rows: list[dict], restrict_q: bool = True) -> FixtureDiff:
    """Compare generated rows (dicts with q, k, ell, n, kappa, d, c) to a fixture.

    Only fixture rows whose q was generated are counted when ``restrict_q``,
    so a single-q run can be checked against a multi-q table.
    """
    ref = load_fixture(name)["rows"]
    gen = {tuple(r[x] for x in KEY): r for r in rows}
    if restrict_q:
        qs = {r["q"] for r in rows}
        ref = [r for r in ref if r["q"] in qs]
    diff = FixtureDiff(name, 0, len(ref))
    seen = set()
    for r in ref:
        key = tuple(r[x] for x in KEY)
        seen.add(key)
        g = gen.get(key)
        if g is None:
            diff.missing.append(r)
        elif all(g[v] == r[v] for v in VALUES):
            diff.matched += 1
        else:
            diff.mismatches.append({"q": r["q"], "k": r["k"], "ell": r["ell"], "fixture": _fmt(r), "generated": _fmt(g)})
    diff.extra = [g for key, g in sorted(gen.items()) if key not in seen]
    return diff
