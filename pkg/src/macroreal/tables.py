"""Published witness magnitudes for schedule (pi, pi/2, pi/2).

Transcribed by hand; the code under test never regenerates these values.
Keys are ``(twice_j, delta)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

FIXTURE_VERSION = 1


@dataclass(frozen=True)
class TableSpec:
    id: str
    caption: str
    wlgi: dict[tuple[int, float], float] = field(default_factory=dict)
    nsit: dict[tuple[int, float], float] = field(default_factory=dict)

    def cells(self):
        """Yield ``(witness, twice_j, delta, expected)`` in table order."""
        for witness, values in (("k_wlgi", self.wlgi), ("k_nsit_magnitude", self.nsit)):
            for (twice_j, delta), expected in values.items():
                yield witness, twice_j, delta, expected

    def grid(self) -> list[tuple[int, float]]:
        return sorted(set(self.wlgi) | set(self.nsit))


def _grid(twice_js, deltas, rows):
    return {
        (tj, d): v for tj, row in zip(twice_js, rows) for d, v in zip(deltas, row)
    }


_WLGI_DELTAS = (0.25, 0.55, 0.85)
_NSIT_DELTAS = (0.55, 0.70, 0.85)

TABLE_I = TableSpec(
    "I",
    "half-integer spins, sharp measurement times",
    wlgi={(tj, 0.0): 0.250 for tj in (3, 15, 35, 55, 97, 147, 199)},
    nsit={(tj, 0.0): 0.500 for tj in (3, 15, 35, 55, 97, 147, 199)},
)

TABLE_II = TableSpec(
    "II",
    "half-integer spins, coarsened measurement times",
    wlgi=_grid((3, 9, 15), _WLGI_DELTAS, [
        (0.245, 0.181, 0.063),
        (0.249, 0.206, 0.082),
        (0.250, 0.212, 0.088),
    ]),
    nsit=_grid((3, 9, 15), _NSIT_DELTAS, [
        (0.467, 0.433, 0.389),
        (0.486, 0.457, 0.416),
        (0.490, 0.465, 0.423),
    ]),
)

TABLE_III = TableSpec(
    "III",
    "integer spins, sharp measurement times",
    wlgi=_grid((6, 18, 24, 50, 80, 160), (0.0,), [
        (0.147,), (0.195,), (0.205,), (0.218,), (0.226,), (0.233,),
    ]),
    nsit=_grid((6, 18, 24, 50, 80, 160), (0.0,), [
        (0.451,), (0.482,), (0.486,), (0.493,), (0.496,), (0.498,),
    ]),
)

TABLE_IV = TableSpec(
    "IV",
    "integer spins, coarsened measurement times",
    wlgi=_grid((6, 12, 18, 24), _WLGI_DELTAS, [
        (0.161, 0.140, 0.053),
        (0.196, 0.176, 0.073),
        (0.210, 0.190, 0.081),
        (0.218, 0.198, 0.085),
    ]),
    nsit=_grid((6, 12, 18, 24), _NSIT_DELTAS, [
        (0.421, 0.398, 0.365),
        (0.456, 0.433, 0.396),
        (0.468, 0.446, 0.408),
        (0.475, 0.453, 0.415),
    ]),
)

TABLES = {t.id: t for t in (TABLE_I, TABLE_II, TABLE_III, TABLE_IV)}
