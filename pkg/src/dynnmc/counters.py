"""Operation tallies for the dynamic structures."""

from __future__ import annotations

FIELDS = (
    "msf_insert", "msf_delete", "msf_connected", "msf_promotions", "msf_demotions",
    "dcs_insert_G", "dcs_insert_F", "dcs_delete_G", "dcs_delete_F",
    "dcs_find_cutedge", "dsf_insert", "dsf_delete",
)

_DCS = ("dcs_insert_G", "dcs_insert_F", "dcs_delete_G", "dcs_delete_F",
        "dcs_find_cutedge")


class OpCounters:
    """Plain integer counters; ``snapshot`` and ``since`` support per-query deltas."""

    __slots__ = FIELDS

    def __init__(self) -> None:
        self.reset()

    def reset(self) -> None:
        for f in FIELDS:
            setattr(self, f, 0)

    def snapshot(self) -> dict[str, int]:
        return {f: getattr(self, f) for f in FIELDS}

    def since(self, snap: dict[str, int]) -> dict[str, int]:
        return {f: getattr(self, f) - snap[f] for f in FIELDS}

    @property
    def dcs_ops(self) -> int:
        return sum(getattr(self, f) for f in _DCS)

    @property
    def dsf_ops(self) -> int:
        return self.dsf_insert + self.dsf_delete

    def __repr__(self) -> str:
        body = ", ".join(f"{f}={getattr(self, f)}" for f in FIELDS if getattr(self, f))
        return f"OpCounters({body})"


def dcs_total(delta: dict[str, int]) -> int:
    return sum(delta[f] for f in _DCS)


def dsf_total(delta: dict[str, int]) -> int:
    return delta["dsf_insert"] + delta["dsf_delete"]
