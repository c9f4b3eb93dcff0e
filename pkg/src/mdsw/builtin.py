"""Loader for the rulepacks shipped with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .rulepack import Rulebook, parse_rulebook

MDR_PACK = "mdr-2017-745"
MEDDEV_PACK = "meddev-2-1-6"

BUILTIN_PACKS = (MDR_PACK, MEDDEV_PACK)


def builtin_rulepack_source(pack_id: str) -> str:
    if pack_id not in BUILTIN_PACKS:
        raise KeyError(f"unknown built-in rulepack: {pack_id!r}")
    ref = resources.files(__package__) / "rulepacks" / f"{pack_id}.rp"
    return ref.read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_builtin(pack_id: str) -> Rulebook:
    return parse_rulebook(builtin_rulepack_source(pack_id))


def builtin_rulebooks() -> dict[str, Rulebook]:
    return {pack_id: load_builtin(pack_id) for pack_id in BUILTIN_PACKS}
