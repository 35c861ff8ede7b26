"""Named surfaces shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .surface import FatGraph, SurfaceError, parse_surface

__all__ = ["BUILTINS", "builtin_surfaces", "builtin_text", "load_surface"]

BUILTINS = {
    "s111": "torus with one cusped hole",
    "quad014": "decorated ideal quadrangle",
    "tri023": "triangle with a hole inside",
    "torus11": "torus with one hole, no cusps",
    "pants1": "pair of pants with two loops and one cusp",
}


def builtin_text(name: str) -> str:
    if name not in BUILTINS:
        raise KeyError(f"unknown surface {name!r}; known: {', '.join(sorted(BUILTINS))}")
    return resources.files("qshear").joinpath("data", f"{name}.fg").read_text()


def builtin_surfaces() -> dict[str, FatGraph]:
    return {name: parse_surface(builtin_text(name), name=name) for name in BUILTINS}


def load_surface(source: str) -> FatGraph:
    """A built-in name or a path to a surface file."""
    if source in BUILTINS:
        return parse_surface(builtin_text(source), name=source)
    path = Path(source)
    if not path.exists():
        raise SurfaceError(f"no built-in surface or file named {source!r}")
    return parse_surface(path.read_text(), name=path.stem)
