"""Bundled example complexes, their integer cocycles and named classes.

File-backed examples live in ``data/``; ``sigma2xrp2``, ``rp2-handle`` and
``s1xrp2`` are built on demand from them.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources
from typing import Callable

from .algebra.fields import Field
from .cohomology import (
    Cochain,
    IntegerCocycle,
    parse_cochain,
    parse_integer_cocycle,
    pullback,
    pullback_integer_cocycle,
)
from .complex import ComplexError, SimplicialComplex, connected_sum, parse_complex, product_complex


class UnknownExample(KeyError):
    def __str__(self):
        return f"unknown example {self.args[0]!r}; try one of: {', '.join(EXAMPLES)}"


@dataclass
class Example:
    name: str
    description: str
    complex: SimplicialComplex
    cocycles: dict = dc_field(default_factory=dict)
    classes: dict = dc_field(default_factory=dict)  # name -> (Field -> Cochain)
    manifold: bool = True

    def cocycle(self, name: str) -> IntegerCocycle:
        key = self._key(name, self.cocycles)
        return self.cocycles[key]

    def cochain(self, name: str, F: Field) -> Cochain:
        key = self._key(name, self.classes)
        return self.classes[key](F)

    def _key(self, name: str, table: dict) -> str:
        if name.startswith(self.name + "."):
            name = name[len(self.name) + 1:]
        for k in (name, name + ".xi"):
            if k in table:
                return k
        raise UnknownExample(f"{self.name}.{name}")


def _text(name: str) -> str:
    return resources.files("masseycrit").joinpath("data", name).read_text()


def _file_example(name: str, description: str, cocycles=(), classes=()) -> Example:
    K = parse_complex(_text(f"{name}.cx"))
    ex = Example(name, description, K)
    for c in cocycles:
        ex.cocycles[c] = parse_integer_cocycle(_text(f"{name}.{c}.zeta"), K)
    for c in classes:
        text = _text(f"{name}.{c}.coch")
        ex.classes[c] = lambda F, text=text, K=K: parse_cochain(text, K, F)
    return ex


def _product(name, description, A: Example, B: Example, cocycles, classes) -> Example:
    X, p1, p2 = product_complex(A.complex, B.complex)
    ex = Example(name, description, X)
    proj = {1: (A, p1), 2: (B, p2)}
    for new, (side, old) in cocycles.items():
        src, p = proj[side]
        ex.cocycles[new] = pullback_integer_cocycle(p, src.cocycle(old))
    for new, (side, old, kind) in classes.items():
        src, p = proj[side]
        if kind == "cocycle":
            z = src.cocycle(old)
            ex.classes[new] = lambda F, z=z, p=p: pullback(p, z.to_field(F))
        else:
            ex.classes[new] = lambda F, src=src, old=old, p=p: pullback(p, src.cochain(old, F))
    return ex


def _transfer(z: IntegerCocycle, target: SimplicialComplex, rename: dict | None) -> IntegerCocycle:
    """Push a cocycle through a vertex relabelling (edges absent in the target are dropped)."""
    K = z.complex
    vals = {}
    for (u, v), x in z.values.items():
        lu, lv = K.vertices[u], K.vertices[v]
        if rename:
            lu, lv = rename[lu], rename[lv]
        a, b = target.vertex_index(lu), target.vertex_index(lv)
        if (min(a, b), max(a, b)) in target.index[1]:
            vals[(min(a, b), max(a, b))] = x if a < b else -x
    return IntegerCocycle(target, vals)


def _transfer_cochain(c: Cochain, target: SimplicialComplex) -> Cochain:
    K = c.complex
    vals = {}
    for s, x in c.values.items():
        idx = [target.vertex_index(K.vertices[v]) for v in s]
        t = tuple(sorted(idx))
        if t in target.index[c.degree]:
            sign = 1
            for i in range(len(idx)):
                for j in range(i + 1, len(idx)):
                    if idx[i] > idx[j]:
                        sign = -sign
            vals[t] = x if sign > 0 else c.field.neg(x)
    return Cochain(target, c.field, c.degree, vals)


def _rp2_handle() -> Example:
    rp2, torus = load_example("rp2"), load_example("torus9")
    X, rename = connected_sum(rp2.complex, torus.complex,
                              ("1", "2", "3"), ("x00", "x10", "x11"))
    ex = Example("rp2-handle", "RP^2 # T^2 glued along 1 2 3 ~ x00 x10 x11", X)
    ex.cocycles["xi"] = _transfer(torus.cocycle("a"), X, rename)
    ex.cocycles["b"] = _transfer(torus.cocycle("b"), X, rename)
    ex.classes["w"] = lambda F: _transfer_cochain(rp2.cochain("w", F), X)
    return ex


_BUILDERS: dict[str, Callable[[], Example]] = {
    "circle3": lambda: _file_example("circle3", "boundary of a triangle", ["gen"]),
    "torus9": lambda: _file_example("torus9", "3x3 grid torus", ["a", "b"]),
    "klein": lambda: _file_example("klein", "3x3 grid Klein bottle", ["a"]),
    "rp2": lambda: _file_example("rp2", "6-vertex RP^2", [], ["w"]),
    "sigma2": lambda: _file_example(
        "sigma2", "genus-2 surface (two grid tori)", ["fig1.xi"], ["fig1.v1", "fig1.v2"]),
    "sigma2xrp2": lambda: _product(
        "sigma2xrp2", "sigma2 x RP^2, staircase triangulation",
        load_example("sigma2"), load_example("rp2"),
        {"xi": (1, "fig1.xi")},
        {"v1": (1, "fig1.v1", "cochain"), "v2": (1, "fig1.v2", "cochain"),
         "w": (2, "w", "cochain")}),
    "s1xrp2": lambda: _product(
        "s1xrp2", "circle3 x RP^2, staircase triangulation",
        load_example("circle3"), load_example("rp2"),
        {"xi": (1, "gen")},
        {"xi": (1, "gen", "cocycle"), "w": (2, "w", "cochain")}),
    "rp2-handle": _rp2_handle,
}
EXAMPLES = tuple(_BUILDERS)

# example name -> the cocycle the ξ-examples use by default
DEFAULT_XI = {
    "circle3": "gen", "torus9": "a", "klein": "a", "sigma2": "fig1.xi",
    "sigma2xrp2": "xi", "s1xrp2": "xi", "rp2-handle": "xi",
}


@lru_cache(maxsize=None)
def load_example(name: str) -> Example:
    base = name.split(".", 1)[0] if name not in _BUILDERS else name
    if base not in _BUILDERS:
        raise UnknownExample(name)
    return _BUILDERS[base]()


def split_ref(ref: str) -> tuple[str, str]:
    """``"torus9.a"`` -> ``("torus9", "a")``; the example part must be known."""
    for name in sorted(EXAMPLES, key=len, reverse=True):
        if ref == name:
            return name, DEFAULT_XI.get(name, "")
        if ref.startswith(name + "."):
            return name, ref[len(name) + 1:]
    raise UnknownExample(ref)


__all__ = ["EXAMPLES", "DEFAULT_XI", "Example", "UnknownExample", "load_example",
           "split_ref", "ComplexError"]
