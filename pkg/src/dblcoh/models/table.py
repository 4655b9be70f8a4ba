"""Finite double categories given by explicit tables, loaded from JSON.

Every cell is named by a JSON scalar.  Squares carry their id as payload, so
square equality is id equality.  The schema (``schema_version`` 1)::

    {
      "schema_version": 1,
      "name": "...",
      "objects": [A, ...],
      "vmorphisms": [{"id": f, "src": A, "tgt": B}, ...],
      "hcells": [{"id": M, "src": A, "tgt": B}, ...],
      "squares": [{"id": s, "top": M, "left": f, "right": g, "bottom": N}, ...],
      "compose_v": {"vmorphisms": [[f, g, fg], ...], "squares": [[a, b, ab], ...]},
      "compose_h": {"hcells": [[M, N, MN], ...], "squares": [[a, b, ab], ...]},
      "units": {"vmorphisms": [[A, 1_A]], "hcells": [[A, U_A]],
                "identity_squares": [[M, 1_M]], "unit_squares": [[f, U_f]]},
      "constraints": {"assoc": [[M, N, P, s]], "lunit": [[M, s]], "runit": [[M, s]]},
      "tensor": {...},       # optional, see TableMonoidal
      "braiding": {...},     # optional
      "companions": [...],   # optional declared companions
      "faults": [...]        # optional, passed to the lifting
    }

``compose_v`` lists ``a`` above ``b``; ``compose_h`` lists ``a`` left of ``b``.
``lunit`` is ``U ; M => M`` and ``runit`` is ``M ; U => M``.
"""

from __future__ import annotations

import json
import os
from typing import Any

from ..core import DoubleCategory, NotInvertible, Square, short
from ..monoidal import MonoidalDoubleCategory

SCHEMA_VERSION = 1


class TableError(ValueError):
    """The document does not follow the table schema."""


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    if isinstance(x, dict):
        raise TableError(f"cell names must be scalars or arrays, got {short(x)}")
    return x


def _thaw(x):
    return [_thaw(y) for y in x] if isinstance(x, tuple) else x


def _rows(block: dict, key: str, width: int, where: str) -> list[tuple]:
    rows = block.get(key, [])
    if not isinstance(rows, list):
        raise TableError(f"{where}.{key} must be an array")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != width:
            raise TableError(f"{where}.{key}: expected rows of length {width}, got {short(r)}")
        out.append(tuple(_freeze(x) for x in r))
    return out


def _table(rows: list[tuple], where: str) -> dict:
    out: dict = {}
    for r in rows:
        key, val = r[:-1], r[-1]
        key = key[0] if len(key) == 1 else key
        if key in out and out[key] != val:
            raise TableError(f"{where}: conflicting entries for {short(key)}")
        out[key] = val
    return out


class TableModel(DoubleCategory):
    """A double category read off explicit enumerations and tables."""

    def __init__(self, data: dict):
        if not isinstance(data, dict):
            raise TableError("top level must be an object")
        if data.get("schema_version") != SCHEMA_VERSION:
            raise TableError(f"unsupported schema_version {data.get('schema_version')!r}")
        self.data = data
        self.name = str(data.get("name", "table model"))
        try:
            self._build(data)
        except (KeyError, TypeError) as e:
            raise TableError(f"malformed table: {e!r}") from e

    def _build(self, d: dict):
        self._objects = tuple(_freeze(A) for A in d["objects"])
        obj = set(self._objects)
        self._v = {}
        for e in d["vmorphisms"]:
            self._v[_freeze(e["id"])] = (_freeze(e["src"]), _freeze(e["tgt"]))
        self._h = {}
        for e in d["hcells"]:
            self._h[_freeze(e["id"])] = (_freeze(e["src"]), _freeze(e["tgt"]))
        for name, cells in (("vmorphism", self._v), ("hcell", self._h)):
            for x, ends in cells.items():
                if not set(ends) <= obj:
                    raise TableError(f"{name} {short(x)} has an unknown endpoint")
        self._sq: dict = {}
        self._frames: dict = {}
        self._by_top: dict = {}
        self._by_left: dict = {}
        for e in d["squares"]:
            s = Square(_freeze(e["top"]), _freeze(e["left"]), _freeze(e["right"]), _freeze(e["bottom"]),
                       _freeze(e["id"]))
            if s.payload in self._sq:
                raise TableError(f"duplicate square id {short(s.payload)}")
            if s.top not in self._h or s.bottom not in self._h or s.left not in self._v or s.right not in self._v:
                raise TableError(f"square {short(s.payload)} has an unknown boundary cell")
            self._sq[s.payload] = s
            self._frames.setdefault(s.frame, []).append(s)
            self._by_top.setdefault(s.top, []).append(s)
            self._by_left.setdefault(s.left, []).append(s)
        self._vhom: dict = {}
        for f, ends in self._v.items():
            self._vhom.setdefault(ends, []).append(f)
        self._hhom: dict = {}
        for M, ends in self._h.items():
            self._hhom.setdefault(ends, []).append(M)

        cv, ch, un, co = d["compose_v"], d["compose_h"], d["units"], d["constraints"]
        self._vc = _table(_rows(cv, "vmorphisms", 3, "compose_v"), "compose_v.vmorphisms")
        self._svc = _table(_rows(cv, "squares", 3, "compose_v"), "compose_v.squares")
        self._hc = _table(_rows(ch, "hcells", 3, "compose_h"), "compose_h.hcells")
        self._shc = _table(_rows(ch, "squares", 3, "compose_h"), "compose_h.squares")
        self._vid = _table(_rows(un, "vmorphisms", 2, "units"), "units.vmorphisms")
        self._hunit = _table(_rows(un, "hcells", 2, "units"), "units.hcells")
        self._sid = _table(_rows(un, "identity_squares", 2, "units"), "units.identity_squares")
        self._sunit = _table(_rows(un, "unit_squares", 2, "units"), "units.unit_squares")
        self._assoc = _table(_rows(co, "assoc", 4, "constraints"), "constraints.assoc")
        self._lunit = _table(_rows(co, "lunit", 2, "constraints"), "constraints.lunit")
        self._runit = _table(_rows(co, "runit", 2, "constraints"), "constraints.runit")
        self.faults = tuple(d.get("faults", ()))
        self.declared_companions = {}
        for e in d.get("companions", []):
            f = _freeze(e["vmorphism"])
            self.declared_companions[f] = (_freeze(e["companion"]), self._get(self._sq, _freeze(e["down"]), "square"),
                                           self._get(self._sq, _freeze(e["up"]), "square"))
        self._check_total()

    def _get(self, table: dict, key, what: str):
        try:
            return table[key]
        except KeyError:
            raise TableError(f"missing {what} entry for {short(key)}") from None

    def _check_total(self):
        """Every composite and unit the structure needs must be tabulated."""
        for A in self._objects:
            self._get(self._vid, A, "units.vmorphisms")
            self._get(self._hunit, A, "units.hcells")
        for f, (A, B) in self._v.items():
            self._get(self._sunit, f, "units.unit_squares")
            for g in self.vmors_from(B):
                self._get(self._vc, (f, g), "compose_v.vmorphisms")
        for M, (A, B) in self._h.items():
            self._get(self._sid, M, "units.identity_squares")
            self._get(self._lunit, M, "constraints.lunit")
            self._get(self._runit, M, "constraints.runit")
            for N in self.hcells_from(B):
                self._get(self._hc, (M, N), "compose_h.hcells")
                for P in self.hcells_from(self._h[N][1]):
                    self._get(self._assoc, (M, N, P), "constraints.assoc")
        for a in self._sq.values():
            for b in self._frames_from_top(a.bottom):
                self._get(self._svc, (a.payload, b.payload), "compose_v.squares")
            for b in self._by_left.get(a.right, []):
                    self._get(self._shc, (a.payload, b.payload), "compose_h.squares")
        for table, what in ((self._svc, "compose_v"), (self._shc, "compose_h")):
            for v in table.values():
                self._get(self._sq, v, f"square named in {what}")

    def _frames_from_top(self, M) -> list:
        return self._by_top.get(M, [])

    # enumeration
    def objects(self):
        return self._objects

    def vmors(self, A, B):
        return self._vhom.get((A, B), [])

    def hcells(self, A, B):
        return self._hhom.get((A, B), [])

    def squares(self, top, left, right, bottom):
        return self._frames.get((top, left, right, bottom), [])

    def vsrc(self, f):
        return self._v[f][0]

    def vtgt(self, f):
        return self._v[f][1]

    def hsrc(self, M):
        return self._h[M][0]

    def htgt(self, M):
        return self._h[M][1]

    def vid(self, A):
        return self._vid[A]

    def vcomp(self, f, g):
        return self._get(self._vc, (f, g), "compose_v.vmorphisms")

    def vinverse(self, f):
        A, B = self._v[f]
        for g in self.vmors(B, A):
            if self.vcomp(f, g) == self.vid(A) and self.vcomp(g, f) == self.vid(B):
                return g
        return None

    def hunit(self, A):
        return self._hunit[A]

    def hcomp(self, M, N):
        return self._get(self._hc, (M, N), "compose_h.hcells")

    def square(self, sid) -> Square:
        return self._sq[sid]

    def sq_id(self, M):
        return self._sq[self._sid[M]]

    def sq_unit(self, f):
        return self._sq[self._sunit[f]]

    def sq_vcomp(self, a, b):
        return self._sq[self._get(self._svc, (a.payload, b.payload), "compose_v.squares")]

    def sq_hcomp(self, a, b):
        return self._sq[self._get(self._shc, (a.payload, b.payload), "compose_h.squares")]

    def sq_inverse(self, a):
        fi, gi = self.vinverse(a.left), self.vinverse(a.right)
        if fi is None or gi is None:
            raise NotInvertible(f"square {short(a.payload)} has a non-invertible side")
        for b in self.squares(a.bottom, fi, gi, a.top):
            if self.sq_vcomp(a, b) == self.sq_id(a.top) and self.sq_vcomp(b, a) == self.sq_id(a.bottom):
                return b
        raise NotInvertible(f"square {short(a.payload)} has no inverse")

    def assoc(self, M, N, P):
        return self._sq[self._assoc[(M, N, P)]]

    def src_unitor(self, M):
        return self._sq[self._lunit[M]]

    def tgt_unitor(self, M):
        return self._sq[self._runit[M]]

    def __repr__(self):
        return f"TableModel({self.name!r})"


class TableMonoidal(MonoidalDoubleCategory):
    """Tensor and braiding read from the optional ``tensor``/``braiding`` blocks.

    ``tensor`` holds ``unit`` and tables ``objects``, ``vmorphisms``, ``hcells``,
    ``squares`` (``[x, y, x (x) y]``), ``interchanger`` (``[M1, N1, M2, N2, s]``),
    ``unit_comparison`` (``[A, B, s]``) and blocks ``assoc``, ``lunit``, ``runit``
    each with ``vmorphisms`` and ``squares``.  ``braiding`` has ``vmorphisms``
    (``[A, B, f]``), ``squares`` (``[M, N, s]``) and a ``symmetric`` flag.
    """

    def __init__(self, base: TableModel):
        d = base.data.get("tensor")
        if not isinstance(d, dict):
            raise TableError("no tensor block")
        self.base, self.name = base, base.name
        try:
            self._I = _freeze(d["unit"])
            t = lambda key, w: _table(_rows(d, key, w, "tensor"), f"tensor.{key}")
            self._obj, self._vm, self._hc = t("objects", 3), t("vmorphisms", 3), t("hcells", 3)
            self._sq, self._x, self._u = t("squares", 3), t("interchanger", 5), t("unit_comparison", 3)
            c = lambda blk, key, w: _table(_rows(d[blk], key, w, f"tensor.{blk}"), f"tensor.{blk}.{key}")
            self._av, self._as = c("assoc", "vmorphisms", 4), c("assoc", "squares", 4)
            self._lv, self._ls = c("lunit", "vmorphisms", 2), c("lunit", "squares", 2)
            self._rv, self._rs = c("runit", "vmorphisms", 2), c("runit", "squares", 2)
            b = base.data.get("braiding")
            self.braided = isinstance(b, dict)
            self.symmetric = self.braided and bool(b.get("symmetric", False))
            if self.braided:
                self._bv = _table(_rows(b, "vmorphisms", 3, "braiding"), "braiding.vmorphisms")
                self._bs = _table(_rows(b, "squares", 3, "braiding"), "braiding.squares")
        except (KeyError, TypeError) as e:
            raise TableError(f"malformed tensor block: {e!r}") from e
        self._check_total()

    def _look(self, table, key, what):
        return self.base._get(table, key, what)

    def _s(self, table, key, what) -> Square:
        return self.base.square(self._look(table, key, what))

    def _check_total(self):
        m = self.base
        objs, vm, hc = m.objects(), list(m.all_vmors()), list(m.all_hcells())
        if self._I not in objs:
            raise TableError("tensor unit is not an object")
        for A in objs:
            self._look(self._lv, A, "tensor.lunit.vmorphisms")
            self._look(self._rv, A, "tensor.runit.vmorphisms")
            for B in objs:
                self.tensor_obj(A, B)
                self.unit_comparison(A, B)
                if self.braided:
                    self.braid_vmor(A, B)
                for C in objs:
                    self.assoc_vmor(A, B, C)
        for f in vm:
            for g in vm:
                self.tensor_vmor(f, g)
        for M in hc:
            self.lunit_sq(M)
            self.runit_sq(M)
            for N in hc:
                self.tensor_hcell(M, N)
                if self.braided:
                    self.braid_sq(M, N)
                for P in hc:
                    self.assoc_sq(M, N, P)
        for M1 in hc:
            for M2 in m.hcells_from(m.htgt(M1)):
                for N1 in hc:
                    for N2 in m.hcells_from(m.htgt(N1)):
                        self.interchanger(M1, N1, M2, N2)
        sq = list(m.all_squares())
        for a in sq:
            for b in sq:
                self.tensor_sq(a, b)

    def tensor_obj(self, A, B):
        return self._look(self._obj, (A, B), "tensor.objects")

    def tensor_vmor(self, f, g):
        return self._look(self._vm, (f, g), "tensor.vmorphisms")

    def tensor_hcell(self, M, N):
        return self._look(self._hc, (M, N), "tensor.hcells")

    def tensor_sq(self, s, t):
        return self._s(self._sq, (s.payload, t.payload), "tensor.squares")

    def unit_obj(self):
        return self._I

    def interchanger(self, M1, N1, M2, N2):
        return self._s(self._x, (M1, N1, M2, N2), "tensor.interchanger")

    def unit_comparison(self, A, B):
        return self._s(self._u, (A, B), "tensor.unit_comparison")

    def assoc_vmor(self, A, B, C):
        return self._look(self._av, (A, B, C), "tensor.assoc.vmorphisms")

    def assoc_sq(self, M, N, P):
        return self._s(self._as, (M, N, P), "tensor.assoc.squares")

    def lunit_vmor(self, A):
        return self._look(self._lv, A, "tensor.lunit.vmorphisms")

    def lunit_sq(self, M):
        return self._s(self._ls, M, "tensor.lunit.squares")

    def runit_vmor(self, A):
        return self._look(self._rv, A, "tensor.runit.vmorphisms")

    def runit_sq(self, M):
        return self._s(self._rs, M, "tensor.runit.squares")

    def braid_vmor(self, A, B):
        return self._look(self._bv, (A, B), "braiding.vmorphisms")

    def braid_sq(self, M, N):
        return self._s(self._bs, (M, N), "braiding.squares")


def load_table(source) -> TableModel:
    """Parse a path, JSON text or already-decoded dict into a :class:`TableModel`."""
    if not isinstance(source, (str, bytes, os.PathLike)):
        return TableModel(source)
    text = os.fsdecode(source)
    if not text.lstrip().startswith(("{", "[")):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableError(f"invalid JSON: {e}") from e
    return TableModel(data)


def table_monoidal(m: TableModel) -> TableMonoidal | None:
    return TableMonoidal(m) if "tensor" in m.data else None


def table_from_model(m: DoubleCategory, name: str | None = None) -> dict:
    """Tabulate a finite model whose universe is closed under every operation.

    Cells are renamed ``o0, v0, h0, s0, ...`` in enumeration order.
    """
    objs = list(m.objects())
    vm = list(m.all_vmors())
    hc = list(m.all_hcells())
    sq = list(m.all_squares())
    on = {A: f"o{i}" for i, A in enumerate(objs)}
    vn = {f: f"v{i}" for i, f in enumerate(vm)}
    hn = {M: f"h{i}" for i, M in enumerate(hc)}
    sn = {s: f"s{i}" for i, s in enumerate(sq)}

    def sname(s: Square) -> str:
        if s in sn:
            return sn[s]
        for t in m.squares(*s.frame):
            if m.sq_eq(s, t):
                return sn[t]
        raise TableError(f"square {short(s)} is not in the enumeration")

    data: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "name": name or m.name,
        "objects": [on[A] for A in objs],
        "vmorphisms": [{"id": vn[f], "src": on[m.vsrc(f)], "tgt": on[m.vtgt(f)]} for f in vm],
        "hcells": [{"id": hn[M], "src": on[m.hsrc(M)], "tgt": on[m.htgt(M)]} for M in hc],
        "squares": [{"id": sn[s], "top": hn[s.top], "left": vn[s.left], "right": vn[s.right],
                     "bottom": hn[s.bottom]} for s in sq],
    }
    by_top: dict = {}
    by_left: dict = {}
    for s in sq:
        by_top.setdefault(s.top, []).append(s)
        by_left.setdefault(s.left, []).append(s)
    data["compose_v"] = {
        "vmorphisms": [[vn[f], vn[g], vn[m.vcomp(f, g)]] for f in vm for g in m.vmors_from(m.vtgt(f))],
        "squares": [[sn[a], sn[b], sname(m.sq_vcomp(a, b))] for a in sq for b in by_top.get(a.bottom, [])],
    }
    data["compose_h"] = {
        "hcells": [[hn[M], hn[N], hn[m.hcomp(M, N)]] for M in hc for N in m.hcells_from(m.htgt(M))],
        "squares": [[sn[a], sn[b], sname(m.sq_hcomp(a, b))] for a in sq for b in by_left.get(a.right, [])],
    }
    data["units"] = {
        "vmorphisms": [[on[A], vn[m.vid(A)]] for A in objs],
        "hcells": [[on[A], hn[m.hunit(A)]] for A in objs],
        "identity_squares": [[hn[M], sname(m.sq_id(M))] for M in hc],
        "unit_squares": [[vn[f], sname(m.sq_unit(f))] for f in vm],
    }
    chains = [(M, N, P) for M in hc for N in m.hcells_from(m.htgt(M)) for P in m.hcells_from(m.htgt(N))]
    data["constraints"] = {
        "assoc": [[hn[M], hn[N], hn[P], sname(m.assoc(M, N, P))] for M, N, P in chains],
        "lunit": [[hn[M], sname(m.src_unitor(M))] for M in hc],
        "runit": [[hn[M], sname(m.tgt_unitor(M))] for M in hc],
    }
    return data


def dump_table(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=True)
