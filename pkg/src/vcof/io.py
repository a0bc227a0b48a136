"""JSON documents for bases, categories and the maps between them.

A file holds either one document or ``{"version": 1, "documents": [...]}``.
Every document has a ``kind`` and a ``name``; boundaries are referenced by
name, or by ``"file#name"`` across files. Structure maps are omitted over
thin bases, where they are determined by their endpoints.
"""
from __future__ import annotations

import json
import os
from itertools import product
from typing import Any, Iterable

from .bases import FinSetBase
from .bases import make_finset, make_finvec, make_tropical, make_wset
from .cofun import CofunctorTransformation, EnrichedCofunctor, identity_cofunctor
from .doublecat import Cell, CompatibleSquare, EnrichedLens, identity_lens
from .encat import EnrichedCategory, EnrichedFunctor, FunctorTransformation, identity_functor
from .errors import StructuralError, VcofError

VERSION = 1
KINDS = ("category", "functor", "cofunctor", "transformation", "cell", "square", "lens")


class DocumentError(StructuralError):
    """A file or document that cannot be parsed or resolved."""


# -- bases -------------------------------------------------------------------

def parse_base(spec) -> Any:
    if isinstance(spec, str):
        spec = {"name": spec}
    if not isinstance(spec, dict) or "name" not in spec:
        raise DocumentError(f"base must be an object with a name, got {spec!r}")
    name = spec["name"]
    if name == "finset":
        return make_finset()
    if name == "tropical":
        return make_tropical()
    if name == "wset":
        return make_wset()
    if name == "finvec":
        field = spec.get("field", "rational")
        if field == "rational":
            return make_finvec("rational")
        if field == "gf":
            try:
                return make_finvec(spec.get("prime"))
            except ValueError as e:
                raise DocumentError(str(e)) from None
        raise DocumentError(f"unknown field {field!r}")
    raise DocumentError(f"unknown base {name!r}")


def describe_base(base) -> dict:
    return base.describe()


# -- reading -----------------------------------------------------------------

def _need(doc, key, kind=dict):
    if key not in doc:
        raise DocumentError(f"document {doc.get('name', '?')!r} is missing {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(f"{key!r} in {doc.get('name', '?')!r} must be a {kind.__name__}")
    return value


def _nested(table, *keys, what="entry"):
    cur = table
    for k in keys:
        if not isinstance(cur, dict) or k not in cur:
            raise DocumentError(f"missing {what} at {'/'.join(map(str, keys))}")
        cur = cur[k]
    return cur


def _documents(data, path):
    if isinstance(data, dict) and "documents" in data:
        if data.get("version") != VERSION:
            raise DocumentError(f"{path}: unsupported version {data.get('version')!r}")
        docs = data["documents"]
        if not isinstance(docs, list):
            raise DocumentError(f"{path}: 'documents' must be a list")
        return docs
    if isinstance(data, dict):
        if data.get("version") != VERSION:
            raise DocumentError(f"{path}: unsupported version {data.get('version')!r}")
        return [data]
    raise DocumentError(f"{path}: expected a JSON object")


class Library:
    """Documents from a set of files, built into structures on demand."""

    def __init__(self):
        self.docs = {}
        self._by_bare = {}
        self._built = {}

    @classmethod
    def from_files(cls, paths: Iterable[str]) -> "Library":
        lib = cls()
        for path in paths:
            try:
                with open(path) as fh:
                    data = json.load(fh)
            except OSError as e:
                raise DocumentError(f"cannot read {path}: {e.strerror}") from None
            except json.JSONDecodeError as e:
                raise DocumentError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
            lib.add(data, path)
        return lib

    def add(self, data, path="<memory>"):
        for doc in _documents(data, path):
            if not isinstance(doc, dict):
                raise DocumentError(f"{path}: documents must be objects")
            name = _need(doc, "name", str)
            kind = _need(doc, "kind", str)
            if kind not in KINDS:
                raise DocumentError(f"{path}: unknown kind {kind!r} for {name!r}")
            keys = {f"{path}#{name}", f"{os.path.basename(path)}#{name}"}
            for key in keys:
                self.docs[key] = (doc, path)
            self._by_bare.setdefault(name, []).append(f"{path}#{name}")
        return self

    def names(self) -> list:
        return sorted(self._by_bare)

    def key(self, ref: str, here: str | None = None) -> str:
        if "#" in ref:
            if ref not in self.docs:
                raise DocumentError(f"unresolved reference {ref!r}")
            return f"{self.docs[ref][1]}#{ref.rsplit('#', 1)[1]}"
        if here is not None and f"{here}#{ref}" in self.docs:
            return f"{here}#{ref}"
        hits = self._by_bare.get(ref, [])
        if not hits:
            raise DocumentError(f"unresolved reference {ref!r}")
        if len(hits) > 1:
            raise DocumentError(f"ambiguous reference {ref!r}; qualify it as file#name")
        return hits[0]

    def kind(self, ref: str) -> str:
        return self.docs[self.key(ref)][0]["kind"]

    def get(self, ref: str, here: str | None = None):
        key = self.key(ref, here)
        if key not in self._built:
            doc, path = self.docs[key]
            try:
                self._built[key] = _BUILDERS[doc["kind"]](self, doc, path)
            except VcofError as e:
                if isinstance(e, DocumentError):
                    raise
                raise DocumentError(f"{doc['name']}: {e}") from None
        return self._built[key]

    def _ref(self, doc, key, path, kinds):
        ref = _need(doc, key, str)
        x = self.get(ref, path)
        if not isinstance(x, kinds):
            raise DocumentError(f"{doc['name']}: {key} {ref!r} has the wrong kind")
        return x


def _check_base(doc, base):
    if "base" in doc and parse_base(doc["base"]) != base:
        raise DocumentError(f"{doc['name']}: declared base does not match its boundaries")


def _load_map(base, data, dom, cod):
    if base.thin:
        return base.arrow(dom, cod)
    return base.load_morphism(data, dom, cod)


def _build_category(lib, doc, path):
    base = parse_base(_need(doc, "base", None))
    objects = _need(doc, "objects", list)
    if not all(isinstance(x, str) for x in objects):
        raise DocumentError(f"{doc['name']}: object names must be strings")
    if len(set(objects)) != len(objects):
        raise DocumentError(f"{doc['name']}: duplicate object names")
    homs = _need(doc, "hom")
    hom = {(x, y): base.load_object(_nested(homs, x, y, what="hom-object")) for x, y in product(objects, repeat=2)}
    if base.thin and "eta" not in doc and "mu" not in doc:
        return EnrichedCategory.thin(base, objects, hom, name=doc["name"])
    etas, mus = _need(doc, "eta"), _need(doc, "mu")
    I = base.unit()
    eta = {x: _load_map(base, _nested(etas, x, what="identity"), I, hom[x, x]) for x in objects}
    mu = {
        (x, y, z): _load_map(base, _nested(mus, x, y, z, what="composition"),
                             base.tensor(hom[x, y], hom[y, z]), hom[x, z])
        for x, y, z in product(objects, repeat=3)
    }
    return EnrichedCategory(base, objects, hom, eta, mu, name=doc["name"]).validate()


def _objmap(doc, A, B):
    objs = _need(doc, "objects")
    out = {}
    for a in A.objects:
        b = _nested(objs, a, what="object image")
        if b not in B.objects:
            raise DocumentError(f"{doc['name']}: object {a} maps to unknown {b!r}")
        out[a] = b
    return out


def _build_functor(lib, doc, path):
    if "identity" in doc:
        c = lib._ref(doc, "identity", path, EnrichedCategory)
        f = identity_functor(c)
        return EnrichedFunctor(c, c, f.objmap, f.homap, name=doc["name"])
    A = lib._ref(doc, "source", path, EnrichedCategory)
    B = lib._ref(doc, "target", path, EnrichedCategory)
    base = A.base
    _check_base(doc, base)
    objmap = _objmap(doc, A, B)
    if base.thin and "hom" not in doc:
        return EnrichedFunctor.thin(A, B, objmap, name=doc["name"]).validate()
    homs = _need(doc, "hom")
    homap = {
        (a, b): base.load_morphism(_nested(homs, a, b, what="hom map"), A.hom[a, b], B.hom[objmap[a], objmap[b]])
        for a, b in product(A.objects, repeat=2)
    }
    return EnrichedFunctor(A, B, objmap, homap, name=doc["name"]).validate()


def _build_cofunctor(lib, doc, path):
    if "identity" in doc:
        c = lib._ref(doc, "identity", path, EnrichedCategory)
        p = identity_cofunctor(c)
        return EnrichedCofunctor(c, c, p.objmap, p.lift, name=doc["name"])
    A = lib._ref(doc, "source", path, EnrichedCategory)
    B = lib._ref(doc, "target", path, EnrichedCategory)
    base = A.base
    _check_base(doc, base)
    objmap = _objmap(doc, A, B)
    if base.thin and "lift" not in doc:
        return EnrichedCofunctor.thin(A, B, objmap, name=doc["name"]).validate()
    shell = EnrichedCofunctor(A, B, objmap, {})
    lifts = _need(doc, "lift")
    lift = {
        (a, b): base.load_morphism(_nested(lifts, a, b, what="lifting map"),
                                   B.hom[objmap[a], b], shell.fibre_sum(a, b).total)
        for a, b in product(A.objects, B.objects)
    }
    return EnrichedCofunctor(A, B, objmap, lift, name=doc["name"]).validate()


def _components(doc, base, objects, cod_of):
    if base.thin and "components" not in doc:
        return {a: base.arrow(base.unit(), cod_of(a)) for a in objects}
    data = _need(doc, "components")
    return {a: base.load_morphism(_nested(data, a, what="component"), base.unit(), cod_of(a)) for a in objects}


def _build_transformation(lib, doc, path):
    src = lib._ref(doc, "source", path, (EnrichedFunctor, EnrichedCofunctor))
    dst = lib._ref(doc, "target", path, (EnrichedFunctor, EnrichedCofunctor))
    if type(src) is not type(dst):
        raise DocumentError(f"{doc['name']}: a transformation runs between two functors or two cofunctors")
    base = src.source.base
    _check_base(doc, base)
    if isinstance(src, EnrichedFunctor):
        B = src.target
        comps = _components(doc, base, src.source.objects, lambda a: B.hom[src(a), dst(a)])
        return FunctorTransformation(src, dst, comps, name=doc["name"]).validate()
    comps = _components(doc, base, src.source.objects, lambda a: dst.fibre_sum(a, src(a)).total)
    return CofunctorTransformation(src, dst, comps, name=doc["name"]).validate()


def _frame(lib, doc, path):
    return (
        lib._ref(doc, "top", path, EnrichedFunctor), lib._ref(doc, "bottom", path, EnrichedFunctor),
        lib._ref(doc, "left", path, EnrichedCofunctor), lib._ref(doc, "right", path, EnrichedCofunctor),
    )


def _build_cell(lib, doc, path):
    top, bottom, left, right = _frame(lib, doc, path)
    base = top.source.base
    _check_base(doc, base)
    shell = Cell(top, bottom, left, right, {})
    comps = _components(doc, base, top.source.objects, lambda a: shell.component_sum(a).total)
    return Cell(top, bottom, left, right, comps, name=doc["name"]).validate()


def _build_square(lib, doc, path):
    top, bottom, left, right = _frame(lib, doc, path)
    _check_base(doc, top.source.base)
    return CompatibleSquare(top, bottom, left, right, name=doc["name"]).validate()


def _build_lens(lib, doc, path):
    if "identity" in doc:
        c = lib._ref(doc, "identity", path, EnrichedCategory)
        l = identity_lens(c)
        return EnrichedLens(l.f, l.phi, name=doc["name"])
    f = lib._ref(doc, "functor", path, EnrichedFunctor)
    p = lib._ref(doc, "cofunctor", path, EnrichedCofunctor)
    _check_base(doc, f.source.base)
    return EnrichedLens(f, p, name=doc["name"]).validate()


_BUILDERS = {
    "category": _build_category,
    "functor": _build_functor,
    "cofunctor": _build_cofunctor,
    "transformation": _build_transformation,
    "cell": _build_cell,
    "square": _build_square,
    "lens": _build_lens,
}


def load(paths) -> Library:
    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]
    return Library.from_files([os.fspath(p) for p in paths])


# -- writing -----------------------------------------------------------------

class Bundle:
    """Collects structures and their boundaries into one self-contained file."""

    def __init__(self):
        self.documents = []
        self._entries = []
        self._taken = set()

    def _fresh(self, x, hint):
        base = hint or type(x).__name__.lower()
        n, out = 1, base
        while out in self._taken:
            n += 1
            out = f"{base}_{n}"
        self._taken.add(out)
        return out

    def add(self, x, name: str | None = None) -> str:
        for y, n in self._entries:
            if y is x:
                return n
        if name is None and isinstance(x, (EnrichedCategory, EnrichedFunctor, EnrichedCofunctor)):
            # equal boundaries under the same name are written once
            for y, n in self._entries:
                if type(y) is type(x) and y == x and y.name == x.name:
                    return n
        doc = self._dump(x)
        doc["name"] = self._fresh(x, name or getattr(x, "name", ""))
        self._entries.append((x, doc["name"]))
        self.documents.append(doc)
        return doc["name"]

    def _dump(self, x) -> dict:
        if isinstance(x, EnrichedCategory):
            return _dump_category(x)
        if isinstance(x, EnrichedFunctor):
            return _dump_functor(self, x)
        if isinstance(x, EnrichedCofunctor):
            return _dump_cofunctor(self, x)
        if isinstance(x, (FunctorTransformation, CofunctorTransformation)):
            return _dump_transformation(self, x)
        if isinstance(x, Cell):
            doc = _dump_frame(self, x, "cell")
            if not x.top.source.base.thin:
                doc["components"] = {a: x.top.source.base.dump_morphism(m) for a, m in x.components.items()}
            return doc
        if isinstance(x, CompatibleSquare):
            return _dump_frame(self, x, "square")
        if isinstance(x, EnrichedLens):
            return {"kind": "lens", "base": describe_base(x.source.base),
                    "functor": self.add(x.f), "cofunctor": self.add(x.phi)}
        raise TypeError(f"cannot serialize {type(x).__name__}")

    def to_dict(self) -> dict:
        return {"version": VERSION, "documents": self.documents}


def _dump_category(c) -> dict:
    base = c.base
    doc = {
        "kind": "category",
        "base": describe_base(base),
        "objects": list(c.objects),
        "hom": {x: {y: base.dump_object(c.hom[x, y]) for y in c.objects} for x in c.objects},
    }
    if isinstance(base, FinSetBase) and all(h.names is not None for h in c.hom.values()):
        doc["hom"] = {x: {y: list(c.hom[x, y].names) for y in c.objects} for x in c.objects}
    if not base.thin:
        doc["eta"] = {x: base.dump_morphism(c.eta[x]) for x in c.objects}
        doc["mu"] = {
            x: {y: {z: base.dump_morphism(c.mu[x, y, z]) for z in c.objects} for y in c.objects}
            for x in c.objects
        }
    return doc


def _dump_functor(bundle, f) -> dict:
    base = f.source.base
    doc = {
        "kind": "functor", "base": describe_base(base),
        "source": bundle.add(f.source), "target": bundle.add(f.target),
        "objects": dict(f.objmap),
    }
    if not base.thin:
        doc["hom"] = {a: {b: base.dump_morphism(f.homap[a, b]) for b in f.source.objects} for a in f.source.objects}
    return doc


def _dump_cofunctor(bundle, p) -> dict:
    base = p.source.base
    doc = {
        "kind": "cofunctor", "base": describe_base(base),
        "source": bundle.add(p.source), "target": bundle.add(p.target),
        "objects": dict(p.objmap),
    }
    if not base.thin:
        doc["lift"] = {a: {b: base.dump_morphism(p.lift[a, b]) for b in p.target.objects} for a in p.source.objects}
    return doc


def _dump_transformation(bundle, t) -> dict:
    if isinstance(t, FunctorTransformation):
        src, dst = t.f, t.g
    else:
        src, dst = t.phi, t.psi
    base = src.source.base
    doc = {"kind": "transformation", "base": describe_base(base), "source": bundle.add(src), "target": bundle.add(dst)}
    if not base.thin:
        doc["components"] = {a: base.dump_morphism(m) for a, m in t.components.items()}
    return doc


def _dump_frame(bundle, x, kind) -> dict:
    return {
        "kind": kind, "base": describe_base(x.top.source.base),
        "top": bundle.add(x.top), "bottom": bundle.add(x.bottom),
        "left": bundle.add(x.left), "right": bundle.add(x.right),
    }


def bundle(*structures, names=None) -> dict:
    b = Bundle()
    for i, x in enumerate(structures):
        b.add(x, None if names is None else names[i])
    return b.to_dict()


def dumps(data) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
