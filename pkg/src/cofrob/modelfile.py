"""Plain-text model files.

One declaration per line; ``#`` starts a comment.  Scalars take the rest of
the line and use ``z`` for zeta_N of the declared field::

    field 3
    coalgebra C dim 2
      delta 0 0 0 1
      counit 0 1
    end
    hopf H dim 4          # same lines as coalgebra, plus
      mult k i j S        # e_i e_j has coefficient S on e_k
      unit k S
      antipode r c S      # S(e_c) has coefficient S on e_r
      grouplike t k S     # optional hints, t-th vector
      dualgrouplike t k S
    end
    comodule M over C dim 1
      rho k i j S
    end
    braiding B theta 2
      q i j S
    end
    realization R group 3
      grouplike i 1
      character j 2
    end
    build T taft N=3

Everything is promoted to one global field: the lcm of the declared
conductor and the fields of all built objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from . import builders
from .braided import BraidingMatrix, FiniteAbelianGroup, YDRealization
from .coalg import Algebra, Coalgebra
from .comod import Comodule
from .errors import CofrobError, ModelError
from .exactla import Matrix
from .hopf import HopfAlgebra
from .scalar import CycloField, field, format_scalar, parse_scalar, promote

__all__ = ["Model", "parse_model", "load_model", "serialize", "promote_object", "parse_builder_spec"]


@dataclass
class Model:
    conductor: int = 1
    objects: dict = dc_field(default_factory=dict)

    @property
    def field(self) -> CycloField:
        return field(self.conductor)

    def get(self, name: str):
        try:
            return self.objects[name]
        except KeyError:
            raise ModelError(f"unknown object {name!r}") from None


# --------------------------------------------------------------------------
# promotion of whole objects


def _p(x, fld):
    return promote(x, fld) if hasattr(x, "field") else fld(x)


def promote_coalgebra(c: Coalgebra, fld: CycloField) -> Coalgebra:
    if c.field is fld:
        return c
    delta = [{ij: _p(s, fld) for ij, s in r.items()} for r in c.delta]
    return Coalgebra(fld, c.dim, delta, [_p(x, fld) for x in c.counit], name=c.name)


def promote_algebra(a: Algebra, fld: CycloField) -> Algebra:
    if a.field is fld:
        return a
    mult = {ij: {k: _p(s, fld) for k, s in r.items()} for ij, r in a.mult.items()}
    return Algebra(fld, a.dim, mult, [_p(x, fld) for x in a.unit], name=a.name)


def promote_object(obj, fld: CycloField):
    if isinstance(obj, Coalgebra):
        return promote_coalgebra(obj, fld)
    if isinstance(obj, HopfAlgebra):
        if obj.field is fld:
            return obj
        ant = Matrix(fld, [[_p(x, fld) for x in row] for row in obj.antipode.entries])
        h = HopfAlgebra(promote_coalgebra(obj.coalgebra, fld), promote_algebra(obj.algebra, fld), ant,
                        name=obj.name, degrees=obj.degrees)
        for attr in ("grouplikes", "dual_grouplikes"):
            vecs = getattr(obj, attr)
            setattr(h, attr, None if vecs is None else [[_p(x, fld) for x in v] for v in vecs])
        for attr in ("grading", "basis_labels", "realization"):
            if hasattr(obj, attr):
                setattr(h, attr, getattr(obj, attr))
        return h
    if isinstance(obj, BraidingMatrix):
        return BraidingMatrix(tuple(tuple(_p(x, fld) for x in r) for r in obj.q))
    return obj


# --------------------------------------------------------------------------
# parsing


def parse_builder_spec(spec: str) -> tuple[str, dict]:
    """'taft:N=3' or 'qls:G=3,theta=2' -> (builder, params).

    A piece without '=' continues the previous value, so 'group:G=2,3' keeps G = '2,3'.
    """
    name, _, rest = spec.partition(":")
    params = {}
    key = None
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            if key is None:
                raise ModelError(f"builder parameter {part!r} is not key=value")
            params[key] += "," + part
            continue
        k, v = part.split("=", 1)
        key = k.strip()
        params[key] = v.strip()
    return name.strip(), params


class _Block:
    def __init__(self, kind, name, header, lineno):
        self.kind = kind
        self.name = name
        self.header = header
        self.lineno = lineno
        self.lines = []


def parse_model(text: str) -> Model:
    declared = None
    blocks: list = []
    builds: list = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if cur is not None:
            if head == "end":
                blocks.append(cur)
                cur = None
            else:
                cur.lines.append((lineno, words))
            continue
        if head == "field":
            if declared is not None:
                raise ModelError(f"line {lineno}: field declared twice")
            try:
                declared = int(words[1])
            except (IndexError, ValueError):
                raise ModelError(f"line {lineno}: 'field N' expects an integer") from None
        elif head in ("coalgebra", "hopf", "comodule", "braiding", "realization"):
            if len(words) < 2:
                raise ModelError(f"line {lineno}: {head} needs a name")
            cur = _Block(head, words[1], words[2:], lineno)
        elif head == "build":
            if len(words) < 3:
                raise ModelError(f"line {lineno}: 'build NAME BUILDER key=val ...'")
            params = {}
            for kv in words[3:]:
                if "=" not in kv:
                    raise ModelError(f"line {lineno}: builder parameter {kv!r} is not key=value")
                k, v = kv.split("=", 1)
                params[k] = v
            builds.append((lineno, words[1], words[2], params))
        else:
            raise ModelError(f"line {lineno}: unknown declaration {head!r}")
    if cur is not None:
        raise ModelError(f"line {cur.lineno}: block {cur.name!r} is missing 'end'")

    model = Model()
    built = {}
    for lineno, name, builder, params in builds:
        try:
            built[name] = builders.build(builder, params)
        except CofrobError as exc:
            raise ModelError(f"line {lineno}: {exc}") from exc
    cond = declared or 1
    for obj in built.values():
        if hasattr(obj, "field"):
            cond = math.lcm(cond, obj.field.conductor)
    for b in blocks:
        if b.kind == "realization":
            try:
                cond = math.lcm(cond, FiniteAbelianGroup([int(x) for x in b.header[1:]]).exponent)
            except ValueError:
                pass
    if cond == 2:
        cond = 1
    model.conductor = cond
    src = field(declared or 1)
    fld = model.field

    def scalar(tokens, lineno):
        try:
            return promote(parse_scalar(" ".join(tokens), src), fld)
        except (ValueError, CofrobError) as exc:
            raise ModelError(f"line {lineno}: bad scalar {' '.join(tokens)!r}: {exc}") from None

    def ints(tokens, lineno, n):
        try:
            vals = [int(t) for t in tokens[:n]]
        except ValueError:
            raise ModelError(f"line {lineno}: expected {n} integer indices") from None
        if len(vals) != n:
            raise ModelError(f"line {lineno}: expected {n} integer indices")
        return vals

    for name, obj in built.items():
        model.objects[name] = promote_object(obj, fld)

    for b in blocks:
        if b.name in model.objects:
            raise ModelError(f"line {b.lineno}: duplicate object name {b.name!r}")
        try:
            model.objects[b.name] = _build_block(b, model, fld, scalar, ints)
        except ModelError:
            raise
        except (CofrobError, IndexError) as exc:
            raise ModelError(f"block {b.name!r} (line {b.lineno}): {exc}") from exc
    return model


def _dim_from_header(b):
    h = b.header
    try:
        return int(h[h.index("dim") + 1])
    except (ValueError, IndexError):
        raise ModelError(f"line {b.lineno}: {b.kind} header needs 'dim n'") from None


def _build_block(b, model, fld, scalar, ints):
    if b.kind in ("coalgebra", "hopf"):
        n = _dim_from_header(b)
        delta, mult = [], []
        counit = [fld.zero] * n
        unit = [fld.zero] * n
        ant = [[fld.zero] * n for _ in range(n)]
        hints: dict = {"grouplike": {}, "dualgrouplike": {}}
        grading = None
        for lineno, w in b.lines:
            key = w[0]
            if key == "delta":
                k, i, j = ints(w[1:], lineno, 3)
                delta.append((k, i, j, scalar(w[4:], lineno)))
            elif key == "counit":
                (k,) = ints(w[1:], lineno, 1)
                counit[k] = scalar(w[2:], lineno)
            elif b.kind == "hopf" and key == "mult":
                k, i, j = ints(w[1:], lineno, 3)
                mult.append((k, i, j, scalar(w[4:], lineno)))
            elif b.kind == "hopf" and key == "unit":
                (k,) = ints(w[1:], lineno, 1)
                unit[k] = scalar(w[2:], lineno)
            elif b.kind == "hopf" and key == "antipode":
                r, c = ints(w[1:], lineno, 2)
                ant[r][c] = scalar(w[3:], lineno)
            elif b.kind == "hopf" and key in hints:
                t, k = ints(w[1:], lineno, 2)
                hints[key].setdefault(t, [fld.zero] * n)[k] = scalar(w[3:], lineno)
            elif b.kind == "hopf" and key == "grading":
                grading = tuple(ints(w[1:], lineno, n))
            else:
                raise ModelError(f"line {lineno}: unexpected {key!r} in {b.kind} block")
        for k, i, j, _ in delta:
            if not all(0 <= x < n for x in (k, i, j)):
                raise ModelError(f"block {b.name!r}: delta index out of range")
        c = Coalgebra(fld, n, delta, counit, name=b.name)
        if b.kind == "coalgebra":
            return c
        mdict: dict = {}
        for k, i, j, s in mult:
            if not all(0 <= x < n for x in (k, i, j)):
                raise ModelError(f"block {b.name!r}: mult index out of range")
            mdict.setdefault((i, j), {})
            mdict[(i, j)][k] = mdict[(i, j)].get(k, fld.zero) + s
        a = Algebra(fld, n, mdict, unit, name=b.name)
        h = HopfAlgebra(c, a, Matrix(fld, ant), name=b.name)
        if hints["grouplike"]:
            h.grouplikes = [hints["grouplike"][t] for t in sorted(hints["grouplike"])]
        if hints["dualgrouplike"]:
            h.dual_grouplikes = [hints["dualgrouplike"][t] for t in sorted(hints["dualgrouplike"])]
        if grading is not None:
            h.grading = grading
        return h
    if b.kind == "comodule":
        h = b.header
        if len(h) < 2 or h[0] != "over":
            raise ModelError(f"line {b.lineno}: 'comodule NAME over X dim d'")
        base = model.get(h[1])
        base = base.coalgebra if isinstance(base, HopfAlgebra) else base
        if not isinstance(base, Coalgebra):
            raise ModelError(f"line {b.lineno}: {h[1]!r} is not a coalgebra")
        d = _dim_from_header(b)
        rho = []
        for lineno, w in b.lines:
            if w[0] != "rho":
                raise ModelError(f"line {lineno}: unexpected {w[0]!r} in comodule block")
            k, i, j = ints(w[1:], lineno, 3)
            rho.append((k, i, j, scalar(w[4:], lineno)))
        return Comodule(base, d, rho, name=b.name)
    if b.kind == "braiding":
        h = b.header
        try:
            t = int(h[h.index("theta") + 1])
        except (ValueError, IndexError):
            raise ModelError(f"line {b.lineno}: 'braiding NAME theta t'") from None
        q = [[None] * t for _ in range(t)]
        for lineno, w in b.lines:
            if w[0] != "q":
                raise ModelError(f"line {lineno}: unexpected {w[0]!r} in braiding block")
            i, j = ints(w[1:], lineno, 2)
            q[i][j] = scalar(w[3:], lineno)
        if any(x is None for r in q for x in r):
            raise ModelError(f"braiding {b.name!r}: every q i j must be given")
        return BraidingMatrix(tuple(tuple(r) for r in q))
    if b.kind == "realization":
        h = b.header
        if not h or h[0] != "group":
            raise ModelError(f"line {b.lineno}: 'realization NAME group d1 d2 ...'")
        grp = FiniteAbelianGroup([int(x) for x in h[1:]])
        gs, cs = {}, {}
        for lineno, w in b.lines:
            if w[0] not in ("grouplike", "character"):
                raise ModelError(f"line {lineno}: unexpected {w[0]!r} in realization block")
            vals = ints(w[1:], lineno, 1 + len(grp.factors))
            (gs if w[0] == "grouplike" else cs)[vals[0]] = tuple(vals[1:])
        t = len(gs)
        if sorted(gs) != list(range(t)) or sorted(cs) != list(range(t)):
            raise ModelError(f"realization {b.name!r}: need grouplike/character 0..theta-1")
        return YDRealization(grp, tuple(gs[i] for i in range(t)), tuple(cs[i] for i in range(t)))
    raise ModelError(f"unknown block kind {b.kind!r}")


def load_model(path: str) -> Model:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ModelError(f"cannot read model file {path!r}: {exc}") from exc
    return parse_model(text)


# --------------------------------------------------------------------------
# serialization


def _fmt(s) -> str:
    return format_scalar(s)


def _ser_coalgebra_lines(c: Coalgebra) -> list:
    out = [f"  delta {k} {i} {j} {_fmt(s)}" for k, i, j, s in c.triples()]
    out += [f"  counit {k} {_fmt(x)}" for k, x in enumerate(c.counit) if x]
    return out


def serialize(objects: dict, conductor: int | None = None) -> str:
    """Model text for named objects; all must share one field."""
    flds = {o.field.conductor for o in objects.values() if hasattr(o, "field")}
    if conductor is None:
        conductor = math.lcm(*flds) if flds else 1
    fld = field(conductor)
    lines = [f"field {conductor}"]
    for name, obj in objects.items():
        obj = promote_object(obj, fld)
        if isinstance(obj, HopfAlgebra):
            lines.append(f"hopf {name} dim {obj.dim}")
            lines += _ser_coalgebra_lines(obj.coalgebra)
            for k, i, j, s in obj.algebra.triples():
                lines.append(f"  mult {k} {i} {j} {_fmt(s)}")
            lines += [f"  unit {k} {_fmt(x)}" for k, x in enumerate(obj.algebra.unit) if x]
            for r, row in enumerate(obj.antipode.entries):
                lines += [f"  antipode {r} {c} {_fmt(x)}" for c, x in enumerate(row) if x]
            for key, vecs in (("grouplike", obj.grouplikes), ("dualgrouplike", obj.dual_grouplikes)):
                for t, v in enumerate(vecs or []):
                    lines += [f"  {key} {t} {k} {_fmt(x)}" for k, x in enumerate(v) if x]
            if getattr(obj, "grading", None) is not None:
                lines.append("  grading " + " ".join(map(str, obj.grading)))
            lines.append("end")
        elif isinstance(obj, Coalgebra):
            lines.append(f"coalgebra {name} dim {obj.dim}")
            lines += _ser_coalgebra_lines(obj)
            lines.append("end")
        elif isinstance(obj, Comodule):
            base = obj.over.name or "C"
            lines.append(f"comodule {name} over {base} dim {obj.dim}")
            lines += [f"  rho {k} {i} {j} {_fmt(s)}" for k, i, j, s in obj.triples()]
            lines.append("end")
        elif isinstance(obj, BraidingMatrix):
            lines.append(f"braiding {name} theta {obj.theta}")
            for i, r in enumerate(obj.q):
                lines += [f"  q {i} {j} {_fmt(x)}" for j, x in enumerate(r)]
            lines.append("end")
        elif isinstance(obj, YDRealization):
            lines.append(f"realization {name} group " + " ".join(map(str, obj.group.factors)))
            for i, g in enumerate(obj.grouplikes):
                lines.append(f"  grouplike {i} " + " ".join(map(str, g)))
            for j, c in enumerate(obj.characters):
                lines.append(f"  character {j} " + " ".join(map(str, c)))
            lines.append("end")
        else:
            raise ModelError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"
