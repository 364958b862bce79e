"""Command-line front end.

Exit codes: 0 when every asserted invariant holds, 1 on a violation,
2 on input errors (bad model, unknown target or command, bad parameters).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Callable

from . import builders
from .braided import (
    BraidingMatrix,
    CartanDatum,
    FiniteAbelianGroup,
    YDRealization,
    braiding_from_realization,
    build_qls_bosonization,
    cartan_datum,
    classify_finite_type,
    is_quantum_linear_space,
    nichols_dimension_cartan,
    rank2_braiding,
    realize_over_cyclic,
    realize_over_group,
)
from .coalg import (
    Coalgebra,
    associated_graded,
    coalgebra_filtration_violations,
    coradical,
    coradical_filtration,
    validate_coalgebra,
)
from .comod import (
    Comodule,
    graded_envelope_check,
    injective_decomposition,
    is_completely_reducible,
    layer_coaction_violations,
    loewy_series,
    poincare,
    regular_comodule,
    socle,
    socle_in_ambient,
    validate_comodule,
)
from .errors import (
    BadParams,
    BaseMismatch,
    CofrobError,
    CoradicalNotHopfSubalgebra,
    CoradicalNotSplit,
    DimensionMismatch,
    GroupTooLarge,
    IncompleteFamily,
    ModelError,
    NotQLS,
    OrderMismatch,
    UnknownCommand,
)
from .exactla import span
from .hopf import (
    HopfAlgebra,
    basis_grouplikes,
    chevalley_criteria,
    cofrobenius_report,
    coradical_is_hopf_subalgebra,
    default_family,
    degree_zero_projection_report,
    diagram,
    diagram_checks,
    dual_hopf,
    gr_hopf,
    grouplike_family,
    hopf_socle,
    integral,
    integral_vanishing_profile,
    poincare_duality_check,
    validate_hopf,
)
from .modelfile import Model, load_model, parse_builder_spec, promote_object, serialize
from .report import Report
from .scalar import field, format_scalar, order_of_unity

INPUT_ERRORS = (ModelError, BadParams, UnknownCommand, NotQLS, OrderMismatch, GroupTooLarge,
                IncompleteFamily, CoradicalNotSplit, CoradicalNotHopfSubalgebra, BaseMismatch,
                DimensionMismatch)


class Context:
    def __init__(self, args, model: Model | None):
        self.args = args
        self.model = model

    def resolve(self, target: str | None):
        if not target:
            raise ModelError("--target is required for this command")
        if self.model is not None and target in self.model.objects:
            return self.model.objects[target]
        name, params = parse_builder_spec(target)
        if name == "rank2":
            if "x" not in params:
                return ("rank2-family", params)
            try:
                return rank2_braiding(params.get("type", "A2"), int(params["p"]), int(params["x"]),
                                      int(params.get("u", 1)))
            except (KeyError, ValueError) as exc:
                raise BadParams(f"rank2 needs type, p, x: {exc}") from None
        if name == "realization":
            try:
                grp = FiniteAbelianGroup(builders._ints(params.get("G", "2").replace("x", ",")))
                gs = builders._vectors(params["g"])
                cs = builders._vectors(params["chi"])
            except (KeyError, ValueError) as exc:
                raise BadParams(f"realization needs G, g, chi: {exc}") from None
            return YDRealization(grp, tuple(gs), tuple(cs))
        if name in ("braiding",):
            r = self.resolve("realization:" + target.partition(":")[2])
            return braiding_from_realization(r)
        if "G" in params:
            params["G"] = params["G"].replace("x", ",")
        if self.model is not None and name not in ("group_algebra", "group", "sweedler", "taft",
                                                   "qls_bosonization", "qls", "path", "random_path"):
            raise ModelError(f"unknown object {target!r}")
        return builders.build(name, params)


# --------------------------------------------------------------------------
# helpers


def _coalgebra_of(obj) -> Coalgebra:
    if isinstance(obj, HopfAlgebra):
        return obj.coalgebra
    if isinstance(obj, Coalgebra):
        return obj
    if isinstance(obj, Comodule):
        return obj.over
    raise BadParams(f"target is a {type(obj).__name__}, expected a coalgebra")


def _hopf(obj) -> HopfAlgebra:
    if not isinstance(obj, HopfAlgebra):
        raise BadParams(f"target is a {type(obj).__name__}, expected a Hopf algebra")
    return obj


def _comodule(obj) -> Comodule:
    if isinstance(obj, Comodule):
        return obj
    return regular_comodule(_coalgebra_of(obj))


def _braiding(obj) -> BraidingMatrix:
    if isinstance(obj, BraidingMatrix):
        return obj
    if isinstance(obj, YDRealization):
        return braiding_from_realization(obj)
    raise BadParams(f"target is a {type(obj).__name__}, expected a braiding")


def _vec(v) -> list:
    return [format_scalar(x) for x in v]


def _split_for(obj) -> list:
    """Decomposition of C_0 into simple pieces: group-like lines (pointed case)."""
    if isinstance(obj, HopfAlgebra):
        return default_family(obj).split()
    c = _coalgebra_of(obj)
    hint = getattr(c, "grouplikes", None)
    fam = grouplike_family(c, hint if hint is not None else basis_grouplikes(c))
    return fam.split()


def _name(obj, target) -> str:
    return getattr(obj, "name", None) or target


# --------------------------------------------------------------------------
# commands


def cmd_validate(ctx, obj, target) -> Report:
    if isinstance(obj, HopfAlgebra):
        return validate_hopf(obj)
    if isinstance(obj, Coalgebra):
        return validate_coalgebra(obj)
    if isinstance(obj, Comodule):
        return validate_comodule(obj)
    if isinstance(obj, (BraidingMatrix, YDRealization)):
        q = _braiding(obj)
        rep = Report(f"validate braiding {target}")
        rep.add("theta", q.theta)
        rep.add("orders of q_ii", q.orders())
        return rep
    raise BadParams("nothing to validate")


def cmd_coradical(ctx, obj, target) -> Report:
    c = _coalgebra_of(obj)
    c0 = coradical(c)
    rep = Report(f"coradical {_name(obj, target)}")
    rep.add("dim C_0", c0.dim)
    rep.add("dim J", c.radical.dim)
    for i, r in enumerate(c0.rows):
        rep.add(f"basis {i}", _vec(r))
    if c0.dim + c.radical.dim != c.dim:
        rep.fail("dim C_0 + dim J != dim C")
    return rep


def cmd_filtration(ctx, obj, target) -> Report:
    c = _coalgebra_of(obj)
    route = ctx.args.route or "perp"
    if route not in ("perp", "wedge"):
        raise BadParams("filtration route must be perp or wedge")
    f = coradical_filtration(c, route)
    other = coradical_filtration(c, "wedge" if route == "perp" else "perp")
    rep = Report(f"coradical filtration {_name(obj, target)} (route {route})")
    rep.add("dims", list(f.dims))
    rep.add("length", f.length)
    rep.add("routes agree", f == other)
    if f != other:
        rep.fail("perp and wedge routes disagree")
    bad = coalgebra_filtration_violations(c, f)
    if bad:
        rep.fail(f"Delta(C_n) not inside sum C_i (x) C_(n-i): {len(bad)} terms")
    return rep


def cmd_gr(ctx, obj, target) -> Report:
    c = _coalgebra_of(obj)
    gc = associated_graded(c, ctx.args.route if ctx.args.route in ("perp", "wedge") else "perp")
    rep = Report(f"associated graded {_name(obj, target)}")
    rep.add("degree dims", list(gc.degree_dims))
    rep.add("basis (basis-dependent)", "quotient representatives in degree order")
    rep.merge(validate_coalgebra(gc.coalgebra), "gr C: ")
    filt = coradical_filtration(gc.coalgebra)
    graded = all(filt.term(n) == gc.partial_sum(n) for n in range(max(filt.length, gc.top) + 1))
    rep.add("coradically graded", graded)
    if not graded:
        rep.fail("gr C is not coradically graded")
    if isinstance(obj, HopfAlgebra) and coradical_is_hopf_subalgebra(obj):
        gh = gr_hopf(obj)
        rep.merge(validate_hopf(gh), "gr H: ")
        rep.merge(degree_zero_projection_report(gh), "pi: ")
    return rep


def cmd_loewy(ctx, obj, target) -> Report:
    m = _comodule(obj)
    route = ctx.args.route or "preimage"
    if route not in ("ann", "preimage"):
        raise BadParams("loewy route must be ann or preimage")
    f = loewy_series(m, route)
    other = loewy_series(m, "preimage" if route == "ann" else "ann")
    rep = Report(f"Loewy series {_name(obj, target)} (route {route})")
    rep.add("dims", list(f.dims))
    rep.add("length", f.length)
    rep.add("routes agree", f == other)
    if f != other:
        rep.fail("ann and preimage routes disagree")
    bad = layer_coaction_violations(m)
    rep.add("rho(M_n) inside sum M_i (x) C_(n-i)", not bad)
    if bad:
        rep.fail(f"coaction leaves the Loewy filtration: {len(bad)} terms")
    if isinstance(obj, Coalgebra) or isinstance(obj, HopfAlgebra):
        if f != coradical_filtration(_coalgebra_of(obj)):
            rep.fail("Loewy series of C differs from its coradical filtration")
    return rep


def cmd_socle(ctx, obj, target) -> Report:
    m = _comodule(obj)
    s = socle(m)
    rep = Report(f"socle {_name(obj, target)}")
    rep.add("dim", s.dim)
    rep.add("completely reducible", is_completely_reducible(m))
    for i, r in enumerate(s.rows):
        rep.add(f"basis {i}", _vec(r))
    return rep


def cmd_poincare(ctx, obj, target) -> Report:
    m = _comodule(obj)
    p = poincare(m)
    rep = Report(f"Poincare series {_name(obj, target)}")
    rep.add("l(M)", list(p.coefficients))
    rep.add("palindromic", p.is_palindromic())
    if p.total != m.dim:
        rep.fail("layer dims do not sum to dim M")
    return rep


def cmd_envelopes(ctx, obj, target) -> Report:
    c = _coalgebra_of(obj)
    split = _split_for(obj)
    envs = injective_decomposition(c, split, jobs=ctx.args.jobs)
    rep = Report(f"injective envelopes {_name(obj, target)}")
    for i, (s, e) in enumerate(zip(split, envs)):
        rep.add(f"S{i}: dim S", s.dim)
        rep.add(f"S{i}: dim E(S)", e.dim)
        rep.add(f"S{i}: l(E(S))", list(poincare(e).coefficients))
        if socle_in_ambient(e) != s:
            rep.fail(f"S{i}: socle of E(S) differs from S")
    rep.merge(graded_envelope_check(c, split), "gr: ")
    return rep


def cmd_integral(ctx, obj, target) -> Report:
    h = _hopf(obj)
    side = ctx.args.side or "left"
    sp = integral(h, side)
    rep = Report(f"{side} integral {_name(obj, target)}")
    rep.add("dim", sp.dimension)
    for i, v in enumerate(sp.basis):
        rep.add(f"vector {i}", _vec(v))
    if sp.dimension != 1:
        rep.fail(f"integral space has dimension {sp.dimension}, expected 1")
    return rep


def cmd_vanishing_profile(ctx, obj, target) -> Report:
    h = _hopf(obj)
    m = integral_vanishing_profile(h)
    length = coradical_filtration(h.coalgebra).length
    rep = Report(f"integral vanishing profile {_name(obj, target)}")
    rep.add("profile m", m)
    rep.add("filtration length", length)
    rep.notes.append("observed profile is empirical; only the floor m >= 0 for H != H_0 is asserted")
    if length >= 1 and m < 0:
        rep.fail("integral does not vanish on H_0 although H != H_0")
    return rep


def cmd_hopf_socle(ctx, obj, target) -> Report:
    h = _hopf(obj)
    fam = default_family(h)
    s = hopf_socle(h, fam)
    c0 = coradical(h.coalgebra)
    rep = Report(f"Hopf socle {_name(obj, target)}")
    rep.add("dim", s.dim)
    rep.add("dim H_0", c0.dim)
    rep.add("equals H_0", s == c0)
    rep.add("closed under product and antipode", True)
    return rep


def cmd_diagram(ctx, obj, target) -> Report:
    h = _hopf(obj)
    dg = diagram(h)
    rep = Report(f"diagram {_name(obj, target)}")
    rep.add("dims R(n)", list(dg.degree_dims))
    rep.add("dim R", dg.dim)
    rep.add("top", dg.top)
    rep.merge(diagram_checks(h, dg))
    return rep


def cmd_cofrobenius(ctx, obj, target) -> Report:
    return cofrobenius_report(_hopf(obj))


def cmd_chevalley(ctx, obj, target) -> Report:
    h = _hopf(obj)
    return chevalley_criteria(h, default_family(h), default_family(dual_hopf(h)), jobs=ctx.args.jobs)


def cmd_duality_check(ctx, obj, target) -> Report:
    h = _hopf(obj)
    return poincare_duality_check(h, default_family(h), jobs=ctx.args.jobs)


def cmd_cartan(ctx, obj, target) -> Report:
    q = _braiding(obj)
    d = cartan_datum(q)
    rep = Report(f"Cartan datum {target}")
    rep.add("Cartan type", d is not None)
    if d is not None:
        for i, r in enumerate(d.a):
            rep.add(f"a[{i}]", list(r))
    return rep


def cmd_classify(ctx, obj, target) -> Report:
    d = obj if isinstance(obj, CartanDatum) else cartan_datum(_braiding(obj))
    rep = Report(f"finite type {target}")
    if d is None:
        rep.add("result", "not of Cartan type")
        return rep
    comps = classify_finite_type(d)
    if comps is None:
        rep.add("result", "NotFinite")
        return rep
    rep.add("result", [c.label for c in comps])
    for c in comps:
        rep.add(f"{c.label} vertices", list(c.vertices))
    return rep


def cmd_nichols_dim(ctx, obj, target) -> Report:
    q = _braiding(obj)
    n = nichols_dimension_cartan(q)
    rep = Report(f"Nichols dimension {target}")
    rep.add("dim", n if n is not None else "absent")
    rep.add("quantum linear space", is_quantum_linear_space(q))
    return rep


def _group_arg(ctx, default_m: int | None = None) -> list:
    g = ctx.args.group
    if g is None:
        if default_m is None:
            raise BadParams("--group is required")
        return [default_m]
    return [int(x) for x in g.replace("x", ",").split(",") if x.strip()]


def cmd_realize(ctx, obj, target) -> Report:
    cap = ctx.args.cap
    rep = Report(f"realization {target}")
    if isinstance(obj, tuple) and obj[0] == "rank2-family":
        params = obj[1]
        try:
            kind, p = params.get("type", "A2"), int(params["p"])
        except (KeyError, ValueError):
            raise BadParams("rank2 family needs type and p") from None
        m = _group_arg(ctx, p)
        if len(m) != 1:
            raise BadParams("a rank-2 family is searched over a cyclic group")
        hits = []
        for x in range(p):
            q = rank2_braiding(kind, p, x, int(params.get("u", 1)))
            kw = {"cap": cap} if cap else {}
            if realize_over_cyclic(q, m[0], **kw) is not None:
                hits.append(x)
        rep.add("type", kind)
        rep.add("p", p)
        rep.add("q_12 exponents with a realization", hits)
        rep.add("realizable", bool(hits))
        rep.add("search", "exhaustive")
        rep.add("result", "realization found" if hits else "no realization (exhaustive)")
        return rep
    q = _braiding(obj)
    # default: the cyclic group whose order is the lcm of the entry orders
    factors = _group_arg(ctx, math.lcm(*(order_of_unity(x) for r in q.q for x in r)))
    if len(factors) == 1:
        kw = {"cap": cap} if cap else {}
        w = realize_over_cyclic(q, factors[0], **kw)
        count = None
    else:
        kw = {"cap": cap} if cap else {}
        w, count = realize_over_group(q, FiniteAbelianGroup(factors), count=True, **kw)
    rep.add("group", factors)
    if w is None:
        rep.add("result", "no realization (exhaustive)")
        return rep
    rep.add("result", "realization found")
    rep.add("grouplikes", [list(g) for g in w.grouplikes])
    rep.add("characters", [list(c) for c in w.characters])
    if count is not None:
        rep.add("witness count", count)
    back = braiding_from_realization(w)
    big = field(math.lcm(back.field.conductor, q.field.conductor))
    if promote_object(back, big) != promote_object(q, big):
        rep.fail("realization does not reproduce the braiding")
    return rep


def cmd_bosonize(ctx, obj, target) -> Report:
    if isinstance(obj, HopfAlgebra):
        h = obj
    elif isinstance(obj, YDRealization):
        kw = {"cap": ctx.args.cap} if ctx.args.cap else {}
        h = build_qls_bosonization(obj, **kw)
    else:
        raise BadParams("bosonize needs a realization target")
    rep = Report(f"bosonization {target}")
    rep.add("dim", h.dim)
    rep.merge(validate_hopf(h), "validate: ")
    rep.add("coradical dim", coradical(h.coalgebra).dim)
    rep.add("coradical is Hopf subalgebra", coradical_is_hopf_subalgebra(h))
    f = coradical_filtration(h.coalgebra)
    rep.add("filtration length", f.length)
    grading = getattr(h, "grading", None)
    if grading is not None and f.length != max(grading):
        rep.fail(f"filtration length {f.length} != top degree {max(grading)}")
    return rep


def cmd_fuzz(ctx, obj, target) -> Report:
    seed = ctx.args.seed
    count = ctx.args.cap or 100
    rep = Report(f"fuzz seed={seed} count={count}")
    bad = 0
    for s in range(seed, seed + count):
        c = builders.random_path_coalgebra(s)
        problems = []
        if not validate_coalgebra(c).ok:
            problems.append("invalid")
        if coradical_filtration(c, "perp") != coradical_filtration(c, "wedge"):
            problems.append("routes differ")
        m = regular_comodule(c)
        if loewy_series(m, "ann") != loewy_series(m, "preimage"):
            problems.append("Loewy routes differ")
        if layer_coaction_violations(m):
            problems.append("Loewy filtration violated")
        gc = associated_graded(c)
        if not validate_coalgebra(gc.coalgebra).ok:
            problems.append("gr invalid")
        if problems:
            bad += 1
            rep.fail(f"seed {s} (dim {c.dim}): {', '.join(problems)}")
    rep.add("path coalgebras checked", count)
    rep.add("failures", bad)
    return rep


def cmd_dump(ctx, obj, target) -> Report:
    rep = Report(f"dump {target}")
    rep.add("model", serialize({target.split(":")[0]: obj}))
    return rep


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "coradical": cmd_coradical,
    "filtration": cmd_filtration,
    "gr": cmd_gr,
    "loewy": cmd_loewy,
    "socle": cmd_socle,
    "poincare": cmd_poincare,
    "envelopes": cmd_envelopes,
    "integral": cmd_integral,
    "vanishing-profile": cmd_vanishing_profile,
    "hopf-socle": cmd_hopf_socle,
    "diagram": cmd_diagram,
    "cofrobenius": cmd_cofrobenius,
    "chevalley": cmd_chevalley,
    "duality-check": cmd_duality_check,
    "cartan": cmd_cartan,
    "classify": cmd_classify,
    "nichols-dim": cmd_nichols_dim,
    "realize": cmd_realize,
    "bosonize": cmd_bosonize,
    "fuzz": cmd_fuzz,
    "dump": cmd_dump,
}

NO_TARGET = {"fuzz"}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cofrob", description=__doc__.splitlines()[0])
    p.add_argument("--model", help="model file")
    p.add_argument("--command", required=True, help="one of: " + ", ".join(COMMANDS))
    p.add_argument("--target", help="object name in the model, or a builder spec such as taft:N=3")
    p.add_argument("--route", choices=["perp", "wedge", "ann", "preimage"])
    p.add_argument("--side", choices=["left", "right"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=None, help="search cap, or instance count for fuzz")
    p.add_argument("--group", help="cyclic factors for realize, e.g. 7 or 3,3")
    p.add_argument("--machine-output", help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1, help="threads for per-simple subtasks")
    return p


def run(args) -> tuple[int, Report | None]:
    cmd = COMMANDS.get(args.command)
    if cmd is None:
        raise UnknownCommand(f"unknown command {args.command!r}")
    model = load_model(args.model) if args.model else None
    ctx = Context(args, model)
    obj = None if args.command in NO_TARGET else ctx.resolve(args.target)
    rep = cmd(ctx, obj, args.target)
    return (0 if rep.ok else 1), rep


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, rep = run(args)
    except INPUT_ERRORS as exc:
        print(f"error: {args.command} on {args.target}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CofrobError as exc:
        print(f"violation: {args.command} on {args.target}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.command == "dump":
        sys.stdout.write(rep.items["model"])
    else:
        sys.stdout.write(rep.to_text())
    if args.machine_output:
        try:
            with open(args.machine_output, "w", encoding="utf-8") as fh:
                fh.write(rep.to_json())
        except OSError as exc:
            print(f"error: cannot write {args.machine_output}: {exc}", file=sys.stderr)
            return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
