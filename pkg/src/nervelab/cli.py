"""Command-line driver and the line-oriented workspace file formats.

Formats (kind tags: twocat, category, monoidal, functor, transformation,
diagram).  Every file starts with ``kind <tag> version 1``; the remaining
lines are declarations, ``#`` starts a comment.  Identity cells are implicit
and referenced in table lines as ``id:x`` and ``id2:u``.  The canonical form
sorts declarations lexicographically, uses single spaces and omits every
table entry that the unit laws force.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures  # noqa: F401  (handy when driving from python -i)
from .errors import (
    NerveLabError,
    ParseError,
    UnknownKind,
    ValidationError,
)
from .grothendieck import (
    GrothendieckCategory,
    Natural2,
    TwoDiagram,
    grothendieck,
    validate_two_diagram,
)
from .invariants import homology, homology_compare, pi0
from .nerves import (
    double_nerve,
    geometric_nerve,
    nerve_category,
)
from .simplicial import (
    codiagonal_wbar,
    diag,
    audit_bisimplicial,
    audit_simplicial,
    validate_simplicial_map,
    zisman_eta,
)
from .twocat import (
    Category,
    MonoidalCategory,
    TwoCategory,
    TwoFunctor,
    as_two_category,
    validate_category,
    validate_monoidal,
    validate_two_category,
    validate_two_functor,
)

FORMAT_VERSION = "1"


# ---------------------------------------------------------------------------
# cell-token syntax


def _fmt_cell(c):
    if isinstance(c, tuple) and len(c) == 2 and c[0] == "id":
        return "id:" + _fmt_cell(c[1])
    if isinstance(c, tuple) and len(c) == 2 and c[0] == "id2":
        return "id2:" + _fmt_cell(c[1])
    return str(c)


def _parse_cell(token):
    if token.startswith("id2:"):
        return ("id2", _parse_cell(token[4:]))
    if token.startswith("id:"):
        return ("id", _parse_cell(token[3:]))
    return token


def _lines(path):
    out = []
    for no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def _head(path, lines):
    if not lines:
        raise ParseError("empty file", 1)
    if lines[0][1][:1] != ["kind"]:
        raise ParseError("missing 'kind <tag> version 1' header", lines[0][0])
    no, toks = lines[0]
    if len(toks) != 4 or toks[2] != "version":
        raise ParseError("malformed header", no)
    if toks[3] != FORMAT_VERSION:
        raise ParseError(f"unsupported version {toks[3]}", no)
    return toks[1], lines[1:]


# ---------------------------------------------------------------------------
# parsers per kind


def _parse_category_lines(lines, name):
    objects, arrows, comp = [], {}, {}
    extra = []
    for no, t in lines:
        if t[0] == "object" and len(t) == 2:
            objects.append(t[1])
        elif t[0] == "arrow" and len(t) == 6 and t[2] == ":" and t[4] == "->":
            arrows[t[1]] = (t[3], t[5])
        elif t[0] == "comp" and len(t) == 6 and t[2] == "." and t[4] == "=":
            comp[(_parse_cell(t[1]), _parse_cell(t[3]))] = _parse_cell(t[5])
        else:
            extra.append((no, t))
    return Category(objects, arrows, comp, name=name), extra


def parse_category(lines, name):
    cat, extra = _parse_category_lines(lines, name)
    if extra:
        raise ParseError(f"unknown declaration {' '.join(extra[0][1])!r}", extra[0][0])
    validate_category(cat).raise_if_failed()
    return cat


def parse_monoidal(lines, name):
    cat, extra = _parse_category_lines(lines, name)
    unit = None
    tens_o, tens_a = {}, {}
    for no, t in extra:
        if t[0] == "unit" and len(t) == 2:
            unit = t[1]
        elif t[0] == "tensor-obj" and len(t) == 6 and t[2] == "x" and t[4] == "=":
            tens_o[(t[1], t[3])] = t[5]
        elif t[0] == "tensor-arr" and len(t) == 6 and t[2] == "x" and t[4] == "=":
            tens_a[(_parse_cell(t[1]), _parse_cell(t[3]))] = _parse_cell(t[5])
        else:
            raise ParseError(f"unknown declaration {' '.join(t)!r}", no)
    if unit is None:
        raise ParseError("monoidal file lacks a unit declaration", 1)
    M = MonoidalCategory(cat, unit, tens_o, tens_a, name=name)
    validate_monoidal(M).raise_if_failed()
    return M


def parse_twocat(lines, name):
    objects = []
    cells1, cells2, hcomp1, vcomp, hcomp2 = {}, {}, {}, {}, {}
    for no, t in lines:
        if t[0] == "object" and len(t) == 2:
            objects.append(t[1])
        elif t[0] == "cell1" and len(t) == 6 and t[2] == ":" and t[4] == "->":
            cells1[t[1]] = (t[3], t[5])
        elif t[0] == "cell2" and len(t) == 6 and t[2] == ":" and t[4] == "=>":
            cells2[t[1]] = (_parse_cell(t[3]), _parse_cell(t[5]))
        elif t[0] == "hcomp1" and len(t) == 6 and t[2] == "o" and t[4] == "=":
            hcomp1[(_parse_cell(t[1]), _parse_cell(t[3]))] = _parse_cell(t[5])
        elif t[0] == "vcomp" and len(t) == 6 and t[2] == "." and t[4] == "=":
            vcomp[(_parse_cell(t[1]), _parse_cell(t[3]))] = _parse_cell(t[5])
        elif t[0] == "hcomp2" and len(t) == 6 and t[2] == "o" and t[4] == "=":
            hcomp2[(_parse_cell(t[1]), _parse_cell(t[3]))] = _parse_cell(t[5])
        else:
            raise ParseError(f"unknown declaration {' '.join(t)!r}", no)
    try:
        C = TwoCategory(objects, cells1, cells2, hcomp1, vcomp, hcomp2, name=name)
    except (ValueError, KeyError) as exc:
        raise ParseError(str(exc), 1)
    validate_two_category(C).raise_if_failed()
    return C


def parse_functor(lines, name, base_dir):
    src_path = tgt_path = None
    omap, map1, map2 = {}, {}, {}
    for no, t in lines:
        if t[0] == "source" and len(t) == 2:
            src_path = t[1]
        elif t[0] == "target" and len(t) == 2:
            tgt_path = t[1]
        elif t[0] == "obj" and len(t) == 4 and t[2] == "=":
            omap[t[1]] = t[3]
        elif t[0] == "cell1" and len(t) == 4 and t[2] == "=":
            map1[_parse_cell(t[1])] = _parse_cell(t[3])
        elif t[0] == "cell2" and len(t) == 4 and t[2] == "=":
            map2[_parse_cell(t[1])] = _parse_cell(t[3])
        else:
            raise ParseError(f"unknown declaration {' '.join(t)!r}", no)
    if src_path is None or tgt_path is None:
        raise ParseError("functor file needs source and target", 1)
    src = load_two_category(base_dir / src_path)
    tgt = load_two_category(base_dir / tgt_path)
    for x in src.objects:
        omap.setdefault(x, None)
        if omap[x] is None:
            raise ParseError(f"object {x!r} has no image", 1)
    for u in src.cells1:
        if src.is_identity1(u):
            map1[u] = tgt.id1[omap[src.src1(u)]]
        elif u not in map1:
            raise ParseError(f"1-cell {u!r} has no image", 1)
    for a in src.cells2:
        if src.is_identity2(a):
            map2[a] = tgt.id2[map1[src.src2(a)]]
        elif a not in map2:
            raise ParseError(f"2-cell {a!r} has no image", 1)
    F = TwoFunctor(src, tgt, omap, map1, map2, name=name)
    validate_two_functor(F).raise_if_failed()
    return F


def parse_diagram(lines, name, base_dir):
    base_path = None
    fibre_paths = {}
    pull_tables = {}
    alpha_tables = {}
    zeta_tables = {}
    for no, t in lines:
        if t[0] == "base" and len(t) == 2:
            base_path = t[1]
        elif t[0] == "fibre" and len(t) == 4 and t[2] == "=":
            fibre_paths[t[1]] = t[3]
        elif t[0] == "pull" and len(t) == 6 and t[2] in ("obj", "cell1", "cell2") and t[4] == "=":
            pull_tables.setdefault(_parse_cell(t[1]), {}).setdefault(t[2], {})[
                _parse_cell(t[3])] = _parse_cell(t[5])
        elif t[0] == "alpha" and len(t) == 6 and t[2] == "at" and t[4] == "=":
            alpha_tables.setdefault(_parse_cell(t[1]), {})[_parse_cell(t[3])] = _parse_cell(t[5])
        elif t[0] == "zeta" and len(t) == 8 and t[2] == "o" and t[4] == "at" and t[6] == "=":
            zeta_tables.setdefault((_parse_cell(t[1]), _parse_cell(t[3])), {})[
                _parse_cell(t[5])] = _parse_cell(t[7])
        else:
            raise ParseError(f"unknown declaration {' '.join(t)!r}", no)
    if base_path is None:
        raise ParseError("diagram file needs a base", 1)
    base = load_two_category(base_dir / base_path)
    fibres = {}
    for x in base.objects:
        if x not in fibre_paths:
            raise ParseError(f"no fibre declared for object {x!r}", 1)
        fibres[x] = load_two_category(base_dir / fibre_paths[x])
    pull1 = {}
    for u, (y, x) in base.cells1.items():
        if base.is_identity1(u):
            continue
        tab = pull_tables.get(u)
        if tab is None:
            raise ParseError(f"no pull tables for 1-cell {u!r}", 1)
        Fy, Fx = fibres[y], fibres[x]
        omap = dict(tab.get("obj", {}))
        map1 = dict(tab.get("cell1", {}))
        map2 = dict(tab.get("cell2", {}))
        for a in Fx.objects:
            if a not in omap:
                raise ParseError(f"pull {u!r} misses object {a!r}", 1)
        for c in Fx.cells1:
            if Fx.is_identity1(c):
                map1[c] = Fy.id1[omap[Fx.src1(c)]]
        for c in Fx.cells2:
            if Fx.is_identity2(c):
                map2[c] = Fy.id2[map1[Fx.src2(c)]]
        F = TwoFunctor(Fx, Fy, omap, map1, map2, name=f"({u})*")
        validate_two_functor(F).raise_if_failed()
        pull1[u] = F
    D = TwoDiagram(base, fibres, pull1, name=name)
    for a, comps in alpha_tables.items():
        u, v = base.cells2[a]
        D.pull2[a] = Natural2(D.pull1[u], D.pull1[v], comps, name=f"({a})*")
    from .grothendieck import identity_natural
    from .twocat import compose_two_functors
    for (g, f), h in base.hcomp1.items():
        if (g, f) in D.zeta and (g, f) not in zeta_tables:
            continue
        comps = zeta_tables.get((g, f))
        if comps is None:
            # omitted zeta lines mean the strict (identity) constraint
            z = identity_natural(D.pull1[h], name="zeta")
        else:
            z = Natural2(compose_two_functors(D.pull1[f], D.pull1[g]),
                         D.pull1[h], comps, name="zeta")
        z.src = compose_two_functors(D.pull1[f], D.pull1[g])
        z.tgt = D.pull1[h]
        D.zeta[(g, f)] = z
    validate_two_diagram(D).raise_if_failed()
    return D


def parse_path(path):
    path = Path(path)
    lines = _lines(path)
    kind, rest = _head(path, lines)
    name = path.stem
    if kind == "category":
        return kind, parse_category(rest, name)
    if kind == "monoidal":
        return kind, parse_monoidal(rest, name)
    if kind == "twocat":
        return kind, parse_twocat(rest, name)
    if kind == "functor":
        return kind, parse_functor(rest, name, path.parent)
    if kind == "diagram":
        return kind, parse_diagram(rest, name, path.parent)
    if kind == "transformation":
        return kind, parse_transformation(rest, name, path.parent)
    raise UnknownKind(f"unknown kind {kind!r}")


def parse_transformation(lines, name, base_dir):
    from .twocat import LaxTransformation, two_functor_as_lax, validate_lax_transformation

    f_path = g_path = None
    direction = None
    at_obj, at_cell1 = {}, {}
    for no, t in lines:
        if t[0] == "functor-source" and len(t) == 2:
            f_path = t[1]
        elif t[0] == "functor-target" and len(t) == 2:
            g_path = t[1]
        elif t[0] == "direction" and len(t) == 2 and t[1] in ("lax", "oplax"):
            direction = t[1]
        elif t[0] == "at-obj" and len(t) == 4 and t[2] == "=":
            at_obj[t[1]] = _parse_cell(t[3])
        elif t[0] == "at-cell1" and len(t) == 4 and t[2] == "=":
            at_cell1[_parse_cell(t[1])] = _parse_cell(t[3])
        else:
            raise ParseError(f"unknown declaration {' '.join(t)!r}", no)
    if f_path is None or g_path is None or direction is None:
        raise ParseError("transformation needs functor-source, functor-target, direction", 1)
    F = parse_path(base_dir / f_path)[1]
    G = parse_path(base_dir / g_path)[1]
    lax_f = two_functor_as_lax(F)
    lax_g = two_functor_as_lax(G)
    for u in F.src.cells1:
        if F.src.is_identity1(u):
            at_cell1.setdefault(u, F.tgt.id2[at_obj[F.src.src1(u)]])
    t = LaxTransformation(direction, lax_f, lax_g, at_obj, at_cell1, name=name)
    validate_lax_transformation(t).raise_if_failed()
    return t


def load_two_category(path) -> TwoCategory:
    kind, value = parse_path(path)
    if kind == "twocat":
        return value
    if kind == "category":
        return as_two_category(value)
    if kind == "monoidal":
        from .twocat import one_object_from_monoidal
        return one_object_from_monoidal(value, name=Path(path).stem)
    raise UnknownKind(f"{path} does not describe a 2-category")


# ---------------------------------------------------------------------------
# canonical serialization


def serialize_category(cat: Category) -> str:
    decls = [f"object {x}" for x in cat.objects]
    decls += [f"arrow {a} : {s} -> {t}" for a, (s, t) in cat.arrows.items()
              if not cat.is_identity(a)]
    for (g, f), h in cat.comp.items():
        if cat.is_identity(g) or cat.is_identity(f):
            continue
        decls.append(f"comp {_fmt_cell(g)} . {_fmt_cell(f)} = {_fmt_cell(h)}")
    return "\n".join([f"kind category version {FORMAT_VERSION}"] + sorted(decls)) + "\n"


def serialize_monoidal(M: MonoidalCategory) -> str:
    cat = M.category
    decls = [f"object {x}" for x in cat.objects]
    decls += [f"arrow {a} : {s} -> {t}" for a, (s, t) in cat.arrows.items()
              if not cat.is_identity(a)]
    for (g, f), h in cat.comp.items():
        if cat.is_identity(g) or cat.is_identity(f):
            continue
        decls.append(f"comp {_fmt_cell(g)} . {_fmt_cell(f)} = {_fmt_cell(h)}")
    decls.append(f"unit {M.unit}")
    decls += [f"tensor-obj {a} x {b} = {c}" for (a, b), c in M.tensor_obj.items()]
    decls += [f"tensor-arr {_fmt_cell(f)} x {_fmt_cell(g)} = {_fmt_cell(h)}"
              for (f, g), h in M.tensor_arr.items()]
    return "\n".join([f"kind monoidal version {FORMAT_VERSION}"] + sorted(decls)) + "\n"


def serialize_twocat(C: TwoCategory) -> str:
    decls = [f"object {x}" for x in C.objects]
    decls += [f"cell1 {u} : {s} -> {t}" for u, (s, t) in C.cells1.items()
              if not C.is_identity1(u)]
    decls += [f"cell2 {a} : {_fmt_cell(s)} => {_fmt_cell(t)}"
              for a, (s, t) in C.cells2.items() if not C.is_identity2(a)]
    for (g, f), h in C.hcomp1.items():
        if C.is_identity1(g) or C.is_identity1(f):
            continue
        decls.append(f"hcomp1 {_fmt_cell(g)} o {_fmt_cell(f)} = {_fmt_cell(h)}")
    for (b, a), c in C.vcomp.items():
        if C.is_identity2(b) or C.is_identity2(a):
            continue
        decls.append(f"vcomp {_fmt_cell(b)} . {_fmt_cell(a)} = {_fmt_cell(c)}")
    for (b, a), c in C.hcomp2.items():
        if C.is_identity2(b) and C.is_identity2(a):
            continue
        if C.is_identity2(b) and C.is_identity1(C.src2(b)):
            continue
        if C.is_identity2(a) and C.is_identity1(C.src2(a)):
            continue
        decls.append(f"hcomp2 {_fmt_cell(b)} o {_fmt_cell(a)} = {_fmt_cell(c)}")
    return "\n".join([f"kind twocat version {FORMAT_VERSION}"] + sorted(decls)) + "\n"


# ---------------------------------------------------------------------------
# reports


class Reporter:
    def __init__(self):
        self.failed = False
        self.out = []

    def ok(self, msg):
        self.out.append(f"OK {msg}")

    def info(self, msg):
        self.out.append(f"INFO {msg}")

    def fail(self, msg):
        self.failed = True
        self.out.append(f"FAIL {msg}")

    def report(self, rep):
        if rep.ok:
            self.ok(f"{rep.subject or 'check'} passed")
        else:
            for f in sorted(map(str, rep.findings)):
                self.fail(f)

    def emit(self):
        print("\n".join(self.out))
        return 1 if self.failed else 0


def _homology_lines(r, S, label):
    h = homology(S)
    r.info(f"{label} simplex counts {S.counts()} nondegenerate {S.nondegenerate_counts()}")
    r.info(f"{label} pi0 = {pi0(S)}")
    r.info(f"{label} {h}")


def _spec_simplicial(spec, cap, budget):
    if spec == "point":
        from .simplicial import point
        return point(cap)
    if ":" not in spec:
        raise UnknownKind(f"bad construction spec {spec!r} (want kind:path)")
    how, path = spec.split(":", 1)
    if how == "gnerve":
        return geometric_nerve(load_two_category(path), cap, budget)
    if how == "dnerve":
        return diag(double_nerve(load_two_category(path), cap))
    if how == "nerve":
        kind, value = parse_path(path)
        if kind != "category":
            raise UnknownKind(f"nerve: expects a category file, got {kind}")
        return nerve_category(value, cap)
    raise UnknownKind(f"unknown construction {how!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    r = Reporter()
    kind, value = parse_path(args.path)
    r.ok(f"parsed {args.path} as kind {kind}")
    r.ok(f"{kind} {Path(args.path).stem!r} is valid")
    return r.emit()


def cmd_nerve(args):
    r = Reporter()
    kind, value = parse_path(args.path)
    if kind != "category":
        r.fail(f"nerve expects a category file, got {kind}")
        return r.emit()
    S = nerve_category(value, args.cap)
    rep = audit_simplicial(S)
    r.report(rep)
    if args.homology:
        _homology_lines(r, S, "nerve")
    else:
        r.info(f"nerve simplex counts {S.counts()}")
    return r.emit()


def cmd_gnerve(args):
    r = Reporter()
    C = load_two_category(args.path)
    S = geometric_nerve(C, args.cap, args.budget)
    r.report(audit_simplicial(S))
    if args.homology:
        _homology_lines(r, S, "gnerve")
    else:
        r.info(f"gnerve simplex counts {S.counts()}")
    return r.emit()


def cmd_dnerve(args):
    r = Reporter()
    C = load_two_category(args.path)
    S = double_nerve(C, args.cap)
    r.report(audit_bisimplicial(S))
    counts = {(p, q): len(S.at(p, q)) for p in range(args.cap + 1) for q in range(args.cap + 1)}
    r.info("double nerve cell counts " +
           " ".join(f"({p},{q})={counts[(p, q)]}" for p in range(args.cap + 1)
                    for q in range(args.cap + 1)))
    return r.emit()


def cmd_diag(args):
    r = Reporter()
    C = load_two_category(args.path)
    S = diag(double_nerve(C, args.cap))
    r.report(audit_simplicial(S))
    if args.homology:
        _homology_lines(r, S, "diag")
    else:
        r.info(f"diag simplex counts {S.counts()}")
    return r.emit()


def cmd_wbar(args):
    r = Reporter()
    C = load_two_category(args.path)
    S = codiagonal_wbar(double_nerve(C, args.cap))
    r.report(audit_simplicial(S))
    if args.homology:
        _homology_lines(r, S, "wbar")
    else:
        r.info(f"wbar simplex counts {S.counts()}")
    return r.emit()


def cmd_eta(args):
    r = Reporter()
    C = load_two_category(args.path)
    NN = double_nerve(C, args.cap)
    D = diag(NN)
    W = codiagonal_wbar(NN)
    eta = zisman_eta(NN, W, D)
    r.report(validate_simplicial_map(eta))
    if args.homology:
        rep = homology_compare(D, W, via=eta)
        for line in rep.lines():
            (r.ok if line.startswith("OK") else r.fail)(line[line.index(" ") + 1:])
    return r.emit()


def cmd_fibre(args):
    from .fibres import edge_simplex, fibre_over, fibre_under, simplex_fibre

    r = Reporter()
    kind, F = parse_path(args.path)
    if kind != "functor":
        r.fail(f"fibre expects a functor file, got {kind}")
        return r.emit()
    side = "under" if args.under else "over"
    if args.simplex is not None:
        z = edge_simplex(F.tgt, _parse_cell(args.simplex))
        fib = simplex_fibre(F, z, side, args.budget)
    elif args.at is not None:
        fib = (fibre_under if side == "under" else fibre_over)(F, args.at, args.budget)
    else:
        r.fail("need --at OBJECT or --simplex CELL1")
        return r.emit()
    r.report(validate_two_category(fib.cat))
    r.info(f"fibre counts {fib.cat.counts()}")
    if args.homology:
        S = geometric_nerve(fib.cat, args.cap, args.budget)
        _homology_lines(r, S, "fibre gnerve")
    return r.emit()


def cmd_comma(args):
    from .fibres import comma_over_object, comma_under_object

    r = Reporter()
    C = load_two_category(args.path)
    if args.under is not None:
        fib = comma_under_object(C, args.under, args.budget)
        label = f"{args.under}//C"
    elif args.over is not None:
        fib = comma_over_object(C, args.over, args.budget)
        label = f"C//{args.over}"
    else:
        r.fail("need --under OBJECT or --over OBJECT")
        return r.emit()
    r.report(validate_two_category(fib.cat))
    r.info(f"{label} counts {fib.cat.counts()}")
    if args.homology:
        S = geometric_nerve(fib.cat, args.cap, args.budget)
        _homology_lines(r, S, label)
    return r.emit()


def cmd_grothendieck(args):
    r = Reporter()
    kind, D = parse_path(args.path)
    if kind != "diagram":
        r.fail(f"grothendieck expects a diagram file, got {kind}")
        return r.emit()
    G = grothendieck(D)
    r.report(validate_two_category(G.cat))
    r.info(f"total 2-category counts {G.cat.counts()}")
    if args.homology:
        S = geometric_nerve(G.cat, args.cap, args.budget)
        _homology_lines(r, S, "gnerve of total")
    return r.emit()


def cmd_hocolim(args):
    from .hocolim import hocolim_two_functor
    from .nerves import audit_simplicial_category

    r = Reporter()
    kind, D = parse_path(args.path)
    if kind != "diagram":
        r.fail(f"hocolim expects a diagram file, got {kind}")
        return r.emit()
    SC = hocolim_two_functor(D, args.cap)
    r.report(audit_simplicial_category(SC))
    r.info("level sizes " + " ".join(
        f"{n}:{len(L.objects)}/{len(L.arrows)}" for n, L in enumerate(SC.levels)))
    return r.emit()


def cmd_thomason(args):
    from .hocolim import thomason_iso_i, thomason_iso_ii

    r = Reporter()
    kind, D = parse_path(args.path)
    if kind != "diagram":
        r.fail(f"thomason expects a diagram file, got {kind}")
        return r.emit()
    cmp_ = (thomason_iso_i if args.variant == "i" else thomason_iso_ii)(D, args.cap, args.budget)
    ok = validate_simplicial_map(cmp_.forward).ok and \
        validate_simplicial_map(cmp_.backward).ok and \
        cmp_.forward.is_bijection_levelwise() and cmp_.round_trip_exact()
    if ok:
        r.ok(f"bijection verified at all dimensions <= {args.cap}")
    else:
        r.fail("bijection check failed")
    return r.emit()


def cmd_homology(args):
    r = Reporter()
    S = _spec_simplicial(args.spec, args.cap, args.budget)
    r.report(audit_simplicial(S))
    _homology_lines(r, S, args.spec)
    return r.emit()


def cmd_compare(args):
    r = Reporter()
    S = _spec_simplicial(args.a, args.cap, args.budget)
    T = _spec_simplicial(args.b, args.cap, args.budget)
    rep = homology_compare(S, T)
    for line in rep.lines():
        (r.ok if line.startswith("OK") else r.fail)(line[line.index(" ") + 1:])
    if rep.groups_agree:
        r.ok(f"agree through degree {args.cap - 1}")
    else:
        r.fail("homology groups disagree")
    return r.emit()


def cmd_audit_theorem_b(args):
    from .fibres import audit_theorem_b

    r = Reporter()
    kind, F = parse_path(args.path)
    if kind != "functor":
        r.fail(f"audit-theorem-b expects a functor file, got {kind}")
        return r.emit()
    audit = audit_theorem_b(F, args.cap, args.budget)
    for line in audit.lines():
        tag, rest = line.split(" ", 1)
        {"OK": r.ok, "INFO": r.info, "FAIL": r.fail}[tag](rest)
    return r.emit()


def main(argv=None):
    ap = argparse.ArgumentParser(prog="nervelab",
                                 description="simplicial models of finite 2-categories")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        p.add_argument("path" if not flags.get("spec") else "spec")
        p.add_argument("--cap", type=int, default=4)
        p.add_argument("--budget", type=int, default=10 ** 6,
                       help="enumeration budget (candidate cells)")
        if flags.get("homology"):
            p.add_argument("--homology", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate)
    add("nerve", cmd_nerve, homology=True)
    add("gnerve", cmd_gnerve, homology=True)
    add("dnerve", cmd_dnerve)
    add("diag", cmd_diag, homology=True)
    add("wbar", cmd_wbar, homology=True)
    add("eta", cmd_eta, homology=True)
    p = add("fibre", cmd_fibre, homology=True)
    p.add_argument("--over", action="store_true")
    p.add_argument("--under", action="store_true")
    p.add_argument("--at")
    p.add_argument("--simplex")
    p = add("comma", cmd_comma, homology=True)
    p.add_argument("--under")
    p.add_argument("--over")
    add("grothendieck", cmd_grothendieck, homology=True)
    add("hocolim", cmd_hocolim)
    p = add("thomason", cmd_thomason)
    p.add_argument("--variant", choices=("i", "ii"), required=True)
    add("homology", cmd_homology, spec=True)
    p = sub.add_parser("compare")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(fn=cmd_compare)
    add("audit-theorem-b", cmd_audit_theorem_b)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except NerveLabError as exc:
        print(f"FAIL {exc}")
        return 1
    except OSError as exc:
        print(f"FAIL {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
