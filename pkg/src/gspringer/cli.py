"""Command-line front end: ``gspringer <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (valid input that names
something that does not exist, or data failing a mathematical condition)
and 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from typing import Optional, Sequence

import jsonschema

from . import bernstein, cuspidal, extquot, orbits, projrep, rootdata, schemas
from .partitions import Partition


class InputError(Exception):
    """Malformed command-line or JSON input (exit status 2)."""


# -- parsing helpers ---------------------------------------------------------------------


def _group_label(family: str, rank: Optional[str]) -> orbits.GroupLabel:
    try:
        if family in orbits.EXCEPTIONAL_FAMILIES:
            if rank is not None:
                raise InputError(f"{family} takes no rank")
            return orbits.GroupLabel(family)
        if rank is None:
            return orbits.GroupLabel.parse(family)
        return orbits.GroupLabel(family, int(rank))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _weyl(family: str, rank: Optional[str], pi0: str) -> rootdata.ExtendedWeylGroup:
    g = _group_label(family, rank)
    return rootdata.ExtendedWeylGroup(g.family, g.rank, pi0)


def _subset(text: Optional[str], rank: int) -> frozenset:
    """Comma-separated simple roots in Bourbaki numbering; "0" or "" is the empty set."""
    if text is None or text.strip() in ("", "0", "none"):
        return frozenset()
    try:
        idx = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"bad simple-root list {text!r}") from None
    if any(i < 1 or i > rank for i in idx):
        raise InputError(f"simple roots must lie in 1..{rank}")
    return frozenset(i - 1 for i in idx)


def _omega(g: rootdata.ExtendedWeylGroup, text: Optional[str]) -> frozenset:
    """Omega given as ';'-separated permutations (1-based); empty means trivial."""
    if not text:
        return frozenset({0})
    try:
        gens = [g.pi0_index[p] for p in rootdata.diagram_automorphisms(g.family, g.rank, text)]
    except KeyError:
        raise ValueError(f"{text} is not in pi0") from None
    return frozenset(rootdata._close_idx(g, gens))


_GROUP_RE = re.compile(r"^(S|A|Z|C|D|Q|V)(\d+)$")


def parse_group(text: str) -> projrep.FiniteGroup:
    """Named groups (S4, A5, Z6, D8 of order 8, Q8, V4), products joined by 'x', or a JSON file."""
    if text.endswith(".json"):
        doc = _load_json(text)
        schemas.check("group", doc)
        return projrep.FiniteGroup.from_json(doc)
    parts = text.split("x")
    groups = []
    for part in parts:
        m = _GROUP_RE.match(part.strip())
        if not m:
            raise InputError(f"unknown group {part!r}")
        kind, n = m.group(1), int(m.group(2))
        if kind == "S":
            groups.append(projrep.symmetric_group(n))
        elif kind == "A":
            groups.append(projrep.alternating_group(n))
        elif kind in ("Z", "C"):
            groups.append(projrep.cyclic_group(n))
        elif kind == "D":
            if n % 2:
                raise InputError("dihedral groups are named by their order, e.g. D8")
            groups.append(projrep.dihedral_group(n // 2))
        elif kind == "Q" and n == 8:
            groups.append(projrep.quaternion_group())
        elif kind == "V" and n == 4:
            groups.append(projrep.klein_four())
        else:
            raise InputError(f"unknown group {part!r}")
    out = groups[0]
    for h in groups[1:]:
        out = projrep.direct_product(out, h)
    return out


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _orbit(g: orbits.GroupLabel, text: str, tag: Optional[str]):
    if g.is_exceptional:
        return orbits.ExceptionalOrbit(text)
    try:
        return orbits.ClassicalOrbit(Partition(int(t) for t in text.split(",")), tag)
    except ValueError:
        raise InputError(f"bad partition {text!r}") from None


# -- output -------------------------------------------------------------------------------


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]
    line = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    return "\n".join([line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows])


def _emit(args, payload, headers=None, rows=None):
    if args.format == "table" and headers is not None:
        print(_table(headers, rows))
    else:
        print(json.dumps(payload, indent=2))


def _subset_str(X) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(X)) + "}"


# -- subcommands -----------------------------------------------------------------------------


def cmd_orbits(args):
    g = _group_label(args.family, args.rank)
    os_ = orbits.enumerate_orbits(g)
    if args.count:
        print(len(os_))
        return
    rows = [[str(o), str(orbits.component_group(g, o))] for o in os_]
    _emit(args, [orbits.orbit_to_json(g, o) for o in os_], ["orbit", "A(O)"], rows)


def cmd_component_group(args):
    g = _group_label(args.family, args.rank)
    if args.census:
        census = orbits.component_group_census(g)
        items = sorted(census.items(), key=lambda kv: (kv[0].order(), str(kv[0])))
        _emit(args, [{"group": orbits.descriptor_to_json(d), "count": n} for d, n in items],
              ["A(O)", "orbits"], [[str(d), n] for d, n in items])
        return
    if args.orbit is None:
        raise InputError("an orbit is required (or --census)")
    o = _orbit(g, args.orbit, args.tag)
    d = orbits.component_group(g, o)
    _emit(args, {"orbit": orbits.orbit_to_json(g, o), "component_group": orbits.descriptor_to_json(d)},
          ["orbit", "A(O)", "order"], [[str(o), str(d), d.order()]])


def cmd_cuspidal(args):
    g = _group_label(args.family, args.rank)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", cuspidal.CuspidalCountWarning)
        systems = cuspidal.cuspidal_systems(g)
    for w in caught:
        print(f"warning[cuspidal-count]: {w.message}", file=sys.stderr)
    if args.levi:
        data = cuspidal.cuspidal_levi_data(g)
        if args.count:
            print(len(data))
            return
        _emit(args, [d.to_json() for d in data], ["levi", "systems"],
              [[str(d.levi), "; ".join(f"{s.orbit}:{s.rep}" for s in d.systems)] for d in data])
        return
    if args.count:
        print(len(systems))
        return
    _emit(args, [cuspidal.local_system_to_json(g, s) for s in systems], ["orbit", "local system"],
          [[str(s.orbit), str(s.rep)] for s in systems])


def _parse_enhancement(args) -> cuspidal.Enhancement:
    try:
        sym = tuple(int(t) for t in args.sym.split(",")) if args.sym else (1,)
    except ValueError:
        raise InputError(f"bad partition {args.sym!r}") from None
    return cuspidal.Enhancement(sym, args.central)


def cmd_support(args):
    g = _group_label(args.family, args.rank)
    if not g.is_exceptional:
        raise ValueError(f"the support map is only tabulated for exceptional groups, not {g}")
    if args.all:
        pairs = cuspidal.exceptional_pairs(g)
    else:
        if args.orbit is None:
            raise InputError("an orbit is required (or --all)")
        pairs = [(orbits.ExceptionalOrbit(args.orbit), _parse_enhancement(args))]
    out, rows = [], []
    for o, rep in pairs:
        sup = cuspidal.cuspidal_support_exceptional(g, o, rep)
        out.append({"orbit": o.bala_carter, "enhancement": rep.to_json(), "support": sup.to_json()})
        rows.append([o.bala_carter, ",".join(map(str, rep.sym)), rep.central,
                     f"{sup.levi.kind}:{sup.levi.semisimple_type or '-'}", sup.orbit, str(sup.system)])
    _emit(args, out, ["orbit", "sym", "chi", "levi", "O_L", "system"], rows)


def cmd_parabolics(args):
    g = _weyl(args.family, args.rank, args.pi0)
    if args.classes:
        classes = rootdata.parabolic_pair_classes(g)
        if args.count:
            print(len(classes))
            return
        payload = [[p.to_json(g) for p in cls] for cls in classes]
        rows = [[i, len(cls), _subset_str(cls[0].X), len(cls[0].omega)] for i, cls in enumerate(classes)]
        _emit(args, payload, ["class", "size", "X", "|omega|"], rows)
        return
    pairs = rootdata.enumerate_parabolic_pairs(g)
    if args.count:
        print(len(pairs))
        return
    _emit(args, [p.to_json(g) for p in pairs], ["X", "|omega|", "levi type"],
          [[_subset_str(p.X), len(p.omega), rootdata.semisimple_type(g.roots.cartan, p.X)] for p in pairs])


def cmd_quasi_levis(args):
    g = _weyl(args.family, args.rank, args.pi0)
    if args.X is not None:
        labels = [rootdata.quasi_levi(g, _subset(args.X, g.rank))]
    else:
        labels = rootdata.quasi_levi_labels(g)
    if args.count:
        print(len(labels))
        return
    _emit(args, [lab.to_json(g) for lab in labels], ["X", "type", "|omega|"],
          [[_subset_str(lab.X), lab.semisimple_type, len(lab.omega)] for lab in labels])


def cmd_double_cosets(args):
    g = _weyl(args.family, args.rank, args.pi0)
    XM, XL = _subset(args.M, g.rank), _subset(args.L, g.rank)
    dcs = rootdata.double_cosets(g, XM, XL, _omega(g, args.omega_M), _omega(g, args.omega_L))
    if args.count:
        print(len(dcs))
        return
    payload = [{"rep": rootdata.element_json(g, d.rep), "length": d.length, "dim": d.dim, "size": d.size}
               for d in dcs]
    rows = []
    for d, p in zip(dcs, payload):
        word = "".join(f"s{i}" for i in p["rep"]["word"]) or "1"
        rows.append([word, p["rep"]["theta"], d.length, d.dim, d.size])
    _emit(args, payload, ["w", "theta", "length", "dim QwP", "size"], rows)


def cmd_mackey(args):
    g = _weyl(args.family, args.rank, args.pi0)
    P = rootdata.ParabolicPair(_subset(args.L, g.rank), _omega(g, args.omega_L))
    Q = rootdata.ParabolicPair(_subset(args.M, g.rank), _omega(g, args.omega_M))
    terms = rootdata.mackey_terms(g, P, Q)
    if args.count:
        print(len(terms))
        return
    rows = []
    for t in terms:
        word = "".join(f"s{i + 1}" for i in rootdata.reduced_word(g, t.w[0])) or "1"
        rows.append([word, _subset_str(t.levi_MwL.X), t.levi_MwL.semisimple_type,
                     len(t.parabolic_in_M), len(t.parabolic_in_wL)])
    _emit(args, [t.to_json(g) for t in terms], ["w", "M n wL", "type", "#roots M n wP", "#roots Q n wL"], rows)


def _class_json(G, ct):
    return [{"representative": c[0], "size": len(c), "order": G.element_order(c[0])} for c in ct.classes]


def cmd_chartable(args):
    G = parse_group(args.group)
    ct = projrep.character_table(G, bound=args.bound)
    values = [[str(v) for v in row] for row in ct.characters]
    payload = {"order": G.order, "exponent": ct.exponent, "classes": _class_json(G, ct), "characters": values}
    headers = ["chi"] + [f"{c[0]}({len(c)})" for c in ct.classes]
    _emit(args, payload, headers, [[f"X{i}"] + row for i, row in enumerate(values)])


def cmd_twisted_irreps(args):
    if args.group.endswith(".json"):
        doc = _load_json(args.group)
        if "group" not in doc:
            doc = {"group": doc}
        schemas.check("twisted-group", doc)
        G = projrep.FiniteGroup.from_json(doc["group"])
        kappa = projrep.Cocycle.from_json(doc["cocycle"]) if "cocycle" in doc else projrep.trivial_cocycle(G)
    elif args.group == "klein":
        G, kappa = projrep.klein_cocycle()
    else:
        G = parse_group(args.group)
        kappa = projrep.trivial_cocycle(G)
    data = projrep.twisted_irreps(G, kappa, bound=args.bound)
    regular = projrep.kappa_regular_classes(G, kappa)
    if args.count:
        print(data.count)
        return
    payload = {**data.to_json(), "regular_classes": len(regular)}
    _emit(args, payload, ["irrep", "dim"], [[i, d] for i, d in enumerate(data.dims)])


def cmd_extquot(args):
    doc = _load_json(args.input)
    schemas.check("extquot", doc)
    try:
        data = extquot.TwistedQuotientData.from_json(doc)
    except (KeyError, IndexError) as exc:
        raise InputError(f"incomplete document: {exc}") from None
    bad = extquot.validate(data)
    if bad:
        payload = {"valid": False, "violations": [{"condition": v.condition, "where": list(v.where)} for v in bad]}
        _emit(args, payload, ["condition", "where"], [[v.condition, list(v.where)] for v in bad])
        raise ValueError(f"{len(bad)} violation(s) of the twisted quotient conditions")
    if args.blocks:
        try:
            blocks = json.loads(args.blocks)
        except json.JSONDecodeError:
            raise InputError("--blocks must be a JSON list of lists") from None
        pts = extquot.two_step_quotient(data.action, blocks, data)
    else:
        pts = extquot.build(data.action, data, check=False)
    if args.count:
        print(len(pts))
        return
    _emit(args, {"valid": True, "points": [p.to_json() for p in pts]}, ["x", "irrep", "dim"],
          [[p.x, p.irrep, p.dim] for p in pts])


def cmd_bernstein(args):
    doc = _load_json(args.catalog)
    schemas.check("catalog", doc)
    try:
        catalog = bernstein.load_catalog(doc)
    except (KeyError, IndexError) as exc:
        raise InputError(f"incomplete catalog: {exc}") from None
    if args.by_levi:
        levis = sorted({e.levi for e in catalog})
        result = {lev: bernstein.assemble_levi(catalog, lev) for lev in levis}
    else:
        result = bernstein.assemble_all(catalog)
    if args.count:
        print(sum(len(v) for v in result.values()))
        return
    payload = {k: [p.to_json() for p in pts] for k, pts in result.items()}
    rows = [[k, p.key, p.label, p.irrep, p.dim, p.tag or "", p.shift or ""] for k, pts in result.items() for p in pts]
    _emit(args, payload, ["block", "class", "label", "irrep", "dim", "tag", "shift"], rows)


# -- parser ------------------------------------------------------------------------------------


def _group_args(p, rank_required=False):
    p.add_argument("family", help="A, B, C, D, E6, E7, E8, F4 or G2 (or e.g. B3)")
    p.add_argument("rank", nargs="?", default=None, help="rank for classical families")


def _weyl_args(p):
    _group_args(p)
    p.add_argument("--pi0", default="trivial",
                   help="diagram automorphisms: trivial, flip, triality, cyclic3, or 1-based permutations '3,2,1;...'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gspringer", description=__doc__.splitlines()[0])
    parser.add_argument("--schema", choices=sorted(schemas.SCHEMAS), help="print a JSON schema and exit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--count", action="store_true", help="print only the number of results")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("orbits", parents=[common], help="nilpotent orbits")
    _group_args(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("component-group", parents=[common], help="A(O) for an orbit, or the census")
    _group_args(p)
    p.add_argument("--orbit", help="partition '3,2,2,1' or Bala-Carter label")
    p.add_argument("--tag", choices=["I", "II"])
    p.add_argument("--census", action="store_true")
    p.set_defaults(func=cmd_component_group)

    p = sub.add_parser("cuspidal", parents=[common], help="cuspidal local systems")
    _group_args(p)
    p.add_argument("--levi", action="store_true", help="cuspidal data on Levi subgroups (classical)")
    p.set_defaults(func=cmd_cuspidal)

    p = sub.add_parser("support", parents=[common], help="cuspidal support (exceptional groups)")
    _group_args(p)
    p.add_argument("--orbit")
    p.add_argument("--sym", help="partition labelling the symmetric-group factor, e.g. 1,1,1")
    p.add_argument("--central", type=int, default=0, help="central character exponent")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("parabolics", parents=[common], help="parabolic pairs (X, Omega)")
    _weyl_args(p)
    p.add_argument("--classes", action="store_true", help="pi0-conjugacy classes of pairs")
    p.set_defaults(func=cmd_parabolics)

    p = sub.add_parser("quasi-levis", parents=[common], help="quasi-Levi subgroups")
    _weyl_args(p)
    p.add_argument("--X", help="a single subset of simple roots")
    p.set_defaults(func=cmd_quasi_levis)

    for name, func in (("double-cosets", cmd_double_cosets), ("mackey", cmd_mackey)):
        p = sub.add_parser(name, parents=[common])
        _weyl_args(p)
        p.add_argument("--M", default="0", help="simple roots of M (1-based; 0 for the torus)")
        p.add_argument("--L", default="0", help="simple roots of L (1-based; 0 for the torus)")
        p.add_argument("--omega-M", dest="omega_M", help="generators of Omega_M")
        p.add_argument("--omega-L", dest="omega_L", help="generators of Omega_L")
        p.set_defaults(func=func)

    p = sub.add_parser("chartable", parents=[common], help="character table of a finite group")
    p.add_argument("group", help="S4, A5, Z6, D8, Q8, V4, products like S3xZ2, or a JSON file")
    p.add_argument("--bound", type=int, default=projrep.DEFAULT_BOUND)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("twisted-irreps", parents=[common], help="irreducibles of C[G, kappa]")
    p.add_argument("group", help="a named group (trivial cocycle), 'klein', or a JSON file {group, cocycle}")
    p.add_argument("--bound", type=int, default=projrep.DEFAULT_BOUND)
    p.set_defaults(func=cmd_twisted_irreps)

    p = sub.add_parser("extquot", parents=[common], help="twisted extended quotient of a JSON document")
    p.add_argument("input", help="JSON file, or - for stdin")
    p.add_argument("--blocks", help="JSON partition of the points for the two-step quotient")
    p.set_defaults(func=cmd_extquot)

    p = sub.add_parser("bernstein", help="Bernstein block assembly")
    bsub = p.add_subparsers(dest="action", required=True)
    q = bsub.add_parser("assemble", parents=[common])
    q.add_argument("catalog")
    q.add_argument("--by-levi", dest="by_levi", action="store_true")
    q.set_defaults(func=cmd_bernstein)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.schema:
        print(json.dumps(schemas.SCHEMAS[args.schema], indent=2))
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    try:
        args.func(args)
    except (InputError, jsonschema.ValidationError) as exc:
        msg = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
        print(f"error[input]: {msg}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error[domain]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
