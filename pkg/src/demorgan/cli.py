"""Command line interface and the JSON site/frame formats.

Site documents::

    {
      "format": "site/1",
      "objects": ["a", "b", "c"],
      "arrows": [{"name": "f", "dom": "a", "cod": "c"}, ...],
      "compose": [{"first": "f", "then": "g", "equals": "h"}, ...],
      "covers": {"c": [["f", "g"], ...]}          # optional
    }

Identities are implicit and named ``id_<object>``; identity
compositions are implied.  Each covers entry is a list of generators:
the listed topology is the one generated by those sieves, the maximal
sieve never needs listing, and ``[]`` denotes the empty sieve.

Frame documents::

    {"elements": ["0", "m", "1"], "leq": [["0", "m"], ["m", "1"]]}

with the reflexive-transitive closure implied.

Exit codes: 0 the command ran (decision results are payload), 2 the
input was invalid, 3 an enumeration bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BoundExceeded, InputError, ParseError
from .fincat import FiniteCategory, is_mono, right_ore, validate_category
from .frames import (
    Frame,
    demorganize_frame,
    enumerate_nuclei,
    frame_from_poset,
    is_almost_discrete,
    is_extremally_disconnected,
)
from .heyting import (
    has_boolean_property,
    has_de_morgan_property,
    is_boolean_algebra,
    is_de_morgan_algebra,
    regular_elements,
)
from .sieves import Sieve, enumerate_sieves, generate_sieve, maximal_sieve
from .subobjects import oracle_is_boolean, oracle_is_demorgan
from .topology import (
    GrothendieckTopology,
    boolean_counterexample,
    booleanize_site,
    countroc_witness,
    demorgan_counterexample,
    demorgan_topology,
    demorganize_site,
    dense_topology,
    enumerate_topologies,
    generate_topology,
    is_boolean_general,
    is_boolean_reduced,
    is_demorgan_general,
    is_demorgan_reduced,
    leq_topology,
    no_empty_covers,
    trivial_topology,
    validate_topology,
)


# -- document handling --------------------------------------------------------

def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
        ) from exc


def _covers_from_data(C: FiniteCategory, covers_data) -> GrothendieckTopology:
    seeds = []
    for obj, gen_lists in covers_data.items():
        for gens in gen_lists:
            seeds.append(generate_sieve(C, obj, gens))
    return generate_topology(C, seeds)


def parse_site(path: str):
    """Read a site document; returns (category, topology or None)."""
    data = _load_json(path)
    if not isinstance(data, dict) or "objects" not in data:
        raise ParseError(f"{path}: not a site document (no 'objects')")
    C = validate_category(data)
    J = None
    if "covers" in data:
        J = _covers_from_data(C, data["covers"])
    return C, J


def parse_frame(path: str) -> Frame:
    data = _load_json(path)
    if not isinstance(data, dict) or "elements" not in data:
        raise ParseError(f"{path}: not a frame document (no 'elements')")
    return frame_from_poset(data["elements"], [tuple(p) for p in data["leq"]])


def topology_to_data(J: GrothendieckTopology) -> dict:
    covers = {}
    for obj in J.category.objects:
        sieves = sorted(sorted(s.members) for s in J.covers(obj))
        covers[obj] = sieves
    return covers


def site_to_data(C: FiniteCategory, J: GrothendieckTopology | None = None) -> dict:
    data = {"format": "site/1"}
    data.update(C.to_data())
    if J is not None:
        data["covers"] = topology_to_data(J)
    return data


def write_site(path: str, C: FiniteCategory, J: GrothendieckTopology | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(site_to_data(C, J), fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- rendering ----------------------------------------------------------------

def _sieve_text(S: Sieve) -> str:
    return "{" + ",".join(sorted(S.members)) + "}"


def _emit(payload: dict, args, lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


def _topology_lines(J: GrothendieckTopology):
    lines = []
    for obj in sorted(J.category.objects):
        sieves = sorted(sorted(s.members) for s in J.covers(obj))
        rendered = ", ".join("{" + ",".join(s) + "}" for s in sieves)
        lines.append(f"  {obj}: {rendered}")
    return lines


def _resolve_topology(C, J_from_file, spec: str | None):
    if spec is None:
        return J_from_file if J_from_file is not None else trivial_topology(C)
    if spec == "trivial":
        return trivial_topology(C)
    if spec == "dense":
        return dense_topology(C)
    if spec == "demorgan":
        return demorgan_topology(C)
    data = _load_json(spec)
    covers = data["covers"] if isinstance(data, dict) and "covers" in data else data
    return _covers_from_data(C, covers)


def _writeback(args, C, J):
    if getattr(args, "output", None):
        write_site(args.output, C, J)


# -- subcommand implementations ------------------------------------------------

def _cmd_validate(args):
    C, J = parse_site(args.site)
    payload = {
        "objects": len(C.objects),
        "arrows": len(C.arrows),
        "non_identity_arrows": len(C.non_identity_arrows()),
        "topology": None,
    }
    lines = [
        f"category ok: {len(C.objects)} objects, {len(C.arrows)} arrows "
        f"({len(C.non_identity_arrows())} non-identity)",
    ]
    if J is not None:
        payload["topology"] = {
            obj: len(J.covers(obj)) for obj in sorted(C.objects)
        }
        counts = ", ".join(
            f"{obj}:{len(J.covers(obj))}" for obj in sorted(C.objects)
        )
        lines.append(f"topology ok: covering sieves per object {counts}")
    return _emit(payload, args, lines)


def _cmd_ore(args):
    C, _ = parse_site(args.site)
    result = right_ore(C)
    witness = None
    if not result:
        names = sorted(C.arrows)
        for f in names:
            for g in names:
                if C.cod(f) != C.cod(g):
                    continue
                if not any(
                    C.dom(u) == C.dom(v)
                    and C.compose(u, f) == C.compose(v, g)
                    for u in C.arrows_into(C.dom(f))
                    for v in C.arrows_into(C.dom(g))
                ):
                    witness = {"f": f, "g": g}
                    break
            if witness:
                break
    lines = [str(result).lower()]
    if witness:
        lines.append(
            f"witness: cospan ({witness['f']}, {witness['g']}) has no "
            f"completing square"
        )
    return _emit({"result": result, "witness": witness}, args, lines)


def _cmd_sieves(args):
    C, _ = parse_site(args.site)
    found = enumerate_sieves(
        C, args.object, max_arrows_into=args.max_sieve_arrows
    )
    sieves = sorted(sorted(S.members) for S in found)
    lines = [f"{len(sieves)} sieves on {args.object}:"]
    lines += ["  {" + ",".join(s) + "}" for s in sieves]
    return _emit({"object": args.object, "sieves": sieves}, args, lines)


def _cmd_topology_validate(args):
    data = _load_json(args.site)
    C = validate_category(data)
    covers = {}
    for obj in C.objects:
        entries = [
            generate_sieve(C, obj, gens)
            for gens in data.get("covers", {}).get(obj, [])
        ]
        covers[obj] = entries + [maximal_sieve(C, obj)]
    try:
        validate_topology(C, covers, max_arrows_into=args.max_sieve_arrows)
    except InputError as exc:
        payload = {"valid": False, "reason": str(exc)}
        return _emit(payload, args, ["invalid", f"  {exc}"])
    return _emit({"valid": True}, args, ["valid"])


def _cmd_topology_generate(args):
    C, J = parse_site(args.site)
    if J is None:
        J = trivial_topology(C)
    _writeback(args, C, J)
    return _emit(
        {"covers": topology_to_data(J)}, args,
        ["generated topology:"] + _topology_lines(J),
    )


def _cmd_topology_compare(args):
    C1, J1 = parse_site(args.site)
    C2, J2 = parse_site(args.other)
    if J1 is None:
        J1 = trivial_topology(C1)
    if J2 is None:
        J2 = trivial_topology(C2)
    le = leq_topology(J1, J2)
    ge = leq_topology(J2, J1)
    verdict = {
        (True, True): "equal",
        (True, False): "first<second",
        (False, True): "second<first",
        (False, False): "incomparable",
    }[(le, ge)]
    return _emit(
        {"first_leq_second": le, "second_leq_first": ge, "verdict": verdict},
        args,
        [verdict],
    )


def _cmd_dense(args):
    C, _ = parse_site(args.site)
    J = dense_topology(C, max_arrows_into=args.max_sieve_arrows)
    _writeback(args, C, J)
    return _emit(
        {"covers": topology_to_data(J)}, args,
        ["dense topology:"] + _topology_lines(J),
    )


def _cmd_demorgan_topology(args):
    C, _ = parse_site(args.site)
    J = demorgan_topology(C, max_arrows_into=args.max_sieve_arrows)
    _writeback(args, C, J)
    return _emit(
        {"covers": topology_to_data(J)}, args,
        ["De Morgan topology:"] + _topology_lines(J),
    )


def _decision(args, kind: str):
    C, J_file = parse_site(args.site)
    J = _resolve_topology(C, J_file, args.topology)
    bound = args.max_sieve_arrows
    methods = {
        ("demorgan", "general"): is_demorgan_general,
        ("demorgan", "reduced"): is_demorgan_reduced,
        ("demorgan", "oracle"): oracle_is_demorgan,
        ("boolean", "general"): is_boolean_general,
        ("boolean", "reduced"): is_boolean_reduced,
        ("boolean", "oracle"): oracle_is_boolean,
    }
    result = methods[(kind, args.method)](C, J, max_arrows_into=bound)
    witness = None
    lines = [str(result).lower()]
    if not result:
        finder = (
            demorgan_counterexample if kind == "demorgan"
            else boolean_counterexample
        )
        found = finder(C, J, max_arrows_into=bound)
        if found is not None:
            obj, closed, criterion = found
            witness = {
                "object": obj,
                "closed_sieve": sorted(closed.members),
                "criterion_sieve": sorted(criterion.members),
            }
            lines += [
                "witness:",
                f"  object: {obj}",
                f"  closed sieve R: {_sieve_text(closed)}",
                f"  criterion sieve: {_sieve_text(criterion)} not covering",
            ]
    return _emit(
        {"result": result, "method": args.method, "witness": witness},
        args,
        lines,
    )


def _cmd_is_demorgan(args):
    return _decision(args, "demorgan")


def _cmd_is_boolean(args):
    return _decision(args, "boolean")


def _cmd_demorganize(args):
    C, J_file = parse_site(args.site)
    J = _resolve_topology(C, J_file, args.topology)
    K = demorganize_site(C, J, max_arrows_into=args.max_sieve_arrows)
    _writeback(args, K.category, K)
    lines = [
        f"reduced category objects: {', '.join(sorted(K.category.objects))}",
        "DeMorganized topology:",
    ] + _topology_lines(K)
    return _emit(
        {
            "objects": sorted(K.category.objects),
            "covers": topology_to_data(K),
        },
        args,
        lines,
    )


def _cmd_booleanize(args):
    C, J_file = parse_site(args.site)
    J = _resolve_topology(C, J_file, args.topology)
    K = booleanize_site(C, J, max_arrows_into=args.max_sieve_arrows)
    _writeback(args, K.category, K)
    lines = [
        f"reduced category objects: {', '.join(sorted(K.category.objects))}",
        "Booleanized topology:",
    ] + _topology_lines(K)
    return _emit(
        {
            "objects": sorted(K.category.objects),
            "covers": topology_to_data(K),
        },
        args,
        lines,
    )


def _cmd_enumerate(args):
    C, _ = parse_site(args.site)
    tops = enumerate_topologies(
        C,
        max_nonidentity_arrows=args.max_enum_arrows,
        max_arrows_into=args.max_sieve_arrows,
    )
    payload = {"count": len(tops), "topologies": [topology_to_data(J) for J in tops]}
    lines = [f"{len(tops)} topologies"]
    for i, J in enumerate(tops):
        lines.append(f"topology {i}:")
        lines += _topology_lines(J)
    return _emit(payload, args, lines)


def _cmd_heyting_check(args):
    F = parse_frame(args.frame)
    H = F.algebra
    payload = {
        "elements": len(H),
        "de_morgan_algebra": is_de_morgan_algebra(H),
        "boolean_algebra": is_boolean_algebra(H),
        "de_morgan_property": has_de_morgan_property(H),
        "boolean_property": has_boolean_property(H),
        "regular_elements": sorted(regular_elements(H).elements),
    }
    lines = [f"{k}: {str(v).lower() if isinstance(v, bool) else v}"
             for k, v in payload.items() if k != "regular_elements"]
    lines.append("regular_elements: " + ", ".join(payload["regular_elements"]))
    return _emit(payload, args, lines)


def _cmd_frame_nuclei(args):
    F = parse_frame(args.frame)
    nuclei = enumerate_nuclei(F, max_size=args.max_frame_elements)
    payload = {"count": len(nuclei), "nuclei": [dict(j.table) for j in nuclei]}
    lines = [f"{len(nuclei)} nuclei"]
    for j in nuclei:
        body = ", ".join(f"{a}->{v}" for a, v in sorted(j.table.items()))
        lines.append(f"  {body}")
    return _emit(payload, args, lines)


def _cmd_frame_demorganize(args):
    F = parse_frame(args.frame)
    j, q = demorganize_frame(F)
    payload = {
        "nucleus": dict(j.table),
        "fixset": sorted(q.elements),
        "fixset_size": len(q),
    }
    body = ", ".join(f"{a}->{v}" for a, v in sorted(j.table.items()))
    lines = [
        f"nucleus: {body}",
        f"fixset ({len(q)} elements): {', '.join(sorted(q.elements))}",
    ]
    return _emit(payload, args, lines)


def _cmd_frame_classify(args):
    F = parse_frame(args.frame)
    payload = {
        "de_morgan": is_de_morgan_algebra(F.algebra),
        "boolean": is_boolean_algebra(F.algebra),
        "extremally_disconnected": is_extremally_disconnected(F),
        "almost_discrete": is_almost_discrete(F),
    }
    lines = [f"{k}: {str(v).lower()}" for k, v in payload.items()]
    return _emit(payload, args, lines)


def _cmd_report(args):
    C, J_file = parse_site(args.site)
    J = _resolve_topology(C, J_file, args.topology)
    bound = args.max_sieve_arrows
    ore = right_ore(C)
    dm = {
        "general": is_demorgan_general(C, J, max_arrows_into=bound),
        "reduced": is_demorgan_reduced(C, J, max_arrows_into=bound),
        "oracle": oracle_is_demorgan(C, J, max_arrows_into=bound),
    }
    bl = {
        "general": is_boolean_general(C, J, max_arrows_into=bound),
        "reduced": is_boolean_reduced(C, J, max_arrows_into=bound),
        "oracle": oracle_is_boolean(C, J, max_arrows_into=bound),
    }
    nec = no_empty_covers(J)
    counter = countroc_witness(C, J) if nec else None
    payload = {
        "objects": len(C.objects),
        "arrows": len(C.arrows),
        "right_ore": ore,
        "no_empty_covers": nec,
        "de_morgan": dm,
        "boolean": bl,
        "methods_agree": len(set(dm.values())) == 1 and len(set(bl.values())) == 1,
        "non_de_morgan_witness": list(counter) if counter else None,
    }
    lines = [
        f"category: {len(C.objects)} objects, {len(C.arrows)} arrows",
        f"right Ore: {str(ore).lower()}",
        f"no empty covers: {str(nec).lower()}",
        f"De Morgan: general={str(dm['general']).lower()} "
        f"reduced={str(dm['reduced']).lower()} oracle={str(dm['oracle']).lower()}",
        f"Boolean: general={str(bl['general']).lower()} "
        f"reduced={str(bl['reduced']).lower()} oracle={str(bl['oracle']).lower()}",
    ]
    if counter:
        lines.append(
            f"non-De-Morgan witness: object {counter[0]}, arrows "
            f"({counter[1]}, {counter[2]})"
        )
    if not payload["methods_agree"]:  # pragma: no cover - methods always agree
        lines.append("WARNING: decision methods disagree")
    return _emit(payload, args, lines)


def _cmd_is_mono(args):
    C, _ = parse_site(args.site)
    result = is_mono(C, args.arrow)
    return _emit({"result": result}, args, [str(result).lower()])


# -- parser --------------------------------------------------------------------

def _add_common(p, site=True, output=False, topology=False):
    if site:
        p.add_argument("site", help="site document (JSON)")
    if topology:
        p.add_argument(
            "--topology",
            help="trivial|dense|demorgan or a JSON file with covers; "
            "default: the site's covers, else trivial",
        )
    if output:
        p.add_argument("-o", "--output", help="write the result as JSON")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--max-sieve-arrows", type=int, default=16, metavar="N",
        help="per-object sieve enumeration bound (default 16)",
    )
    p.add_argument(
        "--max-enum-arrows", type=int, default=6, metavar="N",
        help="non-identity arrow bound for topology enumeration (default 6)",
    )
    p.add_argument(
        "--max-frame-elements", type=int, default=8, metavar="N",
        help="frame size bound for nucleus enumeration (default 8)",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="demorgan",
        description="Decide De Morgan's law and excluded middle for sheaf "
        "toposes on finite sites; construct dense and De Morgan topologies, "
        "DeMorganizations and frame nuclei.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a site document")
    _add_common(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("ore", help="check the right Ore condition")
    _add_common(p)
    p.set_defaults(fn=_cmd_ore)

    p = sub.add_parser("mono", help="check whether an arrow is monic")
    p.add_argument("arrow")
    _add_common(p)
    p.set_defaults(fn=_cmd_is_mono)

    p = sub.add_parser("sieves", help="list all sieves on an object")
    p.add_argument("object")
    _add_common(p)
    p.set_defaults(fn=_cmd_sieves)

    p = sub.add_parser("topology", help="validate/generate/compare topologies")
    tsub = p.add_subparsers(dest="subcommand", required=True)
    q = tsub.add_parser("validate", help="check the listed covers literally")
    _add_common(q)
    q.set_defaults(fn=_cmd_topology_validate)
    q = tsub.add_parser("generate", help="saturate the covers into a topology")
    _add_common(q, output=True)
    q.set_defaults(fn=_cmd_topology_generate)
    q = tsub.add_parser("compare", help="compare two topologies on one category")
    _add_common(q)
    q.add_argument("other", help="second site document")
    q.set_defaults(fn=_cmd_topology_compare)

    p = sub.add_parser("dense-topology", help="the stably-non-empty coverage")
    _add_common(p, output=True)
    p.set_defaults(fn=_cmd_dense)

    p = sub.add_parser("demorgan-topology", help="the least De Morgan coverage")
    _add_common(p, output=True)
    p.set_defaults(fn=_cmd_demorgan_topology)

    p = sub.add_parser("is-demorgan", help="does the sheaf topos satisfy De Morgan's law")
    _add_common(p, topology=True)
    p.add_argument(
        "--method", choices=["general", "reduced", "oracle"], default="general"
    )
    p.set_defaults(fn=_cmd_is_demorgan)

    p = sub.add_parser("is-boolean", help="is the sheaf topos Boolean")
    _add_common(p, topology=True)
    p.add_argument(
        "--method", choices=["general", "reduced", "oracle"], default="general"
    )
    p.set_defaults(fn=_cmd_is_boolean)

    p = sub.add_parser("demorganize", help="smallest De Morgan topology above the input")
    _add_common(p, output=True, topology=True)
    p.set_defaults(fn=_cmd_demorganize)

    p = sub.add_parser("booleanize", help="smallest Boolean topology above the input")
    _add_common(p, output=True, topology=True)
    p.set_defaults(fn=_cmd_booleanize)

    p = sub.add_parser("enumerate-topologies", help="all topologies on the category")
    _add_common(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("heyting", help="Heyting algebra checks")
    hsub = p.add_subparsers(dest="subcommand", required=True)
    q = hsub.add_parser("check", help="law and property checks for a frame document")
    q.add_argument("frame", help="frame document (JSON)")
    _add_common(q, site=False)
    q.set_defaults(fn=_cmd_heyting_check)

    p = sub.add_parser("frame", help="frame and nucleus operations")
    fsub = p.add_subparsers(dest="subcommand", required=True)
    for name, fn, desc in [
        ("nuclei", _cmd_frame_nuclei, "enumerate all nuclei"),
        ("demorganize", _cmd_frame_demorganize, "largest dense De Morgan quotient"),
        ("classify", _cmd_frame_classify, "law and topology classifications"),
    ]:
        q = fsub.add_parser(name, help=desc)
        q.add_argument("frame", help="frame document (JSON)")
        _add_common(q, site=False)
        q.set_defaults(fn=fn)

    p = sub.add_parser("report", help="full report for a site")
    _add_common(p, topology=True)
    p.set_defaults(fn=_cmd_report)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
