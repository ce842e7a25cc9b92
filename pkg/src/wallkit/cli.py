"""Command line front end: ``wallkit <verb> ...`` with JSON on stdout.

Exit codes: 0 success, 1 verification failure or internal consistency
error, 2 usage error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import nikulin as nk
from .case_studies import SUITES, run_suites
from .classify import classify
from .errors import PreconditionError, WallkitError
from .isometry import e8_simple_root_reflections, eichler_normalize, induced_disc_action, orbits
from .lattice import (
    LatticeVector,
    discriminant_group,
    divisibility,
    is_primitive,
    make_standard,
    norm,
)
from .walls import PicardEmbedding, is_wall, kahler_side_test, walls_in_picard

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

STANDARD_NAMES = ["U", "U(2)", "E8(-1)", "E8(-2)", "(-1)", "(-2)", "Lambda", "Lambda_hat",
                  "Lambda_hat_1", "Lambda_hat_2", "Lambda_hat_3", "Lambda_K3", "Lambda_K3_2"]


class UsageError(Exception):
    pass


def threads() -> int:
    raw = os.environ.get("WALLKIT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"WALLKIT_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"WALLKIT_THREADS must be a positive integer, got {raw!r}")
    return n


# ---------------------------------------------------------------- parsing helpers

def _parse_ints(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("[") or text.startswith("{"):
            data = json.loads(text)
            if isinstance(data, dict):
                data = data["coords"]
            return [int(x) for x in data]
        return [int(x) for x in text.replace(",", " ").split()]
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse coordinates {text!r}: {exc}")


def _vector(lattice: str, coords: str | None = None, cls: str | None = None) -> LatticeVector:
    if cls is not None:
        if coords is not None:
            raise UsageError("give either --class or --coords")
        return nk.named_class(cls)
    if coords is None:
        raise UsageError("missing --coords")
    lat = make_standard(lattice)
    c = _parse_ints(coords)
    if len(c) != lat.rank:
        raise UsageError(f"{lat.name} needs {lat.rank} coordinates, got {len(c)}")
    return lat.vector(c)


def _read_pic(path: str) -> PicardEmbedding:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read Picard file {path!r}: {exc}")
    if not isinstance(data, dict) or "basis" not in data:
        raise UsageError("Picard JSON needs a 'basis' list")
    return PicardEmbedding.from_dict(data)


# ---------------------------------------------------------------- verbs

def cmd_lattice(args) -> tuple[dict, int]:
    if args.action == "list":
        return {"lattices": STANDARD_NAMES}, EXIT_OK
    return make_standard(args.name).to_dict(), EXIT_OK


def cmd_class(args) -> tuple[dict, int]:
    if args.action == "list":
        return {"classes": sorted(nk.NAMED_CLASSES) + ["L_<i>", "L2_<i>"]}, EXIT_OK
    v = nk.named_class(args.name)
    return {"name": args.name, "lattice": v.lattice.name, "coords": list(v.coords),
            "q": norm(v), "div": divisibility(v)}, EXIT_OK


def cmd_vec(args) -> tuple[dict, int]:
    v = _vector(args.lattice, args.coords, args.cls)
    out = {"q": norm(v), "div": divisibility(v)}
    if args.verbose:
        out["primitive"] = is_primitive(v)
    return out, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    v = _vector(args.lattice, args.coords, args.cls)
    return classify(v).to_dict(), EXIT_OK


def cmd_wall(args) -> tuple[dict, int]:
    v = _vector(args.lattice, args.coords, args.cls)
    return {"is_wall": is_wall(v)}, EXIT_OK


def cmd_walls(args) -> tuple[dict, int]:
    pic = _read_pic(args.pic)
    omega = _vector(pic.ambient.name, args.omega) if args.omega else None
    return walls_in_picard(pic, omega).to_dict(), EXIT_OK


def cmd_kahler(args) -> tuple[dict, int]:
    pic = _read_pic(args.pic)
    omega = _vector(pic.ambient.name, args.omega)
    alpha = _vector(pic.ambient.name, args.alpha)
    walls = walls_in_picard(pic)
    return {"in_kahler_chamber": kahler_side_test(alpha, omega, walls)}, EXIT_OK


def cmd_disc(args) -> tuple[dict, int]:
    lat = make_standard(args.lattice)
    group = discriminant_group(lat)
    out = {"lattice": lat.name, "invariant_factors": list(group.invariant_factors),
           "order": group.order}
    if args.orbits:
        gens = [induced_disc_action(r).perm for r in e8_simple_root_reflections(lat)]
        parts = orbits(gens, group.order)
        out["orbit_count"] = len(parts)
        out["orbit_sizes"] = sorted(len(p) for p in parts)
    return out, EXIT_OK


def cmd_eichler(args) -> tuple[dict, int]:
    v = _vector(args.lattice, args.v)
    w = _vector(args.lattice, args.w)
    phi = eichler_normalize(make_standard(args.lattice), v, w)
    return {"lattice": phi.lattice.name, "matrix": phi.to_list()}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        reports = [r for batch in pool.map(run_suites, names) for r in batch]
    ok = all(r.passed for r in reports)
    return ({"pass": ok, "suites": [r.to_dict() for r in reports]},
            EXIT_OK if ok else EXIT_FAIL)


# ---------------------------------------------------------------- rendering

def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _clip(text: str, width: int = 48) -> str:
    return text if len(text) <= width else text[:width - 3] + "..."


def render_pretty(verb: str, out: dict) -> str:
    if verb == "verify":
        rows = [["suite", "check", "expected", "actual", "result"]]
        for s in out["suites"]:
            for c in s["checks"]:
                rows.append([s["suite"], c["check"], _clip(json.dumps(c["expected"])),
                             _clip(json.dumps(c["actual"])), "pass" if c["pass"] else "FAIL"])
        return _table(rows) + f"\n\noverall: {'pass' if out['pass'] else 'FAIL'}"
    if verb == "walls":
        rows = [["coords", "q", "div", "case"]]
        for w in out["walls"]:
            rows.append([" ".join(map(str, w["coords"])), str(w["q"]), str(w["div"]),
                         str(w.get("case", "-"))])
        return _table(rows) + f"\n\n{out['count']} wall rays (complete: {out['complete']})"
    if verb == "eichler" or (verb == "lattice" and "gram" in out):
        key = "matrix" if verb == "eichler" else "gram"
        body = _table([[str(x) for x in row] for row in out[key]])
        head = {k: v for k, v in out.items() if k != key}
        return _table([[k, json.dumps(v)] for k, v in head.items()]) + "\n\n" + body
    return _table([[k, json.dumps(v)] for k, v in out.items()])


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="render a human readable table")

    p = argparse.ArgumentParser(prog="wallkit", parents=[common],
                                description="Exact lattice computations for wall divisors.")
    sub = p.add_subparsers(dest="verb", required=True)

    def vec_flags(sp, lattice_default="Lambda"):
        sp.add_argument("--lattice", default=lattice_default)
        sp.add_argument("--coords", help="comma separated integers or a JSON list")
        sp.add_argument("--class", dest="cls", help="a named class instead of --coords")

    sp = sub.add_parser("lattice", parents=[common], help="show a standard lattice")
    sp.add_argument("action", choices=["show", "list"])
    sp.add_argument("--name", default="Lambda")

    sp = sub.add_parser("class", parents=[common], help="show a named class")
    sp.add_argument("action", choices=["show", "list"])
    sp.add_argument("--name", default="delta_prime")

    sp = sub.add_parser("vec", parents=[common], help="vector invariants")
    sp.add_argument("action", choices=["invariants"])
    vec_flags(sp)
    sp.add_argument("--verbose", action="store_true", help="also report primitivity")

    sp = sub.add_parser("classify", parents=[common], help="orbit case and representative")
    vec_flags(sp)

    sp = sub.add_parser("wall", parents=[common], help="wall-divisor test in Lambda")
    sp.add_argument("action", choices=["test"])
    vec_flags(sp)

    sp = sub.add_parser("walls", parents=[common], help="enumerate walls of a Picard lattice")
    sp.add_argument("action", choices=["enum"])
    sp.add_argument("--pic", required=True)
    sp.add_argument("--omega", help="orient each wall to pair positively with omega")

    sp = sub.add_parser("kahler", parents=[common], help="Kahler chamber side test")
    sp.add_argument("action", choices=["test"])
    sp.add_argument("--pic", required=True)
    sp.add_argument("--omega", required=True)
    sp.add_argument("--alpha", required=True)

    sp = sub.add_parser("disc", parents=[common], help="discriminant group")
    sp.add_argument("--lattice", default="E8(-2)")
    sp.add_argument("--orbits", action="store_true", help="orbits under the E8 basis reflections")

    sp = sub.add_parser("eichler", parents=[common], help="isometry taking v to w")
    sp.add_argument("--lattice", default="Lambda_hat_3")
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)

    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    sp.add_argument("--suite", default="all", choices=["all", *SUITES])
    return p


COMMANDS = {
    "lattice": cmd_lattice, "class": cmd_class, "vec": cmd_vec, "classify": cmd_classify,
    "wall": cmd_wall, "walls": cmd_walls, "kahler": cmd_kahler, "disc": cmd_disc,
    "eichler": cmd_eichler, "verify": cmd_verify,
}


def _error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        threads()
        out, code = COMMANDS[args.verb](args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except PreconditionError as exc:
        _error(exc.code, str(exc))
        return EXIT_PRECONDITION
    except WallkitError as exc:
        _error(exc.code, str(exc))
        return EXIT_FAIL
    if getattr(args, "pretty", False):
        print(render_pretty(args.verb, out))
    else:
        print(json.dumps(out))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
