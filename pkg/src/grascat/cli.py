"""Command-line front end: every verification and computation as a
reproducible, scriptable subcommand with JSON output.

Exit code 0 means every requested check passed; structured failure
reports otherwise.  All randomness is seeded and the seed is echoed in
the report, so identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import combinations

from . import combinat, kinematics, polynomial, polytope, roots

F = Fraction
SCHEMA = "grascat/1"


def _emit(args, payload, ok=True):
    payload = {"schema": SCHEMA, **payload}
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


def _parse_subset(text):
    return tuple(int(p) for p in text.replace(" ", "").split(","))


# ---------------------------------------------------------------------------
# subcommands

def cmd_nc(args):
    if args.action == "count":
        cols = combinat.enumerate_maximal_noncrossing(args.k, args.n, args.max_cliques)
        expected = combinat.catalan_mdim(args.k, args.n - args.k)
        ok = len(cols) == expected
        return _emit(args, {"command": "nc count", "k": args.k, "n": args.n,
                            "count": len(cols), "catalan": expected, "pass": ok}, ok)
    if args.action == "list":
        cols = combinat.enumerate_maximal_noncrossing(args.k, args.n, args.max_cliques)
        return _emit(args, {"command": "nc list", "k": args.k, "n": args.n,
                            "collections": [[roots.subset_key(J) for J in c] for c in cols]})
    if args.action == "degree":
        coeffs, k, n = roots.load_coeffs(args.input)
        expansion = roots.noncrossing_decompose(roots.combo_vector(coeffs, k, n), k, n)
        return _emit(args, {"command": "nc degree", "k": k, "n": n,
                            "degree": len(expansion),
                            "expansion": {roots.subset_key(J): str(c)
                                          for J, c in sorted(expansion.items())}})
    raise SystemExit(f"unknown nc action {args.action}")


def cmd_decompose(args):
    coeffs, k, n = roots.load_coeffs(args.input)
    v = roots.combo_vector(coeffs, k, n)
    expansion = roots.noncrossing_decompose(v, k, n)
    return _emit(args, {"command": "decompose", "k": k, "n": n,
                        "expansion": {roots.subset_key(J): str(c)
                                      for J, c in sorted(expansion.items())},
                        "degree": len(expansion)})


def cmd_volume(args):
    vol = polytope.triangulation_volume(args.k, args.n, args.max_cliques)
    expected = combinat.catalan_mdim(args.k, args.n - args.k)
    ok = vol == expected
    return _emit(args, {"command": "volume", "k": args.k, "n": args.n,
                        "relative_volume": vol, "catalan": expected, "pass": ok}, ok)


def cmd_pk(args):
    P = polytope.pk_polytope(args.k, args.n)
    if args.action == "facets":
        payload = {"command": "pk facets", "k": args.k, "n": args.n,
                   "facets": len(P.inequalities),
                   "inequalities": [{"const": str(c), "coeffs": [str(a) for a in coeffs]}
                                    for (c, coeffs) in P.inequalities]}
    elif args.action == "vertices":
        payload = {"command": "pk vertices", "k": args.k, "n": args.n,
                   "count": len(P.vertices),
                   "vertices": [[str(x) for x in v] for v in P.vertices]}
    elif args.action == "fvector":
        payload = {"command": "pk fvector", "k": args.k, "n": args.n,
                   "f_vector": P.f_vector()}
    else:
        raise SystemExit(f"unknown pk action {args.action}")
    return _emit(args, payload)


def cmd_newton(args):
    report = polytope.tau_newton_facets(args.k, args.n)
    payload = {"command": "newton", "k": args.k, "n": args.n,
               "facets": len(report["polytope"].inequalities),
               "vertices": len(report["polytope"].vertices),
               "lambda": [str(x) for x in report["lambda"]],
               "constants": {roots.subset_key(J): str(c)
                             for J, c in sorted(report["constants"].items())},
               "hrep_agrees": report["agrees"]}
    if args.fvector:
        payload["f_vector"] = report["polytope"].f_vector()
    return _emit(args, payload, report["agrees"])


def cmd_ucheck(args):
    if args.J is None and args.mode == "random":
        # batch mode shares the u evaluations across all subsets per point
        verdict = polynomial.binary_identities_random_all(
            args.k, args.n, trials=args.trials, seed=args.seed)
        return _emit(args, {"command": "u-check", **verdict}, verdict["pass"])
    targets = ([_parse_subset(args.J)] if args.J
               else combinat.nonfrozen_subsets(args.k, args.n))
    results = []
    ok = True
    for J in targets:
        verdict = polynomial.binary_identity_check(
            J, args.k, args.n, mode=args.mode, trials=args.trials, seed=args.seed)
        ok &= verdict["pass"]
        results.append(verdict)
    return _emit(args, {"command": "u-check", "k": args.k, "n": args.n,
                        "mode": args.mode, "seed": args.seed,
                        "checked": len(results), "pass": ok,
                        "failures": [v for v in results if not v["pass"]]}, ok)


def cmd_amplitude(args):
    k, n = args.k, args.n
    nf = combinat.nonfrozen_subsets(k, n)
    seed = args.seed
    if args.pk:
        values = {J: F(1) for J in nf}
        source = "pk"
    elif args.eta == "random-interior":
        point = kinematics.interior_kd_point(k, n, seed=seed)
        values = kinematics.kin_basis(k, n).eta_values(point)
        source = "random-interior"
    else:
        with open(args.eta) as fh:
            data = json.load(fh)
        values = {roots.parse_subset(key): F(val)
                  for key, val in data["eta"].items()}
        source = args.eta
    if args.shift:
        if k != 3:
            raise SystemExit("--shift is defined for k = 3")
        point = kinematics.kin_basis(k, n).point_from_eta(values)
        hats = kinematics.eta_hat_shift(n, warn_beyond_validated=not args.unsafe_large)
        values = {J: hats[J].value(point) for J in nf}
    zeros = [J for J in nf if not values.get(J)]
    if zeros:
        return _emit(args, {"command": "amplitude", "k": k, "n": n,
                            "error": "zero pole",
                            "poles": [roots.subset_key(J) for J in zeros]}, ok=False)
    value = kinematics.nc_amplitude(k, n, values, args.max_cliques)
    terms = combinat.catalan_mdim(k, n - k)
    return _emit(args, {"command": "amplitude", "k": k, "n": n, "source": source,
                        "shift": bool(args.shift), "seed": seed,
                        "value": str(value), "terms": terms})


def cmd_kinematics(args):
    k, n = args.k, args.n
    B = kinematics.kin_basis(k, n)
    if args.action == "basis":
        return _emit(args, {"command": "kinematics basis", "k": k, "n": n,
                            "dimension": len(B.basis),
                            "nonfrozen": len(B.nonfrozen)})
    if args.action == "eta-to-s":
        with open(args.input) as fh:
            data = json.load(fh)
        values = {roots.parse_subset(key): F(val) for key, val in data["eta"].items()}
        point = B.point_from_eta(values)
        return _emit(args, {"command": "kinematics eta-to-s", "k": k, "n": n,
                            "s": {roots.subset_key(J): str(v)
                                  for J, v in sorted(point.items())}})
    if args.action == "s-to-eta":
        with open(args.input) as fh:
            data = json.load(fh)
        point = {roots.parse_subset(key): F(val) for key, val in data["s"].items()}
        values = B.eta_values(point)
        return _emit(args, {"command": "kinematics s-to-eta", "k": k, "n": n,
                            "eta": {roots.subset_key(J): str(v)
                                    for J, v in sorted(values.items())}})
    raise SystemExit(f"unknown kinematics action {args.action}")


def cmd_search(args):
    """Search for a counterexample to the positivity of eta-hat flips on
    interior points of the planar cone; reports the minimum flip value
    found (the underlying question is open, nothing is asserted)."""
    k, n = 3, args.n
    hats = kinematics.eta_hat_shift(n, warn_beyond_validated=False)
    quads = _flip_quadruples(k, n)
    worst = None
    violations = []
    for t in range(args.trials):
        point = kinematics.interior_kd_point(k, n, seed=args.seed + t)
        for (I, J, I2, J2) in quads:
            val = (hats[I2].value(point) + hats[J2].value(point)
                   - hats[I].value(point) - hats[J].value(point))
            if worst is None or val < worst[0]:
                worst = (val, t, (I, J, I2, J2))
            if val <= 0:
                violations.append({
                    "trial": t,
                    "noncrossing_pair": [roots.subset_key(I), roots.subset_key(J)],
                    "crossing_pair": [roots.subset_key(I2), roots.subset_key(J2)],
                    "value": str(val)})
    return _emit(args, {"command": "search", "k": k, "n": n,
                        "trials": args.trials, "seed": args.seed,
                        "quadruples": len(quads),
                        "min_flip_value": str(worst[0]) if worst else None,
                        "violations": violations})


def _flip_quadruples(k, n):
    """Quadruples (I, J, I', J') with gamma_I + gamma_J = gamma_I' +
    gamma_J', the first pair noncrossing and the second not."""
    from .roots import gamma_hat, grid_add
    groups = {}
    nf = combinat.nonfrozen_subsets(k, n)
    for A, B in combinations(nf, 2):
        vec = tuple(sorted(grid_add(gamma_hat(A, k, n), gamma_hat(B, k, n)).items()))
        groups.setdefault(vec, []).append((A, B))
    quads = []
    for pairs in groups.values():
        if len(pairs) < 2:
            continue
        nc = [(A, B) for (A, B) in pairs if combinat.is_noncrossing(A, B, n)]
        if len(nc) != 1:
            continue
        I, J = nc[0]
        for (A, B) in pairs:
            if (A, B) != (I, J):
                quads.append((I, J, A, B))
    return quads


# ---------------------------------------------------------------------------

def build_parser():
    top = argparse.ArgumentParser(
        prog="grascat",
        description="exact computations for noncrossing complexes, generalized "
                    "root systems, PK polytopes and noncrossing amplitudes")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, kn=True):
        if kn:
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None)
        p.add_argument("--max-cliques", type=int, default=200000)
        p.add_argument("--unsafe-large", action="store_true")

    p = sub.add_parser("nc", help="noncrossing complex queries")
    p.add_argument("action", choices=("count", "list", "degree"))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--input")
    common(p, kn=False)
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("decompose", help="noncrossing expansion of a combination")
    p.add_argument("--input", required=True)
    common(p, kn=False)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("volume", help="relative volume of the root polytope")
    common(p)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("pk", help="PK polytope reports")
    p.add_argument("action", choices=("facets", "vertices", "fvector"))
    common(p)
    p.set_defaults(func=cmd_pk)

    p = sub.add_parser("newton", help="facet data of the tau-product Newton polytope")
    p.add_argument("--fvector", action="store_true")
    common(p)
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("u-check", help="binary identity verification")
    p.add_argument("--J", default=None, help="single subset, e.g. 2,3,6,8")
    p.add_argument("--mode", choices=("symbolic", "random"), default="symbolic")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_ucheck)

    p = sub.add_parser("amplitude", help="noncrossing amplitude evaluation")
    p.add_argument("--pk", action="store_true")
    p.add_argument("--eta", default=None,
                   help="JSON file with an 'eta' map, or 'random-interior'")
    p.add_argument("--shift", action="store_true",
                   help="apply the (3,n) kinematic shift to the eta values")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("kinematics", help="basis-change utilities")
    p.add_argument("action", choices=("basis", "eta-to-s", "s-to-eta"))
    p.add_argument("--input")
    common(p)
    p.set_defaults(func=cmd_kinematics)

    p = sub.add_parser("search", help="eta-hat flip positivity search (open question)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--max-cliques", type=int, default=200000)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_search)

    return top


def main(argv=None):
    cap = os.environ.get("GRASCAT_CAP_MB")
    if cap:
        try:
            import resource
            resource.setrlimit(resource.RLIMIT_AS,
                               (int(cap) << 20, int(cap) << 20))
        except (ImportError, ValueError, OSError):
            pass
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (combinat.ResourceLimitExceeded, polytope.ResourceCap) as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}), file=sys.stderr)
        return 2
    except kinematics.AmplitudePole as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc),
                          "collection": [roots.subset_key(J) for J in exc.collection]}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
