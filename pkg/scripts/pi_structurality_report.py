"""Empirical structurality of the dilation maps Pi_r.

For every scalar r and every pair (x, a) of a small Grassmannian this checks
whether (z -> Pi_r(x,a,z), z -> Pi_r(a,x,z)) and
(a -> Pi_r(x,a,z), a -> Pi_r(z,a,x)) are structural pairs for Gamma.  It also
checks the pair (push, pull) of the relation
{(xi + alpha, xi + r alpha) : xi in x, alpha in a}, whose pushforward is
always Pi_r(x,a,.) and whose pullback agrees with Pi_r(a,x,.) only for
invertible r.  Outcomes are tabulated the outcome by whether x is transversal to a and whether r(1-r) is
a unit.  Nothing is asserted; the script only reports.

    python3 scripts/pi_structurality_report.py --field p=2 --n 2 --exhaustive
    python3 scripts/pi_structurality_report.py --field p=3 --n 2 --budget 300
"""

import argparse
import collections
import itertools

from assocgeom.gamma import pi_extended
from assocgeom.grassmannian import Subspace, enumerate_subspaces, is_transversal
from assocgeom.linalg import Field
from assocgeom.relations import LinearRelation, check_structural_pair, pushforward, relation_pair


def lam(r, x, a):
    return lambda z: pi_extended(r, x, a, z)


def mu(r, x, z):
    return lambda a: pi_extended(r, x, a, z)


def dilation_relation(r, x, a):
    F, n = x.field, x.n
    rows = [list(v) + list(v) for v in x.basis]
    rows += [list(v) + [F(r * c) for c in v] for v in a.basis]
    return LinearRelation(n, n, Subspace.span(F, 2 * n, rows))


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--field", type=Field.parse, default=Field(2))
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--budget", type=int, default=200)
    ap.add_argument("--exhaustive", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    F, n = args.field, args.n
    if F.p is None:
        raise SystemExit("finite fields only")
    pts = enumerate_subspaces(F, n)
    space = (F, n)
    tally = collections.Counter()
    witnesses = {}
    for r in range(F.p):
        unit = (r * (1 - r)) % F.p != 0
        for u, v in itertools.product(pts, repeat=2):
            transversal = is_transversal(u, v)
            rel = dilation_relation(r, u, v)
            assert all(pushforward(rel, z) == pi_extended(r, u, v, z) for z in pts)
            families = (
                ("lambda", lam(r, u, v), lam(r, v, u)),
                ("mu", mu(r, u, v), mu(r, v, u)),
                ("relation", *relation_pair(rel)),
            )
            for kind, f, g in families:
                rep = check_structural_pair(f, g, space, space, budget=args.budget, seed=args.seed, exhaustive=args.exhaustive)
                key = (kind, transversal, unit)
                tally[key + (rep.passed,)] += 1
                if not rep.passed and key not in witnesses:
                    witnesses[key] = (r, u, v, rep)

    print(f"Gras({F.spec()}, n={n}), {len(pts)} points, {'exhaustive' if args.exhaustive else f'budget {args.budget}'}")
    print(f"{'pair':9} {'u T v':6} {'r(1-r) unit':12} {'structural':>10} {'not':>6}")
    for kind in ("lambda", "mu", "relation"):
        for transversal in (True, False):
            for unit in (True, False):
                good = tally[(kind, transversal, unit, True)]
                bad = tally[(kind, transversal, unit, False)]
                if good or bad:
                    print(f"{kind:9} {str(transversal):6} {str(unit):12} {good:10d} {bad:6d}")
    for (kind, transversal, unit), (r, u, v, rep) in sorted(witnesses.items()):
        print(f"first failure {kind} transversal={transversal} unit={unit}: r={r} u={u.basis} v={v.basis} at {[s.basis for s in rep.counterexample]} ({rep.side})")


if __name__ == "__main__":
    main()
