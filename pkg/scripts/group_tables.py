"""Print the group U_ab on the standard axes of GF(p)^2 for a few primes.

    python3 scripts/group_tables.py 2 3 5 7
"""

import sys

from assocgeom import GF
from assocgeom.cli import canonical_line
from assocgeom.grassmannian import Subspace
from assocgeom.torsors import GroupContext, TorsorContext, group_table, is_cyclic


def main(primes):
    for p in primes:
        F = GF(p)
        a, b, unit = (Subspace.span(F, 2, [row]) for row in ([1, 0], [0, 1], [1, 1]))
        elems, table = group_table(GroupContext(TorsorContext(a, b), unit))
        print(f"GF({p}): order {len(elems)}, cyclic {'yes' if is_cyclic(table) else 'no'}")
        for i, s in enumerate(elems):
            print(f"  {i} {canonical_line(s)}")
        for row in table:
            print("  " + " ".join(map(str, row)))


if __name__ == "__main__":
    main([int(t) for t in sys.argv[1:]] or [2, 3, 5])
