#!/usr/bin/env python3
"""Smoke test for the hopf_trees_py extension module.

Build the extension first, then run this script from the repository root:

    cargo build -p hopf-trees-py
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libhopf_trees_py.so", "libhopf_trees_py.dylib", "hopf_trees_py.dll")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("extension not built; run: cargo build -p hopf-trees-py")
    tmp = Path(tempfile.mkdtemp(prefix="hopf-trees-py-"))
    shutil.copy(built, tmp / "hopf_trees_py.so")
    sys.path.insert(0, str(tmp))
    import hopf_trees_py

    return hopf_trees_py


def main():
    ht = load_module()

    # monomial product of the one-node generators
    prod = dict((key, (int(n), int(d))) for n, d, key in ht.product("ysym", "(..)", "(..)", basis="M"))
    assert prod == {"((..).)": (1, 1), "(.(..))": (2, 1)}, prod

    # coproduct terms are graded and the antipode routes agree
    cop = ht.coproduct("qsym", "c:2,1", basis="M")
    assert (1, 1, "c:2", "c:1") in [(int(n), int(d), a, b) for n, d, a, b in cop]
    chain = "(.(..))"
    assert ht.antipode("ysym", chain, basis="M") == ht.antipode("ysym", chain, basis="M", explicit=True)

    # basis conversion round trip
    f = ht.convert("ysym", "M", "F", chain)
    back = {}
    for n, d, key in f:
        for n2, d2, key2 in ht.convert("ysym", "F", "M", key):
            q = (int(n) * int(n2), int(d) * int(d2))
            back[key2] = (back.get(key2, (0, 1))[0] + q[0], 1)
    assert {k: v for k, v in back.items() if v[0] != 0} == {chain: (1, 1)}, back

    # maps, posets, and the Moebius function
    assert ht.poset_map("lambda", 3, "p:132") == "((..)(..))"
    assert ht.leq("tamari", 2, "((..).)", "(.(..))")
    assert ht.moebius("weak", 2, "p:12", "p:21") == -1
    assert ("((.(..)).)", -1) in ht.moebius_row("tamari", 3, "(((..).).)")

    # kernels, primitives, and dimensions
    assert ht.kernel_dims(4) == (9, 5)
    assert len(ht.kernel_basis("l", 4)) == 5
    assert ht.cocycle("lambda-gamma", "(..)", "(..)") is not None
    assert len(ht.primitives(3)) == ht.catalan(2) == 2
    assert ht.coradical_level("((..).)") == 1

    # morphisms and isomorphisms through the generic map entry point
    assert ht.basis_map("morphism", "lambda", "p:132", basis="M") == []
    assert any("(..)" in key for _, _, key in ht.basis_map("iso", "phi", "()"))

    # one verification suite end to end
    ok, checks, counterexample = ht.verify("galois", max_n=4)
    assert ok and checks > 0 and counterexample is None

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
