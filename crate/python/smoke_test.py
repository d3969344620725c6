"""Smoke test for the kbound_py extension.

Build and run from the repository root:

    cargo build --release -p kbound-py --features extension-module
    cp target/release/libkbound_py.so python/kbound_py.so
    python3 python/smoke_test.py
"""

import itertools
import sys

import kbound_py as kb


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def main():
    # Counts against direct enumeration.
    for t in range(12):
        assert kb.partition_count(t) == sum(1 for _ in partitions(t))
    for s, t in itertools.product(range(1, 4), range(6)):
        assert kb.multipartition_count(s, t) == kb.multipartition_enumerate(s, t)
    for ell, w in [(3, 9), (5, 12), (2, 10)]:
        assert kb.p_ell(ell, w) == len(kb.ell_compositions(ell, w))

    # Closed formula against the class-by-class count.
    for fam, ell, d, a, w in [("GL", 3, 1, 1, 4), ("GU", 5, 2, 2, 3), ("Sp", 7, 3, 1, 5)]:
        assert kb.closed_form_count(fam, ell, d, a, w) == kb.block_count_proof_path(fam, ell, d, a, w)

    inv = kb.evaluate_block("Sp", 3, 1, 1, 2)
    assert inv.k_b == kb.closed_form_count("Sp", 3, 1, 1, 2)
    assert inv.k_b <= 3 ** inv.defect_exponent
    assert inv.abelian_defect and inv.verdict.startswith("HOLDS")
    print(inv)

    # Large weights stay exact.
    big = kb.evaluate_block("GL", 5, 4, 3, 60)
    assert isinstance(big.k_b, int) and big.k_b > 2**64
    assert big.k_b < 5 ** big.defect_exponent

    print(kb.evaluate_principal("SLrange", 3, 1, 3))
    print(kb.evaluate_psl(5, 1))
    print(kb.evaluate_block_for_q("GU", 4, 5, 2))

    # G(m,1,n) has k(m,n) classes.
    for m, n in [(1, 4), (2, 3), (3, 2)]:
        assert kb.gmpn_class_count(m, 1, n) == kb.multipartition_count(m, n)
    assert kb.gl_ell_class_count(2, 4, 3) > 0

    for group, ell, sum_e, sum_sizes, holds in kb.average_checks():
        assert holds and sum_e < sum_sizes, group
    assert kb.e8_series_bound_check(1) and kb.e8_series_bound_check(2)
    assert kb.unipotent_count("E8") > kb.unipotent_count("E6")
    assert kb.fg_margin("E8", 2)

    try:
        kb.evaluate_block("GL", 2, 1, 1, 1)
    except ValueError as e:
        print("rejected:", e)
    else:
        sys.exit("even ell was accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
