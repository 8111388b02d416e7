"""Integer sequences behind the degree bounds, color budgets, and tree sizes.

The recurrences are the source of truth; closed forms are asserted against
them on every call.  All arithmetic is exact (ints and Fractions).
"""

from __future__ import annotations

from fractions import Fraction


def type1_degree_bound(k: int) -> int:
    """Degree bound for radius-k conflict graphs over odd-cycle transversals.

    t(2) = 2, t(3) = 4, t(k) = t(k-1) + 2*t(k-2) + 2.  Equals
    (2^(k+1) - (-1)^(k+1) - 3) / 3 exactly.
    """
    if k < 2:
        raise ValueError("defined for k >= 2")
    a, b = 2, 4  # values at k=2, k=3
    if k == 2:
        val = a
    elif k == 3:
        val = b
    else:
        for _ in range(4, k + 1):
            a, b = b, b + 2 * a + 2
        val = b
    closed, rem = divmod(2 ** (k + 1) - (-1) ** (k + 1) - 3, 3)
    assert rem == 0 and closed == val, f"closed form mismatch at k={k}"
    return val


def type2_layer_count(k: int) -> int:
    """Count of half-cycle-set edges entering at distance exactly k.

    c(1) = 0 and c(k) = 2^k - c(k-1).
    """
    if k < 1:
        raise ValueError("defined for k >= 1")
    c = 0
    for i in range(2, k + 1):
        c = 2 ** i - c
    return c


def type2_degree_bound(k: int) -> int:
    """Degree bound for radius-k conflict graphs over half-cycle edge sets.

    Sum of the layer counts up to k; equals (2^(k+2) + 2*(-1)^(k+2) - 6) / 3
    exactly.  A variant closed form floats around (see
    ``type2_degree_bound_variant``); the recurrence arbitrates.
    """
    if k < 2:
        raise ValueError("defined for k >= 2")
    total, c = 0, 0
    for i in range(2, k + 1):
        c = 2 ** i - c
        total += c
    closed, rem = divmod(2 ** (k + 2) + 2 * (-1) ** (k + 2) - 6, 3)
    assert rem == 0 and closed == total, f"closed form mismatch at k={k}"
    return total


def type2_degree_bound_variant(k: int) -> int:
    """Alternative closed form (2^(k+3) + 2*(-1)^(k+1) - 6) / 3.

    Disagrees with the recurrence value at k=2 (gives 8, not 4).  Kept only to
    document the discrepancy; never used in budgets.
    """
    if k < 2:
        raise ValueError("defined for k >= 2")
    val, rem = divmod(2 ** (k + 3) + 2 * (-1) ** (k + 1) - 6, 3)
    assert rem == 0
    return val


def tree_edge_count(i: int, even_diameter: bool = False) -> int:
    """Edge count of the i-th leaf-doubling tree.

    3*(2^i - 1) for the odd-diameter family, 2^(i+2) - 3 for the
    even-diameter variant (see packedge.families).
    """
    if i < 1:
        raise ValueError("defined for i >= 1")
    return 2 ** (i + 2) - 3 if even_diameter else 3 * (2 ** i - 1)


def counting_bound(max_terms: int) -> Fraction:
    """Partial sum of 1/(3*(2^i - 1)) + 1/(2^(i+2) - 3) for i = 1..max_terms.

    Monotone increasing and always below 0.8793; the strict gap to 1 is what
    forces unbounded packing chromatic numbers on the tree families.
    """
    if max_terms < 1:
        raise ValueError("need at least one term")
    total = Fraction(0)
    for i in range(1, max_terms + 1):
        total += Fraction(1, 3 * (2 ** i - 1)) + Fraction(1, 2 ** (i + 2) - 3)
    return total


def sequence_table(kind: str, max_k: int) -> list[tuple[int, int]]:
    """Rows (k, value) of one bound table: 'a' and 'b' start at k=2, 'c' at 1."""
    fn, start = {
        "a": (type1_degree_bound, 2),
        "b": (type2_degree_bound, 2),
        "c": (type2_layer_count, 1),
    }[kind]
    return [(k, fn(k)) for k in range(start, max_k + 1)]


# --- radius-k color budgets of the constructive colorings ---------------------

#: Radius-2 colors needed after two radius-1 colors, order >= 12 (sharp path).
SHARP_112_COLORS = 5
#: Same, when the graph is 3-edge-colorable.
SHARP_112_COLORS_3EC = 4


def colors_11k(k: int) -> int:
    """Generic radius-k color budget after two radius-1 colors."""
    return type1_degree_bound(k) + type2_degree_bound(k) + 2


def colors_11k_3ec(k: int) -> int:
    return type2_degree_bound(k) + 1


def colors_1k(k: int) -> int:
    return type1_degree_bound(k) + 2 * type2_degree_bound(k) + 3


def colors_1k_3ec(k: int) -> int:
    return 2 * type2_degree_bound(k) + 2
