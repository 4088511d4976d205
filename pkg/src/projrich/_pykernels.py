"""Pure-Python reference kernels; the compiled extension mirrors these signatures."""

from __future__ import annotations


def im_length(chi, inv_mask, pos_flat, rank):
    """Iwahori-Matsumoto length of ``t^chi w``.

    ``inv_mask[k]`` is 1 when ``w^{-1}`` sends the k-th positive root to a
    negative root; ``pos_flat`` holds the positive roots row by row.
    """
    total = 0
    for k, m in enumerate(inv_mask):
        base = k * rank
        p = m
        for j in range(rank):
            p += chi[j] * pos_flat[base + j]
        total += p if p >= 0 else -p
    return total


def mul_table(right, parent):
    """Full multiplication table from right multiplication by generators.

    Elements are numbered in breadth-first order, so ``parent[b] = (j, g)``
    has ``j < b`` and ``a * b = (a * elt_j) * s_g``.
    """
    n = len(right)
    table = []
    for a in range(n):
        row = [0] * n
        row[0] = a
        for b in range(1, n):
            j, g = parent[b]
            row[b] = right[row[j]][g]
        table.append(row)
    return table


def bruhat_cones(right, parent):
    """``cones[x][z] == 1`` iff ``z <= x`` in Bruhat order.

    Uses ``cone(p s) = cone(p) | cone(p) s`` for the breadth-first parent
    ``p`` of ``x``, which satisfies ``l(x) = l(p) + 1``.
    """
    n = len(right)
    cones = [bytearray(n) for _ in range(n)]
    cones[0][0] = 1
    for x in range(1, n):
        j, g = parent[x]
        src = cones[j]
        dst = cones[x]
        dst[:] = src
        for z in range(n):
            if src[z]:
                dst[right[z][g]] = 1
    return cones
