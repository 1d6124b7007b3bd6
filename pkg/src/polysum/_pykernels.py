"""Pure-Python implementations of the double-description hot loops.

Zero sets are Python ints used as bitmasks over constraint indices.
"""


def adjacent_pairs(masks, pos, neg, min_common):
    """Pairs ``(i, j)`` (i in ``pos``, j in ``neg``) of adjacent extreme rays.

    Two extreme rays are adjacent when their common zero set has at least
    ``min_common`` members and no third ray's zero set contains it.
    """
    out = []
    n = len(masks)
    for i in pos:
        zi = masks[i]
        for j in neg:
            common = zi & masks[j]
            if bin(common).count("1") < min_common:
                continue
            for k in range(n):
                if k != i and k != j and masks[k] & common == common:
                    break
            else:
                out.append((i, j))
    return out


def dot_all(rows, v):
    """Integer dot product of ``v`` with every row."""
    return [sum(a * b for a, b in zip(r, v)) for r in rows]
