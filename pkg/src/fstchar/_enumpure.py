"""Pure-Python enumeration core for admissible configurations.

Walks the tree of finitely supported sequences (a_0, a_1, ...) of nonnegative
integers subject to

  * window sums: a_i + ... + a_{i+l} <= level for every i >= 0,
  * either partial-sum initial conditions a_0+...+a_r <= init_bounds[r]
    for r < l, or an exact forced prefix (a_0, a_1) = init_prefix,

within a finite search window given by any combination of

  * q_order:    module degree sum (t // l + 1) * a_t <= q_order,
  * caps:       per-color weights sum_{t = i-1 mod l} a_t <= caps[i-1],
  * energy_max: first moment sum t * a_t <= energy_max.

At least one of q_order / energy_max must be set, otherwise the tree is
infinite.  A compiled twin of `count_weight_degree` lives in _enumcore;
keep the two in sync (the test suite compares them directly).
"""

KIND = "pure"


def _validate(l, level, init_bounds, init_prefix, q_order, caps, energy_max):
    if l < 1:
        raise ValueError("need l >= 1")
    if level < 0:
        raise ValueError("level must be >= 0")
    if (init_bounds is None) == (init_prefix is None):
        raise ValueError("exactly one of init_bounds/init_prefix is required")
    if init_bounds is not None and len(init_bounds) != l:
        raise ValueError(f"init_bounds must have length l={l}")
    if init_prefix is not None and len(init_prefix) != 2:
        raise ValueError("init_prefix must be a pair (a_0, a_1)")
    if q_order is None and energy_max is None:
        raise ValueError("need q_order or energy_max to make the search finite")
    if caps is not None and len(caps) != l:
        raise ValueError(f"caps must have length l={l}")


def _walk(l, level, init_bounds, init_prefix, q_order, caps, energy_max):
    """Yield (degree, weight-tuple, live dense list) at every admissible node.

    The dense list is reused between yields; consumers must copy it if they
    keep it.  Every yielded node is one admissible configuration (the list
    never has trailing zeros), and each configuration appears exactly once.
    """
    _validate(l, level, init_bounds, init_prefix, q_order, caps, energy_max)

    dense = []
    counts = [0] * l
    degree = 0
    energy = 0

    if init_prefix is not None:
        a0, b0 = init_prefix
        if a0 < 0 or b0 < 0:
            raise ValueError("init_prefix entries must be >= 0")
        if a0 + b0 > level:
            return  # the window sum over positions 0..l already fails
        dense = [a0, b0]
        while dense and dense[-1] == 0:
            dense.pop()
        counts[0] += a0
        counts[1 % l] += b0
        degree = a0 + (1 // l + 1) * b0
        energy = b0
        if q_order is not None and degree > q_order:
            return
        if energy_max is not None and energy > energy_max:
            return
        if caps is not None and any(c > cap for c, cap in zip(counts, caps)):
            return
        start = 2
    else:
        start = 0

    def rec(start, degree, energy):
        yield degree, tuple(counts), dense
        s = start
        while True:
            tf = s // l + 1
            if q_order is not None and degree + tf > q_order:
                break
            if energy_max is not None and s >= 1 and energy + s > energy_max:
                break
            vmax = level - sum(dense[max(0, s - l):s])
            if q_order is not None:
                vmax = min(vmax, (q_order - degree) // tf)
            if energy_max is not None and s >= 1:
                vmax = min(vmax, (energy_max - energy) // s)
            color = s % l
            if caps is not None:
                vmax = min(vmax, caps[color] - counts[color])
            if init_bounds is not None and s < l:
                vmax = min(vmax, init_bounds[s] - sum(dense[:s]))
            if vmax >= 1:
                base_len = len(dense)
                dense.extend([0] * (s - base_len))
                dense.append(0)
                for v in range(1, vmax + 1):
                    dense[s] = v
                    counts[color] += v
                    yield from rec(s + 1, degree + tf * v, energy + s * v)
                    counts[color] -= v
                del dense[base_len:]
            s += 1

    yield from rec(start, degree, energy)


def iter_configs(l, level, init_bounds=None, init_prefix=None, q_order=None,
                 caps=None, energy_max=None):
    """Yield each admissible configuration in the window once, as a tuple."""
    for _, _, dense in _walk(l, level, init_bounds, init_prefix, q_order,
                             caps, energy_max):
        yield tuple(dense)


def count_weight_degree(l, level, init_bounds=None, init_prefix=None,
                        q_order=None, caps=None, energy_max=None):
    """Histogram of admissible configurations by (n_1, ..., n_l, degree)."""
    out = {}
    for degree, weight, _ in _walk(l, level, init_bounds, init_prefix,
                                   q_order, caps, energy_max):
        key = weight + (degree,)
        out[key] = out.get(key, 0) + 1
    return out
