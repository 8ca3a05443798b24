"""Pure-Python kernels: the hot loops behind enumeration and verification.

This module mirrors the compiled extension ``_kernels`` function for
function.  Operation order in the float arithmetic is kept identical in
both implementations so that results agree bit for bit; parity is
enforced by tests.  Callers validate inputs (positive, coprime where
required, within the supported integer range), so the kernels do not.
"""

from math import ceil, floor, gcd, sqrt


def bezout_normalized(r, s):
    """Return (a, b) with a*s - b*r == 1, 0 < a <= r and 0 <= b < s.

    Extended Euclid gives some solution; shifting a by multiples of r
    moves it into (0, r], which pins b into [0, s) automatically.
    Assumes r, s positive and coprime.
    """
    old_r, rem = s, r
    old_u, u = 1, 0
    while rem:
        quot = old_r // rem
        old_r, rem = rem, old_r - quot * rem
        old_u, u = u, old_u - quot * u
    a = old_u % r
    if a == 0:
        a = r
    return a, (a * s - 1) // r


def coprime_pairs_in_disk(p, q, radius):
    """All positive coprime (r, s) with ||(r,s)-(p,q)|| <= radius.

    Lexicographic (r, s) order.  Disk membership is decided on squared
    distances cast to float, matching the compiled kernel exactly.
    """
    if radius < 0.0:
        return []
    rr = radius * radius
    r_lo = max(1, ceil(p - radius))
    r_hi = floor(p + radius)
    s_lo = max(1, ceil(q - radius))
    s_hi = floor(q + radius)
    out = []
    for r in range(r_lo, r_hi + 1):
        dr2 = (r - p) * (r - p)
        for s in range(s_lo, s_hi + 1):
            ds = s - q
            if float(dr2 + ds * ds) <= rr and gcd(r, s) == 1:
                out.append((r, s))
    return out


def envelope_scan(p, q, radius):
    """Segment data for every coprime pair within `radius` of (p, q).

    For each pair (r, s), in lexicographic order, yields the tuple

        (r, s, a, b, a_flip, b_flip, t_contact, gap_alpha, gap_beta,
         deviation)

    where (a, b) are the normalized Bezout coefficients of (r, s),
    (a_flip, b_flip) = (s - b, r - a) those of (s, r), t_contact is the
    parameter at which the segment touches the chord family of the
    curve for (p, q), the gaps measure how far the segment endpoints
    sit from the chord endpoints at t_contact, and deviation is the
    distance from the segment point to the curve point at t_contact.
    """
    if radius < 0.0:
        return []
    rr = radius * radius
    r_lo = max(1, ceil(p - radius))
    r_hi = floor(p + radius)
    s_lo = max(1, ceil(q - radius))
    s_hi = floor(q + radius)
    out = []
    for r in range(r_lo, r_hi + 1):
        dr2 = (r - p) * (r - p)
        for s in range(s_lo, s_hi + 1):
            ds = s - q
            if float(dr2 + ds * ds) > rr or gcd(r, s) != 1:
                continue
            a, b = bezout_normalized(r, s)
            af = s - b
            bf = r - a
            t = 1.0 - float(a * r + b * s) / float(r * r + s * s)
            u = 1.0 - t
            gax = a - u * p
            gay = b - u * q
            gbx = af - t * q
            gby = bf - t * p
            gap_a = sqrt(gax * gax + gay * gay)
            gap_b = sqrt(gbx * gbx + gby * gby)
            lx = u * a + t * af
            ly = u * b + t * bf
            cx = u * u * p + t * t * q
            cy = u * u * q + t * t * p
            dx = lx - cx
            dy = ly - cy
            dev = sqrt(dx * dx + dy * dy)
            out.append((r, s, a, b, af, bf, t, gap_a, gap_b, dev))
    return out
