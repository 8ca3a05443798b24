"""Compiled kernels: disk enumeration and per-pair segment metrics.

Function-for-function mirror of ``_kernels_py`` with the same float
operation order, so both backends produce bit-identical results (the
build disables FP contraction).  Callers validate inputs; everything
here fits signed 64-bit for values up to 2**31.
"""

from libc.math cimport ceil, floor, sqrt


cdef inline long long c_gcd(long long x, long long y) noexcept nogil:
    cdef long long t
    while y:
        t = x % y
        x = y
        y = t
    return x


cdef inline void c_bezout(long long r, long long s,
                          long long* a_out, long long* b_out) noexcept nogil:
    # Extended Euclid on (s, r) tracking the coefficient of s, then the
    # shift into (0, r] that normalizes the solution.
    cdef long long old_r = s, rem = r
    cdef long long old_u = 1, u = 0
    cdef long long quot, t, a
    while rem:
        quot = old_r / rem
        t = old_r - quot * rem
        old_r = rem
        rem = t
        t = old_u - quot * u
        old_u = u
        u = t
    a = old_u % r  # C remainder: may be negative or zero
    if a <= 0:
        a += r
    a_out[0] = a
    b_out[0] = (a * s - 1) / r


def bezout_normalized(long long r, long long s):
    """Return (a, b) with a*s - b*r == 1, 0 < a <= r and 0 <= b < s."""
    cdef long long a, b
    c_bezout(r, s, &a, &b)
    return a, b


def coprime_pairs_in_disk(long long p, long long q, double radius):
    """All positive coprime (r, s) with ||(r,s)-(p,q)|| <= radius."""
    if radius < 0.0:
        return []
    cdef double rr = radius * radius
    cdef long long r_lo = <long long> ceil(p - radius)
    cdef long long r_hi = <long long> floor(p + radius)
    cdef long long s_lo = <long long> ceil(q - radius)
    cdef long long s_hi = <long long> floor(q + radius)
    if r_lo < 1:
        r_lo = 1
    if s_lo < 1:
        s_lo = 1
    cdef long long r, s, dr2, ds
    out = []
    for r in range(r_lo, r_hi + 1):
        dr2 = (r - p) * (r - p)
        for s in range(s_lo, s_hi + 1):
            ds = s - q
            if <double> (dr2 + ds * ds) <= rr and c_gcd(r, s) == 1:
                out.append((r, s))
    return out


def envelope_scan(long long p, long long q, double radius):
    """Segment data for every coprime pair within `radius` of (p, q).

    Same tuple layout as ``_kernels_py.envelope_scan``.
    """
    if radius < 0.0:
        return []
    cdef double rr = radius * radius
    cdef long long r_lo = <long long> ceil(p - radius)
    cdef long long r_hi = <long long> floor(p + radius)
    cdef long long s_lo = <long long> ceil(q - radius)
    cdef long long s_hi = <long long> floor(q + radius)
    if r_lo < 1:
        r_lo = 1
    if s_lo < 1:
        s_lo = 1
    cdef long long r, s, dr2, ds, a, b, af, bf
    cdef double t, u, gax, gay, gbx, gby, gap_a, gap_b
    cdef double lx, ly, cx, cy, dx, dy, dev
    out = []
    for r in range(r_lo, r_hi + 1):
        dr2 = (r - p) * (r - p)
        for s in range(s_lo, s_hi + 1):
            ds = s - q
            if <double> (dr2 + ds * ds) > rr or c_gcd(r, s) != 1:
                continue
            c_bezout(r, s, &a, &b)
            af = s - b
            bf = r - a
            t = 1.0 - <double> (a * r + b * s) / <double> (r * r + s * s)
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
