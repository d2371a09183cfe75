"""Packed-integer monomials for the reduction hot loop.

A monomial is packed into one int, one 16-bit field per exponent, so that a
product is an int addition and divisibility is a guard-bit test. Under LEX
the packing puts ``x1`` in the most significant field, which makes integer
comparison the order itself. Under DRL the fields hold the exponents with
``y`` most significant, topped by a total-degree field; the sort key
``deg * 2^S - R`` is again additive.
"""

import heapq

BITS = 16
MAX_EXP = (1 << (BITS - 1)) - 1


class Packer:
    def __init__(self, nvars, order):
        from .mvpoly import LEX

        self.n = nvars
        self.lex = order is LEX
        self.mask = (1 << BITS) - 1
        if self.lex:
            self.shifts = [BITS * (nvars - 1 - k) for k in range(nvars)]
            nfields = nvars
        else:
            self.shifts = [BITS * k for k in range(nvars)]
            nfields = nvars + 1
        self.deg_shift = BITS * nvars
        self.guard = sum(1 << (BITS * i + BITS - 1) for i in range(nfields))

    def pack(self, m):
        v = 0
        for e, s in zip(m, self.shifts):
            if e > MAX_EXP:
                raise OverflowError("exponent %d too large to pack" % e)
            v |= e << s
        if not self.lex:
            v |= sum(m) << self.deg_shift
        return v

    def unpack(self, v):
        mask = self.mask
        return tuple((v >> s) & mask for s in self.shifts)

    def key(self, v):
        if self.lex:
            return v
        s = self.deg_shift
        return ((v >> s) << (s + 1)) - v

    def divides(self, a, b):
        return not ((b - a) & self.guard)


def pack_terms(terms, pk):
    return {pk.pack(m): c for m, c in terms.items()}


def unpack_terms(work, pk):
    return {pk.unpack(v): c for v, c in work.items()}


def make_divisor(terms, pk, p):
    """``(lm, inverse of lc, tail)`` for a packed polynomial dict."""
    key = pk.key
    lm = max(terms, key=key)
    from .field import inv_mod

    tail = [(v, c) for v, c in terms.items() if v != lm]
    return lm, inv_mod(terms[lm], p), tail


def reduce(work, divisors, p, pk, full=True):
    """Reduce the packed dict ``work`` (consumed) by ``divisors``.

    The largest reducible monomial goes first, each time with the earliest
    divisor whose leading monomial divides it. With ``full=False`` stop as
    soon as the leading monomial is irreducible.
    """
    guard = pk.guard
    key = pk.key
    heap = [(-key(v), v) for v in work]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    rem = {}
    get = work.get
    while heap:
        _, m = pop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, inv_lc, tail in divisors:
            if not ((m - lm) & guard):
                q = m - lm
                c = c * inv_lc % p
                for mg, cg in tail:
                    mm = mg + q
                    old = get(mm)
                    if old is None:
                        work[mm] = (-c * cg) % p
                        push(heap, (-key(mm), mm))
                    else:
                        v = (old - c * cg) % p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(work)
                return rem
    return rem
