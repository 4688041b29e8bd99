"""Motivic volume from resolution data: the blow-up of the plane and the
order-of-vanishing ideal on the affine line.

The volume formula is L^{-d} * sum over strata of
[stratum] * prod (L-1)/(L^{nu_i}-1); the ideal twist replaces nu_i by
nu_i + N_i.  Both examples have hand-checkable closed forms.
"""
from fractions import Fraction

from motivic.grring import LaurentPoly, MotClass, mot_eq
from motivic.motvol import (Divisor, ResolutionData, Stratum,
                            realize_volume, volume_from_resolution,
                            volume_with_ideal)
from motivic.parsing import format_motclass, parse_motclass

fs = frozenset

print("blow-up of the plane at the origin")
print("  d = 2, one exceptional divisor with nu = 2")
print("  strata: complement [A^2 - pt] = L^2 - 1, divisor [P^1] = L + 1")
res = ResolutionData(2, [Divisor("E", 2)], [
    Stratum(fs(), cls=parse_motclass("L^2 - 1")),
    Stratum(fs({"E"}), cls=parse_motclass("L + 1"))])
vol = volume_from_resolution(res)
print("  volume:", format_motclass(vol),
      "(the smooth-space value [A^2] L^{-2} = 1)")
print("  chi:", realize_volume(res, "chi"))
print()

print("integral of L^(-ord_t x) over the arcs of the affine line")
for N in (1, 2):
    res = ResolutionData(1, [Divisor("E", 1, N=N)], [
        Stratum(fs(), cls=parse_motclass("L - 1")),
        Stratum(fs({"E"}), cls=MotClass.one())])
    twisted = volume_with_ideal(res)
    # the same value level by level: sum_e (L-1) L^{-(e+1)} L^{-N e},
    # a geometric series with sum (L-1) L^N / (L^{N+1} - 1)
    oracle = (MotClass(LaurentPoly.binom(1))
              * MotClass(LaurentPoly.L(N), (N + 1,)))
    print(f"  N = {N}: {format_motclass(twisted)}   "
          f"level-sum oracle agrees: {mot_eq(twisted, oracle)}")
    want = Fraction(2 ** N, 2 ** (N + 1) - 1)  # (L-1) L^N / (L^{N+1}-1) at L=2
    print(f"         value at L = 2: {twisted.eval_at(2)} (expected {want})")
