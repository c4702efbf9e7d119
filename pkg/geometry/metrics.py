"""
L1 거리 계산
"""

from fractions import Fraction

from models import Instance, Point, check_same_dimension


def manhattan_distance(p: Point, q: Point) -> Fraction:
    """sum_i |p_i - q_i|"""
    check_same_dimension(p, q)
    return sum((abs(a - b) for a, b in zip(p.coords, q.coords)), Fraction(0))


def max_pair_distance(inst: Instance) -> Fraction:
    """가장 먼 터미널 쌍의 거리 (모든 feasible 네트워크의 하한)"""
    return max((manhattan_distance(*box.pair) for box in inst.pairs), default=Fraction(0))
