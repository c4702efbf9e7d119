"""
네트워크 정규화와 길이
같은 직선 위 선분은 겹치거나 맞닿으면 하나로 합침 (최대 서로소 표현)
"""

from collections import defaultdict
from fractions import Fraction

from models import RectilinearNetwork, Segment


def segment_key(seg: Segment):
    """Segment 의 기본 순서와 같은 정렬 키 (비교마다 tuple 을 만들지 않음)"""
    return seg.a.coords, seg.b.coords, seg.axis


def canonicalize(net: RectilinearNetwork) -> RectilinearNetwork:
    """직선별로 구간을 병합하고 길이 0 선분 제거"""
    if net.canonical:
        return net
    lines = defaultdict(list)
    for seg in net.segments:
        if seg.is_degenerate:
            continue
        lines[seg.line_key].append((seg.a[seg.axis], seg.b[seg.axis]))

    merged = []
    for (axis, fixed), runs in lines.items():
        runs.sort()
        cur_lo, cur_hi = runs[0]
        for lo, hi in runs[1:]:
            if lo <= cur_hi:
                if hi > cur_hi:
                    cur_hi = hi
            else:
                merged.append(Segment.on_line(axis, fixed, cur_lo, cur_hi))
                cur_lo, cur_hi = lo, hi
        merged.append(Segment.on_line(axis, fixed, cur_lo, cur_hi))

    merged.sort(key=segment_key)
    return RectilinearNetwork(tuple(merged), canonical=True)


def network_length(net: RectilinearNetwork) -> Fraction:
    """합집합 측도 = 정규화 후 선분 길이의 합"""
    return sum((seg.length for seg in canonicalize(net).segments), Fraction(0))


def union_networks(*nets: RectilinearNetwork) -> RectilinearNetwork:
    parts = [net for net in nets if net.segments]
    if len(parts) == 1 and parts[0].canonical:
        return parts[0]
    return canonicalize(RectilinearNetwork(tuple(s for net in parts for s in net.segments)))
