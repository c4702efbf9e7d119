"""
공통 데이터 모델 정의
모든 좌표는 fractions.Fraction (정확한 유리수), 부동소수점은 쓰지 않음
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from errors import DimensionMismatchError, PreconditionError

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """int / "num/den" 문자열 / Fraction 을 Fraction 으로 변환"""
    if isinstance(value, float):
        raise TypeError(f"부동소수점 좌표는 허용하지 않음: {value!r}")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    """d차원 점"""
    coords: Tuple[Fraction, ...]

    @classmethod
    def of(cls, *values: RationalLike) -> "Point":
        return cls(tuple(as_rational(v) for v in values))

    @classmethod
    def origin(cls, d: int) -> "Point":
        return cls((Fraction(0),) * d)

    @property
    def d(self) -> int:
        return len(self.coords)

    def __getitem__(self, axis: int) -> Fraction:
        return self.coords[axis]

    def replace(self, axis: int, value: Fraction) -> "Point":
        """axis 좌표만 바꾼 새 점"""
        coords = list(self.coords)
        coords[axis] = value
        return Point(tuple(coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def check_same_dimension(*points: Point) -> int:
    """모든 점의 차원이 같은지 확인하고 차원 반환"""
    dims = {p.d for p in points}
    if len(dims) > 1:
        raise DimensionMismatchError(f"차원 불일치: {sorted(dims)}")
    return dims.pop() if dims else 0


@dataclass(frozen=True, order=True)
class Box:
    """터미널 쌍과 그 bounding box (쌍 = box 로 취급)"""
    lo: Point                    # 성분별 최솟값
    hi: Point                    # 성분별 최댓값
    pair: Tuple[Point, Point]    # 원래 터미널 두 개 (사전순 정렬)

    @classmethod
    def from_terminals(cls, t: Point, u: Point) -> "Box":
        check_same_dimension(t, u)
        lo = Point(tuple(min(a, b) for a, b in zip(t.coords, u.coords)))
        hi = Point(tuple(max(a, b) for a, b in zip(t.coords, u.coords)))
        return cls(lo=lo, hi=hi, pair=tuple(sorted((t, u))))

    @property
    def d(self) -> int:
        return self.lo.d

    @property
    def is_degenerate(self) -> bool:
        return self.pair[0] == self.pair[1]

    def contains(self, p: Point) -> bool:
        return all(l <= c <= h for l, c, h in zip(self.lo.coords, p.coords, self.hi.coords))

    def straddles(self, axis: int, value: Fraction) -> bool:
        """axis 방향으로 value 를 (약하게) 가로지르는지"""
        return self.lo[axis] <= value <= self.hi[axis]


@dataclass(frozen=True, order=True)
class Segment:
    """축에 평행한 닫힌 선분, a 는 axis 방향으로 b 보다 작거나 같음"""
    a: Point
    b: Point
    axis: int

    @classmethod
    def between(cls, p: Point, q: Point) -> "Segment":
        check_same_dimension(p, q)
        diff = [i for i in range(p.d) if p[i] != q[i]]
        if len(diff) > 1:
            raise PreconditionError(f"축 평행 선분이 아님: {p} - {q}")
        axis = diff[0] if diff else 0
        a, b = (p, q) if p[axis] <= q[axis] else (q, p)
        return cls(a=a, b=b, axis=axis)

    @property
    def d(self) -> int:
        return self.a.d

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    @property
    def length(self) -> Fraction:
        return self.b[self.axis] - self.a[self.axis]

    @property
    def line_key(self) -> Tuple[int, Tuple[Fraction, ...]]:
        """같은 직선 위의 선분끼리 공유하는 키 (axis, 고정 좌표들)"""
        fixed = self.a.coords[:self.axis] + self.a.coords[self.axis + 1:]
        return self.axis, fixed

    @classmethod
    def on_line(cls, axis: int, fixed: Sequence[Fraction], lo: Fraction, hi: Fraction) -> "Segment":
        head, tail = tuple(fixed[:axis]), tuple(fixed[axis:])
        return cls(a=Point(head + (lo,) + tail), b=Point(head + (hi,) + tail), axis=axis)

    def contains(self, p: Point) -> bool:
        for i in range(self.d):
            if i == self.axis:
                if not self.a[i] <= p[i] <= self.b[i]:
                    return False
            elif p[i] != self.a[i]:
                return False
        return True


@dataclass(frozen=True)
class RectilinearNetwork:
    """축 평행 선분들의 집합, 길이는 합집합의 1차원 측도"""
    segments: Tuple[Segment, ...] = ()
    # canonicalize 결과임을 표시 (같음 비교에는 쓰지 않음)
    canonical: bool = field(default=False, compare=False, repr=False)

    @classmethod
    def of(cls, segments: Iterable[Segment]) -> "RectilinearNetwork":
        return cls(tuple(segments))

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def d(self) -> Optional[int]:
        return self.segments[0].d if self.segments else None


@dataclass(frozen=True)
class Instance:
    """GMMN 인스턴스: 차원 d 와 터미널 쌍 목록 (선택적으로 분리 좌표 s_1..s_j)"""
    d: int
    pairs: Tuple[Box, ...] = ()
    separators: Tuple[Fraction, ...] = ()   # 길이 = separation level j
    seed: Optional[int] = None              # 생성기 시드 (기록용)
    provenance: Optional[str] = None        # 생성 출처 (기록용)

    @classmethod
    def from_pairs(
        cls,
        d: int,
        pairs: Iterable[Tuple[Point, Point]],
        separators: Sequence[Fraction] = (),
        **meta,
    ) -> "Instance":
        """(t, t') 목록으로 생성, t = t' 인 퇴화 쌍은 버림"""
        boxes = []
        for t, u in pairs:
            if t.d != d or u.d != d:
                raise DimensionMismatchError(f"{d}차원 인스턴스에 {t.d}/{u.d}차원 터미널")
            if t == u:
                continue
            boxes.append(Box.from_terminals(t, u))
        return cls(d=d, pairs=tuple(boxes), separators=tuple(separators), **meta)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def level(self) -> int:
        return len(self.separators)

    def is_empty(self) -> bool:
        return not self.pairs

    def terminals(self) -> Tuple[Point, ...]:
        """모든 터미널 (중복 제거, 사전순)"""
        return tuple(sorted({t for box in self.pairs for t in box.pair}))

    def with_pairs(self, pairs: Iterable[Box], separators: Optional[Sequence[Fraction]] = None) -> "Instance":
        return Instance(
            d=self.d,
            pairs=tuple(pairs),
            separators=tuple(self.separators if separators is None else separators),
            seed=self.seed,
            provenance=self.provenance,
        )

    def separation_violations(self) -> list:
        """분리 조건을 어기는 (쌍, 축) 목록"""
        return [
            (box, i)
            for box in self.pairs
            for i, s in enumerate(self.separators)
            if not box.straddles(i, s)
        ]
