"""
네트워크 파일 (줄 단위 텍스트)

    # gmmn-network v1
    dimension 2
    segments 2
    length 3
    seg 0 -1 -1 0 -1
    seg 1 0 -1 0 1

seg 레코드는 축 번호와 두 끝점 (축 방향으로 작은 쪽이 먼저)
length 는 합집합 길이, 다시 계산한 값과 같아야 함
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import FormatError
from models import Point, RectilinearNetwork, Segment
from geometry.network import network_length
from geometry.rational import format_rational, parse_rational
from .instance_file import _int_field, _records

NETWORK_HEADER = "# gmmn-network v1"


def dump_network(net: RectilinearNetwork, d: Optional[int] = None) -> str:
    """빈 네트워크는 차원을 알 수 없으므로 d 를 넘겨야 함"""
    d = net.d if net.d is not None else d
    if d is None:
        raise FormatError("빈 네트워크의 차원이 지정되지 않음")
    lines = [
        NETWORK_HEADER,
        f"dimension {d}",
        f"segments {len(net)}",
        f"length {format_rational(network_length(net))}",
    ]
    for seg in net.segments:
        coords = seg.a.coords + seg.b.coords
        lines.append(f"seg {seg.axis} " + " ".join(format_rational(c) for c in coords))
    return "\n".join(lines) + "\n"


def _segment(no: int, d: int, rest: str) -> Segment:
    tokens = rest.split()
    if len(tokens) != 2 * d + 1:
        raise FormatError(f"{no}행: 토큰 {len(tokens)}개, {2 * d + 1}개 필요 ({d}차원)")
    axis = _int_field(no, "seg", tokens[0])
    if not 0 <= axis < d:
        raise FormatError(f"{no}행: 축 번호 범위 밖: {axis}")
    coords = [parse_rational(tok) for tok in tokens[1:]]
    a, b = Point(tuple(coords[:d])), Point(tuple(coords[d:]))
    for i in range(d):
        if i != axis and a[i] != b[i]:
            raise FormatError(f"{no}행: 축 {axis} 에 평행하지 않은 선분 {a} - {b}")
    if a[axis] > b[axis]:
        raise FormatError(f"{no}행: 끝점 순서가 뒤집힘 {a} - {b}")
    return Segment(a=a, b=b, axis=axis)


@dataclass(frozen=True)
class NetworkFile:
    dimension: int
    network: RectilinearNetwork


def parse_network_file(text: str) -> NetworkFile:
    d: Optional[int] = None
    declared: Optional[int] = None
    stated = None
    segments = []

    for no, keyword, rest in _records(text, NETWORK_HEADER):
        if keyword == "dimension":
            d = _int_field(no, keyword, rest)
            if d < 1:
                raise FormatError(f"{no}행: 차원은 1 이상: {d}")
        elif keyword == "segments":
            declared = _int_field(no, keyword, rest)
        elif keyword == "length":
            stated = parse_rational(rest)
        elif keyword == "seg":
            if d is None:
                raise FormatError(f"{no}행: dimension 보다 seg 가 먼저 나옴")
            segments.append(_segment(no, d, rest))
        else:
            raise FormatError(f"{no}행: 알 수 없는 레코드 '{keyword}'")

    if d is None:
        raise FormatError("dimension 레코드가 없음")
    if declared is not None and declared != len(segments):
        raise FormatError(f"segments {declared} 선언, 실제 {len(segments)}개")

    net = RectilinearNetwork(tuple(segments))
    if stated is not None and stated != network_length(net):
        raise FormatError(f"명시된 길이 {stated} 가 실제 길이 {network_length(net)} 와 다름")
    return NetworkFile(dimension=d, network=net)


def parse_network(text: str) -> RectilinearNetwork:
    return parse_network_file(text).network


def write_network(net: RectilinearNetwork, path, d: Optional[int] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dump_network(net, d))
    return path


def read_network_file(path) -> NetworkFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (IOError, UnicodeDecodeError) as e:
        raise FormatError(f"네트워크 파일 읽기 실패 {path}: {e}") from e
    return parse_network_file(text)


def read_network(path) -> RectilinearNetwork:
    return read_network_file(path).network
